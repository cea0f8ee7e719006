"""Bit-reversed truncated transform via the block engine, and multiplication.

The block transform evaluates at roots of the Phi_i; the bit-reversed
truncated transform needs the first n points of the bit-reversed DFT grid
instead, which are roots of Psi_i(z) = z^(n_i) - Omega_(i-1)^(n_i).  The two
families differ by the change of variable z -> Omega_s z, under which
Psi_i(Omega_s z) = -Omega_(i-1)^(n_i) * Phi_i(z).  So:

    1. scale coefficient k by Omega_s**k        (f(z) -> f(Omega_s z))
    2. break into images modulo the Phi_i
    3. scale coefficient k of each block by Omega_s**-k   (images mod Psi_i)
    4. per block, a weighted transform with weight Omega_(i-1) and the
       principal n_i-th root: evaluates at the roots of Psi_i, landing
       exactly in bit-reversed-grid order.

Every step is invertible, which gives the inverse transform, and with it
polynomial products of any target length n at a cost that grows smoothly in n
instead of jumping at powers of two.
"""

from __future__ import annotations

from .ctft import break_in_place, ctft_forward, ctft_inverse, unbreak_in_place
from .plan import Plan, plan_new
from .ring import FieldCtx, find_root_of_unity
from .transform import DWTSpec, dwt, fft_in_place, idwt, ifft_in_place, scale_by_powers


def _grid_spec(plan: Plan, i: int) -> DWTSpec:
    # roots of Psi_i are Omega_(i-1) times the n_i-th roots of unity
    return DWTSpec(plan.size(i), plan.unit_root(i), plan.partial(i - 1))


def brtft_forward(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """In place, slot l <- f(omega**rev(l)) for l < n (rev over log2(N) bits)."""
    if len(a) != plan.n:
        raise ValueError(f"buffer length {len(a)} != plan length {plan.n}")
    big = plan.partial(plan.s)
    scale_by_powers(ctx, a, plan.n, big)
    break_in_place(ctx, a, plan)
    big_inv = ctx.inv(big)
    for i in range(1, plan.s + 1):
        scale_by_powers(ctx, a, plan.size(i), big_inv, plan.offset(i))
    for i in range(1, plan.s + 1):
        dwt(ctx, a, _grid_spec(plan, i), plan.offset(i))


def brtft_inverse(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Recover coefficients from the first n bit-reversed grid values, in place."""
    if len(a) != plan.n:
        raise ValueError(f"buffer length {len(a)} != plan length {plan.n}")
    big = plan.partial(plan.s)
    for i in range(1, plan.s + 1):
        idwt(ctx, a, _grid_spec(plan, i), plan.offset(i))
    for i in range(1, plan.s + 1):
        scale_by_powers(ctx, a, plan.size(i), big, plan.offset(i))
    unbreak_in_place(ctx, a, plan)
    scale_by_powers(ctx, a, plan.n, ctx.inv(big))


def poly_degree(f: list[int], p: int) -> int:
    """Degree of the coefficient list modulo p; the zero polynomial has degree -1."""
    for i in range(len(f) - 1, -1, -1):
        if f[i] % p:
            return i
    return -1


def multiply_full_fft(ctx: FieldCtx, f: list[int], g: list[int]) -> list[int]:
    """Exact product by zero-padding to the least power of two above deg(fg).

    Two forward transforms, a pointwise product, one inverse transform.  Cost
    jumps by roughly 2x whenever the product degree crosses a power of two.
    """
    p = ctx.p
    df = poly_degree(f, p)
    dg = poly_degree(g, p)
    if df < 0 or dg < 0:
        return [0]
    d = df + dg
    size = 1 << d.bit_length() if d else 1  # least power of two > d
    w = find_root_of_unity(ctx, size)
    fa = [c % p for c in f[:df + 1]] + [0] * (size - df - 1)
    ga = [c % p for c in g[:dg + 1]] + [0] * (size - dg - 1)
    fft_in_place(ctx, fa, size, w)
    fft_in_place(ctx, ga, size, w)
    for k in range(size):
        fa[k] = fa[k] * ga[k] % p
    ctx.ops.mul += size
    ifft_in_place(ctx, fa, size, w)
    return fa[:d + 1]


def multiply_tft(ctx: FieldCtx, f: list[int], g: list[int],
                 path: str = "cyclotomic", engine: str = "new") -> list[int]:
    """Exact product at transform length exactly deg(fg) + 1.

    ``cyclotomic`` multiplies the per-block evaluations (the product is
    determined modulo the product of the Phi_i, whose degree is n > deg(fg));
    ``bitreversed`` multiplies the truncated grid values and inverts the grid
    transform.  Both operands share one plan, so the pointwise product is
    taken over identical evaluation points.
    """
    if path not in ("cyclotomic", "bitreversed"):
        raise ValueError(f"unknown path {path!r}")
    p = ctx.p
    df = poly_degree(f, p)
    dg = poly_degree(g, p)
    if df < 0 or dg < 0:
        return [0]
    n = df + dg + 1
    plan = plan_new(n, ctx)
    fa = [c % p for c in f[:df + 1]] + [0] * (n - df - 1)
    ga = [c % p for c in g[:dg + 1]] + [0] * (n - dg - 1)
    if path == "cyclotomic":
        ctft_forward(ctx, fa, plan, engine)
        ctft_forward(ctx, ga, plan, engine)
    else:
        brtft_forward(ctx, fa, plan)
        brtft_forward(ctx, ga, plan)
    for k in range(n):
        fa[k] = fa[k] * ga[k] % p
    ctx.ops.mul += n
    if path == "cyclotomic":
        ctft_inverse(ctx, fa, plan)
    else:
        brtft_inverse(ctx, fa, plan)
    return fa
