"""In-place radix-2 transforms over a prime field.

The forward transform leaves evaluations in bit-reversed order: f(w**j) lands
in slot rev(j).  The inverse consumes that order, runs the inverted butterflies
with the stages reversed, and defers the accumulated factor of 1/N to a single
final scaling pass (counted as pow2 operations).

Twiddle factors are generated sequentially inside the loops - first the stage
root w**u by square-and-multiply, then its powers one multiplication at a time
- so no table of roots is ever built and scratch usage stays at O(1) field
elements.  The price is a non-sequential traversal of the buffer: butterflies
sharing a twiddle are visited together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bit_reverse
from .ring import FieldCtx


@dataclass(frozen=True)
class DWTSpec:
    """Parameters of a weighted transform: length, principal root, weight."""

    n: int
    omega: int
    weight: int


def _check_window(ctx: FieldCtx, a: list[int], n: int, omega: int, offset: int) -> None:
    if n < 1 or n & (n - 1):
        raise ValueError(f"transform length {n} is not a power of two")
    if offset < 0 or offset + n > len(a):
        raise ValueError(f"window [{offset}, {offset + n}) exceeds buffer of {len(a)}")
    if n == 1:
        if omega % ctx.p != 1:
            raise ValueError("length-1 transform requires root 1")
    elif pow(omega, n // 2, ctx.p) != ctx.p - 1:
        raise ValueError(f"root has wrong order for a length-{n} transform")


def fft_in_place(ctx: FieldCtx, a: list[int], n: int, omega: int, offset: int = 0) -> None:
    """In place, a[offset + rev(j)] <- f(omega**j) for the window of length n.

    Exactly n*log2(n) additions and (n/2)*log2(n) butterfly multiplications,
    plus fewer than n + log2(n)**2 twiddle-generation multiplications.
    """
    _check_window(ctx, a, n, omega, offset)
    if n == 1:
        return
    p = ctx.p
    stages = n.bit_length() - 1
    mul = 0
    for i in range(1, stages + 1):
        u = n >> i
        wu = ctx.pow_counted(omega, u)
        tw = 1
        for j in range(1 << (i - 1)):
            if j:
                tw = tw * wu % p
                mul += 1
            t = offset + bit_reverse(j, i) * u
            for k in range(t, t + u):
                x = a[k]
                y = a[k + u] * tw % p
                a[k] = (x + y) % p
                a[k + u] = (x - y) % p
        mul += n >> 1
    ctx.ops.mul += mul
    ctx.ops.add += n * stages


def ifft_in_place(ctx: FieldCtx, a: list[int], n: int, omega: int, offset: int = 0) -> None:
    """Inverse of :func:`fft_in_place`: bit-reversed evaluations back to coefficients.

    Runs the inverted butterflies in reversed stage order, then multiplies every
    slot by 1/n in one final pass (n pow2 operations).
    """
    _check_window(ctx, a, n, omega, offset)
    if n == 1:
        return
    p = ctx.p
    winv = ctx.pow_counted(omega, n - 1)  # omega**-1
    stages = n.bit_length() - 1
    mul = 0
    for i in range(stages, 0, -1):
        u = n >> i
        wu = ctx.pow_counted(winv, u)
        tw = 1
        for j in range(1 << (i - 1)):
            if j:
                tw = tw * wu % p
                mul += 1
            t = offset + bit_reverse(j, i) * u
            for k in range(t, t + u):
                x = a[k]
                y = a[k + u]
                a[k] = (x + y) % p
                a[k + u] = (x - y) * tw % p
        mul += n >> 1
    inv_n = pow(n, p - 2, p)
    for k in range(offset, offset + n):
        a[k] = a[k] * inv_n % p
    ctx.ops.mul += mul
    ctx.ops.add += n * stages
    ctx.ops.pow2 += n


def scale_by_powers(ctx: FieldCtx, a: list[int], n: int, base: int, offset: int = 0) -> None:
    """a[offset + k] *= base**k for k < n, powers generated sequentially.

    2*(n - 1) counted multiplications; base**0 is applied as the identity.
    """
    p = ctx.p
    pw = 1
    for k in range(offset + 1, offset + n):
        pw = pw * base % p
        a[k] = a[k] * pw % p
    if n > 1:
        ctx.ops.mul += 2 * (n - 1)


def dwt(ctx: FieldCtx, a: list[int], spec: DWTSpec, offset: int = 0) -> None:
    """Weighted transform: a[offset + rev(j)] <- f(weight * omega**j).

    One weighting pass (fewer than 2n multiplications; skipped entirely for
    weight 1) followed by the in-place transform.  With weight v and omega a
    principal n-th root this evaluates the window at v times each n-th root of
    unity; taking v of order 2n with v**2 == omega evaluates a negacyclic image
    at all roots of z**n + 1.
    """
    if spec.weight % ctx.p != 1:
        scale_by_powers(ctx, a, spec.n, spec.weight, offset)
    fft_in_place(ctx, a, spec.n, spec.omega, offset)


def idwt(ctx: FieldCtx, a: list[int], spec: DWTSpec, offset: int = 0) -> None:
    """Inverse of :func:`dwt`: inverse transform, then divide out the weights."""
    if spec.weight % ctx.p == 0:
        raise ZeroDivisionError("weight 0 is not invertible")
    ifft_in_place(ctx, a, spec.n, spec.omega, offset)
    if spec.weight % ctx.p != 1:
        scale_by_powers(ctx, a, spec.n, ctx.inv(spec.weight), offset)
