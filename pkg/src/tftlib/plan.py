"""Size decomposition and derived constants shared by every transform variant.

A length n is split along its binary expansion, n = n_1 + ... + n_s with
n_1 > ... > n_s powers of two.  Block i covers slots
[offset(i), offset(i) + n_i) of the working buffer and is associated with the
modulus Phi_i = z^(n_i) + 1, whose canonical root omega_i has order 2*n_i.
The cumulative products Omega_i = omega_1 * ... * omega_i drive the affine
change of variable that turns the negacyclic block structure into the leading
entries of a bit-reversed DFT.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bit_reverse
from .ring import FieldCtx, find_root_of_unity


@dataclass(frozen=True)
class Plan:
    """Immutable description of one transform length over one field."""

    p: int
    n: int
    N: int              # least power of two >= n
    p_bits: int         # log2(N)
    s: int              # number of blocks
    sizes: tuple[int, ...]      # n_i, strictly decreasing powers of two
    exps: tuple[int, ...]       # log2(n_i)
    offsets: tuple[int, ...]    # block start slots
    tails: tuple[int, ...]      # tails[i] = n_(i+1) + ... + n_s for i = 0..s
    omega: int                  # principal N-th root of unity
    block_roots: tuple[int, ...]       # omega_i, order 2*n_i, omega_i**n_i == -1
    block_unit_roots: tuple[int, ...]  # omega_i**2, principal n_i-th root
    partials: tuple[int, ...]          # Omega_0..Omega_s cumulative products
    half: int                   # 2**-1
    inv_sizes: tuple[int, ...]  # n_i**-1

    # 1-based block accessors, matching the mathematical indexing ----------

    def size(self, i: int) -> int:
        return self.sizes[i - 1]

    def exp(self, i: int) -> int:
        return self.exps[i - 1]

    def offset(self, i: int) -> int:
        return self.offsets[i - 1]

    def tail(self, i: int) -> int:
        """n_i^* = n_(i+1) + ... + n_s; tail(0) == n, tail(s) == 0."""
        return self.tails[i]

    def block_root(self, i: int) -> int:
        return self.block_roots[i - 1]

    def unit_root(self, i: int) -> int:
        return self.block_unit_roots[i - 1]

    def partial(self, i: int) -> int:
        """Omega_i for 0 <= i <= s (Omega_0 == 1)."""
        return self.partials[i]

    def inv_size(self, i: int) -> int:
        return self.inv_sizes[i - 1]

    def block_of(self, slot: int) -> int:
        """1-based owning block of a buffer slot."""
        if not 0 <= slot < self.n:
            raise ValueError(f"slot {slot} outside [0, {self.n})")
        for i in range(1, self.s + 1):
            if slot < self.offset(i) + self.size(i):
                return i
        raise AssertionError("unreachable")


@dataclass(frozen=True)
class EvalPointSet:
    """Evaluation points in buffer order, with the owning block of each slot."""

    points: tuple[int, ...]
    block_of: tuple[int, ...]


def plan_new(n: int, ctx: FieldCtx) -> Plan:
    """Build the plan for length n over ctx; deterministic.

    Requires a root of order 2*n_1 in the field, i.e. the leading power of two
    of n at most 2**(two_adicity - 1).
    """
    if n < 1:
        raise ValueError(f"transform length must be positive, got {n}")
    p = ctx.p
    sizes = tuple(1 << b for b in range(n.bit_length() - 1, -1, -1) if n >> b & 1)
    s = len(sizes)
    N = 1 << (n - 1).bit_length() if n > 1 else 1
    # raises UnsupportedOrderError when 2*n_1 exceeds the available 2-power
    block_roots = tuple(find_root_of_unity(ctx, 2 * ni) for ni in sizes)
    omega = find_root_of_unity(ctx, N)

    exps = tuple(ni.bit_length() - 1 for ni in sizes)
    offsets = []
    acc = 0
    for ni in sizes:
        offsets.append(acc)
        acc += ni
    tails = tuple(n - off - ni for off, ni in zip(offsets, sizes))

    partials = [1]
    for w in block_roots:
        partials.append(partials[-1] * w % p)

    return Plan(
        p=p,
        n=n,
        N=N,
        p_bits=N.bit_length() - 1,
        s=s,
        sizes=sizes,
        exps=exps,
        offsets=tuple(offsets),
        tails=(n,) + tails,
        omega=omega,
        block_roots=block_roots,
        block_unit_roots=tuple(w * w % p for w in block_roots),
        partials=tuple(partials),
        half=ctx.half,
        inv_sizes=tuple(pow(ni, p - 2, p) for ni in sizes),
    )


def eval_points_cyclotomic(plan: Plan) -> EvalPointSet:
    """Points of the block-structured transform, in output order.

    Block i contributes omega_i**(2*rev(j) + 1) for j = 0..n_i-1 (rev over
    log2(n_i) bits): the roots of Phi_i in the order a weighted in-place
    transform of the block produces them.  As a set this equals
    {omega**rev(k) : n_i <= k < 2*n_i, 1 <= i <= s} with rev over log2(N) bits.
    """
    p = plan.p
    points = []
    owners = []
    for i in range(1, plan.s + 1):
        wi = plan.block_root(i)
        nb = plan.exp(i)
        for j in range(plan.size(i)):
            points.append(pow(wi, 2 * bit_reverse(j, nb) + 1, p))
            owners.append(i)
    return EvalPointSet(tuple(points), tuple(owners))


def eval_points_bitreversed(plan: Plan) -> EvalPointSet:
    """The first n points of the bit-reversed DFT grid: omega**rev(l), l < n.

    Slot l of block j is a root of Psi_j(z) = z^(n_j) - Omega_(j-1)^(n_j).
    """
    p = plan.p
    points = []
    owners = []
    for i in range(1, plan.s + 1):
        for l in range(plan.offset(i), plan.offset(i) + plan.size(i)):
            points.append(pow(plan.omega, bit_reverse(l, plan.p_bits), p))
            owners.append(i)
    return EvalPointSet(tuple(points), tuple(owners))
