"""Block decomposition engines and the cyclotomic truncated transform.

A length-n coefficient buffer is rewritten, in place, into the images
f_i = f mod Phi_i (Phi_i = z^(n_i) + 1 from the binary split of n), and each
image is then evaluated at the roots of its Phi_i by a weighted transform.
Three engines produce the image state:

``new``     single buffer, O(1) scratch.  Phase 1 folds the buffer into the
            chain of remainders r_i = q_(i-1) mod Phi_i using subtractions
            only.  Phase 2 turns each r_i into the weighted image
            f_i^* = 2^(1-i) f_i by adding the surviving terms of the earlier
            weighted images straight into the block: pre-doubling the block
            makes every contribution an unscaled add or subtract, and a final
            halving restores the weight.  Phase 3 rescales f_i^* to f_i by
            repeated doubling.  At most 3n additions and 2n doublings or
            halvings, no general multiplications.

``sergeev`` single buffer, O(1) scratch.  Walks the modulus chain z^K - 1
            downward, keeping the images found so far plus the leading
            coefficients of f mod (z^K - 1); coefficients that fell outside
            the stored prefix are reconstructed term by term from the images,
            with the weights 2^(i-j) applied by nested doubling.

``mateer``  needs a full N-slot buffer.  Splits f mod (z^K - 1) into
            f mod (z^(K/2) - 1) and f mod (z^(K/2) + 1) by plain butterflies
            (twiddles all 1, so no multiplications), keeping each negacyclic
            image where it lands.

All three leave block i equal to f mod Phi_i in slots
[offset(i), offset(i) + n_i); the engines are interchangeable and share one
inverse.
"""

from __future__ import annotations

from .bitops import next_satisfying_exponent, survival_mask
from .plan import Plan
from .ring import FieldCtx
from .transform import DWTSpec, dwt, idwt

ENGINES = ("new", "sergeev", "mateer")


def _negacyclic_spec(plan: Plan, i: int) -> DWTSpec:
    # weight omega_i of order 2*n_i, root omega_i**2: evaluates at roots of Phi_i
    return DWTSpec(plan.size(i), plan.unit_root(i), plan.block_root(i))


def reduce_to_remainders(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Phase 1: fold coefficients into r_i = q_(i-1) mod Phi_i, block by block.

    Dividing by z^(n_i) + 1 needs one subtraction per quotient coefficient, and
    the quotient is exactly the tail of the buffer, so the whole chain is
    fewer than n subtractions in place.  The last remainder is the final
    quotient itself, which already fits its block.
    """
    p = ctx.p
    adds = 0
    for i in range(1, plan.s):
        o = plan.offset(i)
        ni = plan.size(i)
        for t in range(o, o + plan.tail(i)):
            a[t] = (a[t] - a[t + ni]) % p
        adds += plan.tail(i)
    ctx.ops.add += adds


def _contribution_pass(ctx: FieldCtx, a: list[int], plan: Plan, i: int, undo: bool) -> None:
    """Add (or, for undo, subtract) the surviving terms of blocks j < i into block i.

    A term z^e of weighted image j lands in slot e mod n_i with sign
    (-1)**bit(e, log2(n_i)).  Survivors come in runs of n_(i-1) consecutive
    exponents, so the criterion is tested once per run and dead runs are
    skipped with bit arithmetic; ring work is one addition per survivor.
    """
    p = ctx.p
    oi = plan.offset(i)
    ni = plan.size(i)
    sign_bit = plan.exp(i)
    run = plan.size(i - 1)
    adds = 0
    for j in range(1, i):
        oj = plan.offset(j)
        nj = plan.size(j)
        mask = survival_mask(plan, j, i)
        e0 = mask  # smallest satisfying exponent
        while e0 is not None and e0 < nj:
            for e in range(e0, e0 + run, ni):
                negate = (e >> sign_bit & 1) ^ undo
                src = oj + e
                if negate:
                    for t in range(ni):
                        a[oi + t] = (a[oi + t] - a[src + t]) % p
                else:
                    for t in range(ni):
                        a[oi + t] = (a[oi + t] + a[src + t]) % p
            adds += run
            e0 = next_satisfying_exponent(e0 + run - 1, j, i, plan)
    ctx.ops.add += adds


def add_contribution(ctx: FieldCtx, a: list[int], plan: Plan, i: int) -> None:
    """With blocks 1..i-1 holding weighted images and block i holding the
    doubled remainder 2*r_i, rewrite block i to the doubled weighted image
    2*f_i^*.  Additions and subtractions only."""
    _contribution_pass(ctx, a, plan, i, undo=False)


def _scale_block(ctx: FieldCtx, a: list[int], plan: Plan, i: int, c: int) -> None:
    p = ctx.p
    o = plan.offset(i)
    for t in range(o, o + plan.size(i)):
        a[t] = a[t] * c % p
    ctx.ops.pow2 += plan.size(i)


def break_in_place(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Rewrite coefficients into the images f_i = f mod Phi_i, in place.

    At most 3n additions and 2n multiplications by 2 or 1/2, zero general
    multiplications, O(1) scratch.
    """
    reduce_to_remainders(ctx, a, plan)
    for i in range(2, plan.s + 1):
        _scale_block(ctx, a, plan, i, 2)
        add_contribution(ctx, a, plan, i)
        _scale_block(ctx, a, plan, i, plan.half)
    for i in range(2, plan.s + 1):
        for _ in range(i - 1):
            _scale_block(ctx, a, plan, i, 2)


def unbreak_in_place(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Exact inverse of :func:`break_in_place`, step by step in reverse."""
    p = ctx.p
    for i in range(plan.s, 1, -1):
        for _ in range(i - 1):
            _scale_block(ctx, a, plan, i, plan.half)
    for i in range(plan.s, 1, -1):
        _scale_block(ctx, a, plan, i, 2)
        _contribution_pass(ctx, a, plan, i, undo=True)
        _scale_block(ctx, a, plan, i, plan.half)
    adds = 0
    for i in range(plan.s - 1, 0, -1):
        o = plan.offset(i)
        ni = plan.size(i)
        for t in range(o, o + plan.tail(i)):
            a[t] = (a[t] + a[t + ni]) % p
        adds += plan.tail(i)
    ctx.ops.add += adds


def mateer_break(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Split an N-slot buffer holding f mod (z^N - 1) into the images f_i.

    Repeated halving: each step is K/2 plain butterflies (x, y) -> (x+y, x-y),
    so no ring multiplications at all.  Image f_i is left in slots
    [n_i, 2*n_i); when n is a power of two the buffer itself is the image.
    """
    if len(a) < plan.N:
        raise ValueError(f"need {plan.N} slots, buffer has {len(a)}")
    if plan.s == 1:
        return
    p = ctx.p
    adds = 0
    k = plan.N
    n_last = plan.size(plan.s)
    while k > n_last:
        kh = k >> 1
        for t in range(kh):
            x = a[t]
            y = a[t + kh]
            a[t] = (x + y) % p
            a[t + kh] = (x - y) % p
        adds += k
        k = kh
    ctx.ops.add += adds


def _reconstructed_coefficient(ctx: FieldCtx, a: list[int], plan: Plan,
                               i: int, k_mod: int, idx: int) -> int:
    """Coefficient idx of (f mod Gamma_i) mod (z^k_mod - 1), from the images.

    Sums the image terms whose exponent is idx modulo k_mod and survives into
    the current combined image; the 2^(i-j) weights are realised by doubling
    the running sum between source blocks.
    """
    p = ctx.p
    acc = 0
    adds = pow2 = 0
    for j in range(1, i + 1):
        if j > 1:
            acc = acc * 2 % p
            pow2 += 1
        mask = survival_mask(plan, j, i + 1)
        oj = plan.offset(j)
        nj = plan.size(j)
        e = idx
        while e < nj:
            if e & mask == mask:
                acc = (acc + a[oj + e]) % p
                adds += 1
            e += k_mod
    ctx.ops.add += adds
    ctx.ops.pow2 += pow2
    return acc


def sergeev_break(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Walk the modulus chain downward, splitting off each image in place.

    Invariant entering each step with images 1..i extracted: the working
    region holds the first tail(i) coefficients of f mod (z^K - 1).  Stored
    coefficient pairs combine by one butterfly; the partner coefficients that
    were never stored are reconstructed from the extracted images.  Ends in
    exactly the image state of :func:`break_in_place`.
    """
    if plan.s == 1:
        return
    p = ctx.p
    i = 0
    k = plan.N
    n_last = plan.size(plan.s)
    while k > n_last:
        kh = k >> 1
        if i < plan.s and kh == plan.size(i + 1):
            o = plan.offset(i + 1)
            nst = plan.tail(i + 1)
            for t in range(nst):
                x = a[o + t]
                y = a[o + t + kh]
                a[o + t] = (x - y) % p          # image i+1, coefficient t
                a[o + t + kh] = (x + y) % p     # f mod (z^kh - 1), coefficient t
            ctx.ops.add += 2 * nst
            for t in range(nst, kh):
                c = _reconstructed_coefficient(ctx, a, plan, i, k, t + kh)
                a[o + t] = (a[o + t] - c) % p
                ctx.ops.add += 1
            i += 1
        else:
            o = plan.offset(i + 1)
            for t in range(plan.tail(i)):
                c = _reconstructed_coefficient(ctx, a, plan, i, k, t + kh)
                a[o + t] = (a[o + t] + c) % p
                ctx.ops.add += 1
        k = kh


def ctft_forward(ctx: FieldCtx, a: list[int], plan: Plan, engine: str = "new") -> None:
    """Evaluate the buffer at the roots of every Phi_i, in place.

    Block i ends up holding f(omega_i^(2*rev(j) + 1)) for j = 0..n_i-1 (the
    layout of :func:`tftlib.plan.eval_points_cyclotomic`).  The mateer engine
    allocates an N-slot working buffer through the context; the other two touch
    only the caller's n slots.
    """
    if len(a) != plan.n:
        raise ValueError(f"buffer length {len(a)} != plan length {plan.n}")
    if engine == "new":
        break_in_place(ctx, a, plan)
    elif engine == "sergeev":
        sergeev_break(ctx, a, plan)
    elif engine == "mateer":
        buf = ctx.alloc(plan.N)
        for t in range(plan.n):
            buf[t] = a[t]
        mateer_break(ctx, buf, plan)
        if plan.s == 1:
            for t in range(plan.n):
                a[t] = buf[t]
        else:
            for i in range(1, plan.s + 1):
                o = plan.offset(i)
                ni = plan.size(i)
                for t in range(ni):
                    a[o + t] = buf[ni + t]
    else:
        raise ValueError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    for i in range(1, plan.s + 1):
        dwt(ctx, a, _negacyclic_spec(plan, i), plan.offset(i))


def ctft_inverse(ctx: FieldCtx, a: list[int], plan: Plan) -> None:
    """Recover the coefficients from the block evaluations, in place.

    Engine-agnostic: every engine produces the same image state, so one
    inverse (per-block inverse weighted transform, then the unbreak) serves
    them all.
    """
    if len(a) != plan.n:
        raise ValueError(f"buffer length {len(a)} != plan length {plan.n}")
    for i in range(1, plan.s + 1):
        idwt(ctx, a, _negacyclic_spec(plan, i), plan.offset(i))
    unbreak_in_place(ctx, a, plan)
