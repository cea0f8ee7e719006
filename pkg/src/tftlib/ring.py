"""Prime-field arithmetic with power-of-two roots of unity and operation counting.

Every algorithmic ring operation performed by the transform code is tallied on
the owning :class:`FieldCtx`: general multiplications (``mul``), multiplications
by 2, 1/2 or 1/N (``pow2``, the "shifted" operations), and additions,
subtractions and negations (``add``).  Scalings by the constants +1 and -1 are
free: code applies them as identity or as a counted subtraction, never as a
multiplication.

Setup work is deliberately uncounted: validating a root's order, deriving the
constants of a transform plan, or inverting a fixed constant uses plain modular
arithmetic.  Twiddle factors generated *inside* a transform's loops are part of
the algorithm and are counted.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MODULUS = 2013265921  # 15 * 2**27 + 1, two-adicity 27


class UnsupportedOrderError(ValueError):
    """The requested root order does not divide the 2-power part of p - 1."""


@dataclass
class OpCount:
    """Tallies of counted ring operations.

    mul   -- general ring multiplications
    pow2  -- multiplications by 2, 1/2 or 1/N
    add   -- additions, subtractions and negations
    """

    mul: int = 0
    pow2: int = 0
    add: int = 0

    def snapshot(self) -> "OpCount":
        return OpCount(self.mul, self.pow2, self.add)

    def since(self, earlier: "OpCount") -> "OpCount":
        return OpCount(self.mul - earlier.mul,
                       self.pow2 - earlier.pow2,
                       self.add - earlier.add)


class CountSession:
    """Delta view over a context's counters, usable during and after the block.

    >>> ctx = FieldCtx(5)
    >>> with ctx.count_session() as sess:
    ...     _ = ctx.mul(3, 4)
    >>> sess.mul
    1
    """

    def __init__(self, ctx: "FieldCtx"):
        self._ctx = ctx
        self._start = ctx.ops.snapshot()
        self._start_alloc = ctx.scratch_allocated
        self._frozen: OpCount | None = None
        self._frozen_alloc = 0

    def __enter__(self) -> "CountSession":
        return self

    def __exit__(self, *exc) -> bool:
        # freeze the deltas so later work on the context cannot leak in
        self._frozen = self._ctx.ops.since(self._start)
        self._frozen_alloc = self._ctx.scratch_allocated - self._start_alloc
        return False

    @property
    def ops(self) -> OpCount:
        if self._frozen is not None:
            return self._frozen
        return self._ctx.ops.since(self._start)

    @property
    def mul(self) -> int:
        return self.ops.mul

    @property
    def pow2(self) -> int:
        return self.ops.pow2

    @property
    def add(self) -> int:
        return self.ops.add

    @property
    def alloc(self) -> int:
        """Field elements handed out by :meth:`FieldCtx.alloc` in this session."""
        if self._frozen is not None:
            return self._frozen_alloc
        return self._ctx.scratch_allocated - self._start_alloc


_prime_cache: dict[int, bool] = {}


def _is_prime(n: int) -> bool:
    if n in _prime_cache:
        return _prime_cache[n]
    if n < 2:
        result = False
    elif n < 4:
        result = True
    elif n % 2 == 0:
        result = False
    elif n < 10**12:
        result = all(n % d for d in range(3, int(n**0.5) + 1, 2))
    else:
        from sympy import isprime  # only reached for very large moduli

        result = bool(isprime(n))
    _prime_cache[n] = result
    return result


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, small factors by trial division."""
    factors = []
    m = n
    for d in range(2, 1_000_000):
        if d * d > m:
            break
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
    if m > 1:
        if _is_prime(m):
            factors.append(m)
        else:
            from sympy import factorint

            factors.extend(q for q in factorint(m) if q not in factors)
    return factors


def _smallest_generator(p: int) -> int:
    """Smallest multiplicative generator of F_p*; deterministic for a fixed p."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no generator found modulo {p}")  # unreachable for prime p


class FieldCtx:
    """The field Z/pZ for an odd prime p, with its counters.

    Immutable after construction except for the counters.  A context may be
    shared across threads only if each thread runs its own count session and
    transforms its own buffers; the library itself is single-threaded.
    """

    def __init__(self, p: int = DEFAULT_MODULUS):
        if p == 2 or not _is_prime(p):
            raise ValueError(f"modulus {p} is not an odd prime")
        self.p = p
        self.two_adicity = ((p - 1) & -(p - 1)).bit_length() - 1
        self.generator = _smallest_generator(p)
        self.half = (p + 1) // 2  # 2**-1 mod p
        self.ops = OpCount()
        self.scratch_allocated = 0

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p})"

    # counted element operations ------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.ops.add += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        self.ops.add += 1
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        self.ops.add += 1
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        self.ops.mul += 1
        return a * b % self.p

    def mul_pow2(self, a: int, c: int) -> int:
        """Multiply by c, a power of two or an inverse power of two."""
        self.ops.pow2 += 1
        return a * c % self.p

    def pow_counted(self, base: int, exp: int) -> int:
        """base**exp by square-and-multiply, counting every multiplication."""
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        if exp == 0:
            return 1
        p = self.p
        b = base % p
        e = exp
        while e & 1 == 0:
            b = b * b % p
            self.ops.mul += 1
            e >>= 1
        result = b
        e >>= 1
        while e:
            b = b * b % p
            self.ops.mul += 1
            if e & 1:
                result = result * b % p
                self.ops.mul += 1
            e >>= 1
        return result

    # uncounted helpers -----------------------------------------------------

    def inv(self, a: int) -> int:
        """Multiplicative inverse; a setup operation, not counted."""
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, self.p - 2, self.p)

    def count_session(self) -> CountSession:
        return CountSession(self)

    def alloc(self, size: int) -> list[int]:
        """Allocate a tracked buffer of field elements (the space-accounting hook)."""
        self.scratch_allocated += size
        return [0] * size


def find_root_of_unity(ctx: FieldCtx, order: int) -> int:
    """Principal root of unity of the exact power-of-two order, deterministic per ctx.

    The returned w satisfies w**order == 1 and w**(order//2) == -1, which over a
    prime field makes it both primitive and principal.
    """
    if order < 1 or order & (order - 1):
        raise ValueError(f"order {order} is not a power of two")
    if order == 1:
        return 1
    if order.bit_length() - 1 > ctx.two_adicity:
        raise UnsupportedOrderError(
            f"no root of order {order}: 2-adicity of {ctx.p} - 1 is {ctx.two_adicity}")
    return pow(ctx.generator, (ctx.p - 1) // order, ctx.p)


def is_principal_root(ctx: FieldCtx, w: int, order: int) -> bool:
    """True iff w**order == 1 and sum_i w**(i*j) vanishes for all 0 < j < order.

    Power-of-two orders use the equivalent w**(order//2) == -1 test; other
    orders check the geometric sums directly (quadratic, small orders only).
    """
    p = ctx.p
    w %= p
    if order == 1:
        return w == 1
    if pow(w, order, p) != 1:
        return False
    if order & (order - 1) == 0:
        return pow(w, order // 2, p) == p - 1
    for j in range(1, order):
        if sum(pow(w, i * j, p) for i in range(order)) % p:
            return False
    return True
