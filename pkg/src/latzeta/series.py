"""Exact truncated Dirichlet series over the rationals.

A series holds coefficients c_1..c_N as fractions; multiplication is the
Dirichlet convolution, so every identity here is an identity of formal
series truncated at N.  No floating point anywhere: the closed formulas
combine terms with denominators 2, 3, 4 and 6, and keeping the arithmetic
exact lets the integrality of the assembled counts act as a checksum.
"""

from fractions import Fraction

from .arith import divisors, factorize, primes_upto, smallest_prime_factors
from .quadfield import INERT, SPLIT, field_data, split_type

_ZERO = Fraction(0)


class Series:
    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=None):
        if N < 1:
            raise ValueError(f"truncation bound must be >= 1, got {N}")
        self.N = N
        if coeffs is None:
            self.c = [_ZERO] * (N + 1)
        else:
            if len(coeffs) == N:
                coeffs = [0, *coeffs]
            if len(coeffs) != N + 1:
                raise ValueError("need N (or N+1 with a leading pad) coefficients")
            self.c = [Fraction(x) for x in coeffs]
            self.c[0] = _ZERO

    def coeff(self, n: int) -> Fraction:
        return self.c[n]

    def coeffs(self) -> list[Fraction]:
        return self.c[1:]

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints, indexed by n (entry 0 is a pad).

        Raises if any coefficient has survived with a denominator, which in
        this package always means an assembly bug rather than bad input.
        """
        out = [0] * (self.N + 1)
        for n in range(1, self.N + 1):
            q = self.c[n]
            if q.denominator != 1:
                raise ArithmeticError(f"coefficient at {n} is not integral: {q}")
            out[n] = q.numerator
        return out

    def _check(self, other: "Series") -> None:
        if self.N != other.N:
            raise ValueError(f"truncation bounds differ: {self.N} != {other.N}")

    def __eq__(self, other):
        return isinstance(other, Series) and self.N == other.N and self.c == other.c

    def __hash__(self):
        return hash((self.N, tuple(self.c)))

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        out = Series(self.N)
        out.c = [x + y for x, y in zip(self.c, other.c)]
        return out

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        out = Series(self.N)
        out.c = [x - y for x, y in zip(self.c, other.c)]
        return out

    def __neg__(self) -> "Series":
        out = Series(self.N)
        out.c = [-x for x in self.c]
        return out

    def scale(self, q) -> "Series":
        q = Fraction(q)
        out = Series(self.N)
        out.c = [q * x for x in self.c]
        return out

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        N = self.N
        a, b = self.c, other.c
        out = [_ZERO] * (N + 1)
        for i in range(1, N + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(1, N // i + 1):
                bj = b[j]
                if bj:
                    out[i * j] += ai * bj
        res = Series(N)
        res.c = out
        return res

    def div(self, other: "Series") -> "Series":
        """Unique C with C*other = self, by the recursive convolution solve."""
        self._check(other)
        if other.c[1] == 0:
            raise ValueError("divisor has leading coefficient 0")
        N = self.N
        b1 = other.c[1]
        out = [_ZERO] * (N + 1)
        for n in range(1, N + 1):
            acc = self.c[n]
            for d in divisors(n):
                if d < n:
                    acc -= out[d] * other.c[n // d]
            out[n] = acc / b1
        res = Series(N)
        res.c = out
        return res

    def __repr__(self):
        head = ", ".join(str(self.c[n]) for n in range(1, min(self.N, 8) + 1))
        return f"Series(N={self.N}, [{head}{', ...' if self.N > 8 else ''}])"


def zero(N: int) -> Series:
    return Series(N)


def one(N: int) -> Series:
    return delta(1, N)


def delta(k: int, N: int) -> Series:
    """The single term k^(-s)."""
    if not 1 <= k <= N:
        raise ValueError(f"index {k} out of range 1..{N}")
    s = Series(N)
    s.c[k] = Fraction(1)
    return s


def indicator(ns, N: int) -> Series:
    """Sum of n^(-s) over the given indices (each counted once)."""
    s = Series(N)
    for n in set(ns):
        if 1 <= n <= N:
            s.c[n] = Fraction(1)
    return s


def zeta(N: int) -> Series:
    """All-ones coefficients."""
    s = Series(N)
    s.c = [_ZERO] + [Fraction(1)] * N
    return s


def zeta_shift(N: int) -> Series:
    """c_n = n; the shift-by-one zeta, so zeta*zeta_shift counts submodules of Z^2."""
    s = Series(N)
    s.c = [_ZERO] + [Fraction(n) for n in range(1, N + 1)]
    return s


def zeta_double(N: int) -> Series:
    """c_n = 1 iff n is a perfect square; the double-speed zeta."""
    s = Series(N)
    k = 1
    while k * k <= N:
        s.c[k * k] = Fraction(1)
        k += 1
    return s


def prime_product(bases, N: int, sign: int = 1, power: int = 1) -> Series:
    """Truncation of the product of (1 + sign*k^(-s))^power over the bases.

    sign and power are each +1 or -1.  The bases are usually primes but any
    integers >= 2 are accepted (prime squares show up in mirror formulas);
    bases above N contribute nothing.
    """
    if sign not in (1, -1) or power not in (1, -1):
        raise ValueError("sign and power must be +1 or -1")
    out = one(N)
    for k in sorted(set(bases)):
        if k < 2:
            raise ValueError(f"base {k} must be >= 2")
        if k > N:
            continue
        factor = Series(N)
        if power == 1:
            factor.c[1] = Fraction(1)
            factor.c[k] = Fraction(sign)
        else:
            # geometric expansion of (1 + sign*k^(-s))^(-1)
            term, kk = Fraction(1), 1
            while kk <= N:
                factor.c[kk] = term
                term = -sign * term
                kk *= k
        out = out * factor
    return out


def zeta_F(D: int, N: int) -> Series:
    """Ideal-counting series of the quadratic field of discriminant D.

    The count of ideals of norm n is multiplicative: a split p contributes
    e+1 ideals of norm p^e, an inert q contributes one for even e and none
    for odd e, a ramified r contributes exactly one.
    """
    field_data(D)
    kind = {p: split_type(D, p).kind for p in primes_upto(N)}
    spf = smallest_prime_factors(N)
    s = Series(N)
    s.c[1] = Fraction(1)
    for n in range(2, N + 1):
        cnt = 1
        for p, e in factorize(n, spf):
            k = kind[p]
            if k == SPLIT:
                cnt *= e + 1
            elif k == INERT:
                if e % 2:
                    cnt = 0
                    break
            # ramified: exactly one ideal of norm p^e
        s.c[n] = Fraction(cnt)
    return s
