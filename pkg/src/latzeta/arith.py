"""Small integer helpers: gcds, divisors, factoring, 2x2 Hermite bases."""

from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and g = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    large.reverse()
    return small + large


def sigma(m: int) -> int:
    """Sum of divisors of m."""
    return sum(divisors(m))


def primes_upto(n: int) -> list[int]:
    """Primes <= n by sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(2, n + 1) if flags[p]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def smallest_prime_factors(n: int) -> list[int]:
    """spf[m] = least prime factor of m, for 0 <= m <= n (spf[0] = spf[1] = 0)."""
    spf = list(range(n + 1))
    if n >= 1:
        spf[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factorize(m: int, spf: list[int] | None = None) -> list[tuple[int, int]]:
    """Prime factorization [(p, e), ...] of m >= 1, p ascending."""
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    out = []
    if spf is not None and m < len(spf):
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        return out
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


def module_hnf(gens: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Hermite basis (A, B, C) of the Z-span of the given 2-vectors.

    The span must have rank 2; it then equals Z*(A, 0) + Z*(B, C) with
    A, C >= 1 and 0 <= B < A.  Distinct full-rank modules get distinct
    triples, so the triple doubles as a canonical key.
    """
    x0, y0 = 0, 0
    for x, y in gens:
        if y == 0:
            continue
        if y0 == 0:
            x0, y0 = x, y
        else:
            g, s, t = xgcd(y0, y)
            x0, y0 = s * x0 + t * x, g
    if y0 == 0:
        raise ValueError("module has rank < 2")
    if y0 < 0:
        x0, y0 = -x0, -y0
    a = 0
    for x, y in gens:
        a = gcd(a, x - (y // y0) * x0)
    if a == 0:
        raise ValueError("module has rank < 2")
    return a, x0 % a, y0
