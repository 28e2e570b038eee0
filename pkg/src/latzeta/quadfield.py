"""Imaginary quadratic field bookkeeping: fundamental discriminants, unit
counts, prime splitting, and forms representing prime ideals.

Only maximal orders are supported: every entry point validates that D is a
fundamental discriminant and refuses anything else.
"""

from dataclasses import dataclass

from .arith import factorize, is_prime
from .qform import Form, reduce_form

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"


def _squarefree(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def is_fundamental_discriminant(D: int) -> bool:
    """True for the discriminant of the maximal order of an imaginary quadratic field."""
    if D >= 0:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        d = D // 4
        return d % 4 in (2, 3) and _squarefree(d)
    return False


@dataclass(frozen=True)
class FieldData:
    """Validated invariants of the field Q(sqrt(d)) with maximal-order discriminant D."""

    D: int            # field discriminant: d if d = 1 mod 4, else 4d
    d: int            # square-free radicand
    units: int        # number of roots of unity: 6 (D=-3), 4 (D=-4), else 2
    tau_kind: str     # "half" for Z[(1+sqrt(d))/2], "sqrt" for Z[sqrt(d)]
    tau_t: int        # the ring generator tau satisfies tau^2 = tau_t*tau + tau_n
    tau_n: int


def field_data(D: int) -> FieldData:
    if D >= 0:
        raise ValueError(f"discriminant must be negative, got {D}")
    if not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a fundamental discriminant (non-maximal order)")
    if D % 4 == 1:
        d, kind, t, n = D, "half", 1, (D - 1) // 4
    else:
        d, kind, t, n = D // 4, "sqrt", 0, D // 4
    units = 6 if D == -3 else 4 if D == -4 else 2
    return FieldData(D=D, d=d, units=units, tau_kind=kind, tau_t=t, tau_n=n)


@dataclass(frozen=True)
class PrimeSplitInfo:
    p: int
    kind: str  # SPLIT, INERT or RAMIFIED


def split_type(D: int, p: int) -> PrimeSplitInfo:
    """Splitting behaviour of the rational prime p in the field of discriminant D.

    For odd p this is the Legendre symbol (D/p); for p = 2 the rule is
    D = 1 mod 8 split, D = 5 mod 8 inert, D even ramified.
    """
    field_data(D)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if D % 2 == 0:
            kind = RAMIFIED
        elif D % 8 == 1:
            kind = SPLIT
        else:
            kind = INERT
    elif D % p == 0:
        kind = RAMIFIED
    else:
        kind = SPLIT if pow(D % p, (p - 1) // 2, p) == 1 else INERT
    return PrimeSplitInfo(p=p, kind=kind)


def ramified_primes(D: int) -> list[int]:
    """The primes dividing D, each carrying a unique prime ideal with square (p)."""
    field_data(D)
    return [p for p, _ in factorize(-D)]


def prime_form(D: int, p: int) -> Form:
    """Primitive form of discriminant D whose class is a prime ideal of norm p.

    Requires p split or ramified.  The middle coefficient is the residue b
    mod 2p with b = D mod 2 and b^2 = D mod 4p, taken minimal in absolute
    value with ties broken toward positive b, so the choice between the two
    conjugate ideals over a split p is deterministic.
    """
    info = split_type(D, p)
    if info.kind == INERT:
        raise ValueError(f"{p} is inert in discriminant {D}: no ideal of norm {p}")
    best = None
    for b0 in range(2 * p):
        if (b0 - D) % 2 or (b0 * b0 - D) % (4 * p):
            continue
        for b in (b0, b0 - 2 * p):
            key = (abs(b), -b)
            if best is None or key < best[0]:
                best = (key, b)
    assert best is not None, "a split/ramified prime always has a square root of D mod 4p"
    b = best[1]
    return (p, b, (b * b - D) // (4 * p))


def ramified_factor_form(D: int, r: int) -> Form:
    """Reduced form in the class of the prime ideal over the ramified prime r."""
    info = split_type(D, r)
    if info.kind != RAMIFIED:
        raise ValueError(f"{r} does not ramify in discriminant {D}")
    return reduce_form(prime_form(D, r))
