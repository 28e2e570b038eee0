"""Integral binary quadratic forms: reduction, canonical keys, base change.

A form a*x^2 + b*x*y + c*y^2 is stored as the plain tuple (a, b, c) so the
enumeration loops stay cheap.  Operations assume positive definite input
(a > 0, b^2 - 4ac < 0) and work for imprimitive forms; reduction preserves
the content gcd(a, b, c).
"""

from math import gcd

Form = tuple[int, int, int]
# row-major (p, q, r, s) for the base change [[p, q], [r, s]]
Matrix2 = tuple[int, int, int, int]


def discriminant(f: Form) -> int:
    a, b, c = f
    return b * b - 4 * a * c


def content(f: Form) -> int:
    a, b, c = f
    return gcd(gcd(a, b), c)


def is_primitive(f: Form) -> bool:
    return content(f) == 1


def is_positive_definite(f: Form) -> bool:
    return f[0] > 0 and discriminant(f) < 0


def require_positive_definite(f: Form) -> None:
    if not is_positive_definite(f):
        raise ValueError(f"form {f} is not positive definite")


def det2(T: Matrix2) -> int:
    p, q, r, s = T
    return p * s - q * r


def is_unimodular(T: Matrix2) -> bool:
    return det2(T) in (1, -1)


def transform(f: Form, T: Matrix2) -> Form:
    """Substitute (x, y) -> (p*x + q*y, r*x + s*y).

    T may be any integer matrix with nonzero determinant; the result has
    discriminant det(T)^2 * disc(f), so index-m sublattice forms come from
    matrices of determinant m.
    """
    p, q, r, s = T
    if p * s - q * r == 0:
        raise ValueError("singular base change")
    a, b, c = f
    return (
        a * p * p + b * p * r + c * r * r,
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        a * q * q + b * q * s + c * s * s,
    )


def reduce_form(f: Form) -> Form:
    """Gauss-reduced representative of the proper equivalence class of f.

    The output satisfies |b| <= a <= c with b >= 0 whenever |b| = a or
    a = c, which pins a unique form per class, imprimitive forms included.
    Idempotent.
    """
    require_positive_definite(f)
    a, b, c = f
    while True:
        if b > a or b <= -a:
            # shift b into (-a, a]
            k = (a - b) // (2 * a)
            c += (a * k + b) * k
            b += 2 * a * k
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return (a, b, c)


def is_reduced(f: Form) -> bool:
    a, b, c = f
    return -a < b <= a <= c and not (a == c and b < 0)


def canonical_sl(f: Form) -> Form:
    """Class key under proper (determinant +1) equivalence."""
    return reduce_form(f)


def canonical_gl(f: Form) -> Form:
    """Class key under full equivalence; merges the mirrors (a, b, c) and (a, -b, c)."""
    a, b, c = reduce_form(f)
    return (a, -b, c) if b < 0 else (a, b, c)


def parse_form(text: str) -> Form:
    """Parse 'a,b,c' into a form triple."""
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected a comma triple 'a,b,c', got {text!r}")
    try:
        a, b, c = (int(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"expected integer entries in {text!r}") from None
    return (a, b, c)
