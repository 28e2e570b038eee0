"""Closed formulas for the sublattice-counting Dirichlet series.

Everything is assembled from class data of the imaginary quadratic field of
discriminant D.  The load-bearing object is S(n), the set of ideal classes
realized by integral ideals of norm n; translating it by a class g gives
the classes of the index-n ideal "sublattices" of any ideal in g, which is
what the rotation and reflection counts need.  The proper-equivalence
series depends only on D; the full-equivalence series splits into a
rotation part and a reflection part, the latter keyed on the residue of
the square-free radicand d mod 4 with the two extra-unit discriminants
-3 and -4 dispatched to their own closed products.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import factorize, primes_upto, smallest_prime_factors
from .classgroup import cached_group, cached_subgroups, principal_form
from .qform import Form
from .quadfield import INERT, RAMIFIED, SPLIT, field_data, prime_form, ramified_primes, split_type
from .series import Series, delta, one, prime_product, zero, zeta, zeta_F, zeta_double, zeta_shift
from .sublattice import CoefficientTable, brute_coefficients, partial_sums

EXCEPTIONAL_DISCS = (-3, -4)


@lru_cache(maxsize=None)
def _prime_kinds(D: int, N: int) -> dict[int, str]:
    return {p: split_type(D, p).kind for p in primes_upto(N)}


def split_primes(D: int, N: int) -> list[int]:
    return [p for p, k in _prime_kinds(D, N).items() if k == SPLIT]


@lru_cache(maxsize=None)
def _prime_class(D: int, p: int) -> Form:
    """Class of the chosen prime ideal of norm p (p split or ramified)."""
    G = cached_group(D)
    return G._canonical(prime_form(D, p))


@lru_cache(maxsize=None)
def class_sets(D: int, N: int) -> tuple[frozenset[Form], ...]:
    """S(n) for n <= N: ideal classes realized by integral ideals of norm n.

    Built multiplicatively from the splitting data: a split p^e factor
    contributes the classes P^(e-2k) for 0 <= k <= e where P is a split
    factor's class, an inert q^e contributes the identity for even e and
    kills the set for odd e, a ramified r^e contributes the single class
    of the ramified factor to the e-th power.  Entry 0 is a pad.
    """
    G = cached_group(D)
    spf = smallest_prime_factors(N)
    kinds = _prime_kinds(D, N)
    sets: list[frozenset[Form]] = [frozenset()] * (N + 1)
    sets[1] = frozenset({G.identity})
    for n in range(2, N + 1):
        cur: set[Form] | None = {G.identity}
        for p, e in factorize(n, spf):
            kind = kinds[p]
            if kind == INERT:
                if e % 2:
                    cur = None
                    break
                continue
            cls = _prime_class(D, p)
            if kind == RAMIFIED:
                contrib = {G.power(cls, e % 2)}
            else:
                contrib = {G.power(cls, e - 2 * k) for k in range(e + 1)}
            cur = {G.compose(x, y) for x in cur for y in contrib}
        sets[n] = frozenset(cur) if cur else frozenset()
    return tuple(sets)


def _class_count_series(D: int, N: int) -> Series:
    """Series whose n-th coefficient is the number of classes in S(n)."""
    sets = class_sets(D, N)
    return Series(N, [0] + [len(sets[n]) for n in range(1, N + 1)])


@lru_cache(maxsize=None)
def _submodule_over_field(D: int, N: int) -> Series:
    """The quotient (submodules of Z^2) / (ideals of the maximal order)."""
    return (zeta(N) * zeta_shift(N)).div(zeta_F(D, N))


@lru_cache(maxsize=None)
def sl_zeta(D: int, N: int) -> Series:
    """Series counting index-m subforms up to proper equivalence.

    Depends only on the field, not on the class: two forms with the same
    fundamental discriminant share all proper-equivalence counts.
    """
    fd = field_data(D)
    counting = _class_count_series(D, N)
    out = (_submodule_over_field(D, N) * counting).scale(Fraction(2, fd.units))
    if fd.units > 2:
        extra = prime_product(split_primes(D, N), N, sign=-1) * zeta_F(D, N)
        out = out + extra.scale(Fraction(fd.units - 2, fd.units))
    _require_counts(out, f"sl series for D={D}")
    return out


def _require_counts(s: Series, what: str) -> None:
    for n in range(1, s.N + 1):
        q = s.coeff(n)
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"{what}: coefficient at {n} is {q}, not a count")


def _canonical_class(D: int, g: Form) -> Form:
    return cached_group(D)._canonical(g)


def rot_term(D: int, g: Form, N: int) -> Series:
    """Rotation half of the full-equivalence series for the class g.

    Half the proper series plus a correction counting, per index n, the
    classes reachable from g by an index-n ideal that are not reachable
    from the conjugate class; the correction dies whenever the class group
    has exponent <= 2.
    """
    G = cached_group(D)
    g = _canonical_class(D, g)
    ginv = G.inverse(g)
    sets = class_sets(D, N)
    corr = [0] * (N + 1)
    for n in range(1, N + 1):
        fwd = {G.compose(g, s) for s in sets[n]}
        bwd = {G.compose(ginv, s) for s in sets[n]}
        corr[n] = len(fwd - bwd)
    corr_series = Series(N, corr)
    half = Fraction(1, 2)
    return sl_zeta(D, N).scale(half) + (_submodule_over_field(D, N) * corr_series).scale(half)


def _two_prefactor(N: int, kind: str) -> Series:
    """The dyadic prefactors showing up in every reflection count."""
    if kind == "generic":  # 1 - 2^(-s) + 2*2^(-2s)
        return one(N) - delta(2, N) + delta(4, N).scale(2)
    if kind == "ortho":  # 1 + 2^(-s)
        return one(N) + delta(2, N)
    if kind == "square":  # 1 + 2^(-2s)
        return one(N) + delta(4, N)
    raise ValueError(kind)


def refl_term(D: int, g: Form, N: int) -> Series:
    """Reflection half of the full-equivalence series for the class g.

    For D = -3 and D = -4 this is a closed product over the split primes.
    Otherwise the three counting series (self-inverse classes, classes in
    the ramified subgroup, classes in ramified-minus-orthogonal) over the
    translated sets g*S(n) combine with dyadic prefactors, divided by the
    double-speed zeta and the product over ramified primes.
    """
    fd = field_data(D)
    g = _canonical_class(D, g)
    if D in EXCEPTIONAL_DISCS:
        pref = _two_prefactor(N, "generic" if D == -3 else "square")
        zz = zeta(N)
        split_prod = prime_product(split_primes(D, N), N, sign=1)
        return (pref * zz * zz * split_prod).scale(Fraction(1, 2))

    G = cached_group(D)
    sub = cached_subgroups(D)
    sets = class_sets(D, N)
    translated = [frozenset()] * (N + 1)
    for n in range(1, N + 1):
        translated[n] = {G.compose(g, s) for s in sets[n]}

    def count_in(members) -> Series:
        return Series(N, [0] + [len(translated[n] & members) for n in range(1, N + 1)])

    zz = zeta(N)
    common = (zz * zz).div(zeta_double(N) * prime_product(ramified_primes(D), N, sign=1))
    out = (common * count_in(sub.refl) * _two_prefactor(N, "generic")).scale(Fraction(1, 2))
    dm = fd.d % 4
    if dm == 2:
        out = out + common * count_in(sub.ram) * (delta(2, N) - delta(4, N))
    elif dm == 3:
        assert sub.ortho is not None
        out = out + common * count_in(sub.ortho) * delta(2, N)
        out = out - common * count_in(sub.ram - sub.ortho) * delta(4, N)
    # dm == 1: the orthogonal/ramified terms do not exist, nothing to add
    return out


@dataclass(frozen=True)
class ZetaBundle:
    """The four assembled series for one class, with sanity checks applied."""

    D: int
    cls: Form
    N: int
    sl: Series
    rot: Series
    refl: Series
    gl: Series

    def sl_counts(self) -> list[int]:
        return self.sl.integer_coeffs()

    def gl_counts(self) -> list[int]:
        return self.gl.integer_coeffs()


def gl_zeta(D: int, g: Form, N: int) -> ZetaBundle:
    """Assemble proper/rotation/reflection/full series for the class g.

    The full series must come out as non-negative integers squeezed between
    half the proper series and the proper series; a violation is an
    internal bug, never a property of valid input, so it raises.
    """
    g = _canonical_class(D, g)
    sl = sl_zeta(D, N)
    rot = rot_term(D, g, N)
    refl = refl_term(D, g, N)
    gl = rot + refl
    _require_counts(gl, f"gl series for D={D}, class {g}")
    sl_i, gl_i = sl.integer_coeffs(), gl.integer_coeffs()
    for m in range(1, N + 1):
        if not gl_i[m] <= sl_i[m] <= 2 * gl_i[m]:
            raise ArithmeticError(
                f"class-count sandwich fails at m={m} for D={D}: sl={sl_i[m]}, gl={gl_i[m]}"
            )
    return ZetaBundle(D=D, cls=g, N=N, sl=sl, rot=rot, refl=refl, gl=gl)


def psi_series(D: int, g: Form, N: int) -> Series:
    """Generating series of reflection-invariant submodules attached to a
    two-torsion class g, for fields with unit group {1, -1} only."""
    fd = field_data(D)
    if fd.units != 2:
        raise ValueError(f"series undefined for D={D}: extra roots of unity")
    g = _canonical_class(D, g)
    sub = cached_subgroups(D)
    if g not in sub.refl:
        raise ValueError(f"class {g} is not two-torsion")
    dm = fd.d % 4
    if dm == 1 or g not in sub.ram:
        extra = zero(N)
    elif dm == 2:
        extra = (delta(2, N) - delta(4, N)).scale(2)
    elif g in sub.ortho:  # dm == 3
        extra = delta(2, N).scale(2)
    else:
        extra = delta(4, N).scale(-2)
    pref = _two_prefactor(N, "generic") + extra
    zz = zeta(N)
    return (pref * zz * zz).div(zeta_double(N) * prime_product(ramified_primes(D), N, sign=1))


def psi_equation_check(D: int, N: int) -> bool:
    """Verify, truncated to N, the linear relations that pin the
    reflection-invariant submodule series: summing N(a)^(-s) * Psi(g*[a])
    over the square-free products a of ramified factors must give
    zeta^2/zeta(2s) times 1 + 2^(-s) on the orthogonal subgroup and times
    the generic dyadic prefactor off it."""
    G = cached_group(D)
    sub = cached_subgroups(D)
    rams = ramified_primes(D)
    zz = zeta(N)
    base = (zz * zz).div(zeta_double(N))
    for g in sorted(sub.refl):
        lhs = zero(N)
        for mask in range(1 << len(rams)):
            norm = 1
            cls = G.identity
            for i, r in enumerate(rams):
                if mask >> i & 1:
                    norm *= r
                    cls = G.compose(cls, _prime_class(D, r))
            if norm > N:
                continue  # contributes nothing below the truncation
            lhs = lhs + delta(norm, N) * psi_series(D, G.compose(g, cls), N)
        in_ortho = sub.ortho is not None and g in sub.ortho
        rhs = base * _two_prefactor(N, "ortho" if in_ortho else "generic")
        if lhs != rhs:
            return False
    return True


def local_factor(D: int, p: int, K: int) -> list[int]:
    """Proper-class counts at p-power indices: a at p^i for 0 <= i <= K.

    Inert and ramified primes give the geometric sums (p^(i+1)-1)/(p-1);
    a split prime caps the class variety at k_p, the order of the square
    of a split factor's class.
    """
    fd = field_data(D)
    if fd.units != 2:
        raise ValueError(f"local factors are only defined for D with two units, got D={D}")
    info = split_type(D, p)
    out = []
    if info.kind in (INERT, RAMIFIED):
        for i in range(K + 1):
            out.append((p ** (i + 1) - 1) // (p - 1))
        return out
    G = cached_group(D)
    sq = G.compose(_prime_class(D, p), _prime_class(D, p))
    k_p = G.order(sq)
    for i in range(K + 1):
        out.append((p ** (i + 1) - p ** max(i - k_p + 1, 0)) // (p - 1))
    return out


@dataclass(frozen=True)
class EulerReport:
    """Outcome of the Euler-product scan of the proper-equivalence series."""

    D: int
    N: int
    holds: bool
    witness: int | None              # least m where a_m differs from the product
    witness_coefficient: int | None
    witness_product: int | None
    exponent_two: bool               # every class squares to the identity
    structure: str
    criterion_applies: bool          # the iff statement excludes D = -3, -4
    consistent: bool | None          # holds == exponent_two, when applicable


def euler_product_holds(D: int, N: int) -> EulerReport:
    """Scan whether the proper-class counts are multiplicative up to N.

    Multiplicativity at coprime indices is all the Euler product can fail
    on; the report carries the least witness plus the structural predicate
    (class group of exponent <= 2) that is equivalent away from -3, -4.
    """
    G = cached_group(D)
    counts = sl_zeta(D, N).integer_coeffs()
    spf = smallest_prime_factors(N)
    witness = None
    for m in range(2, N + 1):
        fac = factorize(m, spf)
        if len(fac) < 2:
            continue
        prod = 1
        for p, e in fac:
            prod *= counts[p**e]
        if prod != counts[m]:
            witness = (m, counts[m], prod)
            break
    exponent_two = G.exponent_two()
    applies = D not in EXCEPTIONAL_DISCS
    holds = witness is None
    return EulerReport(
        D=D,
        N=N,
        holds=holds,
        witness=witness[0] if witness else None,
        witness_coefficient=witness[1] if witness else None,
        witness_product=witness[2] if witness else None,
        exponent_two=exponent_two,
        structure=G.structure_str(),
        criterion_applies=applies,
        consistent=(holds == exponent_two) if applies else None,
    )


@dataclass(frozen=True)
class ResidueReport:
    """DIAGNOSTIC ONLY: truncated residue estimate at s = 2 and the
    doubling ratios of the oracle partial sums.  No rigorous tail bound is
    attached; nothing should gate on these numbers."""

    D: int
    N: int
    residue_estimate: float
    class_sum_truncated: Fraction    # sum over n <= N of |S(n)|/n^2, exact
    zeta2: float
    zeta_F2_estimate: float
    doubling_sl: float               # s_N / s_(N/2) for proper classes
    doubling_gl: float
    partial_sl: tuple[int, int]      # (s_(N/2), s_N)
    partial_gl: tuple[int, int]


def residue_diagnostic(D: int, N: int, table: CoefficientTable | None = None) -> ResidueReport:
    """Estimate the simple-pole residue of the proper series at s = 2 and
    report how fast the oracle partial sums double (about 4 expected from
    quadratic growth).  Runs the oracle on the principal form when no
    precomputed table is supplied."""
    fd = field_data(D)
    sets = class_sets(D, N)
    class_sum = sum((Fraction(len(sets[n]), n * n) for n in range(1, N + 1)), Fraction(0))
    zeta2 = math.pi**2 / 6
    zf = zeta_F(D, N).integer_coeffs()
    zf2 = float(sum(Fraction(zf[n], n * n) for n in range(1, N + 1)))
    residue = 2 * zeta2 * float(class_sum) / (fd.units * zf2)
    if table is None:
        table = brute_coefficients(principal_form(D), N)
    half = table.N // 2
    s_sl = partial_sums(table.sl)
    s_gl = partial_sums(table.gl)
    return ResidueReport(
        D=D,
        N=N,
        residue_estimate=residue,
        class_sum_truncated=class_sum,
        zeta2=zeta2,
        zeta_F2_estimate=zf2,
        doubling_sl=s_sl[table.N] / s_sl[half],
        doubling_gl=s_gl[table.N] / s_gl[half],
        partial_sl=(s_sl[half], s_sl[table.N]),
        partial_gl=(s_gl[half], s_gl[table.N]),
    )
