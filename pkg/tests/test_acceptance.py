"""Acceptance suite: each criterion prints one PASS/FAIL line.

Run `pytest tests/test_acceptance.py -v -s` to see the verdict lines while
the assertions do the gating.  All coefficient comparisons are exact
(tolerance zero); the only interval check is the growth diagnostic in
criterion 10, whose stated band is [3.5, 4.5].
"""

import random

from conftest import ALL_DISCS, EXTRA_DISCS, N_EXTRA, N_WORKED, WORKED_DISCS, RANGES
from explicit_formulas import FIXTURE_DISCS, closed_gl, closed_sl

from latzeta.arith import sigma
from latzeta.classgroup import cached_group
from latzeta.formulas import (
    euler_product_holds,
    gl_zeta,
    local_factor,
    psi_equation_check,
    residue_diagnostic,
    sl_zeta,
)
from latzeta.qform import canonical_gl, canonical_sl, content, discriminant, is_reduced, reduce_form, transform
from latzeta.series import zeta, zeta_F, zeta_shift
from latzeta.sublattice import counts_for_index, enumerate_hnf, ring_stable_counts

S = (0, -1, 1, 0)
T = (1, 1, 0, 1)
TINV = (1, -1, 0, 1)
MIRROR = (1, 0, 0, -1)


def _verdict(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[acceptance {num:02d}] {name}: {'PASS' if ok else 'FAIL'}"
    if detail and not ok:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def _bundles(D, N):
    return [gl_zeta(D, g, N) for g in cached_group(D).elements]


def test_criterion_01_oracle_formula_agreement_worked_range(oracle_tables):
    bad = []
    for D in WORKED_DISCS:
        sl = sl_zeta(D, N_WORKED).integer_coeffs()
        for g in cached_group(D).elements:
            table = oracle_tables[(D, g)]
            gl = gl_zeta(D, g, N_WORKED).gl_counts()
            if sl[1:] != table.sl[1:] or gl[1:] != table.gl[1:]:
                bad.append((D, g))
    _verdict(1, "oracle vs formula, six discriminants, m <= 300, exact", not bad, str(bad))


def test_criterion_02_transcribed_formulas_match_generic_assembly():
    bad = []
    for D in FIXTURE_DISCS:
        if closed_sl(D, N_WORKED) != sl_zeta(D, N_WORKED):
            bad.append((D, "sl"))
        for g in cached_group(D).elements:
            if closed_gl(D, g, N_WORKED) != gl_zeta(D, g, N_WORKED).gl:
                bad.append((D, g))
    _verdict(2, "hand-transcribed closed formulas, m <= 300, exact", not bad, str(bad))


def test_criterion_03_generalization_beyond_worked_examples(oracle_tables):
    bad = []
    for D in EXTRA_DISCS:
        sl = sl_zeta(D, N_EXTRA).integer_coeffs()
        for g in cached_group(D).elements:
            table = oracle_tables[(D, g)]
            gl = gl_zeta(D, g, N_EXTRA).gl_counts()
            if sl[1:] != table.sl[1:] or gl[1:] != table.gl[1:]:
                bad.append((D, g))
    _verdict(3, "oracle vs formula for -24 and -40, m <= 200, exact", not bad, str(bad))


def test_criterion_04_euler_product_criterion():
    ok = True
    details = []
    for D in (-7, -8, -20, -24, -40):
        rep = euler_product_holds(D, 300)
        if not (rep.holds and rep.exponent_two and rep.consistent):
            ok = False
            details.append(f"{D}: expected multiplicative")
    rep = euler_product_holds(-23, 300)
    if not (not rep.holds and rep.witness is not None and rep.witness <= 50):
        ok = False
        details.append(f"-23: expected failure with witness <= 50, got {rep.witness}")
    if not (not rep.exponent_two and rep.consistent):
        ok = False
        details.append("-23: structural predicate out of line")
    _verdict(4, "Euler product iff exponent-two class group, witness for -23", ok, "; ".join(details))


def test_criterion_05_local_factors_match_oracle():
    f = (1, 1, 2)
    bad = []
    for p in (2, 3, 7):
        formula = local_factor(-7, p, 5)
        oracle = [counts_for_index(f, p**i)[0] for i in range(6)]
        if formula != oracle:
            bad.append((p, formula, oracle))
    _verdict(5, "prime-power counts for D=-7, p in {2,3,7}, i <= 5, exact", not bad, str(bad))


def test_criterion_06_class_independence(oracle_tables):
    ok = True
    details = []
    for D in (-20, -23):
        columns = [oracle_tables[(D, g)].sl for g in cached_group(D).elements]
        if any(col != columns[0] for col in columns):
            ok = False
            details.append(f"{D}: oracle sl columns differ across classes")
    mirror_a, mirror_b = (2, 1, 3), (2, -1, 3)
    if oracle_tables[(-23, mirror_a)].gl != oracle_tables[(-23, mirror_b)].gl:
        ok = False
        details.append("-23: oracle gl columns differ between mirror classes")
    if gl_zeta(-23, mirror_a, N_WORKED).gl != gl_zeta(-23, mirror_b, N_WORKED).gl:
        ok = False
        details.append("-23: formula gl differs between mirror classes")
    _verdict(6, "sl independent of class; mirror classes share gl", ok, "; ".join(details))


def test_criterion_07_psi_functional_equation():
    bad = [D for D in (-7, -8, -20, -23, -24, -40) if not psi_equation_check(D, 200)]
    _verdict(7, "reflexive-submodule series equation, N = 200", not bad, str(bad))


def test_criterion_08_ring_closure_counts():
    bad = []
    for D in (-7, -20):
        counts = ring_stable_counts(D, 60)
        quotient = (zeta(60) * zeta_shift(60)).div(zeta_F(D, 60))
        if any(counts[m] != quotient.coeff(m) for m in range(1, 61)):
            bad.append(D)
    _verdict(8, "submodules with full ring closure match series quotient, m <= 60", not bad, str(bad))


def _word_matrix(rng, length):
    M = (1, 0, 0, 1)
    for _ in range(length):
        g = rng.choice((S, T, TINV))
        p, q, r, s = M
        p2, q2, r2, s2 = g
        M = (p * p2 + q * r2, p * q2 + q * s2, r * p2 + s * r2, r * q2 + s * s2)
    return M


def test_criterion_09_structural_suites(oracle_tables):
    ok = True
    details = []

    # 9a: canonical forms stable under 1000 random unimodular changes per
    # discriminant (both determinants), plus the mirror law
    rng = random.Random(20260809)
    for D in ALL_DISCS:
        forms = cached_group(D).elements
        for _ in range(1000):
            f = rng.choice(forms)
            M = _word_matrix(rng, rng.randint(0, 12))
            g = transform(f, M)
            if canonical_sl(g) != canonical_sl(f) or canonical_gl(g) != canonical_gl(f):
                ok = False
                details.append(f"9a proper: D={D} f={f} M={M}")
                break
            p, q, r, s = M
            gneg = transform(f, (p, -q, r, -s))  # determinant -1
            a, b, c = f
            if canonical_gl(gneg) != canonical_gl(f) or canonical_sl(gneg) != canonical_sl((a, -b, c)):
                ok = False
                details.append(f"9a improper: D={D} f={f}")
                break
            red = reduce_form(g)
            if not is_reduced(red) or reduce_form(red) != red or content(red) != content(g) \
                    or discriminant(red) != discriminant(g):
                ok = False
                details.append(f"9a reduction invariants: D={D} f={f}")
                break

    # 9b: class-group axioms, exhaustively per discriminant
    for D in ALL_DISCS:
        G = cached_group(D)
        els = G.elements
        for a in els:
            if G.compose(a, G.inverse(a)) != G.identity or G.conjugate(a) != G.inverse(a):
                ok = False
                details.append(f"9b inverse: D={D}")
            for b in els:
                ab = G.compose(a, b)
                if ab not in els or ab != G.compose(b, a):
                    ok = False
                    details.append(f"9b closure/commutativity: D={D}")
                for c in els:
                    if G.compose(ab, c) != G.compose(a, G.compose(b, c)):
                        ok = False
                        details.append(f"9b associativity: D={D}")

    # 9c: sigma(m) sublattices at every index up to 300
    for m in range(1, N_WORKED + 1):
        if len(enumerate_hnf(m)) != sigma(m):
            ok = False
            details.append(f"9c count at m={m}")
            break

    # 9d: integrality and the gl <= sl <= 2*gl sandwich for every bundle
    # (gl_zeta raises internally on violation; recheck plainly here)
    for D, N in RANGES.items():
        sl = sl_zeta(D, N).integer_coeffs()
        for bundle in _bundles(D, N):
            gl = bundle.gl_counts()
            if any(not gl[m] <= sl[m] <= 2 * gl[m] for m in range(1, N + 1)):
                ok = False
                details.append(f"9d sandwich: D={D}")

    _verdict(9, "canonicality, group axioms, sigma counts, sandwich", ok, "; ".join(details[:3]))


def test_criterion_10_residue_growth_diagnostic(oracle_tables):
    ok = True
    details = []
    for D in (-3, -4):
        table = oracle_tables[(D, cached_group(D).identity)]
        rep = residue_diagnostic(D, N_WORKED, table=table)
        print(
            f"  residue diagnostic D={D}: estimate {rep.residue_estimate:.4f}, "
            f"doubling sl {rep.doubling_sl:.3f}, gl {rep.doubling_gl:.3f} (report only)"
        )
        for label, ratio in (("sl", rep.doubling_sl), ("gl", rep.doubling_gl)):
            if not 3.5 <= ratio <= 4.5:
                ok = False
                details.append(f"D={D} {label} ratio {ratio:.3f}")
    _verdict(10, "partial-sum doubling ratio s_300/s_150 within [3.5, 4.5]", ok, "; ".join(details))
