"""Command-line front end: compute, verify and export coefficient tables.

Exit codes: 0 success (for `verify`: every compared coefficient matches),
1 verification mismatch, 2 usage or domain error.  JSON output is emitted
with sorted keys and a fixed layout so that parse -> re-emit is the
identity; CSV for `verify` has the fixed columns m,a_formula,a_brute,match.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .classgroup import cached_group, cached_subgroups
from .formulas import (
    euler_product_holds,
    gl_zeta,
    local_factor,
    residue_diagnostic,
    sl_zeta,
)
from .qform import discriminant, is_positive_definite, parse_form
from .quadfield import field_data
from .sublattice import GL, SL, brute_coefficients

DEFAULT_MAX = 300
DEFAULT_CAP = 10000


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _sig6(x: float) -> str:
    return f"{x:.6g}"


def _capped_max(n: int) -> int:
    cap = int(os.environ.get("LATZETA_MAX_N", str(DEFAULT_CAP)))
    if not 1 <= n <= cap:
        raise ValueError(f"--max {n} outside 1..{cap} (cap set by LATZETA_MAX_N)")
    return n


def _resolve_form(args, D: int):
    if getattr(args, "form", None):
        f = parse_form(args.form)
        if not is_positive_definite(f):
            raise ValueError(f"form {f} is not positive definite")
        if discriminant(f) != D:
            raise ValueError(f"form {f} has discriminant {discriminant(f)}, expected {D}")
        return cached_group(D)._canonical(f)
    return cached_group(D).identity


def _modes(args) -> list[str]:
    mode = getattr(args, "mode", "both")
    return [SL, GL] if mode == "both" else [mode]


@dataclass
class VerificationReport:
    disc: int
    form: tuple
    mode: str
    N: int
    coeffs_formula: list[int]
    coeffs_brute: list[int]
    mismatches: list[tuple[int, int, int]]
    elapsed_ms: dict[str, float]

    def to_json_obj(self) -> dict:
        return {
            "disc": self.disc,
            "form": list(self.form),
            "mode": self.mode,
            "N": self.N,
            "coeffs_formula": self.coeffs_formula,
            "coeffs_brute": self.coeffs_brute,
            "mismatches": [list(t) for t in self.mismatches],
            "elapsed_ms": self.elapsed_ms,
        }


def _formula_counts(D: int, g, N: int, mode: str) -> list[int]:
    if mode == SL:
        return sl_zeta(D, N).integer_coeffs()[1:]
    return gl_zeta(D, g, N).gl_counts()[1:]


def _build_report(D: int, g, N: int, mode: str, jobs: int, table=None, brute_ms=None) -> VerificationReport:
    t0 = time.perf_counter()
    formula = _formula_counts(D, g, N, mode)
    t1 = time.perf_counter()
    if table is None:
        table = brute_coefficients(g, N, jobs=jobs)
        brute_ms = (time.perf_counter() - t1) * 1000.0
    brute = table.column(mode)[1:]
    mismatches = [
        (m, formula[m - 1], brute[m - 1]) for m in range(1, N + 1) if formula[m - 1] != brute[m - 1]
    ]
    return VerificationReport(
        disc=D,
        form=g,
        mode=mode,
        N=N,
        coeffs_formula=formula,
        coeffs_brute=brute,
        mismatches=mismatches,
        elapsed_ms={"formula": (t1 - t0) * 1000.0, "brute": brute_ms or 0.0},
    )


def cmd_classgroup(args) -> int:
    D = args.disc
    G = cached_group(D)
    sub = cached_subgroups(D)
    if args.json:
        obj = {
            "disc": D,
            "h": G.h,
            "structure": G.structure_str(),
            "classes": [list(g) for g in G.elements],
            "subgroups": {
                "refl": [list(g) for g in sorted(sub.refl)],
                "ram": [list(g) for g in sorted(sub.ram)],
                "ortho": None if sub.ortho is None else [list(g) for g in sorted(sub.ortho)],
            },
        }
        print(_json_dump(obj))
        return 0
    print(f"discriminant {D}: h = {G.h}, class group {G.structure_str()}")
    for g in G.elements:
        tag = "  [principal]" if g == G.identity else ""
        print(f"  {g}{tag}")
    print(f"two-torsion: {sorted(sub.refl)}")
    print(f"ramified subgroup: {sorted(sub.ram)}")
    if sub.ortho is None:
        print("orthogonal subgroup: absent (half-integer ring)")
    else:
        print(f"orthogonal subgroup: {sorted(sub.ortho)}")
    return 0


def _emit_table(args, D, g, N, columns: dict[str, list[int]], source: str) -> int:
    modes = list(columns)
    if args.json:
        obj = {
            "disc": D,
            "form": list(g),
            "N": N,
            "source": source,
            "coefficients": {mode: columns[mode] for mode in modes},
        }
        print(_json_dump(obj))
        return 0
    header = ["m"] + [f"a_{mode}" for mode in modes]
    if args.csv:
        print(",".join(header))
        for m in range(1, N + 1):
            print(",".join([str(m)] + [str(columns[mode][m - 1]) for mode in modes]))
        return 0
    print(f"# {source} counts, disc={D}, form={g}, N={N}")
    print(" ".join(f"{h:>8}" for h in header))
    for m in range(1, N + 1):
        print(" ".join([f"{m:>8}"] + [f"{columns[mode][m - 1]:>8}" for mode in modes]))
    return 0


def cmd_brute(args) -> int:
    D = args.disc
    field_data(D)
    N = _capped_max(args.max)
    g = _resolve_form(args, D)
    table = brute_coefficients(g, N, jobs=args.jobs)
    columns = {mode: table.column(mode)[1:] for mode in _modes(args)}
    return _emit_table(args, D, g, N, columns, "brute")


def cmd_formula(args) -> int:
    D = args.disc
    field_data(D)
    N = _capped_max(args.max)
    g = _resolve_form(args, D)
    columns = {mode: _formula_counts(D, g, N, mode) for mode in _modes(args)}
    return _emit_table(args, D, g, N, columns, "formula")


def cmd_verify(args) -> int:
    D = args.disc
    field_data(D)
    N = _capped_max(args.max)
    modes = _modes(args)
    forms = list(cached_group(D).elements) if args.all_classes else [_resolve_form(args, D)]
    if args.csv and (len(forms) > 1 or len(modes) > 1):
        raise ValueError("--csv needs a single class and a single mode")
    reports = []
    for g in forms:
        t0 = time.perf_counter()
        table = brute_coefficients(g, N, jobs=args.jobs)
        brute_ms = (time.perf_counter() - t0) * 1000.0
        for mode in modes:
            reports.append(_build_report(D, g, N, mode, args.jobs, table=table, brute_ms=brute_ms))
    if args.json:
        objs = [r.to_json_obj() for r in reports]
        print(_json_dump(objs[0] if len(objs) == 1 else objs))
    elif args.csv:
        r = reports[0]
        print("m,a_formula,a_brute,match")
        for m in range(1, N + 1):
            f, b = r.coeffs_formula[m - 1], r.coeffs_brute[m - 1]
            print(f"{m},{f},{b},{int(f == b)}")
    else:
        for r in reports:
            status = "OK" if not r.mismatches else f"{len(r.mismatches)} mismatches"
            print(
                f"disc={r.disc} form={r.form} mode={r.mode} N={r.N}: {status} "
                f"(formula {r.elapsed_ms['formula']:.1f} ms, brute {r.elapsed_ms['brute']:.1f} ms)"
            )
            for m, fv, bv in r.mismatches[:20]:
                print(f"  m={m}: formula={fv} brute={bv}")
    return 0 if all(not r.mismatches for r in reports) else 1


def cmd_euler(args) -> int:
    D = args.disc
    field_data(D)
    N = _capped_max(args.max)
    rep = euler_product_holds(D, N)
    if args.json:
        obj = {
            "disc": rep.D,
            "N": rep.N,
            "holds": rep.holds,
            "witness": rep.witness,
            "witness_coefficient": rep.witness_coefficient,
            "witness_product": rep.witness_product,
            "exponent_two": rep.exponent_two,
            "structure": rep.structure,
            "criterion_applies": rep.criterion_applies,
            "consistent": rep.consistent,
        }
        print(_json_dump(obj))
        return 0
    verdict = "holds" if rep.holds else "fails"
    print(f"Euler product for disc {D} (m <= {N}): {verdict}; class group {rep.structure}")
    if not rep.holds:
        print(
            f"  witness m={rep.witness}: a_m={rep.witness_coefficient}, "
            f"product over prime powers={rep.witness_product}"
        )
    if rep.criterion_applies:
        pred = "exponent <= 2" if rep.exponent_two else "exponent > 2"
        agree = "agrees" if rep.consistent else "DISAGREES"
        print(f"  structural predicate ({pred}) {agree} with the scan")
    else:
        print("  structural criterion not applicable for this discriminant")
    return 0


def cmd_localfactor(args) -> int:
    D = args.disc
    field_data(D)
    coeffs = local_factor(D, args.prime, args.powers)
    if args.json:
        print(_json_dump({"disc": D, "p": args.prime, "K": args.powers, "coefficients": coeffs}))
        return 0
    print(f"# proper-class counts at powers of p={args.prime}, disc={D}")
    for i, a in enumerate(coeffs):
        print(f"  a[{args.prime}^{i}] = {a}")
    return 0


def cmd_residue(args) -> int:
    D = args.disc
    field_data(D)
    N = _capped_max(args.max)
    rep = residue_diagnostic(D, N)
    if args.json:
        obj = {
            "disc": rep.D,
            "N": rep.N,
            "residue_estimate": rep.residue_estimate,
            "class_sum_truncated": _frac_str(rep.class_sum_truncated),
            "zeta2": rep.zeta2,
            "zeta_F2_estimate": rep.zeta_F2_estimate,
            "doubling_sl": rep.doubling_sl,
            "doubling_gl": rep.doubling_gl,
            "partial_sl": list(rep.partial_sl),
            "partial_gl": list(rep.partial_gl),
        }
        print(_json_dump(obj))
        return 0
    print(f"# DIAGNOSTIC residue report, disc={D}, N={N} (no rigorous tail bound)")
    print(f"residue estimate at s=2: {_sig6(rep.residue_estimate)}")
    print(f"truncated class sum: {_sig6(float(rep.class_sum_truncated))} "
          f"(exact {_frac_str(rep.class_sum_truncated)})")
    print(f"doubling ratio s_N/s_(N/2): sl {_sig6(rep.doubling_sl)}, gl {_sig6(rep.doubling_gl)}")
    return 0


def _add_common(p, max_default=DEFAULT_MAX, with_form=False, with_mode=False, with_jobs=False):
    p.add_argument("--disc", "-d", type=int, required=True, help="fundamental discriminant (< 0)")
    if max_default is not None:
        p.add_argument("--max", "-N", type=int, default=max_default,
                       help=f"truncation index (default {max_default})")
    if with_form:
        p.add_argument("--form", help="form as 'a,b,c' (default: principal form)")
    if with_mode:
        p.add_argument("--mode", choices=[SL, GL, "both"], default="both",
                       help="equivalence flavour (default both)")
    if with_jobs:
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers for the enumeration oracle (default 1)")
    p.add_argument("--json", action="store_true", help="machine output, canonical key order")
    if with_mode:
        p.add_argument("--csv", action="store_true", help="CSV output")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="latzeta",
        description="Exact Dirichlet series counting sublattices of definite binary "
                    "quadratic lattices up to (proper) isometry, with a brute-force "
                    "cross-check.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classgroup", help="list the form classes of a discriminant")
    _add_common(sp, max_default=None)
    sp.set_defaults(func=cmd_classgroup)

    sp = sub.add_parser("brute", help="enumeration-oracle coefficient table")
    _add_common(sp, with_form=True, with_mode=True, with_jobs=True)
    sp.set_defaults(func=cmd_brute)

    sp = sub.add_parser("formula", help="closed-formula coefficient table")
    _add_common(sp, with_form=True, with_mode=True)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="compare formula against the oracle")
    _add_common(sp, with_form=True, with_mode=True, with_jobs=True)
    sp.add_argument("--all-classes", action="store_true",
                    help="verify every class of the discriminant")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("euler", help="Euler-product scan and structural criterion")
    _add_common(sp)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("localfactor", help="proper-class counts at prime-power indices")
    _add_common(sp, max_default=None)
    sp.add_argument("--prime", "-p", type=int, required=True)
    sp.add_argument("--powers", "-k", type=int, default=5, help="largest exponent (default 5)")
    sp.set_defaults(func=cmd_localfactor)

    sp = sub.add_parser("residue", help="pole diagnostic (reporting only)")
    _add_common(sp)
    sp.set_defaults(func=cmd_residue)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
