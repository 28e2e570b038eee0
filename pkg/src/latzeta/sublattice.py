"""Brute-force ground truth for the sublattice counting series.

Every index-m sublattice of Z^2 is hit exactly once by a Hermite triple
(x, y, z) with x*z = m and 0 <= y < x, encoding the basis
(x*e1, y*e1 + z*e2).  The oracle induces the subform for each triple,
reduces it, and counts distinct canonical forms; nothing here touches the
ideal machinery, so it stays an independent check of the closed formulas.
At the default range (N = 300, about 74k sublattices per form) a plain
loop is enough; the per-index work is embarrassingly parallel and `jobs`
fans it out with a deterministic by-index merge.
"""

from dataclasses import dataclass
from multiprocessing import Pool

from .arith import divisors, module_hnf
from .qform import Form, reduce_form, require_positive_definite
from .quadfield import field_data

SL = "sl"
GL = "gl"
MODES = (SL, GL)


def enumerate_hnf(m: int) -> list[tuple[int, int, int]]:
    """All sigma(m) Hermite triples of index m, in lexicographic order."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    out = []
    for x in divisors(m):
        z = m // x
        out.extend((x, y, z) for y in range(x))
    return out


def counts_for_index(f: Form, m: int) -> tuple[int, int]:
    """(proper, improper) class counts over the index-m sublattices of f."""
    a, b, c = f
    sl_seen = set()
    gl_seen = set()
    for x in divisors(m):
        z = m // x
        a2 = a * x * x
        ax2 = 2 * a * x
        bxz = b * x * z
        bz = b * z
        czz = c * z * z
        for y in range(x):
            r = reduce_form((a2, ax2 * y + bxz, (a * y + bz) * y + czz))
            sl_seen.add(r)
            gl_seen.add((r[0], -r[1], r[2]) if r[1] < 0 else r)
    return len(sl_seen), len(gl_seen)


def _counts_job(args):
    f, m = args
    return counts_for_index(f, m)


@dataclass
class CoefficientTable:
    """Oracle counts a_m for 1 <= m <= N; entry 0 of each column is a pad."""

    form: Form
    N: int
    sl: list[int]
    gl: list[int]

    def column(self, mode: str) -> list[int]:
        if mode == SL:
            return self.sl
        if mode == GL:
            return self.gl
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def brute_coefficients(f: Form, N: int, jobs: int = 1) -> CoefficientTable:
    """Count classes of index-m sublattices of f for every m <= N.

    Both equivalence flavours come out of the same pass since the improper
    key is the proper key with the middle sign dropped.
    """
    require_positive_definite(f)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if jobs > 1:
        with Pool(jobs) as pool:
            pairs = pool.map(_counts_job, [(f, m) for m in range(1, N + 1)], chunksize=16)
    else:
        pairs = [counts_for_index(f, m) for m in range(1, N + 1)]
    sl_col = [0] + [p[0] for p in pairs]
    gl_col = [0] + [p[1] for p in pairs]
    return CoefficientTable(form=f, N=N, sl=sl_col, gl=gl_col)


def partial_sums(column: list[int]) -> list[int]:
    """Cumulative sums s_m of a coefficient column (entry 0 stays 0)."""
    out = [0] * len(column)
    acc = 0
    for m in range(1, len(column)):
        acc += column[m]
        out[m] = acc
    return out


def tau_closure(D: int, gens: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Smallest submodule of the maximal order containing gens and stable
    under multiplication by the ring generator.

    Vectors are coordinates over the basis (1, tau).  Saturation: adjoin
    tau*v for each basis vector, Hermite-reduce, repeat until stable; the
    index can only drop, so this terminates.
    """
    fd = field_data(D)
    t, n = fd.tau_t, fd.tau_n
    basis = module_hnf(gens)
    while True:
        A, B, C = basis
        nxt = module_hnf([(A, 0), (B, C), (0, A), (n * C, B + t * C)])
        if nxt == basis:
            return basis
        basis = nxt


def ring_stable_counts(D: int, N: int) -> list[int]:
    """counts[m] = index-m submodules of the maximal order whose closure
    under the ring action is the whole order (not any smaller ideal)."""
    field_data(D)
    out = [0] * (N + 1)
    for m in range(1, N + 1):
        for x, y, z in enumerate_hnf(m):
            if tau_closure(D, [(x, 0), (y, z)]) == (1, 0, 1):
                out[m] += 1
    return out
