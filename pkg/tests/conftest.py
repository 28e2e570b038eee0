import pytest

from latzeta.classgroup import cached_group
from latzeta.sublattice import brute_coefficients

# the six worked discriminants are verified to 300, the two extras to 200
WORKED_DISCS = (-3, -4, -7, -8, -20, -23)
EXTRA_DISCS = (-24, -40)
N_WORKED = 300
N_EXTRA = 200

RANGES = {D: N_WORKED for D in WORKED_DISCS} | {D: N_EXTRA for D in EXTRA_DISCS}
ALL_DISCS = WORKED_DISCS + EXTRA_DISCS


@pytest.fixture(scope="session")
def oracle_tables():
    """Enumeration-oracle tables for every class of every test discriminant.

    Built once per session (a couple of seconds); the acceptance criteria
    that need ground truth all read from here.
    """
    tables = {}
    for D, N in RANGES.items():
        for g in cached_group(D).elements:
            tables[(D, g)] = brute_coefficients(g, N)
    return tables
