from pathlib import Path

import pytest

from tilecoh.intmat import IntMatrix

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
PENTAGON_FILE = DATA_DIR / "pentagon.json"

requires_pentagon = pytest.mark.skipif(
    not PENTAGON_FILE.exists(),
    reason=(
        "pentagonal complex dataset not available: the published boundary and "
        "inflation matrices exist only as figures; transcribe them into "
        "data/pentagon.json to enable this test (see data/README.md)"
    ),
)

# The 10x10 matrix of the inflation action on H^2 = (Z/2)^5 + Z^5 of the
# pentagonal complex, in canonical coordinates (torsion block first), and
# its lower-right 5x5 free block.  These two blocks are published as text
# and are the regression anchors for the direct-limit pipeline.
PENTAGON_H2_ACTION = IntMatrix.from_rows(
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 2, 2, 2, 1, 1],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 2, 3, 1, 1],
        [0, 0, 0, 0, 0, 1, 2, 2, 2, 1],
        [0, 0, 0, 0, 0, 1, 2, 2, 1, 2],
    ]
)

PENTAGON_H2_FREE_BLOCK = IntMatrix.from_rows(
    [
        [2, 2, 2, 1, 1],
        [0, 1, 0, 0, 0],
        [1, 2, 3, 1, 1],
        [1, 2, 2, 2, 1],
        [1, 2, 2, 1, 2],
    ]
)

# Eigenvector conjugation for the free block, as displayed: the columns
# of EXPANSION_CONJUGATOR are the eigenvector (1,0,1,1,1) followed by
# standard basis vectors, and the conjugate has first column 6*e_1.
EXPANSION_CONJUGATOR = IntMatrix.from_rows(
    [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [1, 0, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 0, 0, 0, 1],
    ]
)

EXPANSION_CONJUGATE = IntMatrix.from_rows(
    [
        [6, 2, 2, 1, 1],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]
)
