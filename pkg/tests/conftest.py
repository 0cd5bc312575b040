import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_table():
    """Nonzero w(n,k,m) for n <= 10, transcribed by hand from the published table."""
    with open(DATA / "nonzero_w.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    return {(int(r["n"]), int(r["k"]), int(r["m"])): int(r["w"]) for r in rows}
