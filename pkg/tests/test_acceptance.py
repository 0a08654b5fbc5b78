"""Acceptance suite: one test per exit criterion, at the stated tolerances.

Each test delegates to the corresponding check in ``icochains.acceptance``
(the same code the CLI ``selftest`` runs) and prints a pass line; run with
``pytest -s`` to see them.  The CLI criterion additionally drives the
installed command end to end: ``selftest`` must exit 0 and the pinned
invert examples must reproduce the committed golden files byte for byte.
"""

import subprocess
import sys
from pathlib import Path

import pytest

from icochains import acceptance

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize(
    "number,name,check",
    [(i, name, check) for i, (name, check) in enumerate(acceptance.CRITERIA, start=1)],
    ids=[f"criterion-{i}" for i in range(1, len(acceptance.CRITERIA) + 1)],
)
def test_criterion(number, name, check):
    check()
    print(f"PASS criterion {number}: {name}")


def test_selftest_command_exits_zero():
    result = subprocess.run(
        [sys.executable, "-m", "icochains.cli", "selftest"],
        capture_output=True, text=True, timeout=600)
    assert result.returncode == 0, result.stdout + result.stderr
    assert result.stdout.count("PASS") == len(acceptance.CRITERIA)
    assert "FAIL" not in result.stdout
    print("PASS criterion 9 (selftest subprocess): exit 0")


def test_golden_files_byte_stable():
    for name in ("h1_p3r1", "zero_p2r1", "z1_p2r1"):
        outputs = []
        for _ in range(2):
            result = subprocess.run(
                [sys.executable, "-m", "icochains.cli", "invert",
                 "--in", str(GOLDEN / f"{name}.json")],
                capture_output=True, text=True, timeout=120)
            assert result.returncode == 0, result.stderr
            outputs.append(result.stdout)
        assert outputs[0] == outputs[1], f"{name}: invert output not byte-stable"
        expected = (GOLDEN / f"{name}.expected.json").read_text()
        assert outputs[0] == expected, f"{name}: output differs from golden file"
    print("PASS criterion 9 (golden files): byte-stable")
