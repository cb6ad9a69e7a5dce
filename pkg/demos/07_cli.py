"""The command line front end.

Every library capability is also reachable from the `chernatom` executable,
which writes '#'-headed CSV files with 17-significant-digit floats plus a
.meta sidecar recording the full parameter set.  Identical invocations
produce byte-identical files.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from chernatom.cli import main


def run(args):
    print(f"$ chernatom {' '.join(args)}")
    rc = main(args)
    assert rc == 0, rc


with tempfile.TemporaryDirectory() as d:
    d = Path(d)

    run(
        [
            "shift", "--nondispersive", "--chern", "1", "--polarization", "circ+",
            "--eta-min", "1", "--eta-max", "3", "--eta-step", "0.5",
            "--reference-nondispersive", "--out", str(d / "shift.csv"),
        ]
    )
    print((d / "shift.csv").read_text().rstrip())
    print()
    print("sidecar metadata:")
    print((d / "shift.csv.meta").read_text().rstrip())

    print()
    run(
        [
            "conductivity", "--u-over-t", "-1", "--bz-grid", "128",
            "--omega-min", "1.8", "--omega-max", "2.2", "--omega-step", "0.2",
            "--out", str(d / "sigma.csv"),
        ]
    )
    print((d / "sigma.csv").read_text().rstrip())

    print()
    print("determinism: running the shift command again and byte-comparing")
    run(
        [
            "shift", "--nondispersive", "--chern", "1", "--polarization", "circ+",
            "--eta-min", "1", "--eta-max", "3", "--eta-step", "0.5",
            "--reference-nondispersive", "--out", str(d / "shift2.csv"),
        ]
    )
    same = (d / "shift.csv").read_bytes() == (d / "shift2.csv").read_bytes()
    print(f"identical: {same}")

print()
print("`chernatom verify` runs the end-to-end acceptance suite (slow);")
print("the same checks run under pytest as tests/test_acceptance.py.")
