"""Run the acceptance module and print only the per-criterion lines.

    python scripts/run_acceptance.py
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py")],
        cwd=ROOT,
        capture_output=True,
        text=True,
    )
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("[PASS]", "[FAIL]"))]
    # the summary repeats each line; keep the first occurrence
    for line in dict.fromkeys(lines):
        print(line)
    if not lines:
        print(proc.stdout, proc.stderr, sep="\n")
    return proc.returncode


if __name__ == "__main__":
    raise SystemExit(main())
