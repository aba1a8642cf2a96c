"""Perturb every step of a derivation script and report whether the checker notices.

Each step gets its position shifted by -1 and +1, and its rule swapped for every
other rule of the config (including ``cancel``).  A mutant counts as caught when
the checker fails at exactly that step.

    python scripts/mutation_sweep.py fixtures/gervais_vprime.deriv
"""

import argparse
from dataclasses import replace

from mcgpres.formats import load_script
from mcgpres.words import CANCEL, check_derivation, relators_from_config


def mutants(script):
    rules = [r.rule for r in relators_from_config(script.config)] + [CANCEL]
    for i, step in enumerate(script.steps):
        variants = [replace(step, position=step.position + d) for d in (-1, 1)]
        variants += [replace(step, rule=r) for r in rules if r != step.rule]
        for m in variants:
            yield i, m, replace(script, steps=script.steps[:i] + (m,) + script.steps[i + 1 :])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("scripts", nargs="+")
    args = ap.parse_args()

    missed_any = False
    for path in args.scripts:
        script = load_script(path)
        total = caught = 0
        for i, m, mutant in mutants(script):
            total += 1
            report = check_derivation(mutant)
            if not report.ok and report.failed_step == i:
                caught += 1
            else:
                print(f"  missed: step {i} -> {m.rule} at {m.position}")
        missed_any |= caught != total
        print(f"{path}: {caught}/{total} caught")
    return 1 if missed_any else 0


if __name__ == "__main__":
    raise SystemExit(main())
