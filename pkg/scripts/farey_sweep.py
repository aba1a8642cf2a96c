"""Sweep all Farey-neighbor pairs up to a height and check the slope identities.

    python scripts/farey_sweep.py --height 30
"""

import argparse
import time

from mcgpres.farey import S04, TORUS, is_neighbor, neighbor_pairs, resolve, twist, twist_matrix

CHECKS = {
    "involution": lambda a, b: resolve(resolve(a, b), a) == b and resolve(a, resolve(b, a)) == b,
    "triangle": lambda a, b: is_neighbor(resolve(a, b), a) and is_neighbor(resolve(a, b), b),
    "twist": lambda a, b: twist(a, b, 1, TORUS) == resolve(a, b)
    and twist(a, b, 1, S04) == resolve(a, resolve(a, b)),
    "covariance": lambda a, b: twist_matrix(resolve(a, b), TORUS)
    == twist_matrix(a, TORUS) @ twist_matrix(b, TORUS) @ twist_matrix(a, TORUS).inverse(),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--height", type=int, default=30)
    args = ap.parse_args()

    t0 = time.perf_counter()
    pairs = list(neighbor_pairs(args.height))
    failures = 0
    for name, check in CHECKS.items():
        bad = [(a, b) for a, b in pairs if not check(a, b)]
        failures += len(bad)
        print(f"{name:12s} {len(pairs)} pairs, {len(bad)} failures")
        for a, b in bad[:5]:
            print(f"    {a} {b}")
    print(f"height {args.height}: {time.perf_counter() - t0:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
