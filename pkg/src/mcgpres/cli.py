"""Command-line front end.

    mcgpres farey resolve 0/1 1/0
    mcgpres farey twist 0/1 1/0 --n 1 --surface s04
    mcgpres words check fixtures/gervais_vprime.deriv
    mcgpres words emit fixtures/figure1.cfg
    mcgpres rep verify fixtures/lantern.cfg fixtures/lantern_s04.bind --surface s04

Exit status: 0 success, 1 verification failed, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import farey
from .farey import NotNeighbors, SurfaceKind, parse_slope
from .formats import (
    ParseError,
    format_relators,
    load_binding,
    load_config,
    load_script,
    parse_relators,
)
from .rep import verify_relators
from .words import DerivationError, format_word, iter_check, relators_from_config

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a positional slope
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


class UsageError(Exception):
    pass


def _slope(text: str) -> farey.Slope:
    try:
        return parse_slope(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _surface(text: str) -> SurfaceKind:
    try:
        return SurfaceKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_farey(args) -> int:
    surface = _surface(args.surface)
    if args.action == "resolve":
        a, b = _slope(args.alpha), _slope(args.beta)
        try:
            print(farey.resolve(a, b))
        except NotNeighbors as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif args.action == "neighbors":
        if args.height < 1:
            raise UsageError("--height must be positive")
        for s in farey.farey_neighbors(_slope(args.alpha), args.height):
            print(s)
    elif args.action == "twist":
        print(farey.twist(_slope(args.alpha), _slope(args.beta), args.n, surface))
    elif args.action == "intersect":
        print(farey.intersection_number(_slope(args.alpha), _slope(args.beta), surface))
    return EXIT_OK


def cmd_check(args) -> int:
    script = load_script(args.script)
    w = script.start
    for i, result in iter_check(script):
        step = script.steps[i]
        if isinstance(result, DerivationError):
            print(f"step {i}: FAIL {step.rule} at {step.position}: {result}")
            print(f"FAIL at step {i}")
            return EXIT_FAIL
        w = result
        print(f"step {i}: OK {step.rule} at {step.position}")
    if w != script.target:
        print(f"FAIL at step {len(script.steps) - 1}: final word {format_word(w)} is not the target")
        return EXIT_FAIL
    print(f"PASS {len(script.steps)} steps")
    return EXIT_OK


def cmd_emit(args) -> int:
    cfg = load_config(args.config)
    sys.stdout.write(format_relators(relators_from_config(cfg)))
    return EXIT_OK


def cmd_verify(args) -> int:
    surface = _surface(args.surface)
    cfg = load_config(args.config)
    binding = load_binding(args.binding)
    if args.relators:
        path = Path(args.relators)
        rels = parse_relators(path.read_text(encoding="utf-8"), str(path))
        needed = {x.label for r in rels for x in r.relator}
    else:
        rels = relators_from_config(cfg)
        needed = set(cfg.labels)
    missing = binding.missing(needed)
    if missing:
        raise UsageError(f"unbound labels: {' '.join(missing)}")
    if args.height is not None and args.height < 1:
        raise UsageError("--height must be positive")

    outcomes = verify_relators(rels, binding, surface, args.height)
    for o in outcomes:
        print(f"{'OK' if o.ok else 'FAIL'} {o.rule}: {o.detail}")
    failed = sum(not o.ok for o in outcomes)
    if failed:
        print(f"FAILED {failed} of {len(outcomes)} relators")
        return EXIT_FAIL
    print(f"verified {len(outcomes)} relators on {surface.value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mcgpres", description="Dehn twist relations: slopes, derivations, matrix shadows.")
    groups = parser.add_subparsers(dest="group", required=True)

    f = groups.add_parser("farey", help="slope arithmetic")
    fsub = f.add_subparsers(dest="action", required=True)
    for name, nslopes in (("resolve", 2), ("neighbors", 1), ("twist", 2), ("intersect", 2)):
        p = fsub.add_parser(name)
        p.add_argument("alpha")
        if nslopes == 2:
            p.add_argument("beta")
        p.add_argument("--surface", default="torus", help="torus or s04")
        p.add_argument("--n", type=int, default=1, help="twist power")
        p.add_argument("--height", type=int, default=1, help="max(|p|, q) bound for neighbors")
        p.set_defaults(func=cmd_farey)

    w = groups.add_parser("words", help="relators and derivations")
    wsub = w.add_subparsers(dest="action", required=True)
    p = wsub.add_parser("check", help="check a derivation script")
    p.add_argument("script")
    p.set_defaults(func=cmd_check)
    p = wsub.add_parser("emit", help="print the relators of a curve config")
    p.add_argument("config")
    p.set_defaults(func=cmd_emit)

    r = groups.add_parser("rep", help="matrix representations")
    rsub = r.add_subparsers(dest="action", required=True)
    p = rsub.add_parser("verify", help="check relators in a matrix shadow")
    p.add_argument("config")
    p.add_argument("binding")
    p.add_argument("--surface", default="torus", help="torus or s04")
    p.add_argument("--height", type=int, default=20, help="slope height for the boundary-shadow action check")
    p.add_argument("--relators", default=None, help="verify relators from an emitted file instead")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
