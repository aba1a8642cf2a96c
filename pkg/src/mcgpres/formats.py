"""Line-based text formats: curve configs, derivation scripts, bindings, relator lists.

All formats are UTF-8, one directive per line, with `#` starting a comment.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Iterator

from .farey import Slope, parse_slope
from .rep import Binding
from .words import (
    TEMPLATE_OF_RULE,
    CurveConfig,
    DerivationScript,
    DerivationStep,
    PairKind,
    RelationInstance,
    Word,
    format_word,
    inverse,
    parse_word,
    split_rule,
)


class ParseError(ValueError):
    def __init__(self, msg: str, source: str = "<string>", lineno: int | None = None):
        self.source, self.lineno = source, lineno
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + msg)


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line.split()


def parse_config(text: str, source: str = "<string>") -> CurveConfig:
    labels: list[str] = []
    trivial: list[str] = []
    kinds: dict[frozenset, tuple[str, str, PairKind]] = {}
    products: list[tuple[str, str, str]] = []
    boundaries: list[tuple[str, str, tuple[str, ...]]] = []

    for n, (head, *args) in _lines(text):
        def fail(msg: str) -> ParseError:
            return ParseError(msg, source, n)

        if head == "curves":
            if not args:
                raise fail("curves needs at least one label")
            labels.extend(a for a in args if a not in labels)
        elif head == "trivial":
            if not args:
                raise fail("trivial needs at least one label")
            trivial.extend(args)
        elif head in ("disjoint", "perp", "perp0"):
            kind = PairKind(head)
            nmax = 2 if kind is PairKind.DISJOINT else 3
            if not 2 <= len(args) <= nmax:
                raise fail(f"{head} takes {'2' if nmax == 2 else '2 or 3'} labels")
            a, b = args[0], args[1]
            key = frozenset((a, b))
            if key in kinds and kinds[key][2] is not kind:
                raise fail(f"pair ({a}, {b}) already declared as {kinds[key][2].value}")
            kinds.setdefault(key, (a, b, kind))
            if len(args) == 3:
                products.append((a, b, args[2]))
        elif head == "boundary":
            if len(args) < 3:
                raise fail("boundary takes a pair and at least one label")
            boundaries.append((args[0], args[1], tuple(args[2:])))
        else:
            raise fail(f"unknown directive {head!r}")

    try:
        return CurveConfig(
            labels=tuple(labels),
            trivial=tuple(trivial),
            pair_kinds=tuple(kinds.values()),
            products=tuple(products),
            boundaries=tuple(boundaries),
        )
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def load_config(path: str | Path) -> CurveConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), str(path))


def _word(args: list[str], source: str, n: int) -> Word:
    try:
        return parse_word(args)
    except ValueError as exc:
        raise ParseError(str(exc), source, n) from None


_STEP_RE = re.compile(r"^step\s+(.+?)\s+at\s+(-?\d+)$")


def parse_script(text: str, source: str = "<string>", base: Path | None = None) -> DerivationScript:
    """Parse a derivation script; `config` paths resolve against `base`."""
    base = base or Path.cwd()
    cfg = start = target = None
    steps: list[DerivationStep] = []
    pending: tuple[str, int] | None = None

    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if pending is not None and head != "expect":
            raise ParseError("step must be followed by expect", source, n)
        if head == "config":
            if len(args) != 1:
                raise ParseError("config takes one path", source, n)
            try:
                cfg = load_config(base / args[0])
            except OSError as exc:
                raise ParseError(f"cannot read config: {exc}", source, n) from None
        elif head == "start":
            start = _word(args, source, n)
        elif head == "step":
            m = _STEP_RE.match(line)
            if m is None:
                raise ParseError("expected `step <rule> at <pos>`", source, n)
            try:
                split_rule(m.group(1))
            except ValueError as exc:
                raise ParseError(str(exc), source, n) from None
            pending = (m.group(1).replace(" ", ""), int(m.group(2)))
        elif head == "expect":
            if pending is None:
                raise ParseError("expect without a step", source, n)
            steps.append(DerivationStep(pending[0], pending[1], _word(args, source, n)))
            pending = None
        elif head == "target":
            target = _word(args, source, n)
        else:
            raise ParseError(f"unknown directive {head!r}", source, n)

    if pending is not None:
        raise ParseError("dangling step without expect", source)
    if cfg is None or start is None or target is None:
        raise ParseError("script needs config, start and target", source)
    try:
        return DerivationScript(cfg, start, tuple(steps), target)
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def load_script(path: str | Path) -> DerivationScript:
    path = Path(path)
    return parse_script(path.read_text(encoding="utf-8"), str(path), path.parent)


def format_script(script: DerivationScript, config_path: str) -> str:
    out = [f"config {config_path}", f"start {format_word(script.start)}"]
    for step in script.steps:
        out.append(f"step {step.rule} at {step.position}")
        out.append(f"expect {format_word(step.expected)}")
    out.append(f"target {format_word(script.target)}")
    return "\n".join(out) + "\n"


# number of leading relator letters forming the left-hand side, per template
LHS_LENGTH = {"I": 1, "II": 2, "III": 1, "IV": 3, "V": 12, "VI": 3}


def format_relators(rels: Iterable[RelationInstance]) -> str:
    return "".join(f"{r.rule} {format_word(r.relator)}\n" for r in rels)


def parse_relators(text: str, source: str = "<string>") -> list[RelationInstance]:
    out = []
    for n, (rule, *letters) in _lines(text):
        try:
            name, parts = split_rule(rule)
            template = TEMPLATE_OF_RULE[name]
        except (ValueError, KeyError):
            raise ParseError(f"malformed rule {rule!r}", source, n) from None
        relator = _word(letters, source, n)
        k = LHS_LENGTH[template]
        if len(relator) < k:
            raise ParseError(f"{rule} relator shorter than its left-hand side", source, n)
        out.append(RelationInstance(template, parts, relator[:k], inverse(relator[k:])))
    return out


def parse_binding(text: str, source: str = "<string>") -> Binding:
    slopes: dict[str, Slope] = {}
    boundary: set[str] = set()
    for n, args in _lines(text):
        if args[0] != "bind" or len(args) != 3:
            raise ParseError("expected `bind <label> <slope>|boundary`", source, n)
        label, value = args[1], args[2]
        if label in slopes or label in boundary:
            raise ParseError(f"label {label!r} bound twice", source, n)
        if value == "boundary":
            boundary.add(label)
        else:
            try:
                slopes[label] = parse_slope(value)
            except ValueError as exc:
                raise ParseError(str(exc), source, n) from None
    return Binding(slopes, frozenset(boundary))


def load_binding(path: str | Path) -> Binding:
    path = Path(path)
    return parse_binding(path.read_text(encoding="utf-8"), str(path))
