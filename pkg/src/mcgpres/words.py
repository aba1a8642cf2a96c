"""Words in Dehn twist generators, relators from curve configurations, and a
step-checked rewriting engine.

A word is a tuple of `Letter`s. A curve configuration declares which curves
are disjoint, meet once (perp) or meet twice with zero algebraic intersection
(perp0), together with resolution products and boundary systems. From it we
emit relators for six templates:

    I    trivial   D_t = 1 for a null-homotopic t
    II   commute   D_a D_b = D_b D_a for disjoint a, b
    III  res-conj  D_{ab} = D_a D_b D_a^-1 for perp a, b
    IV   lantern   D_a D_b D_{ab} = D_{boundary} for perp0 a, b
    V    chain     (D_a D_b D_a)^4 = D_{boundary} for perp a, b
    VI   braid     D_a D_b D_a = D_b D_a D_b for perp a, b

Derivations are sequences of atomic subword replacements, each licensed by
one rewrite variant of a named relator (or a single free cancellation).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Letter:
    label: str
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def inverse(self) -> Letter:
        return Letter(self.label, -self.sign)

    def __str__(self) -> str:
        return self.label if self.sign == 1 else self.label + "'"


Word = tuple  # tuple[Letter, ...]


def parse_letter(token: str) -> Letter:
    if token.endswith("'"):
        label, sign = token[:-1], -1
    else:
        label, sign = token, 1
    if not label or not all(ch.isalnum() or ch == "_" for ch in label):
        raise ValueError(f"malformed generator token {token!r}")
    return Letter(label, sign)


def parse_word(text: str | Sequence[str]) -> Word:
    tokens = text.split() if isinstance(text, str) else text
    return tuple(parse_letter(t) for t in tokens)


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in w)


def inverse(w: Word) -> Word:
    return tuple(x.inverse() for x in reversed(w))


def power(w: Word, n: int) -> Word:
    return (w if n >= 0 else inverse(w)) * abs(n)


def free_reduce(w: Word) -> Word:
    out: list[Letter] = []
    for x in w:
        if out and out[-1].label == x.label and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_rotations(w: Word) -> list[Word]:
    return [w[i:] + w[:i] for i in range(len(w))] or [w]


class PairKind(enum.Enum):
    DISJOINT = "disjoint"
    PERP = "perp"
    PERP0 = "perp0"


RULE_NAMES = {
    "I": "trivial",
    "II": "commute",
    "III": "res-conj",
    "IV": "lantern",
    "V": "chain",
    "VI": "braid",
}
TEMPLATE_OF_RULE = {v: k for k, v in RULE_NAMES.items()}
CANCEL = "cancel"


@dataclass(frozen=True)
class CurveConfig:
    """Declared curve labels and their pairwise data.

    Pairs keep the orientation in which they were first declared; lookups are
    unordered for kinds and boundaries, ordered for products.
    """

    labels: tuple[str, ...]
    trivial: tuple[str, ...] = ()
    pair_kinds: tuple[tuple[str, str, PairKind], ...] = ()
    products: tuple[tuple[str, str, str], ...] = ()
    boundaries: tuple[tuple[str, str, tuple[str, ...]], ...] = ()

    def __post_init__(self) -> None:
        known = set(self.labels)
        if len(known) != len(self.labels):
            raise ValueError("duplicate curve label")

        def check(*names: str) -> None:
            for n in names:
                if n not in known:
                    raise ValueError(f"undeclared curve label {n!r}")

        check(*self.trivial)
        seen: dict[frozenset, PairKind] = {}
        for a, b, kind in self.pair_kinds:
            check(a, b)
            if a == b:
                raise ValueError(f"pair ({a}, {b}) must join distinct curves")
            key = frozenset((a, b))
            if key in seen:
                raise ValueError(f"pair ({a}, {b}) declared twice")
            seen[key] = kind
        for a, b, prod in self.products:
            check(a, b, prod)
            if seen.get(frozenset((a, b))) not in (PairKind.PERP, PairKind.PERP0):
                raise ValueError(f"product {a}{b} needs a perp or perp0 pair")
        for a, b, parts in self.boundaries:
            check(a, b, *parts)
            kind = seen.get(frozenset((a, b)))
            if kind is PairKind.PERP and len(parts) != 1:
                raise ValueError(f"boundary of perp pair ({a}, {b}) must be a single curve")
            if kind is PairKind.PERP0 and not 1 <= len(parts) <= 4:
                raise ValueError(f"boundary of perp0 pair ({a}, {b}) has 1 to 4 curves")
            if kind not in (PairKind.PERP, PairKind.PERP0):
                raise ValueError(f"boundary ({a}, {b}) needs a perp or perp0 pair")

    def kind(self, a: str, b: str) -> PairKind | None:
        for x, y, k in self.pair_kinds:
            if {x, y} == {a, b}:
                return k
        return None

    def product(self, a: str, b: str) -> str | None:
        for x, y, p in self.products:
            if (x, y) == (a, b):
                return p
        return None

    def boundary(self, a: str, b: str) -> tuple[str, ...] | None:
        for x, y, parts in self.boundaries:
            if {x, y} == {a, b}:
                return parts
        return None


@dataclass(frozen=True)
class RelationInstance:
    """A relation lhs = rhs from one template, stored with its relator lhs rhs^-1."""

    name: str
    participants: tuple[str, ...]
    lhs: Word
    rhs: Word
    relator: Word = field(init=False)

    def __post_init__(self) -> None:
        relator = free_reduce(self.lhs + inverse(self.rhs))
        if not relator:
            raise ValueError(f"relation {self.rule} is freely trivial")
        object.__setattr__(self, "relator", relator)

    @property
    def rule(self) -> str:
        return f"{RULE_NAMES[self.name]}({','.join(self.participants)})"


def _w(*labels: str) -> Word:
    return tuple(Letter(x) for x in labels)


def relators_from_config(cfg: CurveConfig) -> list[RelationInstance]:
    """Every relation instance the configuration supports, grouped I..VI.

    Templates whose product or boundary data is missing are skipped for that pair.
    """
    out: list[RelationInstance] = []
    for t in cfg.trivial:
        out.append(RelationInstance("I", (t,), _w(t), ()))
    for a, b, kind in cfg.pair_kinds:
        if kind is PairKind.DISJOINT:
            out.append(RelationInstance("II", (a, b), _w(a, b), _w(b, a)))
    for a, b, prod in cfg.products:
        if cfg.kind(a, b) is PairKind.PERP:
            out.append(RelationInstance("III", (a, b), _w(prod), _w(a, b) + (Letter(a, -1),)))
    for a, b, prod in cfg.products:
        parts = cfg.boundary(a, b)
        if cfg.kind(a, b) is PairKind.PERP0 and parts is not None:
            out.append(RelationInstance("IV", (a, b), _w(a, b, prod), _w(*parts)))
    for a, b, parts in cfg.boundaries:
        if cfg.kind(a, b) is PairKind.PERP:
            out.append(RelationInstance("V", (a, b), power(_w(a, b, a), 4), _w(*parts)))
    for a, b, kind in cfg.pair_kinds:
        if kind is PairKind.PERP:
            out.append(RelationInstance("VI", (a, b), _w(a, b, a), _w(b, a, b)))
    return out


@lru_cache(maxsize=None)
def _variants(relator: Word) -> tuple[tuple[Word, Word], ...]:
    found: dict[tuple[Word, Word], None] = {}
    for r in cyclic_rotations(relator) + cyclic_rotations(inverse(relator)):
        for i in range(len(r) + 1):
            found[(r[:i], inverse(r[i:]))] = None
    return tuple(found)


def rewrite_variants(rel: RelationInstance) -> tuple[tuple[Word, Word], ...]:
    """All (s, t) with s t^-1 a cyclic rotation of the relator or its inverse.

    Replacing a subword s by t never changes the group element. Splits at the
    ends give pure deletions (t empty) and insertions (s empty).
    """
    return _variants(rel.relator)


def cancel_variants(labels: Iterable[str]) -> tuple[tuple[Word, Word], ...]:
    out = []
    for lab in labels:
        for sign in (1, -1):
            pair = (Letter(lab, sign), Letter(lab, -sign))
            out.append((pair, ()))
            out.append(((), pair))
    return tuple(out)


class DerivationError(Exception):
    pass


class NoVariantMatches(DerivationError):
    pass


class PositionOutOfBounds(DerivationError, IndexError):
    pass


class UnknownRule(DerivationError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


@dataclass(frozen=True)
class DerivationStep:
    rule: str  # rule token such as "braid(a,b)" or "cancel"
    position: int
    expected: Word


@dataclass(frozen=True)
class DerivationScript:
    config: CurveConfig
    start: Word
    steps: tuple[DerivationStep, ...]
    target: Word

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("a derivation needs at least one step")
        if self.steps[-1].expected != self.target:
            raise ValueError("target differs from the last step's expected word")


def split_rule(rule: str) -> tuple[str, tuple[str, ...]]:
    rule = rule.strip()
    if rule == CANCEL:
        return CANCEL, ()
    if not rule.endswith(")") or "(" not in rule:
        raise ValueError(f"malformed rule {rule!r}")
    name, args = rule[:-1].split("(", 1)
    parts = tuple(a.strip() for a in args.split(",") if a.strip())
    if name not in TEMPLATE_OF_RULE or not parts:
        raise ValueError(f"malformed rule {rule!r}")
    return name, parts


def find_instance(cfg: CurveConfig, rule: str) -> RelationInstance:
    name, parts = split_rule(rule)
    if name == CANCEL:
        raise ValueError("cancel is not a relation instance")
    template = TEMPLATE_OF_RULE[name]
    candidates = [r for r in relators_from_config(cfg) if r.name == template]
    exact = [r for r in candidates if r.participants == parts]
    if exact:
        return exact[0]
    loose = [r for r in candidates if sorted(r.participants) == sorted(parts)]
    if len(loose) == 1:
        return loose[0]
    raise UnknownRule(f"no unique {name} instance on {', '.join(parts)}")


def variants_for_rule(cfg: CurveConfig, rule: str) -> tuple[tuple[Word, Word], ...]:
    if rule.strip() == CANCEL:
        return cancel_variants(cfg.labels)
    return rewrite_variants(find_instance(cfg, rule))


def apply_step(w: Word, step: DerivationStep, cfg: CurveConfig) -> Word:
    """Check that one variant of step.rule turns w into step.expected at step.position."""
    pos = step.position
    if not 0 <= pos <= len(w):
        raise PositionOutOfBounds(f"position {pos} outside word of length {len(w)}")
    for s, t in variants_for_rule(cfg, step.rule):
        if w[pos : pos + len(s)] == s and w[:pos] + t + w[pos + len(s) :] == step.expected:
            return step.expected
    raise NoVariantMatches(f"{step.rule} at {pos} does not yield the expected word")


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    steps_checked: int
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def iter_check(script: DerivationScript) -> Iterator[tuple[int, Word | DerivationError]]:
    """Yield (index, word after step) until the first failing step."""
    w = script.start
    for i, step in enumerate(script.steps):
        try:
            w = apply_step(w, step, script.config)
        except (DerivationError, ValueError) as exc:
            err = exc if isinstance(exc, DerivationError) else DerivationError(str(exc))
            yield i, err
            return
        yield i, w


def check_derivation(script: DerivationScript) -> CheckReport:
    w = script.start
    n = 0
    for i, result in iter_check(script):
        if isinstance(result, DerivationError):
            return CheckReport(False, n, i, f"{type(result).__name__}: {result}")
        w, n = result, i + 1
    if w != script.target:
        return CheckReport(False, n, len(script.steps) - 1, "final word differs from target")
    return CheckReport(True, n)


class SearchResult(enum.Enum):
    EQUAL = "Equal"
    NOT_FOUND = "NotFound"


def _neighbors(w: Word, variants: Sequence[tuple[Word, Word]], insertions: bool) -> Iterator[Word]:
    for s, t in variants:
        if not s:
            if not insertions:
                continue
            for i in range(len(w) + 1):
                yield free_reduce(w[:i] + t + w[i:])
            continue
        n = len(s)
        for i in range(len(w) - n + 1):
            if w[i : i + n] == s:
                yield free_reduce(w[:i] + t + w[i + n :])


def equal_by_search(
    w1: Word,
    w2: Word,
    cfg: CurveConfig,
    depth: int,
    *,
    insertions: bool = False,
    max_words: int = 200_000,
) -> SearchResult:
    """Breadth-first search for a chain of <= depth relator rewrites from w1 to w2.

    Words are freely reduced after every rewrite. Pure insertions are off by
    default since they dominate the branching. NOT_FOUND proves nothing.
    """
    start, goal = free_reduce(w1), free_reduce(w2)
    if start == goal:
        return SearchResult.EQUAL
    variants = [v for rel in relators_from_config(cfg) for v in rewrite_variants(rel)]
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        w, d = frontier.popleft()
        if d == depth:
            continue
        for nxt in _neighbors(w, variants, insertions):
            if nxt == goal:
                return SearchResult.EQUAL
            if nxt not in seen:
                if len(seen) >= max_words:
                    return SearchResult.NOT_FOUND
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    return SearchResult.NOT_FOUND
