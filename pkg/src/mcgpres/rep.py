"""Integer matrix shadows of twist words.

On the one-holed torus a twist acts on first homology by a transvection; on the
four-holed sphere it acts on slopes by a squared transvection, up to sign. Both
representations kill boundary twists, so they check relations only modulo
their kernels. They are not faithful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .farey import (
    IntMat2,
    Slope,
    SurfaceKind,
    apply_matrix,
    slopes_up_to,
    twist_matrix,
)
from .words import RelationInstance, Word


class UnboundLabel(KeyError):
    def __str__(self) -> str:
        return f"label {self.args[0]!r} is not bound"


class UnverifiableRelation(ValueError):
    pass


@dataclass(frozen=True)
class Binding:
    """Assignment of curve labels to slopes; `boundary` labels act trivially."""

    slopes: Mapping[str, Slope] = field(default_factory=dict)
    boundary: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        both = set(self.slopes) & self.boundary
        if both:
            raise ValueError(f"labels bound twice: {sorted(both)}")

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.slopes) | self.boundary

    def is_boundary_like(self, label: str) -> bool:
        if label in self.boundary:
            return True
        if label in self.slopes:
            return False
        raise UnboundLabel(label)

    def missing(self, labels) -> list[str]:
        have = self.labels
        return sorted({x for x in labels if x not in have})


def letter_matrix(label: str, sign: int, binding: Binding, surface: SurfaceKind) -> IntMat2:
    if binding.is_boundary_like(label):
        return IntMat2.identity()
    return twist_matrix(binding.slopes[label], surface) ** sign


def evaluate_word(w: Word, binding: Binding, surface: SurfaceKind) -> IntMat2:
    """Product of letter matrices, leftmost letter as leftmost factor."""
    m = IntMat2.identity()
    for x in w:
        m = m @ letter_matrix(x.label, x.sign, binding, surface)
    return m


def is_trivial(m: IntMat2, surface: SurfaceKind) -> bool:
    # the sphere's slope action is projective, so -I is trivial there
    if surface is SurfaceKind.FOUR_HOLED_SPHERE:
        return m.is_plus_minus_identity()
    return m.is_identity()


def verify_relation_in_rep(rel: RelationInstance, binding: Binding, surface: SurfaceKind) -> bool:
    if rel.name == "V" and surface is SurfaceKind.ONE_HOLED_TORUS:
        outside = [x.label for x in rel.rhs if not binding.is_boundary_like(x.label)]
        if outside:
            raise UnverifiableRelation(
                f"{rel.rule}: homology cannot see the twist on {', '.join(outside)}"
            )
    return is_trivial(evaluate_word(rel.relator, binding, surface), surface)


def action_trivial_on_slopes(w: Word, binding: Binding, surface: SurfaceKind, height: int) -> bool:
    """Whether the word's matrix fixes every slope of height <= `height`."""
    m = evaluate_word(w, binding, surface)
    return all(apply_matrix(m, s) == s for s in slopes_up_to(height))


def boundary_shadow_applies(rel: RelationInstance, binding: Binding) -> bool:
    """Lantern and chain relations whose right side is invisible to the binding.

    For these the left side alone should act trivially on interior slopes.
    """
    return rel.name in ("IV", "V") and all(binding.is_boundary_like(x.label) for x in rel.rhs)


@dataclass
class VerifyOutcome:
    rule: str
    ok: bool
    detail: str = ""


def verify_relators(
    rels: list[RelationInstance],
    binding: Binding,
    surface: SurfaceKind,
    height: int | None = None,
) -> list[VerifyOutcome]:
    """Check every relator, plus the slope action of boundary-shadow left sides."""
    out = []
    for rel in rels:
        try:
            ok = verify_relation_in_rep(rel, binding, surface)
        except UnverifiableRelation as exc:
            out.append(VerifyOutcome(rel.rule, False, str(exc)))
            continue
        detail = "relator trivial" if ok else "relator nontrivial"
        if ok and height is not None and boundary_shadow_applies(rel, binding):
            ok = action_trivial_on_slopes(rel.lhs, binding, surface, height)
            detail = f"left side fixes slopes of height <= {height}" if ok else "left side moves a slope"
        out.append(VerifyOutcome(rel.rule, ok, detail))
    return out
