"""Slopes of essential simple loops on the one-holed torus and four-holed sphere.

A slope is a reduced extended rational p/q. Two slopes are Farey neighbors when
|pq' - p'q| = 1; on the torus such curves meet once, on the four-holed sphere
they meet twice with zero algebraic intersection. Dehn twists act on slopes
through integer transvections.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterator


class SurfaceKind(enum.Enum):
    ONE_HOLED_TORUS = "torus"
    FOUR_HOLED_SPHERE = "s04"

    @classmethod
    def parse(cls, text: str) -> SurfaceKind:
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown surface {text!r} (expected torus or s04)") from None

    @property
    def twist_multiplier(self) -> int:
        # neighbors meet once on the torus, twice on the sphere
        return 1 if self is SurfaceKind.ONE_HOLED_TORUS else 2


TORUS = SurfaceKind.ONE_HOLED_TORUS
S04 = SurfaceKind.FOUR_HOLED_SPHERE


class NotNeighbors(ValueError):
    """Raised when the product of two slopes is requested for non-neighbors."""


@dataclass(frozen=True, order=True)
class Slope:
    num: int
    den: int

    def __post_init__(self) -> None:
        if (self.num, self.den) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in canonical form; use normalize()")
        if self.den == 0 and self.num != 1:
            raise ValueError("infinity must be written 1/0")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    @property
    def vector(self) -> tuple[int, int]:
        return self.num, self.den

    @property
    def height(self) -> int:
        return max(abs(self.num), self.den)

    @classmethod
    def parse(cls, text: str) -> Slope:
        return parse_slope(text)


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)

_SLOPE_RE = re.compile(r"^(-?\d+)/(\d+)$")


def normalize(p: int, q: int) -> Slope:
    """Canonical slope of the projective class of (p, q)."""
    if p == 0 and q == 0:
        raise ValueError("0/0 is not a slope")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def parse_slope(text: str) -> Slope:
    m = _SLOPE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed slope {text!r} (expected p/q)")
    return normalize(int(m.group(1)), int(m.group(2)))


def det(alpha: Slope, beta: Slope) -> int:
    return alpha.num * beta.den - beta.num * alpha.den


def is_neighbor(alpha: Slope, beta: Slope) -> bool:
    return abs(det(alpha, beta)) == 1


def intersection_number(alpha: Slope, beta: Slope, surface: SurfaceKind) -> int:
    return surface.twist_multiplier * abs(det(alpha, beta))


def resolve(alpha: Slope, beta: Slope) -> Slope:
    """The resolution alpha*beta, i.e. (p + lam p')/(q + lam q') with lam = det(alpha, beta).

    Only defined for Farey neighbors. The result is independent of the sign of
    the integer representatives, since flipping either one also flips lam.
    """
    lam = det(alpha, beta)
    if abs(lam) != 1:
        raise NotNeighbors(f"{alpha} and {beta} are not Farey neighbors (det = {lam})")
    return normalize(alpha.num + lam * beta.num, alpha.den + lam * beta.den)


@dataclass(frozen=True)
class IntMat2:
    """Row-major 2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> IntMat2:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __matmul__(self, other: IntMat2) -> IntMat2:
        return IntMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> IntMat2:
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> IntMat2:
        dt = self.det
        if dt not in (1, -1):
            raise ValueError(f"matrix with determinant {dt} has no integer inverse")
        # dt is its own reciprocal
        return IntMat2(dt * self.d, -dt * self.b, -dt * self.c, dt * self.a)

    def __pow__(self, n: int) -> IntMat2:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IntMat2.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        x, y = v
        return self.a * x + self.b * y, self.c * x + self.d * y

    def is_identity(self) -> bool:
        return self == IntMat2.identity()

    def is_plus_minus_identity(self) -> bool:
        return self.is_identity() or (-self).is_identity()


def twist_matrix(alpha: Slope, surface: SurfaceKind) -> IntMat2:
    """Matrix of x -> x + k det(alpha, x) v_alpha, with k = 1 (torus) or 2 (s04)."""
    k = surface.twist_multiplier
    p, q = alpha.vector
    return IntMat2(1 - k * p * q, k * p * p, -k * q * q, 1 + k * p * q)


def apply_matrix(m: IntMat2, beta: Slope) -> Slope:
    if m.det not in (1, -1):
        raise ValueError(f"matrix with determinant {m.det} does not act on slopes")
    return normalize(*m.apply(beta.vector))


def twist(alpha: Slope, beta: Slope, n: int, surface: SurfaceKind) -> Slope:
    """Image of beta under the n-th power of the Dehn twist along alpha."""
    return apply_matrix(twist_matrix(alpha, surface) ** n, beta)


def slopes_up_to(height: int) -> Iterator[Slope]:
    """All slopes with max(|p|, q) <= height, ordered by (q, p)."""
    yield INFINITY
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if math.gcd(p, q) == 1:
                yield Slope(p, q)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def farey_neighbors(alpha: Slope, height: int) -> tuple[Slope, ...]:
    """All Farey neighbors of alpha with height <= `height`, ordered by (q, p).

    Solves p*y - q*x = 1 once; every other solution is (x + k p, y + k q), and
    sign flips cover det = -1.
    """
    if height < 1:
        raise ValueError("height must be positive")
    p, q = alpha.vector
    _, s, t = _ext_gcd(p, -q)  # p*s - q*t = 1
    x0, y0 = t, s
    # |x0 + k p| <= H and |y0 + k q| <= H; use the larger coordinate to bound k
    if abs(p) >= q:
        lo, hi = (-height - x0) / p, (height - x0) / p
    else:
        lo, hi = (-height - y0) / q, (height - y0) / q
    lo, hi = min(lo, hi), max(lo, hi)
    found = set()
    for k in range(math.floor(lo), math.ceil(hi) + 1):
        x, y = x0 + k * p, y0 + k * q
        if abs(x) <= height and abs(y) <= height:
            found.add(normalize(x, y))
    return tuple(sorted(found, key=lambda s: (s.den, s.num)))


def neighbor_pairs(height: int) -> Iterator[tuple[Slope, Slope]]:
    """Ordered pairs of Farey neighbors, both of height <= `height`."""
    for alpha in slopes_up_to(height):
        for beta in farey_neighbors(alpha, height):
            yield alpha, beta
