"""The projective plane over a small Galois field.

Points and lines are coordinate triples of field-element indices,
normalized so the first nonzero coordinate is 1; a point and a line are
incident when their dot product vanishes.  The default affine chart puts
z = 0 at infinity: affine (x, y) embeds as the triple (x, y, 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .fields import GF, field

INFINITY = "infinity"


class NotCollinear(ValueError):
    pass


class DegenerateChart(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def normalize(F: GF, triple) -> tuple[int, int, int]:
    """Scale so the first nonzero coordinate is 1; canonical per class."""
    t = tuple(int(v) for v in triple)
    if len(t) != 3 or any(not 0 <= v < F.q for v in t):
        raise ValueError(f"bad triple {triple!r} for {F}")
    for v in t:
        if v != 0:
            s = F.inv(v)
            return tuple(F.mul(s, w) for w in t)
    raise ValueError("zero triple is not a projective element")


def dot(F: GF, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


def cross(F: GF, a, b) -> tuple[int, int, int] | None:
    """Cross product, normalized; None when a and b are proportional."""
    c = (
        F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
        F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
        F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0])),
    )
    if c == (0, 0, 0):
        return None
    return normalize(F, c)


def incident(F: GF, point, line) -> bool:
    return dot(F, point, line) == 0


def join(F: GF, p, q):
    """The unique line through two distinct points; None if p = q."""
    return cross(F, normalize(F, p), normalize(F, q))


def meet(F: GF, l1, l2):
    """The unique common point of two distinct lines; None if equal."""
    return cross(F, normalize(F, l1), normalize(F, l2))


def all_points(F: GF) -> list[tuple[int, int, int]]:
    """All q^2 + q + 1 normalized triples, in lexicographic order."""
    out = []
    seen = set()
    for a in F.elements():
        for b in F.elements():
            for c in F.elements():
                if (a, b, c) == (0, 0, 0):
                    continue
                n = normalize(F, (a, b, c))
                if n not in seen:
                    seen.add(n)
                    out.append(n)
    out.sort()
    return out


DEFAULT_CHART = (0, 0, 1)  # the line z = 0 taken to infinity


def affine_point(F: GF, x: int, y: int) -> tuple[int, int, int]:
    """Affine coordinates in the default chart."""
    return normalize(F, (x, y, 1))


def _chart_scale(F: GF, p, chart):
    """Representative of p scaled so <p, chart> = 1; None if p on chart."""
    n = normalize(F, p)
    d = dot(F, n, chart)
    if d == 0:
        return None
    s = F.inv(d)
    return tuple(F.mul(s, v) for v in n)


def menelaus_ratio(F: GF, A, B, X, chart=DEFAULT_CHART):
    """The scalar k with A - X = k (B - X), computed in the affine chart
    whose line at infinity is `chart`.

    Returns INFINITY when X is improper (on the chart line).  A and B
    must be proper; the three points must be collinear.
    """
    A, B, X = (normalize(F, v) for v in (A, B, X))
    l_ab = join(F, A, B)
    if l_ab is not None and dot(F, X, l_ab) != 0:
        raise NotCollinear((A, B, X))
    a = _chart_scale(F, A, chart)
    b = _chart_scale(F, B, chart)
    if a is None or b is None:
        raise DegenerateChart("endpoint on the chart line")
    x = _chart_scale(F, X, chart)
    if x is None:
        return INFINITY
    if B == X:
        raise DegenerateChart("B = X leaves the ratio undefined")
    num = tuple(F.sub(p, r) for p, r in zip(a, x))
    den = tuple(F.sub(p, r) for p, r in zip(b, x))
    k = None
    for nv, dv in zip(num, den):
        if dv != 0:
            cand = F.div(nv, dv)
            if k is None:
                k = cand
            elif k != cand:
                raise NotCollinear((A, B, X))
        elif nv != 0:
            raise NotCollinear((A, B, X))
    if k is None:
        # A - X and B - X both zero: A = B = X
        k = 1
    # consistency: num must equal k * den componentwise
    for nv, dv in zip(num, den):
        if nv != F.mul(k, dv):
            raise NotCollinear((A, B, X))
    return k


def point_at_ratio(F: GF, A, B, k, chart=DEFAULT_CHART):
    """Inverse of menelaus_ratio in X: the point X on line AB with
    A - X = k (B - X), or the improper point of AB for k = INFINITY."""
    A, B = normalize(F, A), normalize(F, B)
    line = join(F, A, B)
    if line is None:
        raise ValueError("A = B does not span a line")
    if k == INFINITY:
        x = meet(F, line, chart)
        if x is None:
            raise DegenerateChart("line AB lies on the chart")
        return x
    a = _chart_scale(F, A, chart)
    b = _chart_scale(F, B, chart)
    if a is None or b is None:
        raise DegenerateChart("endpoint on the chart line")
    if k == 1:
        raise ValueError("k = 1 has no proper solution (A != B)")
    # X = (A - k B) / (1 - k), derived from A - X = k(B - X)
    s = F.inv(F.sub(1, k))
    x = tuple(F.mul(s, F.sub(av, F.mul(k, bv))) for av, bv in zip(a, b))
    return normalize(F, x)


@dataclass(frozen=True)
class Configuration:
    """Concrete points and lines over one field order."""

    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        F = field(self.q)
        object.__setattr__(self, "points", tuple(normalize(F, p) for p in self.points))
        object.__setattr__(self, "lines", tuple(normalize(F, l) for l in self.lines))

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "points": [list(p) for p in self.points],
            "lines": [list(l) for l in self.lines],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "Configuration":
        return cls(obj["q"], tuple(map(tuple, obj["points"])), tuple(map(tuple, obj["lines"])))

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        return cls.from_json_obj(json.loads(text))
