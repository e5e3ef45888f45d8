"""Decide incidence theorems over a finite projective plane by complete
backtracking search, and verify explicit configurations.

A theorem "every configuration with this constraint matrix puts point 1
on line 1" is checked by two searches: first for a configuration that
satisfies the matrix and violates the conclusion (a counterexample),
then — if none exists — for any satisfying configuration at all (none
means the theorem is vacuous).  Search is exhaustive within the node
budget and deterministic: variables follow a fixed most-constrained-first
order and domains are scanned in the canonical point order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .fields import SUPPORTED_ORDERS, field
from .plane import (
    DEFAULT_CHART,
    Configuration,
    DimensionMismatch,
    all_points,
    cross,
    dot,
    incident,
    join,
    meet,
    point_at_ratio,
)
from .ternary import IncidenceMatrix


class UnsupportedField(ValueError):
    pass


class CochainViolatesF(ValueError):
    """A non-marked face's multiplicative edge relation does not hold."""


class PlacementFailed(ValueError):
    """The plane is structurally too small to host the vertex points."""


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    propagations_forced: int = 0
    elapsed: float = 0.0

    def to_json_obj(self) -> dict:
        return {
            "nodesExpanded": self.nodes_expanded,
            "propagationsForced": self.propagations_forced,
            "elapsed": self.elapsed,
        }


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "true" | "counterexample" | "vacuous" | "resource_exceeded"
    counterexample: Configuration | None = None
    stats: SearchStats = dc_field(default_factory=SearchStats)

    def to_json_obj(self) -> dict:
        obj = {"outcome": self.outcome, "stats": self.stats.to_json_obj()}
        if self.counterexample is not None:
            obj["counterexample"] = self.counterexample.to_json_obj()
        return obj


def verify_configuration(mat: IncidenceMatrix, config: Configuration) -> bool:
    """True iff every +1 cell is an incidence and every -1 cell is not."""
    if len(config.points) != mat.m or len(config.lines) != mat.n:
        raise DimensionMismatch(
            f"matrix {mat.m}x{mat.n} vs {len(config.points)} points, "
            f"{len(config.lines)} lines"
        )
    F = field(config.q)
    for i in range(mat.m):
        for j in range(mat.n):
            v = mat.rows()[i][j]
            if v == 0:
                continue
            hit = incident(F, config.points[i], config.lines[j])
            if hit != (v == 1):
                return False
    return True


class _Budget(Exception):
    pass


class _PlaneTables:
    """Per-order caches: canonical point list, incidence bit rows, meets."""

    _cache: dict[int, "_PlaneTables"] = {}

    def __init__(self, q: int):
        F = field(q)
        self.F = F
        self.universe = all_points(F)
        self.count = len(self.universe)
        self.index = {p: i for i, p in enumerate(self.universe)}
        self.inc = [
            [dot(F, p, l) == 0 for l in self.universe] for p in self.universe
        ]
        self.on_line = [
            [pi for pi in range(self.count) if self.inc[pi][li]]
            for li in range(self.count)
        ]
        self._meets: dict[tuple[int, int], int] = {}

    @classmethod
    def get(cls, q: int) -> "_PlaneTables":
        if q not in cls._cache:
            cls._cache[q] = cls(q)
        return cls._cache[q]

    def meet(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        got = self._meets.get(key)
        if got is None:
            got = self.index[cross(self.F, self.universe[key[0]], self.universe[key[1]])]
            self._meets[key] = got
        return got


class _Searcher:
    """One backtracking search over point/line variables.

    Values are indices into the canonical point list.  forbid_conclusion
    adds the requirement that point 0 misses line 0 (the counterexample
    phase).
    """

    def __init__(self, mat, q, forbid_conclusion, stats, node_budget):
        self.tables = _PlaneTables.get(q)
        self.q = q
        self.m = mat.m
        self.n = mat.n
        self.forbid = forbid_conclusion
        self.stats = stats
        self.budget = node_budget
        grid = mat.rows()
        self.pt_cells = [
            [(j, grid[i][j]) for j in range(self.n) if grid[i][j]] for i in range(self.m)
        ]
        self.ln_cells = [
            [(i, grid[i][j]) for i in range(self.m) if grid[i][j]] for j in range(self.n)
        ]
        order = [("P", i) for i in range(self.m)] + [("L", j) for j in range(self.n)]
        order.sort(
            key=lambda v: (
                -len(self.pt_cells[v[1]] if v[0] == "P" else self.ln_cells[v[1]]),
                v[0] != "P",
                v[1],
            )
        )
        self.order = order
        self.pt_val: list[int | None] = [None] * self.m
        self.ln_val: list[int | None] = [None] * self.n

    # -- constraint checking ---------------------------------------------

    def _point_ok(self, i: int, value: int) -> bool:
        inc_row = self.tables.inc[value]
        for j, sign in self.pt_cells[i]:
            lv = self.ln_val[j]
            if lv is not None and inc_row[lv] != (sign == 1):
                return False
        if self.forbid and i == 0:
            lv = self.ln_val[0]
            if lv is not None and inc_row[lv]:
                return False
        return True

    def _line_ok(self, j: int, value: int) -> bool:
        inc = self.tables.inc
        for i, sign in self.ln_cells[j]:
            pv = self.pt_val[i]
            if pv is not None and inc[pv][value] != (sign == 1):
                return False
        if self.forbid and j == 0:
            pv = self.pt_val[0]
            if pv is not None and inc[pv][value]:
                return False
        return True

    # -- forced-intersection propagation ---------------------------------

    def _forced_value(self, carriers: list[int]) -> int | None:
        for a in range(len(carriers)):
            for b in range(a + 1, len(carriers)):
                if carriers[a] != carriers[b]:
                    return self.tables.meet(carriers[a], carriers[b])
        return None

    def _propagate(self, trail: list) -> bool:
        """A point required on two assigned distinct lines is forced to
        their meet; dually for lines.  Runs to fixpoint; False on clash."""
        changed = True
        while changed:
            changed = False
            for i in range(self.m):
                if self.pt_val[i] is not None:
                    continue
                carriers = [
                    self.ln_val[j]
                    for j, sign in self.pt_cells[i]
                    if sign == 1 and self.ln_val[j] is not None
                ]
                forced = self._forced_value(carriers)
                if forced is None:
                    continue
                if not self._point_ok(i, forced):
                    return False
                self.pt_val[i] = forced
                trail.append(("P", i))
                self.stats.propagations_forced += 1
                changed = True
            for j in range(self.n):
                if self.ln_val[j] is not None:
                    continue
                carried = [
                    self.pt_val[i]
                    for i, sign in self.ln_cells[j]
                    if sign == 1 and self.pt_val[i] is not None
                ]
                forced = self._forced_value(carried)
                if forced is None:
                    continue
                if not self._line_ok(j, forced):
                    return False
                self.ln_val[j] = forced
                trail.append(("L", j))
                self.stats.propagations_forced += 1
                changed = True
        return True

    # -- candidate enumeration -------------------------------------------

    def _candidates(self, kind: str, idx: int) -> list[int]:
        """Domain values in canonical order, restricted to an assigned +1
        carrier when one exists."""
        if kind == "P":
            carriers = [
                self.ln_val[j]
                for j, sign in self.pt_cells[idx]
                if sign == 1 and self.ln_val[j] is not None
            ]
            check = self._point_ok
        else:
            carriers = [
                self.pt_val[i]
                for i, sign in self.ln_cells[idx]
                if sign == 1 and self.pt_val[i] is not None
            ]
            check = self._line_ok
        if carriers:
            base = self.tables.on_line[carriers[0]]
        else:
            base = range(self.tables.count)
        return [p for p in base if check(idx, p)]

    # -- search ----------------------------------------------------------

    def run(self) -> Configuration | None:
        return self._solve(0)

    def _solve(self, pos: int) -> Configuration | None:
        while pos < len(self.order):
            kind, idx = self.order[pos]
            store = self.pt_val if kind == "P" else self.ln_val
            if store[idx] is not None:
                pos += 1
                continue
            for value in self._candidates(kind, idx):
                self.stats.nodes_expanded += 1
                if self.stats.nodes_expanded > self.budget:
                    raise _Budget
                store[idx] = value
                trail = [(kind, idx)]
                if self._propagate(trail):
                    found = self._solve(pos + 1)
                    if found is not None:
                        return found
                for k, i in trail:
                    (self.pt_val if k == "P" else self.ln_val)[i] = None
            return None
        uni = self.tables.universe
        return Configuration(
            self.q,
            tuple(uni[v] for v in self.pt_val),
            tuple(uni[v] for v in self.ln_val),
        )


def check_theorem(mat: IncidenceMatrix, q: int, node_budget: int = 10**8) -> Verdict:
    """Complete search verdict for the theorem with this matrix over the
    plane of order q."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedField(q)
    stats = SearchStats()
    start = time.monotonic()
    try:
        counterexample = None
        if mat.entry(1, 1) != 1:  # a +1 conclusion can never be violated
            counterexample = _Searcher(mat, q, True, stats, node_budget).run()
        if counterexample is not None:
            assert verify_configuration(mat, counterexample)
            assert not incident(field(q), counterexample.points[0], counterexample.lines[0])
            stats.elapsed = time.monotonic() - start
            return Verdict("counterexample", counterexample, stats)
        witness = _Searcher(mat, q, False, stats, node_budget).run()
        stats.elapsed = time.monotonic() - start
        if witness is None:
            return Verdict("vacuous", None, stats)
        return Verdict("true", None, stats)
    except _Budget:
        stats.elapsed = time.monotonic() - start
        return Verdict("resource_exceeded", None, stats)


# -- realizing counterexamples from multiplicative edge labelings ----------


def _generator(F):
    """A multiplicative generator of the field's nonzero elements."""
    for g in range(1, F.q):
        x, order = g, 1
        while x != 1:
            x = F.mul(x, g)
            order += 1
        if order == F.q - 1:
            return g
    raise AssertionError("the multiplicative group of a finite field is cyclic")


def _pow(F, g: int, e: int) -> int:
    acc = 1
    for _ in range(e):
        acc = F.mul(acc, g)
    return acc


def multiplicative_cochain(u, q: int) -> tuple[int, ...]:
    """Map an additive mod-n edge labeling into the nonzero elements of
    the field of order q through a fixed generator; needs n | q - 1."""
    F = field(q)
    if (q - 1) % u.modulus:
        raise ValueError(f"Z/{u.modulus} does not embed in a group of order {q - 1}")
    g = _generator(F)
    step = (q - 1) // u.modulus
    return tuple(_pow(F, g, (v % u.modulus) * step) for v in u.values)


def _edge_point(F, A, B, k):
    """The point on line AB dividing it at ratio k; ratio 1 names the
    improper point of the line."""
    if k == 1:
        return meet(F, join(F, A, B), DEFAULT_CHART)
    return point_at_ratio(F, A, B, k)


def realize_from_cochain(mc, values, q: int):
    """Build a configuration with the marked complex's generated matrix
    from nonzero field elements on the edges whose product around every
    non-marked face is 1: vertex points with no three collinear, edge
    lines as joins, edge points at the given ratios, face lines through
    the resulting collinear triples, and the conclusion line through two
    of the marked face's edge points.  When the product around the marked
    face differs from 1, any returned configuration refutes the theorem's
    conclusion.  Returns None when no suitable placement exists over this
    field order.
    """
    from .surfaces import generate_theorem

    if q not in SUPPORTED_ORDERS:
        raise UnsupportedField(q)
    F = field(q)
    K, lab = mc.complex, mc.labeling
    mat = generate_theorem(mc)
    values = tuple(int(v) for v in values)
    if len(values) != len(K.edges):
        raise ValueError("need one field element per edge")
    if any(not 1 <= v < q for v in values):
        raise ValueError("edge values must be nonzero field elements")
    for f, walk in enumerate(K.faces):
        if f == mc.marked:
            continue
        acc = 1
        for e, d in walk:
            acc = F.mul(acc, values[e] if d == 1 else F.inv(values[e]))
        if acc != 1:
            raise CochainViolatesF(f)
    if any(t == h for t, h in K.edges):
        raise PlacementFailed("an edge joins a vertex to itself")
    if len(set(K.face_edges(mc.marked))) != 3:
        raise PlacementFailed("marked face must have three distinct edges")

    # proper points only: every vertex must live in the affine chart
    candidates = [p for p in all_points(F) if p[2] != 0]
    nv = K.vertex_count
    if len(candidates) < nv:
        raise PlacementFailed(f"only {len(candidates)} affine points over q={q}")

    placed: list[tuple[int, int, int]] = []

    def general_position(cand) -> bool:
        for a in range(len(placed)):
            if placed[a] == cand:
                return False
            for b in range(a + 1, len(placed)):
                if dot(F, cand, join(F, placed[a], placed[b])) == 0:
                    return False
        return True

    def build():
        points = [None] * mat.m
        lines = [None] * mat.n
        edge_pts = []
        for v in range(nv):
            points[lab.p_vertex[v] - 1] = placed[v]
        for e, (t, h) in enumerate(K.edges):
            line = join(F, placed[t], placed[h])
            X = _edge_point(F, placed[t], placed[h], values[e])
            lines[lab.l_edge[e] - 1] = line
            points[lab.p_edge[e] - 1] = X
            edge_pts.append(X)
        zero_edge = mc.zero_pair()[0]
        for f in range(len(K.faces)):
            es = K.face_edges(f)
            if f == mc.marked:
                a, b = (e for e in set(es) if e != zero_edge)
            else:
                a, b = es[0], es[1]
            L = join(F, edge_pts[a], edge_pts[b])
            if L is None:
                return None
            if f != mc.marked and dot(F, edge_pts[es[2]], L) != 0:
                return None  # product-1 relation should force collinearity
            lines[lab.l_face[f] - 1] = L
        config = Configuration(q, tuple(points), tuple(lines))
        return config if verify_configuration(mat, config) else None

    def search(depth: int):
        if depth == nv:
            return build()
        for cand in candidates:
            if not general_position(cand):
                continue
            placed.append(cand)
            found = search(depth + 1)
            if found is not None:
                return found
            placed.pop()
        return None

    return search(0)
