"""Ternary incidence matrices and the logical operations on them.

A matrix entry is an int in {-1, 0, +1}: +1 forces a point-line incidence,
-1 forbids it, 0 leaves it unconstrained.  Rows are points, columns are
lines; row 1 / column 1 play the distinguished role in the conclusion.
All indices in the public API are 1-based to match the usual matrix
conventions used in the fixture files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MINUS, ZERO, PLUS = -1, 0, 1
_VALID = (-1, 0, 1)


class SeedConflict(ValueError):
    """A seed targets a cell already holding the opposite sign."""


class NotNegative(ValueError):
    """contradiction_form requires the target cell to hold -1."""


class TooManyZeros(ValueError):
    """case_split refused: too many zero cells to enumerate."""


@dataclass(frozen=True)
class PatternWitness:
    """Row and column triples exhibiting a forbidden 3x3 submatrix."""

    rows: tuple[int, int, int]
    cols: tuple[int, int, int]


class IncidenceMatrix:
    """Immutable m x n grid over {-1, 0, +1}."""

    __slots__ = ("m", "n", "_rows")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        n = len(rows[0])
        for row in rows:
            if len(row) != n:
                raise ValueError("ragged rows")
            for v in row:
                if v not in _VALID:
                    raise ValueError(f"entry {v!r} not in -1/0/1")
        object.__setattr__(self, "m", len(rows))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("IncidenceMatrix is immutable")

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError((i, j))
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def with_entry(self, i: int, j: int, value: int) -> "IncidenceMatrix":
        if value not in _VALID:
            raise ValueError(value)
        self.entry(i, j)  # bounds check
        grid = [list(r) for r in self._rows]
        grid[i - 1][j - 1] = value
        return IncidenceMatrix(grid)

    def zero_cells(self) -> list[tuple[int, int]]:
        """1-based positions of zero entries, row-major order."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self._rows)
            for j, v in enumerate(row)
            if v == ZERO
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, IncidenceMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "\n".join(" ".join(f"{v:2d}" for v in row) for row in self._rows)
        return f"IncidenceMatrix {self.m}x{self.n}\n{body}"

    # -- JSON ------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"m": self.m, "n": self.n, "entries": [list(r) for r in self._rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IncidenceMatrix":
        mat = cls(obj["entries"])
        if mat.m != obj.get("m", mat.m) or mat.n != obj.get("n", mat.n):
            raise ValueError("declared dimensions disagree with entries")
        return mat

    @classmethod
    def from_json(cls, text: str) -> "IncidenceMatrix":
        return cls.from_json_obj(json.loads(text))


# The forbidden 3x3 submatrix, up to independent row and column
# permutations ('*' matches any of -1/0/+1):
#
#     -1  1  *
#      1  1  1
#      1  1 -1
#
# Its meaning: rows 2,3 are two points lying on both of the lines in
# columns 1,2; column 3 separates the two points and row 1 separates the
# two lines, so two distinct points would lie on two distinct lines.


def contradicts_incidence_axiom(mat: IncidenceMatrix) -> PatternWitness | None:
    """Find a forbidden submatrix, or None.

    Instead of trying all 3x3 submatrices with all permutations, look for
    an ordered pair of columns (c1, c2) sharing two rows (r2, r3) of +1s,
    where some row r1 separates the columns (-1 at c1, +1 at c2) and some
    column c3 separates the rows (+1 at r2, -1 at r3).  The brute-force
    equivalent lives in the test suite.
    """
    g = mat.rows()
    m, n = mat.m, mat.n
    # rows_on[c] = rows holding +1 in column c (0-based)
    rows_on = [[r for r in range(m) if g[r][c] == PLUS] for c in range(n)]
    for c1 in range(n):
        for c2 in range(n):
            if c1 == c2:
                continue
            shared = [r for r in rows_on[c1] if g[r][c2] == PLUS]
            if len(shared) < 2:
                continue
            seps = [r for r in range(m) if g[r][c1] == MINUS and g[r][c2] == PLUS]
            if not seps:
                continue
            for r2 in shared:
                for r3 in shared:
                    if r2 == r3:
                        continue
                    for c3 in range(n):
                        if c3 in (c1, c2):
                            continue
                        if g[r2][c3] == PLUS and g[r3][c3] == MINUS:
                            for r1 in seps:
                                if r1 in (r2, r3):
                                    continue
                                return PatternWitness(
                                    (r1 + 1, r2 + 1, r3 + 1),
                                    (c1 + 1, c2 + 1, c3 + 1),
                                )
    return None


def is_tautology(mat: IncidenceMatrix) -> bool:
    """True iff the conclusion cell (1,1) is already +1."""
    return mat.entry(1, 1) == PLUS


def propagate(
    mat: IncidenceMatrix,
    seeds: Sequence[tuple[int, int, int]] = (),
    max_sweeps: int | str = "fixpoint",
) -> IncidenceMatrix:
    """Apply seeds, then fill zero cells that would contradict the axiom.

    Scanning is row-major.  Each zero cell is tentatively set to +1; if
    the forbidden pattern then appears, the cell is committed to -1,
    otherwise it stays 0.  Sweeps repeat until a full sweep changes
    nothing, or until ``max_sweeps`` sweeps have run.  Only -1 is ever
    committed by scanning, so the result refines the input.
    """
    if max_sweeps != "fixpoint" and (not isinstance(max_sweeps, int) or max_sweeps < 0):
        raise ValueError("max_sweeps must be 'fixpoint' or a nonnegative int")
    grid = [list(r) for r in mat.rows()]
    for i, j, v in seeds:
        cur = grid[i - 1][j - 1]
        if v not in _VALID:
            raise ValueError(v)
        if cur != ZERO and cur != v:
            raise SeedConflict(f"seed ({i},{j})={v} conflicts with entry {cur}")
        grid[i - 1][j - 1] = v

    sweeps = 0
    while max_sweeps == "fixpoint" or sweeps < max_sweeps:
        changed = False
        for i in range(mat.m):
            for j in range(mat.n):
                if grid[i][j] != ZERO:
                    continue
                grid[i][j] = PLUS
                if contradicts_incidence_axiom(IncidenceMatrix(grid)) is not None:
                    grid[i][j] = MINUS
                    changed = True
                else:
                    grid[i][j] = ZERO
        sweeps += 1
        if not changed:
            break
    return IncidenceMatrix(grid)


# Auxiliary-construction kinds, mirroring the four allowed appends.

POINT_ON_TWO_LINES = "PointOnTwoLines"
LINE_THROUGH_TWO_POINTS = "LineThroughTwoPoints"
GENERIC_POINT = "GenericPoint"
GENERIC_LINE = "GenericLine"

AUX_KINDS = (
    POINT_ON_TWO_LINES,
    LINE_THROUGH_TWO_POINTS,
    GENERIC_POINT,
    GENERIC_LINE,
)


def aux_join(
    mat: IncidenceMatrix, kind: str, a: int | None = None, b: int | None = None
) -> IncidenceMatrix:
    """Append one row or column per the auxiliary-construction rules.

    PointOnTwoLines(c1, c2): new row, +1 in columns c1 and c2 (which may
    coincide), 0 elsewhere.  GenericPoint: new all -1 row.  The two line
    kinds act dually on columns.
    """
    grid = [list(r) for r in mat.rows()]
    if kind == POINT_ON_TWO_LINES or kind == LINE_THROUGH_TWO_POINTS:
        if a is None or b is None:
            raise ValueError(f"{kind} needs two indices")
        bound = mat.n if kind == POINT_ON_TWO_LINES else mat.m
        for idx in (a, b):
            if not 1 <= idx <= bound:
                raise IndexError(idx)
    if kind == POINT_ON_TWO_LINES:
        row = [ZERO] * mat.n
        row[a - 1] = PLUS
        row[b - 1] = PLUS
        grid.append(row)
    elif kind == GENERIC_POINT:
        grid.append([MINUS] * mat.n)
    elif kind == LINE_THROUGH_TWO_POINTS:
        for i, row in enumerate(grid):
            row.append(PLUS if (i + 1) in (a, b) else ZERO)
    elif kind == GENERIC_LINE:
        for row in grid:
            row.append(MINUS)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return IncidenceMatrix(grid)


def contradiction_form(mat: IncidenceMatrix, i: int, j: int) -> IncidenceMatrix:
    """Set (1,1) to -1, then swap rows 1,i and columns 1,j.

    Requires the entry (i, j) to be -1; the swaps move that forbidden
    incidence into the conclusion slot.
    """
    if mat.entry(i, j) != MINUS:
        raise NotNegative(f"entry ({i},{j}) is {mat.entry(i, j)}, not -1")
    grid = [list(r) for r in mat.rows()]
    grid[0][0] = MINUS
    grid[0], grid[i - 1] = grid[i - 1], grid[0]
    for row in grid:
        row[0], row[j - 1] = row[j - 1], row[0]
    return IncidenceMatrix(grid)


def case_split(mat: IncidenceMatrix, cap: int = 20) -> Iterator[IncidenceMatrix]:
    """Yield all sign completions of the zero cells.

    Enumeration is lexicographic over the row-major list of zero cells
    with -1 before +1, so 2**k matrices come out in a fixed order.
    """
    zeros = mat.zero_cells()
    if len(zeros) > cap:
        raise TooManyZeros(f"{len(zeros)} zero cells exceeds cap {cap}")

    def rec(current: IncidenceMatrix, todo: list[tuple[int, int]]) -> Iterator[IncidenceMatrix]:
        if not todo:
            yield current
            return
        (i, j), rest = todo[0], todo[1:]
        for v in (MINUS, PLUS):
            yield from rec(current.with_entry(i, j, v), rest)

    return rec(mat, zeros)
