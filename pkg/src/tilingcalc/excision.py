"""Excision of an open face over an abelian group.

A face can be excised when every group-valued edge labeling that
satisfies the triangle relation on all other faces automatically
satisfies it on this face too.  This is a pure question about the class
of the face's boundary row in the cokernel of the other boundary rows,
decided here by exact integer Smith normal form; a brute-force oracle
enumerates the cyclic-group labelings directly for cross-checking.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .surfaces import DeltaComplex, FaceNotFound


class TooLarge(ValueError):
    pass


FULL = "full"


@dataclass(frozen=True)
class GroupSpec:
    """Abelian model of a multiplicative group: whether it has an
    element of infinite order, and its torsion (a list of cyclic orders,
    or "full" for all roots of unity)."""

    infinite: bool
    torsion: tuple[int, ...] | str

    def __post_init__(self):
        if self.torsion == FULL:
            return
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if any(m < 1 for m in self.torsion):
            raise ValueError("cyclic orders must be at least 1")

    # fixed models of the standard coefficient groups
    @classmethod
    def reals(cls) -> "GroupSpec":
        return cls(True, (2,))

    @classmethod
    def complexes(cls) -> "GroupSpec":
        return cls(True, FULL)

    @classmethod
    def finite_field(cls, q: int) -> "GroupSpec":
        if q < 2:
            raise ValueError(q)
        return cls(False, (q - 1,))

    @classmethod
    def rational_functions(cls, q: int) -> "GroupSpec":
        if q < 2:
            raise ValueError(q)
        return cls(True, (q - 1,))

    def exponent(self) -> int | None:
        """Least common annihilator of the torsion, None when unbounded."""
        if self.torsion == FULL:
            return None
        return lcm(*self.torsion) if self.torsion else 1

    def to_json_obj(self) -> dict:
        t = self.torsion if self.torsion == FULL else list(self.torsion)
        return {"infinite": self.infinite, "torsion": t}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GroupSpec":
        t = obj["torsion"]
        return cls(bool(obj["infinite"]), t if t == FULL else tuple(t))

    @classmethod
    def from_json(cls, text: str) -> "GroupSpec":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class Cochain:
    """Values on unoriented edge representatives in Z/modulus; a
    traversal against the edge's direction contributes the negative."""

    modulus: int
    values: tuple[int, ...]  # one value per edge index

    def to_json_obj(self) -> dict:
        return {
            "modulus": self.modulus,
            "values": {str(e + 1): v for e, v in enumerate(self.values)},
        }


def boundary_matrix(K: DeltaComplex) -> list[list[int]]:
    """One row per face, one column per edge: the signed number of times
    the face's walk traverses the edge (in -3..3)."""
    rows = []
    for face in K.faces:
        row = [0] * len(K.edges)
        for e, d in face:
            row[e] += d
        rows.append(row)
    return rows


# -- Smith normal form -----------------------------------------------------


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _det(mat: list[list[int]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def smith_normal_form(A: list[list[int]]):
    """(U, D, V) with U·A·V = D, U and V unimodular, D diagonal with a
    divisibility chain d1 | d2 | ...; exact integers, pivots chosen with
    minimal absolute value."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = _identity(m)
    V = _identity(n)

    def row_sub(i, t, q):  # row i -= q * row t
        for k in range(n):
            D[i][k] -= q * D[t][k]
        for k in range(m):
            U[i][k] -= q * U[t][k]

    def col_sub(j, t, q):  # col j -= q * col t
        for r in range(m):
            D[r][j] -= q * D[r][t]
        for r in range(n):
            V[r][j] -= q * V[r][t]

    def row_swap(i, t):
        D[i], D[t] = D[t], D[i]
        U[i], U[t] = U[t], U[i]

    def col_swap(j, t):
        for r in range(m):
            D[r][j], D[r][t] = D[r][t], D[r][j]
        for r in range(n):
            V[r][j], V[r][t] = V[r][t], V[r][j]

    def clear(t):
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    row_sub(i, t, D[i][t] // D[t][t])
            left = [i for i in range(t + 1, m) if D[i][t]]
            if left:
                row_swap(t, min(left, key=lambda i: abs(D[i][t])))
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    col_sub(j, t, D[t][j] // D[t][t])
            left = [j for j in range(t + 1, n) if D[t][j]]
            if left:
                col_swap(t, min(left, key=lambda j: abs(D[t][j])))
                continue
            return

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        clear(t)
        # enforce divisibility into the remaining block
        witness = next(
            (
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if D[i][j] % D[t][t]
            ),
            None,
        )
        if witness is not None:
            row_sub(t, witness[0], -1)  # add the offending row
            clear(t)
            continue
        if D[t][t] < 0:
            for k in range(n):
                D[t][k] = -D[t][k]
            for k in range(m):
                U[t][k] = -U[t][k]
        t += 1

    _assert_snf(A, U, D, V)
    return U, D, V


def _assert_snf(A, U, D, V):
    m, n = len(U), len(V)
    prod = [
        [sum(U[i][k] * A[k][j] for k in range(m)) for j in range(n)] for i in range(m)
    ]
    prod = [
        [sum(prod[i][k] * V[k][j] for k in range(n)) for j in range(n)]
        for i in range(m)
    ]
    assert prod == D, "transform does not reproduce the diagonal form"
    if max(m, n) <= 16:  # the exact determinant audit is cubic in big rationals
        assert abs(_det(U)) == 1 and abs(_det(V)) == 1, "transforms must be unimodular"
    diag = [D[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0, "off-diagonal entry survived"
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0), "divisibility chain broken"


# -- excision decisions ----------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _quotient_class(K: DeltaComplex, face: int):
    """Coordinates of the face's boundary row in the cokernel of the
    other faces' rows: lists of (coordinate value, torsion order) with
    order 0 meaning a free coordinate."""
    if not 0 <= face < len(K.faces):
        raise FaceNotFound(face)
    rows = boundary_matrix(K)
    b0 = rows[face]
    B = [rows[f] for f in range(len(rows)) if f != face]
    if not B:
        B = [[0] * len(K.edges)]
    _, D, V = smith_normal_form(B)
    ncols = len(K.edges)
    y = [sum(b0[e] * V[e][j] for e in range(ncols)) for j in range(ncols)]
    out = []
    for j in range(ncols):
        d = D[j][j] if j < min(len(D), ncols) else 0
        out.append((y[j], d))
    return out


def can_excise(K: DeltaComplex, face: int, G: GroupSpec) -> bool:
    """True iff every G-valued edge labeling satisfying the triangle
    relation on all other faces satisfies it on this face."""
    for x, d in _quotient_class(K, face):
        if d == 1:
            continue
        if d == 0:  # free coordinate
            if x == 0:
                continue
            if G.infinite or G.torsion == FULL:
                return False
            if x % G.exponent():
                return False
        else:  # torsion coordinate of order d
            x %= d
            if x == 0:
                continue
            if G.torsion == FULL:
                return False
            if any(x % gcd(d, mj) for mj in G.torsion):
                return False
    return True


_ORACLE_MAX_EDGES = 30
_ORACLE_MAX_MODULUS = 12
_ORACLE_MAX_SOLUTIONS = 2 * 10**6


def _oracle_solutions(K: DeltaComplex, face: int, n: int):
    """Yield every Z/n edge labeling satisfying the triangle relation on
    all faces except the given one, paired with the value the excluded
    face's relation takes on it."""
    if not 0 <= face < len(K.faces):
        raise FaceNotFound(face)
    if len(K.edges) > _ORACLE_MAX_EDGES or n > _ORACLE_MAX_MODULUS or n < 2:
        raise TooLarge((len(K.edges), n))
    rows = boundary_matrix(K)
    b0 = rows[face]
    B = [rows[f] for f in range(len(rows)) if f != face]
    if not B:
        B = [[0] * len(K.edges)]
    _, D, V = smith_normal_form(B)
    ncols = len(K.edges)
    choices = []
    total = 1
    for j in range(ncols):
        d = D[j][j] if j < min(len(D), ncols) else 0
        g = gcd(d, n)
        step = n // g if g else 1
        vals = list(range(0, n, step)) if g else list(range(n))
        choices.append(vals)
        total *= len(vals)
        if total > _ORACLE_MAX_SOLUTIONS:
            raise TooLarge(total)
    for w in itertools.product(*choices):
        u = tuple(
            sum(V[e][j] * w[j] for j in range(ncols)) % n for e in range(ncols)
        )
        yield u, sum(b0[e] * u[e] for e in range(ncols)) % n


def oracle_can_excise(K: DeltaComplex, face: int, n: int) -> bool:
    """Brute-force ground truth for can_excise over the cyclic group of
    order n."""
    return all(value == 0 for _, value in _oracle_solutions(K, face, n))


def failing_cochain(K: DeltaComplex, face: int, n: int) -> Cochain | None:
    """A Z/n edge labeling satisfying all other faces' relations but not
    this face's, if one exists (first in enumeration order)."""
    for u, value in _oracle_solutions(K, face, n):
        if value != 0:
            return Cochain(n, u)
    return None


def torsion_coprime(k: int, G: GroupSpec) -> bool:
    """True iff no nontrivial element of G is killed by k."""
    if k < 2:
        raise ValueError(k)
    if G.torsion == FULL:
        return False
    return all(gcd(k, mj) == 1 for mj in G.torsion)
