"""Fixture complexes: the classical labeled tilings used throughout the
test suite and CLI.

Each builder returns a MarkedComplex.  Point/line label conventions
follow the corresponding matrices in `catalog`: label 1 is always the
conclusion point (an edge label) and line 1 the marked face's line.
"""

from __future__ import annotations

from .surfaces import DeltaComplex, Labeling, MarkedComplex


def desargues_tetrahedron() -> MarkedComplex:
    """Sphere on four triangle faces; the three hypothesis triangles
    carry the transversal collinearity and the fourth (marked) carries
    the conclusion.

    Points: 1..6 are the six side points (12, 13, 14, 23, 24, 34 in the
    classical pair naming), 7..10 the four base points.  Lines: 1 is the
    conclusion transversal, 2..4 the hypothesis transversals, 5..10 the
    six side lines (12, 13, 14, 23, 24, 34).
    """
    edges = (
        (0, 1),  # base 1-2, side point 1, line 5
        (0, 2),  # 1-3, point 2, line 6
        (0, 3),  # 1-4, point 3, line 7
        (1, 2),  # 2-3, point 4, line 8
        (1, 3),  # 2-4, point 5, line 9
        (2, 3),  # 3-4, point 6, line 10
    )
    faces = (
        ((0, 1), (3, 1), (1, -1)),  # 1-2-3, line 2
        ((3, 1), (5, 1), (4, -1)),  # 2-3-4, line 3
        ((5, 1), (2, -1), (1, 1)),  # 3-4-1, line 4
        ((0, 1), (4, 1), (2, -1)),  # 1-2-4, marked, line 1
    )
    K = DeltaComplex(4, edges, faces)
    lab = Labeling(
        p_vertex=(7, 8, 9, 10),
        p_edge=(1, 2, 3, 4, 5, 6),
        l_face=(2, 3, 4, 1),
        l_edge=(5, 6, 7, 8, 9, 10),
    )
    return MarkedComplex(K, lab, 3)


def one_line_complex() -> MarkedComplex:
    """The two-triangle sphere behind the one-line theorem: labels match
    the 6x5 matrix in `catalog.one_line_matrix` exactly."""
    edges = (
        (1, 2),  # between base points 5 and 6; point 1, line 5
        (0, 1),  # between 4 and 5; point 2, line 3
        (0, 2),  # between 4 and 6; point 3, line 4
    )
    walk = ((1, 1), (0, 1), (2, -1))  # 4 -> 5 -> 6 -> 4
    K = DeltaComplex(3, edges, (walk, walk))
    lab = Labeling(
        p_vertex=(4, 5, 6),
        p_edge=(1, 2, 3),
        l_face=(1, 2),
        l_edge=(5, 3, 4),
    )
    return MarkedComplex(K, lab, 0)


def _pappus_torus(p_vertex, edge_points, edge_lines, face_spec):
    """Torus from six triangles on three vertices, with three parallel
    edges in each of the three directions.

    edge_points: three triples of point labels for the edge classes
    0-1, 1-2, 0-2.  face_spec: (point of 0-1 edge, point of 1-2 edge,
    point of 0-2 edge, face line) per face.
    """
    ends = ((0, 1), (1, 2), (0, 2))
    edges = []
    p_edge = []
    l_edge = []
    locate = {}
    for cls in range(3):
        for pt in edge_points[cls]:
            locate[pt] = len(edges)
            edges.append(ends[cls])
            p_edge.append(pt)
            l_edge.append(edge_lines[cls])
    faces = []
    l_face = []
    marked = None
    for idx, (p01, p12, p02, line) in enumerate(face_spec):
        faces.append(((locate[p01], 1), (locate[p12], 1), (locate[p02], -1)))
        l_face.append(line)
        if line == 1:
            marked = idx
    K = DeltaComplex(3, tuple(edges), tuple(faces))
    lab = Labeling(tuple(p_vertex), tuple(p_edge), tuple(l_face), tuple(l_edge))
    return MarkedComplex(K, lab, marked)


def pappus_torus_case1() -> MarkedComplex:
    """The torus tiling discharging the first case of the Pappus proof;
    labels match `catalog.pappus_case1_golden`."""
    return _pappus_torus(
        p_vertex=(10, 11, 12),
        edge_points=((5, 6, 7), (1, 8, 9), (2, 3, 4)),
        edge_lines=(3, 4, 2),
        face_spec=(
            (5, 1, 4, 9),
            (6, 8, 2, 5),
            (7, 9, 3, 6),
            (6, 9, 4, 8),
            (5, 8, 3, 7),
            (7, 1, 2, 1),  # marked
        ),
    )


def pappus_torus_case2() -> MarkedComplex:
    """The torus for the second case, in the coordinates where the
    contradiction target has been swapped into position (1,1); validates
    against contradiction_form(catalog.pappus_case2_golden, 14, 8)."""
    return _pappus_torus(
        p_vertex=(10, 15, 16),
        edge_points=((5, 6, 7), (13, 8, 1), (2, 3, 4)),
        edge_lines=(3, 10, 2),
        face_spec=(
            (5, 13, 4, 9),
            (6, 8, 2, 5),
            (7, 1, 3, 6),
            (6, 1, 4, 1),  # marked
            (5, 8, 3, 7),
            (7, 13, 2, 8),
        ),
    )


def bijective_pappus_torus() -> MarkedComplex:
    """Case-1 torus with the parallel edge lines split into distinct
    labels so both labelings are bijections; its generated theorem is the
    generalization of Pappus' theorem where each edge carries its own
    line."""
    base = pappus_torus_case1()
    l_edge = (3, 10, 11, 4, 12, 13, 2, 14, 15)
    lab = Labeling(base.labeling.p_vertex, base.labeling.p_edge, base.labeling.l_face, l_edge)
    return MarkedComplex(base.complex, lab, base.marked)


def nine_gon_grope() -> MarkedComplex:
    """Labeled 9-gon grope: a fan of nine triangles around a centre,
    wrapped three times around a triangle face.  Encodes the closed
    9-chain theorem whose conclusion puts the first side point on the
    line through the other two.

    Points: 1..3 the side points (conclusion first), 4..12 the chain
    points on the spokes, 13..16 the triangle corners and centre.
    Lines: 1 the conclusion line, 2..10 the fan transversals, 11..13 the
    triangle sides, 14..22 the spoke lines.
    """
    A, B, C, O = 0, 1, 2, 3
    sides = ((A, B), (B, C), (C, A))
    edges = list(sides) + [(O, (A, B, C)[i % 3]) for i in range(9)]
    faces = []
    for i in range(9):
        s_in = 3 + i
        s_out = 3 + (i + 1) % 9
        faces.append(((s_in, 1), (i % 3, 1), (s_out, -1)))
    faces.append(((0, 1), (1, 1), (2, 1)))  # marked triangle
    K = DeltaComplex(4, tuple(edges), tuple(faces))
    lab = Labeling(
        p_vertex=(13, 14, 15, 16),
        p_edge=(1, 2, 3) + tuple(range(4, 13)),
        l_face=tuple(range(2, 11)) + (1,),
        l_edge=(11, 12, 13) + tuple(range(14, 23)),
    )
    return MarkedComplex(K, lab, 9)


def non_grope_complex() -> MarkedComplex:
    """Complex coupling a twice-wrapped hexagon fan with a second family
    of three triangles; its marked face is excisable over groups without
    4-torsion (such as the reals' sign group) but not over cyclic order 4.

    Points: 1..3 the first side-point family (conclusion point first),
    4..6 the second family, 7..12 the fan points, 13..16 the base
    triangle and center.  Lines: 1 the conclusion line, 2..10 the other
    faces, 11..22 the edge lines.
    """
    A, B, C, O = 0, 1, 2, 3
    edges = (
        (A, B),  # 0: point 1 (conclusion), line 11
        (A, B),  # 1: point 4, line 12
        (B, C),  # 2: point 2, line 13
        (B, C),  # 3: point 5, line 14
        (C, A),  # 4: point 3, line 15
        (C, A),  # 5: point 6, line 16
        (O, A),  # 6: point 7, line 17
        (O, B),  # 7: point 8, line 18
        (O, C),  # 8: point 9, line 19
        (O, A),  # 9: point 10, line 20
        (O, B),  # 10: point 11, line 21
        (O, C),  # 11: point 12, line 22
    )
    faces = (
        ((6, 1), (0, 1), (7, -1)),  # O-A-B via first family
        ((7, 1), (2, 1), (8, -1)),  # O-B-C
        ((8, 1), (4, 1), (9, -1)),  # O-C-A
        ((9, 1), (0, 1), (10, -1)),  # O-A-B again (second wrap)
        ((10, 1), (2, 1), (11, -1)),
        ((11, 1), (4, 1), (6, -1)),
        ((1, 1), (2, 1), (5, 1)),  # A-B-C via 4, 2, 6
        ((1, 1), (3, 1), (4, 1)),  # A-B-C via 4, 5, 3
        ((0, -1), (5, -1), (3, -1)),  # B-A-C via 1, 6, 5 reversed
        ((0, 1), (2, 1), (4, 1)),  # marked: A-B-C via 1, 2, 3
    )
    K = DeltaComplex(4, edges, faces)
    lab = Labeling(
        p_vertex=(13, 14, 15, 16),
        p_edge=(1, 4, 2, 5, 3, 6, 7, 8, 9, 10, 11, 12),
        l_face=(2, 3, 4, 5, 6, 7, 8, 9, 10, 1),
        l_edge=(11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22),
    )
    return MarkedComplex(K, lab, 9)


def would_be_6_gon() -> MarkedComplex:
    """The *invalid* would-be proof of the closed 6-gon statement
    (`catalog.hexagon_closure_matrix`): six copies of the triangle cut
    out by the two carrier lines and the transversal through the two
    concurrency points.

    The structure passes the marked-complex checks, and every mandated
    +1 cell of `catalog.hexagon_would_be_matrix` is present — but the
    mandated -1 cells for vertex distinctness are not, because nothing
    in the hypotheses stops the three corners from coinciding.  So
    `validate_elementary_proof` reports minus violations; see the test
    suite for the frozen list.

    Points: 1..6 the hexagon vertices (conclusion point first), 7, 8 the
    two concurrency points, 9..11 the triangle corners.  Lines: 1 the
    conclusion side, 2, 3 the carriers, 4..8 the other sides, 9 the
    transversal joining the concurrency points.
    """
    C, A, B = 0, 1, 2
    edges = (
        (C, A),  # 0: point 1, on carrier 2
        (C, A),  # 1: point 3
        (C, A),  # 2: point 5
        (C, B),  # 3: point 2, on carrier 3
        (C, B),  # 4: point 4
        (C, B),  # 5: point 6
        (A, B),  # 6: point 7, on the transversal 9
        (A, B),  # 7: point 8
    )
    faces = (
        ((0, 1), (6, 1), (3, -1)),  # side through points 1, 2, 7
        ((1, 1), (6, 1), (4, -1)),  # side through 3, 4, 7
        ((2, 1), (6, 1), (5, -1)),  # side through 5, 6, 7
        ((2, 1), (7, 1), (4, -1)),  # side through 4, 5, 8
        ((0, 1), (7, 1), (5, -1)),  # side through 6, 1, 8
        ((0, 1), (7, 1), (3, -1)),  # marked: conclusion side through 2, 8
    )
    K = DeltaComplex(3, edges, faces)
    lab = Labeling(
        p_vertex=(9, 10, 11),
        p_edge=(1, 3, 5, 2, 4, 6, 7, 8),
        l_face=(4, 5, 6, 7, 8, 1),
        l_edge=(2, 2, 2, 3, 3, 3, 9, 9),
    )
    return MarkedComplex(K, lab, 5)
