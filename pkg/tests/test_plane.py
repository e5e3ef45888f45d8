import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilingcalc.fields import GF, SUPPORTED_ORDERS, DivisionByZero, field
from tilingcalc.plane import (
    DEFAULT_CHART,
    INFINITY,
    Configuration,
    DegenerateChart,
    NotCollinear,
    affine_point,
    all_points,
    dot,
    incident,
    join,
    meet,
    menelaus_ratio,
    normalize,
    point_at_ratio,
)


class TestFields:
    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_construction_passes_axiom_audit(self, q):
        # GF.__init__ asserts the axioms exhaustively
        assert field(q).q == q

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            GF(6)

    def test_mod5_inverse(self):
        F = field(5)
        assert F.inv(2) == 3
        assert F.mul(2, 3) == 1

    def test_order4_multiplicative_group_cyclic_of_order_3(self):
        F = field(4)
        for x in range(1, 4):
            assert F.mul(F.mul(x, x), x) == 1

    def test_order8_element_orders(self):
        F = field(8)
        for x in range(1, 8):
            acc = 1
            for _ in range(7):
                acc = F.mul(acc, x)
            assert acc == 1
        cubes_to_one = [x for x in range(1, 8) if F.mul(F.mul(x, x), x) == 1]
        assert cubes_to_one == [1]

    def test_order9_characteristic_3(self):
        F = field(9)
        for x in F.elements():
            assert F.add(F.add(x, x), x) == 0

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            field(7).inv(0)


class TestPlane:
    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_point_count(self, q):
        assert len(all_points(field(q))) == q * q + q + 1

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_each_line_has_q_plus_1_points(self, q):
        F = field(q)
        pts = all_points(F)
        for line in pts:  # lines have the same coordinate set
            assert sum(incident(F, p, line) for p in pts) == q + 1

    def test_incidence_example(self):
        F = field(2)
        assert incident(F, (1, 0, 0), (0, 0, 1))

    def test_join_basic(self):
        F = field(3)
        assert join(F, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)

    def test_join_of_equal_points_none(self):
        F = field(5)
        assert join(F, (1, 2, 3), (1, 2, 3)) is None

    @pytest.mark.parametrize("q", [2, 3])
    def test_meet_exhaustive(self, q):
        F = field(q)
        pts = all_points(F)
        for l1, l2 in itertools.combinations(pts, 2):
            p = meet(F, l1, l2)
            assert p is not None
            assert incident(F, p, l1) and incident(F, p, l2)

    def test_fano_plane_counts(self):
        F = field(2)
        pts = all_points(F)
        assert len(pts) == 7
        for p in pts:
            assert sum(incident(F, p, l) for l in pts) == 3

    def test_duality(self):
        F = field(3)
        pts = all_points(F)
        for a in pts:
            for b in pts:
                assert incident(F, a, b) == incident(F, b, a)

    def test_normalization_canonical(self):
        F = field(9)
        for p in all_points(F):
            for s in range(1, 9):
                scaled = tuple(F.mul(s, v) for v in p)
                assert normalize(F, scaled) == p


class TestMenelausRatio:
    def test_x_equals_a_gives_zero(self):
        F = field(5)
        A, B = affine_point(F, 1, 0), affine_point(F, 0, 1)
        assert menelaus_ratio(F, A, B, A) == 0

    def test_documented_instance_mod5(self):
        F = field(5)
        A, B, X = affine_point(F, 1, 0), affine_point(F, 0, 1), affine_point(F, 3, 3)
        # A - X = (-2, -3) = (3, 2); B - X = (-3, -2) = (2, 3); over Z/5
        # 3 = k*2 and 2 = k*3 give k = 4
        assert menelaus_ratio(F, A, B, X) == 4

    def test_improper_point(self):
        F = field(5)
        A, B = affine_point(F, 0, 0), affine_point(F, 1, 0)
        X = (1, 0, 0)  # direction of the x-axis
        assert menelaus_ratio(F, A, B, X) == INFINITY

    def test_not_collinear(self):
        F = field(5)
        with pytest.raises(NotCollinear):
            menelaus_ratio(F, affine_point(F, 0, 0), affine_point(F, 1, 0), affine_point(F, 1, 1))

    def test_endpoint_on_chart_rejected(self):
        F = field(5)
        with pytest.raises(DegenerateChart):
            menelaus_ratio(F, (1, 0, 0), affine_point(F, 1, 0), affine_point(F, 2, 0))

    def test_point_at_ratio_round_trip(self):
        F = field(7)
        A, B = affine_point(F, 1, 2), affine_point(F, 4, 6)
        for k in list(range(7)) + [INFINITY]:
            if k == 1:
                continue
            X = point_at_ratio(F, A, B, k)
            assert menelaus_ratio(F, A, B, X) == k

    def test_menelaus_product_on_transversal(self):
        # triangle + transversal over Z/5: the three division ratios
        # multiply to 1
        F = field(5)
        A, B, C = affine_point(F, 0, 0), affine_point(F, 1, 0), affine_point(F, 0, 1)
        rng = random.Random(7)
        hits = 0
        while hits < 20:
            line = rng.choice(all_points(F))
            sides = [(A, B), (B, C), (C, A)]
            pts = []
            for P, Q in sides:
                X = meet(F, join(F, P, Q), line)
                pts.append(X)
            if any(
                X is None or X in (P, Q) for X, (P, Q) in zip(pts, sides)
            ) or any(dot(F, V, line) == 0 for V in (A, B, C)):
                continue
            ratios = []
            ok = True
            for X, (P, Q) in zip(pts, sides):
                r = menelaus_ratio(F, P, Q, X)
                if r == INFINITY:
                    ok = False
                    break
                ratios.append(r)
            if not ok:
                continue
            prod = 1
            for r in ratios:
                prod = F.mul(prod, r)
            assert prod == 1
            hits += 1

    def test_menelaus_product_iff_collinear(self):
        # sampled converse over Z/5: product 1 iff division points collinear
        F = field(5)
        A, B, C = affine_point(F, 0, 0), affine_point(F, 1, 0), affine_point(F, 0, 1)
        rng = random.Random(11)
        checked = 0
        while checked < 500:
            ks = [rng.randrange(5) for _ in range(3)]
            if 1 in ks:
                continue
            X = point_at_ratio(F, A, B, ks[0])
            Y = point_at_ratio(F, B, C, ks[1])
            Z = point_at_ratio(F, C, A, ks[2])
            if len({X, Y, Z}) < 3:
                continue
            prod = F.mul(F.mul(ks[0], ks[1]), ks[2])
            line = join(F, X, Y)
            collinear = line is not None and incident(F, Z, line)
            assert (prod == 1) == collinear
            checked += 1


class TestConfigurationJson:
    def test_round_trip(self):
        c = Configuration(3, ((1, 0, 0), (0, 1, 0)), ((0, 0, 1),))
        assert Configuration.from_json(c.to_json()) == c

    def test_normalizes_on_build(self):
        c = Configuration(3, ((2, 1, 0),), ())
        assert c.points[0] == (1, 2, 0)
