import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from spheresys.modular import (
    Frac,
    INF,
    IDENTITY,
    MoebiusMap,
    NotHyperbolicError,
    T,
    cusp_parabolic,
    farey_adjacent,
    lr_word_value,
    parabolic_product_trace,
    schmutz_bound,
    trace_to_length,
)


class TestFrac:
    def test_normalization(self):
        assert Frac(2, 4) == Frac(1, 2)
        assert Frac(-2, -4) == Frac(1, 2)
        assert Frac(2, -4) == Frac(-1, 2)
        assert Frac(0, 5) == Frac(0, 1)

    def test_infinity(self):
        assert Frac(3, 0) == INF
        assert Frac(-1, 0) == INF
        assert INF.is_infinite
        with pytest.raises(ValueError):
            Frac(0, 0)

    def test_ordering(self):
        assert Frac(1, 2) < Frac(2, 3) < Frac(1, 1) < INF

    def test_parse_roundtrip(self):
        for s in ["1/0", "0/1", "-3/7", "5"]:
            f = Frac.parse(s)
            assert Frac.parse(str(f)) == f


class TestFareyAdjacent:
    def test_inf_zero(self):
        assert farey_adjacent(INF, Frac(0)) is True

    def test_half_third(self):
        assert farey_adjacent(Frac(1, 2), Frac(1, 3)) is True

    def test_third_two_thirds(self):
        # derived: Farey neighbours of 1/3 with denominator <= 3 are
        # 0/1, 1/2 and 1/4... restrict to q <= 3: 0/1 and 1/2 only.
        neighbours = set()
        for q in range(0, 4):
            for p in range(-5, 6):
                if q == 0 and p != 1:
                    continue
                try:
                    f = Frac(p, q)
                except ValueError:
                    continue
                if f != Frac(1, 3) and farey_adjacent(Frac(1, 3), f):
                    neighbours.add(f)
        assert Frac(2, 3) not in neighbours
        assert farey_adjacent(Frac(1, 3), Frac(2, 3)) is False

    def test_equal_rejected(self):
        with pytest.raises(ValueError):
            farey_adjacent(Frac(1, 2), Frac(2, 4))


class TestTraceToLength:
    def test_paper_value_tetrahedron(self):
        assert trace_to_length(7) == pytest.approx(2 * math.acosh(3.5), abs=1e-15)

    def test_double_angle_identity(self):
        # cosh double angle: 2*(3/2)^2 - 1 = 7/2
        assert trace_to_length(7) == pytest.approx(4 * math.acosh(1.5), abs=1e-12)
        assert trace_to_length(7) == pytest.approx(3.8496946004768278, abs=1e-12)

    def test_icosahedron_trace(self):
        assert trace_to_length(23) == pytest.approx(2 * math.acosh(11.5), abs=1e-15)

    def test_not_hyperbolic(self):
        for t in (2, -2, 0, Q(3, 2)):
            with pytest.raises(NotHyperbolicError):
                trace_to_length(t)

    def test_monotone(self):
        values = [trace_to_length(Q(t, 10)) for t in range(21, 300, 7)]
        assert values == sorted(values)


class TestSchmutzBound:
    def test_n5(self):
        assert schmutz_bound(5) == pytest.approx(4.77164, abs=1e-5)

    def test_n12_equals_icosahedron_systole(self):
        assert schmutz_bound(12) == pytest.approx(trace_to_length(23), abs=1e-12)

    def test_n4_equals_trace7(self):
        assert schmutz_bound(4) == pytest.approx(trace_to_length(7), abs=1e-12)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            schmutz_bound(3)


class TestParabolicProductTrace:
    @pytest.mark.parametrize("m1,m2,expected", [(2, 8, 14), (2, 12, 22), (1, 2, 0)])
    def test_examples(self, m1, m2, expected):
        assert parabolic_product_trace(m1, m2) == expected

    @given(st.integers(1, 200), st.integers(1, 200))
    def test_closed_form(self, m1, m2):
        assert parabolic_product_trace(m1, m2) == abs(m1 * m2 - 2)


class TestLRWords:
    def test_single_letter(self):
        assert lr_word_value("L") == MoebiusMap(1, 1, 0, 1)
        assert lr_word_value("R") == MoebiusMap(1, 0, 1, 1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            lr_word_value("")

    def test_two_cusp_loop_trace(self):
        for m1 in range(2, 51):
            for m2 in range(2, 51):
                word = "L" + "R" * (m1 - 2) + "L" + "R" * (m2 - 2)
                assert lr_word_value(word).trace == m1 * m2 - 2
                assert parabolic_product_trace(m1, m2) == m1 * m2 - 2

    def test_degree_one_pattern_trace(self):
        for d in range(1, 200):
            assert lr_word_value("LLLL" + "R" * (d - 1)).trace == 4 * d - 2


class TestCuspParabolic:
    def test_infinity(self):
        assert cusp_parabolic(INF, 3) == T ** 3

    def test_zero_width_four(self):
        m = cusp_parabolic(Frac(0), 4)
        assert m in (MoebiusMap(1, 0, 4, 1), MoebiusMap(1, 0, -4, 1))

    def test_fixes_two(self):
        m = cusp_parabolic(Frac(2), 5)
        assert abs(m.trace) == 2
        assert m(Frac(2)) == Frac(2)
        # conjugation route: (1 2; 0 1) (0 -1; 1 0) sends infinity to 2
        g = MoebiusMap(1, 2, 0, 1) * MoebiusMap(0, -1, 1, 0)
        assert g(INF) == Frac(2)
        conj = g * (T ** 5) * g.inverse()
        assert conj in (m, m.inverse())

    @given(
        st.integers(-30, 30),
        st.integers(0, 30),
        st.integers(1, 12),
    )
    def test_power_and_lower_left(self, p, q, d):
        if p == 0 and q == 0:
            return
        cusp = Frac(p, q)
        m = cusp_parabolic(cusp, d)
        assert m(cusp) == cusp
        assert abs(m.trace) == 2
        assert abs(m.c) == d * cusp.q ** 2
        assert m == cusp_parabolic(cusp, 1) ** d


class TestMoebiusMap:
    def test_projective_equality(self):
        m = MoebiusMap(2, 1, 1, 1)
        neg = MoebiusMap(Q(-2), Q(-1), Q(-1), Q(-1))
        assert m == neg
        assert hash(m) == hash(neg)

    def test_canonicalization_idempotent(self):
        m = MoebiusMap(Q(0), Q(-1), Q(1), Q(0))
        again = MoebiusMap(m.a, m.b, m.c, m.d)
        assert m.entries() == again.entries()

    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            MoebiusMap(1, 0, 0, 2)

    def test_classification(self):
        assert T.is_parabolic
        assert not T.is_hyperbolic
        assert MoebiusMap(2, 1, 1, 1).is_hyperbolic
        assert MoebiusMap(0, -1, 1, 0).is_elliptic

    @given(st.lists(st.sampled_from(["L", "R"]), min_size=1, max_size=40))
    def test_products_unimodular(self, word):
        m = lr_word_value(word)
        assert m.a * m.d - m.b * m.c == 1
        assert (m * m.inverse()) == IDENTITY

    def test_apply_infinity(self):
        m = MoebiusMap(1, 0, 4, 1)
        assert m(INF) == Frac(1, 4)

    def test_json_roundtrip(self):
        m = MoebiusMap(Q(111197, 10399), Q(-5090299, 1039900), Q(199600, 10399), Q(-90399, 10399))
        assert MoebiusMap.from_json(m.to_json()) == m

    def test_random_word_identities(self):
        rng = random.Random(7)
        for _ in range(200):
            word = "".join(rng.choice("LR") for _ in range(rng.randint(1, 25)))
            m = lr_word_value(word)
            back = IDENTITY
            for ch in word:
                back = back * (MoebiusMap(1, 1, 0, 1) if ch == "L" else MoebiusMap(1, 0, 1, 1))
            assert back == m
