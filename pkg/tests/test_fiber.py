import itertools

import pytest

from kunzfiber import oracle
from kunzfiber.fiber import (
    build_fiber_system,
    enumerate_fiber,
    fiber_lattice_points,
    fiber_size,
    points_csv,
    read_points_csv,
    semigroup_from_point,
)
from kunzfiber.kunz import integer_points
from kunzfiber.semigroup import (
    NATURALS,
    SemigroupError,
    apery_set,
    even_gap_count,
    from_generators,
    quotient,
)

H3 = from_generators([2, 3])
H5 = from_generators([2, 5])


def box_points(system):
    ub = system.rhs
    ranges = [range(0, max(ub, -1) + 1)] * system.num_vars
    return [x for x in itertools.product(*ranges) if system.satisfied_by(x)]


class TestBuild:
    @pytest.mark.parametrize("gamma", range(1, 7))
    def test_multiplicity_two_base(self, gamma):
        T = from_generators([2, 2 * gamma + 1])
        fs = build_fiber_system(T, 3 * gamma)
        # -gamma-1 <= X3 - X1 <= gamma, 2X1 >= gamma, 2X3 + 1 >= gamma
        assert set(fs.system.inequalities) == {
            ((1, -1), gamma),
            ((-1, 1), gamma + 1),
            ((2, 0), -gamma),
            ((0, 2), 1 - gamma),
        }
        assert fs.system.equality == ((1, 1), 2 * gamma)
        assert fs.system.lower_bounds == (0, 0)
        assert fs.base_kunz.coords == (gamma,)

    def test_worked_example(self):
        fs = build_fiber_system(H3, 2)
        assert [c for c in [(1, 0), (0, 1)] if fs.system.satisfied_by(c)] == [(1, 0)]
        assert list(integer_points(fs.system)) == [(1, 0)]

    def test_g_equals_gamma(self):
        for gamma in range(1, 6):
            for T in oracle.enumerate_genus(gamma):
                fs = build_fiber_system(T, gamma)
                pts = list(integer_points(fs.system))
                zero = (0,) * fs.m
                assert pts == ([zero] if fs.system.satisfied_by(zero) else [])

    def test_naturals_rejected(self):
        with pytest.raises(SemigroupError, match="gamma=0"):
            build_fiber_system(NATURALS, 3)

    def test_g_below_gamma_is_infeasible(self):
        fs = build_fiber_system(from_generators([3, 5, 7]), 2)
        assert fs.system.rhs == -1
        assert list(integer_points(fs.system)) == []

    @pytest.mark.parametrize("gamma", range(1, 5))
    def test_dfs_matches_box_scan(self, gamma):
        for T in oracle.enumerate_genus(gamma):
            for g in range(gamma, 3 * gamma + 2):
                s = build_fiber_system(T, g).system
                assert list(integer_points(s)) == box_points(s)


class TestEnumerate:
    def test_examples(self):
        assert len(enumerate_fiber(H3, 3)) == 2
        assert enumerate_fiber(H5, 2) == []
        for g in range(0, 8):
            assert enumerate_fiber(NATURALS, g) == [from_generators([2, 2 * g + 1])]

    def test_sizes(self):
        assert fiber_size(H3, 2) == 1
        assert fiber_size(H3, 1) == 0
        assert fiber_size(H3, 100) == 2
        assert fiber_size(NATURALS, 5) == 1

    def test_lattice_points(self):
        assert fiber_lattice_points(H3, 2) == [(1, 0)]
        assert fiber_lattice_points(H3, 1) == []
        assert len(fiber_lattice_points(H5, 4)) == 1

    @pytest.mark.parametrize("gamma", range(1, 5))
    def test_members(self, gamma):
        for T in oracle.enumerate_genus(gamma):
            m = T.multiplicity
            even_ap = {0} | {2 * w for w in apery_set(T, m).elements[1:]}
            for g in range(gamma, 3 * gamma + 3):
                fiber = enumerate_fiber(T, g)
                assert fiber == sorted(set(fiber))
                assert len(fiber) == fiber_size(T, g)
                for S in fiber:
                    assert S.genus == g
                    assert even_gap_count(S) == gamma
                    assert quotient(S, 2) == T
                    ap = apery_set(S, 2 * m).elements
                    assert {w for w in ap if w % 2 == 0} == even_ap

    @pytest.mark.parametrize("gamma", range(1, 5))
    def test_against_oracle(self, gamma):
        for T in oracle.enumerate_genus(gamma):
            for g in range(gamma, 3 * gamma + 3):
                assert enumerate_fiber(T, g) == oracle.fiber_oracle(T, g)

    @pytest.mark.parametrize("g", range(3, 10))
    def test_fibers_disjoint(self, g):
        seen = set()
        for gamma in range(1, g + 1):
            for T in oracle.enumerate_genus(gamma):
                fiber = set(enumerate_fiber(T, g))
                assert not fiber & seen
                seen |= fiber

    def test_degenerate_multiplicity(self):
        fs = build_fiber_system(H3, 2)
        S = semigroup_from_point(fs, (1, 0))
        assert S == from_generators([3, 4, 5])
        assert S.multiplicity == 3 < 2 * H3.multiplicity
        assert quotient(S, 2) == H3


class TestCsv:
    def test_header_and_rows(self):
        text = points_csv(fiber_lattice_points(H5, 4), 2)
        assert text.splitlines()[0] == "k1,k3"
        assert len(text.splitlines()) == 2
        T = from_generators([4, 5, 6, 7])
        assert points_csv([], T.multiplicity) == "k1,k3,k5,k7\n"

    def test_round_trip(self):
        T = from_generators([3, 5, 7])
        pts = fiber_lattice_points(T, 6)
        assert pts
        assert read_points_csv(points_csv(pts, 3)) == pts
