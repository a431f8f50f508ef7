"""Monotone point solver and the SU(N) block formulas."""

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instknot.errors import DegeneratePattern
from instknot.lie_core import (
    WeylChamberPoint,
    build_root_system,
    monopole_lattice,
)
from instknot.monotone import (
    is_monotone,
    point_from_su_lambdas,
    solve_monotone,
    su_block_lambdas,
    su_block_point,
)


def test_su2_quarter_is_the_monotone_point():
    rs = build_root_system("A1")
    phi = solve_monotone(rs, [])
    assert phi.ambient == (F(1, 4), F(-1, 4))
    assert is_monotone(phi)
    third = WeylChamberPoint.from_ambient(rs, (F(1, 3), F(-1, 3)))
    assert not is_monotone(third)


def test_su_block_lambdas_two_three():
    assert su_block_lambdas([2, 3]) == (F(3, 10), F(-1, 5))
    assert su_block_lambdas([1, 1]) == (F(1, 4), F(-1, 4))


def test_block_point_matches_generic_solver():
    # vanishing pattern of the (2, 3) split of su(5): alpha_2 stays,
    # alpha_1 and alpha_3, alpha_4 vanish
    rs = build_root_system("A4")
    phi = solve_monotone(rs, [0, 2, 3])
    assert phi.ambient == su_block_point([2, 3]).ambient
    assert is_monotone(phi)


def test_one_n_minus_one_split_all_n():
    for n in range(2, 9):
        rs = build_root_system(("A", n - 1))
        phi = solve_monotone(rs, list(range(1, n - 1)))
        lams = su_block_lambdas([1, n - 1])
        assert phi.ambient[0] == lams[0] == F(n - 1, 2 * n)
        assert is_monotone(phi)
        assert phi.theta_value() < 1


def test_degenerate_patterns():
    rs = build_root_system("B3")
    with pytest.raises(DegeneratePattern):
        solve_monotone(rs, [0, 1, 2])
    with pytest.raises(DegeneratePattern):
        su_block_lambdas([4])
    with pytest.raises(ValueError):
        solve_monotone(rs, [5])


def test_all_patterns_rank_le_4_are_admissible_and_monotone():
    for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]:
        rs = build_root_system(label)
        bound = 1 - F(1, rs.dual_coxeter)
        for r in range(rs.rank):
            for pattern in itertools.combinations(range(rs.rank), r):
                phi = solve_monotone(rs, pattern)
                assert phi.theta_value() <= bound
                assert is_monotone(phi)


def test_g2_regular_value():
    rs = build_root_system("G2")
    phi = solve_monotone(rs, [])
    assert phi.theta_value() == F(3, 4)


def test_lattice_pairing_fails_off_the_monotone_point():
    rs = build_root_system("A2")
    # scale the monotone point: pairing scales too, so any other multiple fails
    phi = solve_monotone(rs, [])
    scaled = WeylChamberPoint.from_ambient(
        rs, tuple(x * F(1, 2) for x in phi.ambient)
    )
    assert not is_monotone(scaled)


def test_point_from_su_lambdas_validates():
    phi = point_from_su_lambdas([F(3, 10), F(-1, 5)], [2, 3])
    assert phi.ambient == su_block_point([2, 3]).ambient
    with pytest.raises(ValueError):
        point_from_su_lambdas([F(1, 2), F(1, 2)], [1, 1])


@settings(max_examples=25, deadline=None)
@given(
    label=st.sampled_from(["A3", "B3", "C4", "D4", "G2", "B5"]),
    data=st.data(),
)
def test_monotone_points_recover_their_pattern(label, data):
    rs = build_root_system(label)
    pattern = data.draw(
        st.sets(st.integers(0, rs.rank - 1), max_size=rs.rank - 1)
    )
    phi = solve_monotone(rs, pattern)
    assert set(i for i, x in enumerate(phi.coords) if x == 0) == set(pattern)
    lat = monopole_lattice(phi)
    assert lat.rank == rs.rank - len(pattern)
    assert is_monotone(phi)
