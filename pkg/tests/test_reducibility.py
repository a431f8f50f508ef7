"""Integrality scans: spinor-group behavior, coprime block rules, U(N)."""

from fractions import Fraction as F
from math import gcd

import pytest

from instknot.errors import TooLarge
from instknot.lie_core import build_root_system
from instknot.monotone import solve_monotone, su_block_point
from instknot.reducibility import (
    ComponentClasses,
    check_nonintegral_simple,
    check_nonintegral_su_multi,
    check_un_coprime,
    su_two_block_report,
)

ONE = ComponentClasses((1,))


def test_spin9_spinor_orbit_reaches_an_integer():
    # the half-spin weight of so(9) has orbit points pairing to zero with
    # the regular monotone point: (7 - 5 - 3 + 1)/14 = 0.  Zero is an
    # integer, so the scan reports a failure witness.
    rs = build_root_system("B4")
    phi = solve_monotone(rs, [])
    report = check_nonintegral_simple(phi, ONE)
    assert not report.passed
    assert report.witness.weight_index == 3
    assert report.witness.total == 0
    p = report.witness.points[0]
    assert rs.pair(p, phi.ambient) == 0
    assert sorted(abs(x) for x in p) == [F(1, 2)] * 4


def test_spin11_fails_at_the_half_spin_weight():
    rs = build_root_system("B5")
    phi = solve_monotone(rs, [])
    report = check_nonintegral_simple(phi, ONE)
    assert not report.passed
    assert report.witness.weight_index == 3
    assert report.witness.total.denominator == 1
    # the witness lies in the orbit of the weight with four unit entries
    p = report.witness.points[0]
    assert sorted(abs(x) for x in p) == [0, 1, 1, 1, 1]
    # that orbit also reaches pairing exactly 0, e.g. (1,0,-1,-1,-1):
    # (9 - 5 - 3 - 1)/18 = 0
    from instknot.lie_core import weyl_orbit

    w = rs.fundamental_weights[3]
    zeros = [q for q in weyl_orbit(w, rs) if rs.pair(q, phi.ambient) == 0]
    assert (F(1), F(0), F(-1), F(-1), F(-1)) in zeros


def test_spin11_vector_weights_pass_individually():
    # restricted to the first three fundamental weights the scan would
    # pass; the failure above is forced by the spin weight alone
    rs = build_root_system("B5")
    phi = solve_monotone(rs, [])
    from instknot.lie_core import weyl_orbit

    for w in rs.fundamental_weights[:3]:
        for p in weyl_orbit(w, rs):
            assert rs.pair(p, phi.ambient).denominator != 1 or rs.pair(
                p, phi.ambient
            ) != int(rs.pair(p, phi.ambient))


def test_g2_regular_point_passes():
    rs = build_root_system("G2")
    phi = solve_monotone(rs, [])
    report = check_nonintegral_simple(phi, ONE)
    assert report.passed


def test_su_two_block_pass_iff_coprime():
    for n in range(2, 9):
        for n1 in range(1, n):
            n2 = n - n1
            report = su_two_block_report(n1, n2)
            assert report.passed == (gcd(n1, n2) == 1)


def test_un_rule_matches_the_gcd_test():
    for n in range(2, 9):
        for p in range(0, n + 3):
            passed, witness = check_un_coprime(n, [p])
            assert passed == (gcd(p, n) == 1)
            if passed:
                assert witness == p
    assert check_un_coprime(6, [2, 3, 4])[0] is False
    assert check_un_coprime(6, [2, 5])[0] is True


def test_su_multi_components_all_ones():
    # n+1 components, each pairing 1: every subset sum of the two block
    # values stays strictly between consecutive integers
    for n in range(2, 7):
        report = check_nonintegral_su_multi(n, [1] * (n + 1))
        assert report.passed


def test_su_multi_single_component_small_cases():
    for n in range(2, 9):
        assert check_nonintegral_su_multi(n, [1]).passed
    # m = 2 at n = 2: the reachable sums are 2*(±1/4) = ±1/2, both
    # non-integral, so the scan passes
    assert check_nonintegral_su_multi(2, [2]).passed
    # m = 4 at n = 2 reaches 4*(1/4) = 1 and fails
    report = check_nonintegral_su_multi(2, [4])
    assert not report.passed
    assert report.witness.total in (-1, 1)


def test_su_multi_agrees_with_general_scan():
    for n in range(2, 6):
        for ms in [(1,), (2,), (3,), (1, 1), (1, 2), (2, 2), (1, 1, 1)]:
            phi = su_block_point([1, n - 1])
            general = check_nonintegral_simple(phi, ComponentClasses(ms))
            special = check_nonintegral_su_multi(n, ms)
            assert general.passed == special.passed


def test_scaled_multiplicities_force_failure():
    # multiplying a pairing by n times the denominator clears every value
    for label, pattern in [("A2", []), ("B3", [1]), ("G2", [])]:
        rs = build_root_system(label)
        phi = solve_monotone(rs, pattern)
        from instknot.lie_core import weyl_orbit

        denom = 1
        for w in rs.fundamental_weights:
            for p in weyl_orbit(w, rs):
                denom = denom * rs.pair(p, phi.ambient).denominator
        report = check_nonintegral_simple(phi, ComponentClasses((denom,)))
        assert not report.passed


def test_budget_cutoff():
    rs = build_root_system("B4")
    phi = solve_monotone(rs, [])
    with pytest.raises(TooLarge):
        check_nonintegral_simple(phi, ComponentClasses((1, 1, 1, 1)), budget=100)


def test_witness_is_lexicographically_first():
    rs = build_root_system("B5")
    phi = solve_monotone(rs, [])
    report = check_nonintegral_simple(phi, ONE)
    from instknot.lie_core import weyl_orbit

    w = rs.fundamental_weights[report.witness.weight_index]
    zeros = [
        p for p in weyl_orbit(w, rs) if rs.pair(p, phi.ambient).denominator == 1
    ]
    assert report.witness.points[0] == min(zeros)
