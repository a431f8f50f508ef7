import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instknot.errors import Unsupported
from instknot.homology import AbelianGroup, GradedGroup, Z
from instknot.repvar import (
    KnotPresentation,
    MonomialMatrix,
    _bisection_roots,
    _relator_data,
    critical_set_report,
    rep_variety_torus,
    rep_variety_two_bridge,
    rp3_homology,
    sphere_bundle_homology,
    t3_flat_connections,
    two_bridge_exponents,
)

TWO_BRIDGE_CASES = [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (7, 5), (9, 5), (11, 3), (13, 5)]


def test_presentation_validation():
    with pytest.raises(ValueError):
        KnotPresentation.two_bridge(4, 1)
    with pytest.raises(ValueError):
        KnotPresentation.two_bridge(9, 3)
    with pytest.raises(ValueError):
        KnotPresentation.two_bridge(7, 7)
    with pytest.raises(ValueError):
        KnotPresentation.torus(4, 6)
    with pytest.raises(ValueError):
        KnotPresentation.torus(0, 5)
    assert KnotPresentation.two_bridge(1, 1).is_unknot()
    assert KnotPresentation.torus(1, 5).is_unknot()
    assert not KnotPresentation.torus(2, 5).is_unknot()


@pytest.mark.parametrize("p", [1, 3, 5, 7, 9, 11, 13, 15])
def test_twist_knot_family_count(p):
    report = rep_variety_two_bridge(p, 1)
    assert report.count("abelian_sphere") == 1
    assert report.count("irreducible_rp3") == (p - 1) // 2


def test_unknot_homology():
    report = rep_variety_two_bridge(1, 1)
    assert report.ungraded == AbelianGroup(2)
    assert report.total_homology == GradedGroup.of({0: Z, 2: Z})


def test_trefoil_homology():
    report = rep_variety_two_bridge(3, 1)
    assert report.ungraded == AbelianGroup(4, (2,))


def test_figure_eight_count():
    # frozen from the dense-grid census
    report = rep_variety_two_bridge(5, 3)
    assert report.count("irreducible_rp3") == 2
    assert report.ungraded == AbelianGroup(6, (2, 2))


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_roots_match_closed_form_for_q1(p):
    # q = 1 reduces to sin(p theta) = 0 with the aligned branch at even
    # multiples, so the roots sit at 2 s pi / p
    report = rep_variety_two_bridge(p, 1)
    roots = [c.parameter for c in report.components if c.kind == "irreducible_rp3"]
    expected = [2 * s * math.pi / p for s in range(1, (p - 1) // 2 + 1)]
    assert len(roots) == len(expected)
    for got, want in zip(sorted(roots), expected):
        assert abs(got - want) < 1e-9


@pytest.mark.parametrize("p,q", TWO_BRIDGE_CASES)
def test_bisection_equals_dense_grid(p, q):
    exps = two_bridge_exponents(p, q)

    def res(t):
        return _relator_data(exps, t)[0]

    base = _bisection_roots(res, p)
    dense = _bisection_roots(res, p, intervals=10 * (8 * p + 1))
    assert len(base) == len(dense)
    for a, b in zip(base, dense):
        assert abs(a - b) < 1e-9


@pytest.mark.parametrize("p,q", TWO_BRIDGE_CASES)
def test_roots_satisfy_relator(p, q):
    exps = two_bridge_exponents(p, q)
    for comp in rep_variety_two_bridge(p, q).components:
        if comp.kind != "irreducible_rp3":
            continue
        _, align, dist = _relator_data(exps, comp.parameter)
        assert align > 0.9
        assert dist < 1e-9


@given(
    theta=st.floats(min_value=0.01, max_value=math.pi - 0.01),
    pq=st.sampled_from(TWO_BRIDGE_CASES),
)
@settings(max_examples=60, deadline=None)
def test_relator_values_live_on_the_unit_circle(theta, pq):
    sine, align, _ = _relator_data(two_bridge_exponents(*pq), theta)
    assert abs(sine * sine + align * align - 1.0) < 1e-9


def test_exponent_palindrome():
    # e_i = e_{p-i} whenever q is odd; all twist cases here have odd q
    for p, q in TWO_BRIDGE_CASES:
        exps = two_bridge_exponents(p, q)
        assert exps == exps[::-1]


# --- torus knots ---


@pytest.mark.parametrize(
    "p,q,count", [(2, 3, 1), (2, 5, 2), (2, 7, 3), (3, 4, 3), (3, 5, 4), (4, 5, 4)]
)
def test_torus_meridian_census(p, q, count):
    report = rep_variety_torus(p, q)
    assert report.count("abelian_sphere") == 1
    assert report.count("irreducible_rp3") == count


@pytest.mark.parametrize("p", [3, 5, 7])
def test_torus_two_strand_agrees_with_two_bridge(p):
    torus = rep_variety_torus(2, p)
    bridge = rep_variety_two_bridge(p, 1)
    assert torus.ungraded == bridge.ungraded
    assert torus.count("irreducible_rp3") == bridge.count("irreducible_rp3")


def test_trefoil_longitude_points():
    report = rep_variety_torus(2, 3, "longitude_traceless")
    assert report.count("isolated_point") == 4
    assert report.ungraded == AbelianGroup(4)


ALL_COPRIME_PAIRS = [
    (p, q) for p in range(2, 8) for q in range(p + 1, 8) if math.gcd(p, q) == 1
]


@pytest.mark.parametrize("p,q", ALL_COPRIME_PAIRS)
def test_torus_longitude_census_quadratic_form(p, q):
    # the point count is twice the second derivative at 1 of the
    # symmetrized torus Alexander polynomial, which evaluates to the
    # closed form (p^2 - 1)(q^2 - 1) / 12
    expected = (p * p - 1) * (q * q - 1) // 6
    report = rep_variety_torus(p, q, "longitude_traceless")
    assert report.count("isolated_point") == expected
    flipped = rep_variety_torus(q, p, "longitude_traceless")
    assert flipped.count("isolated_point") == expected


def test_unknot_torus_reports():
    assert rep_variety_torus(1, 5, "longitude_traceless").components == ()
    meridian = rep_variety_torus(1, 5)
    assert [c.kind for c in meridian.components] == ["abelian_sphere"]


def test_longitude_points_carry_exact_angles():
    for comp in rep_variety_torus(2, 5, "longitude_traceless").components:
        a0, b0, angle = comp.parameter
        assert isinstance(angle, Fraction)
        scaled = angle * 20
        assert scaled.denominator == 1 and scaled.numerator % 2 == 1


# --- flat connections on the 3-torus ---


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_t3_class_count_and_relations(n):
    classes = t3_flat_connections(n)
    assert len(classes) == n
    assert sorted(cls.c_exponent for cls in classes) == [2 * k for k in range(n)]
    for cls in classes:
        assert cls.a.det_is_one() and cls.b.det_is_one()
        comm = cls.a @ cls.b @ cls.a.inverse() @ cls.b.inverse()
        assert comm.is_scalar() == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_t3_commutant_is_scalars(n):
    cls = t3_flat_connections(n)[0]
    a = np.array(cls.a.to_complex())
    b = np.array(cls.b.to_complex())
    eye = np.eye(n)
    rows = [np.kron(eye, a) - np.kron(a.T, eye), np.kron(eye, b) - np.kron(b.T, eye)]
    system = np.vstack(rows)
    sing = np.linalg.svd(system, compute_uv=False)
    assert sum(1 for s in sing if s < 1e-9) == 1


def test_t3_commutator_numerically():
    for n in (2, 3, 4):
        cls = t3_flat_connections(n)[0]
        a = np.array(cls.a.to_complex())
        b = np.array(cls.b.to_complex())
        zeta = np.exp(2j * math.pi / n)
        delta = a @ b @ np.linalg.inv(a) @ np.linalg.inv(b) - zeta * np.eye(n)
        assert np.abs(delta).max() < 1e-12


def test_monomial_matrix_asserts_permutation():
    with pytest.raises(AssertionError):
        MonomialMatrix(2, ((0, 0), (0, 1)))


# --- critical sets ---


def test_unknot_critical_copies():
    report = critical_set_report(KnotPresentation.torus(1, 2), 3)
    assert report.copies == 3
    assert report.ungraded == AbelianGroup(9)
    assert report.reduced.ungraded == AbelianGroup(3)


def test_trefoil_critical_two_copies_match_generic():
    structured = critical_set_report(KnotPresentation.torus(2, 3), 2)
    generic = rep_variety_torus(2, 3).total_homology * 2
    assert structured.total_homology == generic
    assert structured.ungraded == AbelianGroup(8, (2, 2))


def test_trefoil_critical_general_rank():
    report = critical_set_report(KnotPresentation.torus(3, 2), 3)
    kinds = sorted(c.kind for c in report.components)
    assert kinds == ["projective_space", "sphere_bundle"]
    assert report.copies == 3
    assert report.reduced.copies == 1


def test_sphere_bundle_low_rank_is_rp3():
    assert sphere_bundle_homology(1) == rp3_homology()
    bundle = sphere_bundle_homology(2)
    assert bundle.group(3) == AbelianGroup(0, (3,))
    assert bundle.degrees() == [0, 2, 3, 5, 7]


def test_unsupported_critical_sets():
    with pytest.raises(Unsupported):
        critical_set_report(KnotPresentation.two_bridge(5, 3), 3)
    with pytest.raises(Unsupported):
        critical_set_report(KnotPresentation.pd_code([(1, 2, 3, 4)]), 2)
    with pytest.raises(ValueError):
        critical_set_report(KnotPresentation.torus(2, 3), 1)


def test_two_bridge_critical_pair_matches_variety():
    base = rep_variety_two_bridge(5, 3)
    report = critical_set_report(KnotPresentation.two_bridge(5, 3), 2)
    assert report.total_homology == base.total_homology * 2
