"""Symmetrized Alexander polynomials and their second derivative at 1.

Torus knots use the closed form (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)); two-bridge
knots use the Fox derivative of the relator w x w^{-1} y^{-1} of the standard
two-generator presentation, pushed through the abelianization x, y -> t.
Both are centred so that D(t) = D(1/t) and sign-fixed so that D(1) = 1.
"""

from __future__ import annotations

from .errors import NonIntegralTerm, Unsupported
from .laurent import LaurentPoly
from .repvar import KnotPresentation, two_bridge_exponents


def alexander(knot: KnotPresentation) -> LaurentPoly:
    """Symmetrized Alexander polynomial of a two-bridge or torus knot."""
    if knot.kind == "torus":
        raw = _torus_alexander(knot.p, knot.q)
    elif knot.kind == "two_bridge":
        raw = _two_bridge_alexander(knot.p, knot.q)
    else:
        raise Unsupported(f"no Alexander polynomial for kind {knot.kind!r}")
    return _symmetrized(raw)


def alexander_second_derivative_at_one(knot: KnotPresentation) -> int:
    """Exact second derivative of the symmetrized polynomial at t = 1.

    The value doubles to a homology rank elsewhere, so an odd result would
    poison everything downstream; it is rejected rather than rounded.
    """
    value = alexander(knot).second_derivative_at_one()
    if value % 2:
        raise NonIntegralTerm(f"second derivative {value} at t=1 is odd")
    return value


def _torus_alexander(p: int, q: int) -> LaurentPoly:
    t = LaurentPoly.var
    one = LaurentPoly.one()
    numerator = (t(p * q) - one) * (t(1) - one)
    return numerator.exact_div(t(p) - one).exact_div(t(q) - one)


def _two_bridge_alexander(p: int, q: int) -> LaurentPoly:
    if p == 1:
        return LaurentPoly.one()
    exps = two_bridge_exponents(p, q)
    # Fox derivative of the alternating word w = x^{e_1} y^{e_2} x^{e_3} ...
    # under x, y -> t: occurrences of y only shift the running exponent
    dw = LaurentPoly.zero()
    run = 0
    for i, e in enumerate(exps):
        if i % 2 == 0:
            if e > 0:
                dw += LaurentPoly.var(run)
                run += 1
            else:
                run -= 1
                dw -= LaurentPoly.var(run)
        else:
            run += e
    # d(w x w^{-1} y^{-1})/dx = (1 - t) dw/dx + t^{sum e_i}
    total = sum(exps)
    return (LaurentPoly.one() - LaurentPoly.var(1)) * dw + LaurentPoly.var(total)


def _symmetrized(raw: LaurentPoly) -> LaurentPoly:
    centre = raw.min_exp() + raw.max_exp()
    assert centre % 2 == 0, f"span of {raw} cannot be centred"
    poly = raw.shift(-centre // 2)
    assert poly.is_symmetric(), f"{poly} is not symmetric"
    at_one = poly.evaluate(1)
    assert at_one in (1, -1), f"D(1) = {at_one}"
    return poly if at_one == 1 else -poly
