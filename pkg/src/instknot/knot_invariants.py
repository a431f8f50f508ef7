"""Classical knot invariants behind one door, plus the comparison report.

Khovanov homology, Jones, and Alexander live in their own modules; this one
routes a KnotPresentation to a concrete diagram, parses PD codes from text,
and reports whether Khovanov homology agrees with the homology of the
traceless representation variety (ungraded, and doubled against the
two-copy critical set).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .alexander import alexander, alexander_second_derivative_at_one
from .errors import MalformedPD, Unsupported
from .homology import AbelianGroup, BigradedGroup
from .khovanov import DEFAULT_MAX_CROSSINGS, khovanov, khovanov_mod2
from .pd import PDCode, braid_to_pd, jones, kauffman_bracket, torus_pd
from .repvar import (
    KnotPresentation,
    critical_set_report,
    rep_variety_torus,
    rep_variety_two_bridge,
)

__all__ = [
    "alexander",
    "alexander_second_derivative_at_one",
    "braid_to_pd",
    "compare_with_repvar",
    "ComparisonReport",
    "jones",
    "kauffman_bracket",
    "khovanov",
    "khovanov_mod2",
    "parse_pd",
    "presentation_pd",
    "torus_pd",
]

_PD_CROSSING = re.compile(r"[Xx]\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str) -> PDCode:
    """Read a PD code from `PD[X(a,b,c,d),...]` or a JSON list of 4-tuples."""
    text = text.strip()
    if not text:
        raise MalformedPD("empty PD input")
    if text[0] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise MalformedPD(f"bad JSON PD code: {err}") from None
        if not isinstance(data, list):
            raise MalformedPD("JSON PD code must be a list of 4-tuples")
        return PDCode.build(data)
    crossings = [tuple(map(int, m)) for m in _PD_CROSSING.findall(text)]
    if not crossings or not text.upper().startswith("PD["):
        raise MalformedPD(f"unrecognized PD syntax: {text[:40]!r}")
    return PDCode.build(crossings)


def presentation_pd(knot: KnotPresentation) -> PDCode:
    """A concrete diagram for a knot presentation.

    Torus knots get the standard braid closure.  A two-bridge normal form
    only has a ready-made diagram when it is a (2,p) torus knot or its
    mirror, i.e. b(p,1) or b(p,p-1); other fractions would need a rational
    tangle construction this toolkit does not carry.
    """
    if knot.kind == "pd_code":
        return PDCode.build(knot.pd)
    if knot.is_unknot():
        return PDCode.build([])
    if knot.kind == "torus":
        return torus_pd(knot.p, knot.q)
    if knot.q == 1:
        return torus_pd(2, knot.p)
    if knot.q == knot.p - 1:
        return torus_pd(2, knot.p).mirror()
    raise Unsupported(f"no diagram construction for b({knot.p}, {knot.q})")


@dataclass(frozen=True)
class ComparisonReport:
    """Ungraded Khovanov homology against representation-variety homology."""

    knot: KnotPresentation
    khovanov_homology: BigradedGroup
    rep_homology: AbelianGroup
    critical_homology: AbelianGroup
    rep_match: bool
    critical_match: bool

    @property
    def khovanov_ungraded(self) -> AbelianGroup:
        return self.khovanov_homology.total()

    def as_dict(self) -> dict:
        doubled = self.khovanov_ungraded + self.khovanov_ungraded
        return {
            "knot": f"{self.knot.kind}({self.knot.p},{self.knot.q})",
            "khovanov": str(self.khovanov_homology),
            "khovanov_ungraded": str(self.khovanov_ungraded),
            "rep_variety": str(self.rep_homology),
            "rep_match": self.rep_match,
            "khovanov_doubled": str(doubled),
            "critical_set": str(self.critical_homology),
            "critical_match": self.critical_match,
        }


def compare_with_repvar(
    knot: KnotPresentation, *, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> ComparisonReport:
    """Compare kh(K) with H_*(R(K)), and kh(K) + kh(K) with the critical set."""
    kh = khovanov(presentation_pd(knot), max_crossings=max_crossings)
    if knot.is_unknot():
        rep = rep_variety_two_bridge(1, 1)
    elif knot.kind == "two_bridge":
        rep = rep_variety_two_bridge(knot.p, knot.q)
    elif knot.kind == "torus":
        rep = rep_variety_torus(knot.p, knot.q)
    else:
        raise Unsupported("PD-code inputs have no representation-variety route")
    critical = critical_set_report(knot, 2)
    kh_total = kh.total()
    rep_total = rep.ungraded
    critical_total = critical.total_homology.total()
    return ComparisonReport(
        knot=knot,
        khovanov_homology=kh,
        rep_homology=rep_total,
        critical_homology=critical_total,
        rep_match=kh_total == rep_total,
        critical_match=kh_total + kh_total == critical_total,
    )
