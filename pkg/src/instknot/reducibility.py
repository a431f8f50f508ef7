"""Integrality scans that rule out reducible solutions.

A chamber point Phi passes when, for every fundamental weight w and every
choice of one Weyl image of w per surface component, the weighted sum of
evaluations sum_j m_j (w o sigma_j)(Phi) misses the integers.  A single
integral combination is a failure witness; note that 0 counts as integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import TooLarge
from .lie_core import WeylChamberPoint, weyl_orbit
from .monotone import su_block_point
from .ratlin import Vec

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class ComponentClasses:
    """Pairings of the surface components against a chosen integral class."""

    multiplicities: tuple[int, ...]
    c1_pairing: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "multiplicities", tuple(int(m) for m in self.multiplicities)
        )
        if len(self.multiplicities) < 1:
            raise ValueError("at least one component required")


@dataclass(frozen=True)
class IntegralityWitness:
    weight_index: int
    points: tuple[Vec, ...]  # one Weyl image of the weight per component
    values: tuple[Fraction, ...]  # their evaluations on Phi
    total: Fraction  # the integral weighted sum


@dataclass(frozen=True)
class NonIntegralityReport:
    passed: bool
    witness: IntegralityWitness | None
    tuples_checked: int


def check_nonintegral_simple(
    phi: WeylChamberPoint,
    comps: ComponentClasses,
    budget: int = DEFAULT_BUDGET,
) -> NonIntegralityReport:
    """Exhaustive scan over fundamental weights and Weyl choices.

    Deterministic: orbits are sorted, the first failing tuple in
    lexicographic order is the witness.
    """
    rs = phi.root_system
    ms = comps.multiplicities
    checked = 0
    for wi, w in enumerate(rs.fundamental_weights):
        orbit = weyl_orbit(w, rs)
        raw = [(rs.pair(p, phi.ambient), p) for p in orbit]
        # one scaled-value list per component, deduplicated by value
        per_comp = []
        for m in ms:
            seen = {}
            for v, p in raw:
                key = m * v
                if key not in seen:
                    seen[key] = (v, p)
            per_comp.append([(key, v, p) for key, (v, p) in seen.items()])
        count = 1
        for vals in per_comp:
            count *= len(vals)
        if checked + count > budget:
            raise TooLarge(
                f"{checked + count} weight tuples exceed the budget {budget}"
            )
        for combo in product(*per_comp):
            checked += 1
            total = sum((key for key, _, _ in combo), Fraction(0))
            if total.denominator == 1:
                return NonIntegralityReport(
                    passed=False,
                    witness=IntegralityWitness(
                        weight_index=wi,
                        points=tuple(p for _, _, p in combo),
                        values=tuple(v for _, v, _ in combo),
                        total=total,
                    ),
                    tuples_checked=checked,
                )
    return NonIntegralityReport(True, None, checked)


def check_nonintegral_su_multi(
    n: int, multiplicities, budget: int = DEFAULT_BUDGET
) -> NonIntegralityReport:
    """Specialized scan for su(N) with the (1, N-1) block chamber point.

    For the weight at level k the only two evaluations are -k/2N and
    (N-k)/2N, so each component contributes a binary choice.
    """
    ms = tuple(int(m) for m in multiplicities)
    if n < 2:
        raise ValueError("need n >= 2")
    if not ms:
        raise ValueError("at least one component required")
    checked = 0
    for k in range(1, n):
        vals = [Fraction(-k, 2 * n), Fraction(n - k, 2 * n)]
        count = 2 ** len(ms)
        if checked + count > budget:
            raise TooLarge(f"{checked + count} tuples exceed the budget {budget}")
        for choice in product(vals, repeat=len(ms)):
            checked += 1
            total = sum((m * v for m, v in zip(ms, choice)), Fraction(0))
            if total.denominator == 1:
                return NonIntegralityReport(
                    passed=False,
                    witness=IntegralityWitness(
                        weight_index=k - 1,
                        points=(),
                        values=tuple(choice),
                        total=total,
                    ),
                    tuples_checked=checked,
                )
    return NonIntegralityReport(True, None, checked)


def check_un_coprime(n: int, c1_pairings) -> tuple[bool, int | None]:
    """U(N) rule: passes when some pairing with c_1 is coprime to N."""
    if n < 2:
        raise ValueError("need n >= 2")
    for p in c1_pairings:
        if gcd(int(p), n) == 1:
            return True, int(p)
    return False, None


def su_two_block_report(n1: int, n2: int, budget: int = DEFAULT_BUDGET):
    """Single-component scan for the su(n1+n2) two-block chamber point."""
    phi = su_block_point([n1, n2])
    return check_nonintegral_simple(phi, ComponentClasses((1,)), budget)
