"""Formal dimensions, topological energies and the related bookkeeping.

Charges are pairs (k, l): an instanton number k and an abelian monopole
charge l given by integer coordinates in the canonical basis of the
monopole lattice of the stabilizer.  Energies are exact rational multiples
of pi^2 and are returned as the rational coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ChargeImbalance, LatticeMismatch, NonIntegralTerm
from .lie_core import (
    MonopoleLattice,
    WeylChamberPoint,
    monopole_lattice,
)
from .monotone import point_from_su_lambdas, su_block_lambdas


@dataclass(frozen=True)
class SurfaceData:
    """Embedded surface, possibly disconnected; genus per component."""

    genus_list: tuple[int, ...]
    self_intersection: int = 0

    def __post_init__(self):
        object.__setattr__(self, "genus_list", tuple(int(g) for g in self.genus_list))
        if any(g < 0 for g in self.genus_list):
            raise ValueError("genus must be nonnegative")

    @property
    def components(self) -> int:
        return len(self.genus_list)

    @property
    def euler(self) -> int:
        return sum(2 - 2 * g for g in self.genus_list)

    @classmethod
    def from_euler(cls, chi: int, self_intersection: int = 0) -> "SurfaceData":
        """Surface with the requested total Euler characteristic.

        chi must be even (closed oriented components); built from spheres
        plus at most one higher-genus component.
        """
        if chi % 2:
            raise ValueError("Euler characteristic of a closed surface is even")
        if chi >= 2:
            return cls((0,) * (chi // 2), self_intersection)
        if chi == 0:
            return cls((1,), self_intersection)
        return cls((1 - chi // 2,), self_intersection)


@dataclass(frozen=True)
class FourManifoldData:
    b_plus: int
    b_one: int

    def __post_init__(self):
        if self.b_plus < 0 or self.b_one < 0:
            raise ValueError("Betti numbers must be nonnegative")


@dataclass(frozen=True)
class ChargePair:
    k: int
    l: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))


def _lattice_vector(lat: MonopoleLattice, charge: ChargePair):
    if len(charge.l) != lat.rank:
        raise LatticeMismatch(
            f"charge has {len(charge.l)} lattice coordinates, lattice rank is {lat.rank}"
        )
    return lat.vector(charge.l)


def formal_dimension(
    phi: WeylChamberPoint,
    charge: ChargePair,
    surf: SurfaceData,
    fourman: FourManifoldData,
) -> int:
    """4 h_dual k + 4 rho(l) + (dim O / 2) chi(Sigma) - dim G (b+ - b1 + 1)."""
    rs = phi.root_system
    lat = monopole_lattice(phi)
    ll = _lattice_vector(lat, charge)
    rho_l = 4 * rs.pair(rs.weyl_vector, ll)
    assert rho_l.denominator == 1 and rho_l.numerator % 2 == 0
    val = (
        4 * rs.dual_coxeter * charge.k
        + rho_l
        + len(lat.stabilizer.positive_support) * surf.euler
        - rs.dim_g * (fourman.b_plus - fourman.b_one + 1)
    )
    assert val.denominator == 1
    return int(val)


def framed_dimension(phi: WeylChamberPoint, charge: ChargePair) -> int:
    """4 h_dual k + 4 rho(l), the framed count over the four-sphere."""
    rs = phi.root_system
    ll = _lattice_vector(monopole_lattice(phi), charge)
    val = 4 * rs.dual_coxeter * charge.k + 4 * rs.pair(rs.weyl_vector, ll)
    assert val.denominator == 1
    return int(val)


def energy(phi: WeylChamberPoint, charge: ChargePair, surf: SurfaceData) -> Fraction:
    """Coefficient q of the energy q * pi^2.

    Evaluates 8(4 h_dual k + 2<Phi,l> - <Phi,Phi> Sigma.Sigma) and checks it
    against the positive-root sum 32(h_dual k + sum_b b(Phi) b(l)
    - (1/2) sum_b b(Phi)^2 Sigma.Sigma).
    """
    rs = phi.root_system
    ll = _lattice_vector(monopole_lattice(phi), charge)
    s = surf.self_intersection
    compact = 8 * (
        4 * rs.dual_coxeter * charge.k
        + 2 * rs.killing(phi.ambient, ll)
        - rs.killing(phi.ambient, phi.ambient) * s
    )
    root_sum = sum(
        (rs.pair(b, phi.ambient) * rs.pair(b, ll) for b in rs.positive_roots),
        Fraction(0),
    )
    root_sq = sum(
        (rs.pair(b, phi.ambient) ** 2 for b in rs.positive_roots), Fraction(0)
    )
    proto = 32 * (
        rs.dual_coxeter * charge.k + root_sum - Fraction(1, 2) * root_sq * s
    )
    assert compact == proto
    return compact


def su_n_dimension(
    multiplicities,
    k: int,
    ls,
    surf: SurfaceData,
    fourman: FourManifoldData,
) -> int:
    """Block form of the dimension formula for su(N) with diagonal blocks.

    ``ls`` are the per-block integer charges; they must sum to zero.
    """
    blocks = tuple(int(b) for b in multiplicities)
    ls = tuple(int(x) for x in ls)
    if len(ls) != len(blocks):
        raise LatticeMismatch("one charge per block required")
    if sum(ls) != 0:
        raise ChargeImbalance(f"block charges sum to {sum(ls)}, not 0")
    n = sum(blocks)
    m = len(blocks)
    cross = sum(
        (1 if t > s else -1) * blocks[t] * ls[s]
        for s in range(m)
        for t in range(m)
        if t != s
    )
    pairs = sum(blocks[s] * blocks[t] for s in range(m) for t in range(s + 1, m))
    return (
        4 * n * k
        + 2 * cross
        + pairs * surf.euler
        - (n * n - 1) * (fourman.b_plus - fourman.b_one + 1)
    )


def su_charge_to_lattice(multiplicities, ls) -> tuple[int, ...]:
    """Coordinates of a per-block charge in the canonical lattice basis.

    The lattice vector with block values l_s / N_s is expressed over the
    basis produced by monopole_lattice for the block chamber point.
    """
    from .lie_core import build_root_system
    from .ratlin import solve

    blocks = tuple(int(b) for b in multiplicities)
    ls = tuple(int(x) for x in ls)
    if sum(ls) != 0:
        raise ChargeImbalance(f"block charges sum to {sum(ls)}, not 0")
    lams = su_block_lambdas(blocks)
    phi = point_from_su_lambdas(lams, blocks)
    lat = monopole_lattice(phi)
    target: list[Fraction] = []
    for l, nb in zip(ls, blocks):
        target.extend([Fraction(l, nb)] * nb)
    coords = solve(tuple(zip(*lat.basis)), tuple(target))
    if coords is None or any(c.denominator != 1 for c in coords):
        raise LatticeMismatch("block charge is not in the monopole lattice")
    return tuple(int(c) for c in coords)


def su_n_energy(lambdas, multiplicities, k: int, ls, s_squared: int) -> Fraction:
    """32 N (k + sum lambda_s l_s - (1/2) sum lambda_s^2 N_s Sigma.Sigma)."""
    blocks = tuple(int(b) for b in multiplicities)
    lambdas = tuple(Fraction(x) for x in lambdas)
    ls = tuple(int(x) for x in ls)
    if sum(ls) != 0:
        raise ChargeImbalance(f"block charges sum to {sum(ls)}, not 0")
    n = sum(blocks)
    lin = sum((lam * l for lam, l in zip(lambdas, ls)), Fraction(0))
    quad = sum((lam * lam * nb for lam, nb in zip(lambdas, blocks)), Fraction(0))
    return 32 * n * (k + lin - Fraction(1, 2) * quad * s_squared)


def action_shifts(n: int) -> tuple[Fraction, int]:
    """Chern-Simons period shift (as a coefficient of pi^2) and grading shift
    produced by one step of the cyclic symmetry of su(N)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return Fraction(-16 * (n - 1)), -4 * (n - 1)


def closed_loop_flow(n: int) -> int:
    """Total spectral flow around the full cyclic loop: n times one step."""
    if n < 2:
        raise ValueError("need n >= 2")
    return -4 * (n - 1) * n


def u_n_congruence(n: int, c1_squared: int) -> int:
    """-2 (n-1) c1^2 reduced mod 4n, as a residue in [0, 4n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return (-2 * (n - 1) * c1_squared) % (4 * n)


def orientation_parity(rs, a_classes, b_classes, cup_matrix) -> int:
    """Parity of h_dual <a.b>_2 + (h_dual/2) <b.b>_2 + rho(b).rho(b).

    ``a_classes`` and ``b_classes`` list one Cartan vector per 2-cycle basis
    element; ``cup_matrix`` is the integer cup-product pairing in that basis.
    Each of the three summands must come out an integer.
    """
    a_classes = [tuple(Fraction(x) for x in v) for v in a_classes]
    b_classes = [tuple(Fraction(x) for x in v) for v in b_classes]
    n = len(cup_matrix)
    if len(a_classes) != n or len(b_classes) != n:
        raise ValueError("one lattice vector per basis 2-cycle required")

    def cup(us, vs, pairing):
        return sum(
            (
                Fraction(cup_matrix[i][j]) * pairing(us[i], vs[j])
                for i in range(n)
                for j in range(n)
            ),
            Fraction(0),
        )

    t1 = rs.dual_coxeter * cup(a_classes, b_classes, rs.inner2_vector)
    t2 = Fraction(rs.dual_coxeter, 2) * cup(b_classes, b_classes, rs.inner2_vector)
    t3 = cup(
        b_classes,
        b_classes,
        lambda x, y: rs.pair(rs.weyl_vector, x) * rs.pair(rs.weyl_vector, y),
    )
    for name, t in [("mixed", t1), ("quadratic", t2), ("weight", t3)]:
        if t.denominator != 1:
            raise NonIntegralTerm(f"{name} term evaluates to {t}")
    return int(t1 + t2 + t3) % 2


def bubble_feasible(phi: WeylChamberPoint, charge: ChargePair):
    """Bubbling inequalities for a charge pair, with slack per inequality.

    Feasibility requires k >= 0 together with one inequality per simple
    root not killed by phi: (dual mark) k + w(l) >= 0 with w the matching
    fundamental weight.  Returns (feasible, slacks, framed dimension).
    """
    rs = phi.root_system
    lat = monopole_lattice(phi)
    ll = _lattice_vector(lat, charge)
    slacks = [("k", Fraction(charge.k))]
    for i in range(rs.rank):
        if i in lat.stabilizer.vanishing_simple:
            continue
        w = rs.fundamental_weights[i]
        s = rs.dual_marks[i] * charge.k + rs.pair(w, ll)
        slacks.append((f"root_{i}", s))
    feasible = all(s >= 0 for _, s in slacks)
    framed = framed_dimension(phi, charge)
    if feasible:
        if framed == 0:
            assert charge.k == 0 and all(x == 0 for x in charge.l)
        else:
            assert framed >= 4
    return feasible, slacks, framed
