"""Exact root-system data for the compact simple Lie types.

Everything is computed over Fraction in a fixed ambient coordinate system
(the usual orthonormal presentations; the A family lives in the sum-zero
hyperplane of R^{n+1}, G2 in the sum-zero hyperplane of R^3, E6/E7 inside
the E8 ambient R^8).  Both roots and elements of the Cartan subalgebra are
stored as ambient tuples; a linear functional is evaluated on a vector by
the Euclidean dot product.

Normalization conventions used throughout the package:

* ``(x, y)_E``     ambient Euclidean form.
* ``<x, y>_2``     the invariant form scaled so long roots have square
                   length 2; on covectors it is ``c * (x, y)_E`` with
                   ``c = 2 / (theta, theta)_E``, on vectors ``(x, y)_E / c``.
* ``<x, y>``       the Killing form ``2 h_dual * <x, y>_2``; on vectors this
                   is ``(2 h_dual / c) * (x, y)_E``.

The dagger of a functional w is the vector w_dag with <w_dag, x> = w(x),
i.e. ``w_dag = (c / (2 h_dual)) * w`` in ambient coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvalidRank
from .ratlin import (
    Mat,
    Vec,
    complement_in_span,
    dot,
    hermite_basis,
    invert,
    is_zero_vec,
    mat_vec,
    orthogonal_projector,
    solve,
    vadd,
    vscale,
    vsub,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# rank bounds per family: (min, max).  The A family has a closed-form
# presentation for every rank, the rest are capped at 8.
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, 8),
    "C": (3, 8),
    "D": (4, 8),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_DIM_G = {
    "A": lambda n: (n + 1) ** 2 - 1,
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}

_WEYL_ORDER = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}{self.rank} is out of range")

    @classmethod
    def parse(cls, label) -> "CartanType":
        if isinstance(label, CartanType):
            return label
        if isinstance(label, tuple):
            return cls(label[0], int(label[1]))
        label = str(label).strip().upper()
        if len(label) < 2 or not label[1:].isdigit():
            raise InvalidRank(f"cannot parse Cartan label {label!r}")
        return cls(label[0], int(label[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _simple_roots(ct: CartanType) -> list[Vec]:
    n = ct.rank
    F = Fraction

    def e(i, dim):
        return tuple(F(1) if j == i else F(0) for j in range(dim))

    if ct.family == "A":
        dim = n + 1
        return [vsub(e(i, dim), e(i + 1, dim)) for i in range(n)]
    if ct.family == "B":
        return [vsub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [e(n - 1, n)]
    if ct.family == "C":
        return [vsub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [
            vscale(2, e(n - 1, n))
        ]
    if ct.family == "D":
        return [vsub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [
            vadd(e(n - 2, n), e(n - 1, n))
        ]
    if ct.family == "G":
        # Sum-zero presentation in R^3; alpha_1 short, alpha_2 long.
        return [
            (F(1), F(-1), F(0)),
            (F(-2), F(1), F(1)),
        ]
    if ct.family == "F":
        half = F(1, 2)
        return [
            (F(0), F(1), F(-1), F(0)),
            (F(0), F(0), F(1), F(-1)),
            (F(0), F(0), F(0), F(1)),
            (half, -half, -half, -half),
        ]
    if ct.family == "E":
        half = F(1, 2)
        e8 = [
            (half, -half, -half, -half, -half, -half, -half, half),
            (F(1), F(1), F(0), F(0), F(0), F(0), F(0), F(0)),
            (F(-1), F(1), F(0), F(0), F(0), F(0), F(0), F(0)),
            (F(0), F(-1), F(1), F(0), F(0), F(0), F(0), F(0)),
            (F(0), F(0), F(-1), F(1), F(0), F(0), F(0), F(0)),
            (F(0), F(0), F(0), F(-1), F(1), F(0), F(0), F(0)),
            (F(0), F(0), F(0), F(0), F(-1), F(1), F(0), F(0)),
            (F(0), F(0), F(0), F(0), F(0), F(-1), F(1), F(0)),
        ]
        return e8[:n]
    raise InvalidRank(str(ct))


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    cartan_matrix: Mat  # C[i][j] = alpha_i(coroot of alpha_j)
    positive_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    fundamental_weights: tuple[Vec, ...]
    weyl_vector: Vec  # rho, half the sum of the positive roots
    highest_root: Vec
    marks: tuple[int, ...]  # coefficients of theta over the simple roots
    dual_marks: tuple[int, ...]  # coefficients of theta_dual over the coroots
    coxeter: int
    dual_coxeter: int
    euclid_scale: Fraction  # c with <.,.>_2 = c * Euclidean on covectors
    killing_gram: Mat  # Killing form in the simple coroot basis
    # solved once: matrix sending an ambient vector in span(roots) to its
    # coordinates over the simple roots
    _coords_matrix: Mat = field(repr=False)

    # -- basic pairings ---------------------------------------------------

    def pair(self, functional: Vec, x: Vec) -> Fraction:
        """Evaluate an ambient functional on an ambient vector."""
        return dot(functional, x)

    def killing(self, x: Vec, y: Vec) -> Fraction:
        """Killing form of two Cartan vectors."""
        return 2 * self.dual_coxeter / self.euclid_scale * dot(x, y)

    def inner2_covector(self, u: Vec, w: Vec) -> Fraction:
        """Form on functionals normalized so long roots have square length 2."""
        return self.euclid_scale * dot(u, w)

    def inner2_vector(self, x: Vec, y: Vec) -> Fraction:
        """The same normalized form transported to Cartan vectors."""
        return dot(x, y) / self.euclid_scale

    def dagger(self, functional: Vec) -> Vec:
        """Vector representing a functional through the Killing form."""
        return vscale(self.euclid_scale / (2 * self.dual_coxeter), functional)

    def coroot(self, root: Vec) -> Vec:
        return vscale(Fraction(2) / dot(root, root), root)

    def root_coords(self, v: Vec) -> Vec:
        """Coordinates of a span(roots) vector over the simple roots."""
        coords = mat_vec(self._coords_matrix, v)
        recon = self._from_coords(coords, self.simple_roots)
        if recon != tuple(v):
            raise ValueError("vector does not lie in the root span")
        return coords

    @staticmethod
    def _from_coords(coords: Vec, basis) -> Vec:
        out = tuple(Fraction(0) for _ in basis[0])
        for ci, bi in zip(coords, basis):
            out = vadd(out, vscale(ci, bi))
        return out

    # -- derived quantities -----------------------------------------------

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def n_roots(self) -> int:
        return 2 * len(self.positive_roots)

    @property
    def dim_g(self) -> int:
        return self.rank + self.n_roots

    @property
    def weyl_order(self) -> int:
        return _WEYL_ORDER[self.cartan_type.family](self.rank)

    def reflect(self, mirror_root: Vec, v: Vec) -> Vec:
        f = 2 * dot(v, mirror_root) / dot(mirror_root, mirror_root)
        return vsub(v, vscale(f, mirror_root))

    def is_root(self, v: Vec) -> bool:
        return tuple(v) in self._root_set()

    def _root_set(self):
        pos = set(self.positive_roots)
        return pos | {tuple(-x for x in r) for r in pos}

    def check_identities(self) -> None:
        """Exact structural sanity checks; raises AssertionError on failure."""
        rho = self.weyl_vector
        theta = self.highest_root
        hd = self.dual_coxeter
        assert self.coxeter == 1 + sum(self.marks)
        assert hd == 1 + sum(self.dual_marks)
        assert self.n_roots == self.coxeter * self.rank
        assert self.dim_g == _DIM_G[self.cartan_type.family](self.rank)
        # rho is also the sum of the fundamental weights
        s = tuple(Fraction(0) for _ in range(self.ambient_dim))
        for w in self.fundamental_weights:
            s = vadd(s, w)
        assert s == rho
        # dual Killing form evaluations
        dual = lambda u, w: self.inner2_covector(u, w) / (2 * hd)
        assert dual(theta, theta) == Fraction(1, hd)
        assert 2 * dual(rho, theta) == 1 - Fraction(1, hd)
        # rho(theta_dual) counts the height of the highest root
        assert self.pair(rho, self.coroot(theta)) == hd - 1
        # fundamental weights are dual to the simple coroots
        for i, w in enumerate(self.fundamental_weights):
            for j, cr in enumerate(self.simple_coroots):
                assert self.pair(w, cr) == (1 if i == j else 0)


def _generate_roots(simple: list[Vec], cartan: Mat) -> list[Vec]:
    """All roots via closure of the simple ones under simple reflections.

    Works in simple-root coordinates with integer arithmetic; every root of
    an irreducible system is conjugate to a simple root of its length class,
    and the simple roots meet every length class.
    """
    n = len(simple)
    start = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(start)
    queue = list(start)
    while queue:
        m = queue.pop()
        # beta(coroot_j) = sum_i m_i C[i][j]
        for j in range(n):
            pairing = sum(m[i] * cartan[i][j] for i in range(n))
            refl = list(m)
            refl[j] = m[j] - pairing
            refl = tuple(refl)
            if refl not in seen:
                seen.add(refl)
                queue.append(refl)
    roots = []
    for m in seen:
        v = tuple(
            sum((Fraction(mi) * s[k] for mi, s in zip(m, simple)), Fraction(0))
            for k in range(len(simple[0]))
        )
        roots.append((m, v))
    return roots


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    ct = CartanType(family, rank)
    simple = _simple_roots(ct)
    dim = len(simple[0])
    coroots = [vscale(Fraction(2) / dot(a, a), a) for a in simple]
    cartan = tuple(
        tuple(Fraction(dot(a, cr)) for cr in coroots) for a in simple
    )
    assert all(c == int(c) for row in cartan for c in row)
    cartan = tuple(tuple(int(c) for c in row) for row in cartan)

    all_roots = _generate_roots(simple, cartan)
    positive = [(m, v) for m, v in all_roots if all(x >= 0 for x in m)]
    assert 2 * len(positive) == len(all_roots)
    positive.sort(key=lambda mv: (sum(mv[0]), mv[0]))
    pos_vecs = tuple(v for _, v in positive)

    # highest root: the unique root of maximal height
    heights = [sum(m) for m, _ in positive]
    top = max(heights)
    assert heights.count(top) == 1
    marks, theta = positive[heights.index(top)]
    theta_norm = dot(theta, theta)
    assert all(dot(v, v) <= theta_norm for v in pos_vecs), "theta must be long"
    c = Fraction(2) / theta_norm

    theta_dual = vscale(Fraction(2) / theta_norm, theta)
    dual_coords = solve(tuple(zip(*coroots)), theta_dual)
    assert dual_coords is not None and all(x == int(x) for x in dual_coords)
    dual_marks = tuple(int(x) for x in dual_coords)

    h = 1 + sum(marks)
    h_dual = 1 + sum(dual_marks)

    rho = tuple(
        sum((v[k] for v in pos_vecs), Fraction(0)) / 2 for k in range(dim)
    )

    # fundamental weights: solve w_i(coroot_j) = delta_ij inside span(simple),
    # writing w_i = sum_k t_k alpha_k
    pairing_rows = tuple(tuple(dot(cr, a) for a in simple) for cr in coroots)
    weights = []
    for i in range(len(simple)):
        rhs = tuple(Fraction(1 if j == i else 0) for j in range(len(simple)))
        t = solve(pairing_rows, rhs)
        assert t is not None
        weights.append(RootSystem._from_coords(t, simple))

    coords_matrix = tuple(_coords_matrix_from(simple, dim))

    killing_gram = tuple(
        tuple(2 * h_dual / c * dot(x, y) for y in coroots) for x in coroots
    )

    rs = RootSystem(
        cartan_type=ct,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        cartan_matrix=cartan,
        positive_roots=pos_vecs,
        simple_coroots=tuple(coroots),
        fundamental_weights=tuple(weights),
        weyl_vector=rho,
        highest_root=theta,
        marks=tuple(int(x) for x in marks),
        dual_marks=dual_marks,
        coxeter=h,
        dual_coxeter=h_dual,
        euclid_scale=c,
        killing_gram=killing_gram,
        _coords_matrix=coords_matrix,
    )
    rs.check_identities()
    return rs


def _coords_matrix_from(simple, dim):
    # coords = G^{-1} B v for v in span of the rows of B, with G the Gram matrix
    gram = tuple(tuple(dot(a, b) for b in simple) for a in simple)
    ginv = invert(gram)
    out = []
    for r in range(len(simple)):
        row = tuple(
            sum((ginv[r][s] * simple[s][k] for s in range(len(simple))), Fraction(0))
            for k in range(dim)
        )
        out.append(row)
    return out


def build_root_system(label) -> RootSystem:
    """Root system for a Cartan label such as "B4", ("A", 3) or a CartanType."""
    ct = CartanType.parse(label)
    return _build(ct.family, ct.rank)


def weyl_orbit(functional: Vec, rs: RootSystem) -> list[Vec]:
    """Orbit of an ambient functional under the Weyl group, sorted."""
    start = tuple(Fraction(x) for x in functional)
    seen = {start}
    queue = [start]
    while queue:
        w = queue.pop()
        for a in rs.simple_roots:
            r = rs.reflect(a, w)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return sorted(seen)


@dataclass(frozen=True)
class WeylChamberPoint:
    """Element of the closed fundamental Weyl chamber of the Cartan algebra.

    ``coords`` are the evaluations of the simple roots, ``ambient`` the same
    point in ambient coordinates.  Admissibility additionally requires the
    highest root to evaluate below 1.
    """

    root_system: RootSystem
    ambient: Vec
    coords: Vec

    @classmethod
    def from_ambient(cls, rs: RootSystem, v: Vec) -> "WeylChamberPoint":
        v = tuple(Fraction(x) for x in v)
        rs.root_coords(v)  # raises if v is outside the root span
        coords = tuple(rs.pair(a, v) for a in rs.simple_roots)
        return cls(rs, v, coords)

    @classmethod
    def from_simple_values(cls, rs: RootSystem, values) -> "WeylChamberPoint":
        values = tuple(Fraction(x) for x in values)
        if len(values) != rs.rank:
            raise ValueError("one value per simple root required")
        g = tuple(
            tuple(Fraction(rs.cartan_matrix[i][j]) for j in range(rs.rank))
            for i in range(rs.rank)
        )
        t = solve(g, values)
        assert t is not None
        v = RootSystem._from_coords(t, rs.simple_coroots)
        return cls(rs, v, values)

    def is_in_chamber(self) -> bool:
        return all(x >= 0 for x in self.coords)

    def theta_value(self) -> Fraction:
        return self.root_system.pair(self.root_system.highest_root, self.ambient)

    def is_admissible(self) -> bool:
        return self.is_in_chamber() and self.theta_value() < 1


@dataclass(frozen=True)
class StabilizerData:
    """Combinatorics of the centralizer of a chamber point."""

    point: WeylChamberPoint
    vanishing_simple: tuple[int, ...]  # indices of simple roots killed by Phi
    positive_support: tuple[Vec, ...]  # positive roots not killed by Phi
    orbit_dimension: int
    center_projection: Mat  # ambient matrix of the projection onto the center

    @property
    def center_rank(self) -> int:
        return self.point.root_system.rank - len(self.vanishing_simple)


def stabilizer_data(phi: WeylChamberPoint) -> StabilizerData:
    rs = phi.root_system
    if not phi.is_in_chamber():
        raise ValueError("stabilizer data needs a chamber point")
    s0 = tuple(i for i, x in enumerate(phi.coords) if x == 0)
    support = tuple(
        b for b in rs.positive_roots if rs.pair(b, phi.ambient) != 0
    )
    # Center of the stabilizer: the part of the Cartan killed by the
    # vanishing simple roots; projection is orthogonal, which agrees with
    # the Killing-orthogonal projection because both forms are proportional
    # on the root span.
    killed = [rs.simple_roots[i] for i in s0]
    basis = complement_in_span(list(rs.simple_coroots), killed, rs.ambient_dim)
    proj = orthogonal_projector(basis, rs.ambient_dim)
    return StabilizerData(
        point=phi,
        vanishing_simple=s0,
        positive_support=support,
        orbit_dimension=2 * len(support),
        center_projection=proj,
    )


@dataclass(frozen=True)
class MonopoleLattice:
    """Image of the coroot lattice in the center of the stabilizer."""

    stabilizer: StabilizerData
    basis: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def vector(self, coeffs) -> Vec:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.rank:
            from .errors import LatticeMismatch

            raise LatticeMismatch(
                f"expected {self.rank} lattice coordinates, got {len(coeffs)}"
            )
        dim = self.stabilizer.point.root_system.ambient_dim
        out = tuple(Fraction(0) for _ in range(dim))
        for c, b in zip(coeffs, self.basis):
            out = vadd(out, vscale(c, b))
        return out


def monopole_lattice(phi: WeylChamberPoint) -> MonopoleLattice:
    """Lattice of admissible abelian charges for the stabilizer of phi.

    The group is taken simply connected, so the integral lattice of the
    Cartan torus is spanned by the simple coroots; the monopole lattice is
    its image under the projection onto the center of the stabilizer.
    """
    stab = stabilizer_data(phi)
    rs = phi.root_system
    gens = [mat_vec(stab.center_projection, cr) for cr in rs.simple_coroots]
    basis = hermite_basis([g for g in gens if not is_zero_vec(g)])
    lat = MonopoleLattice(stabilizer=stab, basis=tuple(basis))
    assert lat.rank == stab.center_rank
    return lat
