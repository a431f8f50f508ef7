"""Monotone chamber points.

A chamber point Phi is monotone when the Killing pairing <Phi, l> equals
2 rho(l) for every l in the monopole lattice of its stabilizer.  For each
pattern of vanishing simple roots there is exactly one monotone point with
that stabilizer: twice the projection of the dagger of rho onto the center
of the stabilizer.  Its highest-root evaluation is at most 1 - 1/h_dual,
so every monotone point is admissible.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegeneratePattern
from .lie_core import (
    RootSystem,
    WeylChamberPoint,
    build_root_system,
    monopole_lattice,
    stabilizer_data,
)
from .ratlin import Vec, complement_in_span, mat_vec, orthogonal_projector, vscale


def solve_monotone(rs: RootSystem, vanishing) -> WeylChamberPoint:
    """The unique monotone point whose stabilizer kills the given simple roots.

    ``vanishing`` is an iterable of simple-root indices (0-based).  Raises
    DegeneratePattern when every simple root is required to vanish, since
    the only such point is zero and carries no abelian charge data.
    """
    vanishing = sorted(set(vanishing))
    if any(i < 0 or i >= rs.rank for i in vanishing):
        raise ValueError(f"simple root index out of range for {rs.cartan_type}")
    if len(vanishing) == rs.rank:
        raise DegeneratePattern("all simple roots vanish; the point is zero")
    killed = [rs.simple_roots[i] for i in vanishing]
    basis = complement_in_span(list(rs.simple_coroots), killed, rs.ambient_dim)
    proj = orthogonal_projector(basis, rs.ambient_dim)
    two_rho = tuple(2 * x for x in rs.weyl_vector)
    vec = mat_vec(proj, rs.dagger(two_rho))
    phi = WeylChamberPoint.from_ambient(rs, vec)
    # the solution must reproduce the requested pattern exactly
    assert [i for i, x in enumerate(phi.coords) if x == 0] == vanishing
    assert phi.theta_value() <= 1 - Fraction(1, rs.dual_coxeter)
    return phi


def is_monotone(phi: WeylChamberPoint) -> bool:
    """Check <Phi, l> = 2 rho(l) on a basis of the monopole lattice."""
    rs = phi.root_system
    lat = monopole_lattice(phi)
    two_rho = tuple(2 * x for x in rs.weyl_vector)
    for l in lat.basis:
        if rs.killing(phi.ambient, l) != rs.pair(two_rho, l):
            return False
    return True


def su_block_lambdas(blocks) -> tuple[Fraction, ...]:
    """Eigenvalues of the monotone point of su(N) with the given block sizes.

    ``blocks`` lists the multiplicities N_1, ..., N_m; the s-th eigenvalue is
    (1 / 2N) * sum_t sign(t - s) N_t.
    """
    blocks = tuple(int(b) for b in blocks)
    if not blocks or any(b <= 0 for b in blocks):
        raise ValueError("block sizes must be positive")
    if len(blocks) == 1:
        raise DegeneratePattern("a single block gives the zero point")
    n = sum(blocks)
    out = []
    for s in range(len(blocks)):
        acc = sum(
            nt if t > s else -nt for t, nt in enumerate(blocks) if t != s
        )
        out.append(Fraction(acc, 2 * n))
    return tuple(out)


def su_block_point(blocks) -> WeylChamberPoint:
    """Monotone chamber point of su(N) as an ambient diagonal."""
    lams = su_block_lambdas(blocks)
    blocks = tuple(int(b) for b in blocks)
    rs = build_root_system(("A", sum(blocks) - 1))
    ambient: list[Fraction] = []
    for lam, mult in zip(lams, blocks):
        ambient.extend([lam] * mult)
    return WeylChamberPoint.from_ambient(rs, tuple(ambient))


def point_from_su_lambdas(lambdas, blocks) -> WeylChamberPoint:
    """Chamber point of su(N) from per-block eigenvalues (need not be monotone)."""
    blocks = tuple(int(b) for b in blocks)
    lambdas = tuple(Fraction(x) for x in lambdas)
    if len(lambdas) != len(blocks):
        raise ValueError("one eigenvalue per block required")
    total = sum(l * b for l, b in zip(lambdas, blocks))
    if total != 0:
        raise ValueError("eigenvalues must be traceless against the blocks")
    rs = build_root_system(("A", sum(blocks) - 1))
    ambient: list[Fraction] = []
    for lam, mult in zip(lambdas, blocks):
        ambient.extend([lam] * mult)
    return WeylChamberPoint.from_ambient(rs, tuple(ambient))
