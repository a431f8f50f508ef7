"""SU(2) representation varieties with traceless boundary constraints.

Two-bridge knots are handled numerically: the knot group has a 2-generator
presentation whose relator, after gauge fixing, becomes a single real
function of the angle between the generator axes.  Torus knots and the
3-torus are handled exactly (rational angle arithmetic, roots of unity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateRoot, Unsupported
from .homology import AbelianGroup, GradedGroup, Z, ZERO

BRACKET_TOL = 1e-12
SIMPLE_TOL = 1e-6
RESIDUAL_TOL = 1e-9


# ---------------------------------------------------------------------------
# knot presentations


@dataclass(frozen=True)
class KnotPresentation:
    """A knot given as a 2-bridge normal form, a torus knot, or a PD code.

    The framing is bookkeeping only; no operation here consumes it.
    """

    kind: str
    p: int = 0
    q: int = 0
    pd: tuple = ()
    framing: int = 0

    @staticmethod
    def two_bridge(p: int, q: int, framing: int = 0) -> "KnotPresentation":
        if p < 1 or p % 2 == 0:
            raise ValueError(f"two-bridge p must be odd and positive, got {p}")
        if p == 1:
            q = 1
        elif not (0 < q < p):
            raise ValueError(f"two-bridge q must satisfy 0 < q < p, got {q}")
        if math.gcd(p, q) != 1:
            raise ValueError(f"two-bridge parameters must be coprime, got ({p}, {q})")
        return KnotPresentation(kind="two_bridge", p=p, q=q, framing=framing)

    @staticmethod
    def torus(p: int, q: int, framing: int = 0) -> "KnotPresentation":
        if p < 1 or q < 1:
            raise ValueError(f"torus parameters must be positive, got ({p}, {q})")
        if math.gcd(p, q) != 1:
            raise ValueError(f"torus parameters must be coprime, got ({p}, {q})")
        return KnotPresentation(kind="torus", p=p, q=q, framing=framing)

    @staticmethod
    def pd_code(crossings, framing: int = 0) -> "KnotPresentation":
        return KnotPresentation(
            kind="pd_code", pd=tuple(tuple(c) for c in crossings), framing=framing
        )

    def is_unknot(self) -> bool:
        if self.kind == "two_bridge":
            return self.p == 1
        if self.kind == "torus":
            return min(self.p, self.q) == 1
        return False


# ---------------------------------------------------------------------------
# components and reports


def sphere_homology() -> GradedGroup:
    return GradedGroup.of({0: Z, 2: Z})


def rp3_homology() -> GradedGroup:
    return GradedGroup.of({0: Z, 1: AbelianGroup(0, (2,)), 3: Z})


def point_homology() -> GradedGroup:
    return GradedGroup.of({0: Z})


def projective_space_homology(n: int) -> GradedGroup:
    # complex projective n-space
    return GradedGroup.of({2 * k: Z for k in range(n + 1)})


def sphere_bundle_homology(n: int) -> GradedGroup:
    """Homology of the unit sphere bundle of the tangent bundle of CP^n.

    Gysin sequence for S^{2n-1} -> S(T) -> CP^n with Euler class
    (n+1) x^n: the free part below the fiber degree survives, the Euler
    class kills all but a Z/(n+1) at degree 2n-1, and odd degrees
    2n+1 .. 4n-1 carry the rest.  For n = 1 this is RP^3.
    """
    if n < 1:
        raise ValueError("sphere bundle needs n >= 1")
    groups: dict[int, AbelianGroup] = {}
    for k in range(0, 2 * n - 1, 2):
        groups[k] = Z
    groups[2 * n - 1] = groups.get(2 * n - 1, ZERO) + AbelianGroup(0, (n + 1,))
    for k in range(2 * n + 1, 4 * n, 2):
        groups[k] = groups.get(k, ZERO) + Z
    return GradedGroup.of(groups)


_KIND_HOMOLOGY = {
    "abelian_sphere": lambda param: sphere_homology(),
    "irreducible_rp3": lambda param: rp3_homology(),
    "isolated_point": lambda param: point_homology(),
    "projective_space": projective_space_homology,
    "sphere_bundle": sphere_bundle_homology,
}


@dataclass(frozen=True)
class RepComponent:
    kind: str
    parameter: object
    homology: GradedGroup

    @staticmethod
    def of(kind: str, parameter=None) -> "RepComponent":
        if kind not in _KIND_HOMOLOGY:
            raise ValueError(f"unknown component kind {kind!r}")
        return RepComponent(kind, parameter, _KIND_HOMOLOGY[kind](parameter))


@dataclass(frozen=True)
class RepVarietyReport:
    components: tuple
    copies: int = 1
    reduced: "RepVarietyReport | None" = None

    @property
    def total_homology(self) -> GradedGroup:
        out = GradedGroup(())
        for comp in self.components:
            out = out + comp.homology
        return out * self.copies

    @property
    def ungraded(self) -> AbelianGroup:
        return self.total_homology.total()

    def count(self, kind: str) -> int:
        return sum(1 for c in self.components if c.kind == kind)


# ---------------------------------------------------------------------------
# quaternion arithmetic (tuples (w, x, y, z), stdlib floats)


def qmul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def qdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


def two_bridge_exponents(p: int, q: int) -> tuple:
    """Exponent signs e_i = (-1)^floor(iq/p) of the standard relator word."""
    return tuple(-1 if (i * q // p) % 2 else 1 for i in range(1, p))


def _word_value(exps, x, y):
    # alternating word x^{e_1} y^{e_2} x^{e_3} ...; a pure unit quaternion
    # inverts to its negative
    out = (1.0, 0.0, 0.0, 0.0)
    for i, e in enumerate(exps):
        letter = x if i % 2 == 0 else y
        if e < 0:
            letter = (letter[0], -letter[1], -letter[2], -letter[3])
        out = qmul(out, letter)
    return out


def _relator_data(exps, theta):
    """Signed mismatch of the two-bridge relator at axis angle theta.

    With x = i and y = cos(theta) i + sin(theta) j, every odd-length word
    in x, y lands in the i-j plane, so w x and y w are unit vectors of a
    circle.  The return is (sin of their angle difference, cos of it,
    Euclidean distance); a representation is a zero of the first with the
    second positive.
    """
    x = (0.0, 1.0, 0.0, 0.0)
    y = (0.0, math.cos(theta), math.sin(theta), 0.0)
    w = _word_value(exps, x, y)
    g = qmul(w, x)
    h = qmul(y, w)
    for v in (g, h):
        assert abs(v[0]) < 1e-9 and abs(v[3]) < 1e-9, "word left the i-j plane"
    kh = qmul((0.0, 0.0, 0.0, 1.0), h)
    return qdot(g, kh), qdot(g, h), math.dist(g, h)


def rep_variety_two_bridge(p: int, q: int) -> RepVarietyReport:
    """R(K) for the 2-bridge knot b(p, q) with traceless meridians.

    Conjugacy classes of traceless pairs are parametrized by the angle
    between the two generator axes; the relator cuts out isolated angles,
    each contributing a conjugation orbit SU(2)/{+-1}.  Roots are located
    by sign-change bisection and rejected if the alignment test picks the
    anti-representation branch (w x w^{-1} = -y).
    """
    knot = KnotPresentation.two_bridge(p, q)
    components = [RepComponent.of("abelian_sphere", 0.0)]
    if not knot.is_unknot():
        exps = two_bridge_exponents(p, q)

        def res(t):
            return _relator_data(exps, t)[0]

        for root in _bisection_roots(res, p):
            _, align, dist = _relator_data(exps, root)
            if align < 0.0:
                continue
            deriv = (res(root + 1e-5) - res(root - 1e-5)) / 2e-5
            if abs(deriv) <= SIMPLE_TOL:
                raise DegenerateRoot(f"non-simple root of b({p},{q}) at theta={root!r}")
            assert dist < RESIDUAL_TOL, f"relator residual {dist} at theta={root!r}"
            components.append(RepComponent.of("irreducible_rp3", root))
    return RepVarietyReport(components=tuple(components))


def _bisection_roots(res, p, intervals=None):
    # endpoints theta = 0, pi are abelian and excluded; the interval count
    # is coprime-shifted so grid points do not land on the q = 1 roots
    m = intervals if intervals is not None else 8 * p + 1
    grid = [math.pi * t / m for t in range(1, m)]
    vals = [res(t) for t in grid]
    roots = []
    for (a, fa), (b, fb) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
        if fa == 0.0:
            raise DegenerateRoot(f"grid point {a!r} is an exact zero; shift the grid")
        if fa * fb >= 0.0:
            continue
        while b - a > BRACKET_TOL:
            mid = (a + b) / 2
            fm = res(mid)
            if fm == 0.0:
                a = b = mid
            elif fa * fm < 0.0:
                b, fb = mid, fm
            else:
                a, fa = mid, fm
        roots.append((a + b) / 2)
    return roots


# ---------------------------------------------------------------------------
# torus knots, exactly


def _meridian_word(p: int, q: int) -> tuple:
    # x^r y^s with r q + s p = 1; any solution names the same group element
    # because x^p y^{-q} is trivial
    g, r, s = _xgcd(q, p)
    assert g == 1
    return r, s


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    return old_r, old_s, old_t


def _fold(u: Fraction) -> Fraction:
    """Angle u*pi brought into [0, pi] by periodicity and evenness of cos."""
    u = u % 2
    return 2 - u if u > 1 else u


def _torus_arcs(p: int, q: int):
    # one arc of irreducible classes per (a0, b0) with matching parity;
    # endpoints of the meridian angle come from the aligned axes
    r, s = _meridian_word(p, q)
    for a0 in range(1, p):
        for b0 in range(1, q):
            if (a0 - b0) % 2:
                continue
            plus = _fold(Fraction(r * a0, p) + Fraction(s * b0, q))
            minus = _fold(Fraction(r * a0, p) - Fraction(s * b0, q))
            yield (a0, b0), plus, minus


def rep_variety_torus(p: int, q: int, constraint: str = "meridian_traceless") -> RepVarietyReport:
    """R(T(p,q)) under a traceless meridian or traceless longitude.

    An irreducible class fixes eigenvalue angles a0*pi/p, b0*pi/q of the
    two generators (p-th and q-th powers central) and one axis angle; on
    each such arc the meridian angle moves strictly monotonically between
    the folded endpoint values, so censuses reduce to exact comparisons
    of rationals.  The longitude is central times meridian^{-pq}, hence
    traceless exactly at meridian angles (odd)/(2pq) * pi.
    """
    knot = KnotPresentation.torus(p, q)
    if constraint not in ("meridian_traceless", "longitude_traceless"):
        raise ValueError(f"unknown constraint {constraint!r}")
    components = []
    if constraint == "meridian_traceless":
        components.append(RepComponent.of("abelian_sphere", 0.0))
    if knot.is_unknot():
        return RepVarietyReport(components=tuple(components))
    half = Fraction(1, 2)
    for (a0, b0), t_plus, t_minus in _torus_arcs(p, q):
        if constraint == "meridian_traceless":
            if half in (t_plus, t_minus):
                raise DegenerateRoot(f"meridian kills an arc endpoint on arc {(a0, b0)}")
            if (t_plus < half) != (t_minus < half):
                components.append(RepComponent.of("irreducible_rp3", (a0, b0)))
        else:
            lo, hi = min(t_plus, t_minus), max(t_plus, t_minus)
            for odd in range(1, 2 * p * q, 2):
                angle = Fraction(odd, 2 * p * q)
                # endpoints have even numerator over 2pq, so equality is impossible
                assert angle != lo and angle != hi
                if lo < angle < hi:
                    components.append(RepComponent.of("isolated_point", (a0, b0, angle)))
    return RepVarietyReport(components=tuple(components))


# ---------------------------------------------------------------------------
# flat SU(N) connections on the 3-torus


@dataclass(frozen=True)
class MonomialMatrix:
    """N x N matrix with one root-of-unity entry per row.

    Row i holds omega^exp at column col, omega = exp(i pi / size); all
    arithmetic stays in exponents mod 2*size, so identities are exact.
    """

    size: int
    entries: tuple  # entries[i] = (col, exp mod 2*size)

    def __post_init__(self):
        cols = [c for c, _ in self.entries]
        assert sorted(cols) == list(range(self.size)), "not a permutation pattern"

    @staticmethod
    def scalar(size: int, exp: int) -> "MonomialMatrix":
        return MonomialMatrix(size, tuple((i, exp % (2 * size)) for i in range(size)))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        assert self.size == other.size
        n = self.size
        out = []
        for i in range(n):
            j, m1 = self.entries[i]
            k, m2 = other.entries[j]
            out.append((k, (m1 + m2) % (2 * n)))
        return MonomialMatrix(n, tuple(out))

    def inverse(self) -> "MonomialMatrix":
        n = self.size
        out = [None] * n
        for i, (j, m) in enumerate(self.entries):
            out[j] = (i, (-m) % (2 * n))
        return MonomialMatrix(n, tuple(out))

    def is_scalar(self):
        n = self.size
        if any(c != i for i, (c, _) in enumerate(self.entries)):
            return None
        exps = {m for _, m in self.entries}
        return exps.pop() if len(exps) == 1 else None

    def det_is_one(self) -> bool:
        n = self.size
        perm = [c for c, _ in self.entries]
        parity = _perm_parity(perm)
        total = sum(m for _, m in self.entries)
        return (total + n * parity) % (2 * n) == 0

    def to_complex(self):
        n = self.size
        rows = [[0j] * n for _ in range(n)]
        for i, (j, m) in enumerate(self.entries):
            rows[i][j] = complex(math.cos(math.pi * m / n), math.sin(math.pi * m / n))
        return rows


def _perm_parity(perm) -> int:
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        parity ^= (length - 1) & 1
    return parity


@dataclass(frozen=True)
class FlatConnectionClass:
    size: int
    a: MonomialMatrix
    b: MonomialMatrix
    c_exponent: int  # h(c) = omega^c_exponent as a scalar

    @property
    def c(self) -> MonomialMatrix:
        return MonomialMatrix.scalar(self.size, self.c_exponent)


def _clock(n: int) -> MonomialMatrix:
    shift = 1 if n % 2 == 0 else 0  # determinant fix for even n
    return MonomialMatrix(n, tuple((i, (2 * i + shift) % (2 * n)) for i in range(n)))


def _shift(n: int) -> MonomialMatrix:
    shift = 1 if n % 2 == 0 else 0
    return MonomialMatrix(n, tuple(((i - 1) % n, shift) for i in range(n)))


def t3_flat_connections(n: int) -> list:
    """The n commuting-up-to-center triples on the 3-torus, exactly.

    h(a), h(b) are the clock and shift matrices rescaled into SU(n); their
    commutator is the primitive scalar zeta = omega^2; h(c) runs over the
    n central values.  Irreducibility is forced structurally: the clock's
    diagonal is multiplicity free, so the commutant is diagonal, and the
    shift then makes it constant.
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    a = _clock(n)
    b = _shift(n)
    assert a.det_is_one() and b.det_is_one()
    comm = a @ b @ a.inverse() @ b.inverse()
    scalar = comm.is_scalar()
    if scalar != 2:
        b, a = a, b  # orientation convention: commutator must be zeta, not its inverse
        comm = a @ b @ a.inverse() @ b.inverse()
        scalar = comm.is_scalar()
    assert scalar == 2, "commutator is not the primitive central scalar"
    diag = {m for _, m in a.entries}
    assert len(diag) == n, "clock eigenvalues collide; commutant check void"
    perm = [c for c, _ in b.entries]
    assert _is_single_cycle(perm), "shift is not an n-cycle; commutant check void"
    out = []
    for k in range(n):
        cls = FlatConnectionClass(n, a, b, (2 * k) % (2 * n))
        assert (cls.a @ cls.c).entries == (cls.c @ cls.a).entries
        assert (cls.b @ cls.c).entries == (cls.c @ cls.b).entries
        out.append(cls)
    return out


def _is_single_cycle(perm) -> bool:
    i, seen = 0, 0
    while True:
        i = perm[i]
        seen += 1
        if i == 0:
            return seen == len(perm)


# ---------------------------------------------------------------------------
# critical sets of the perturbed functional


def critical_set_report(knot: KnotPresentation, n: int) -> RepVarietyReport:
    """H_*(critical set) bookkeeping: n disjoint copies of the base variety.

    The reduced variant divides the copy count by n.  Beyond n = 2 only
    the unknot and the trefoil have closed-form censuses: the unknot gives
    complex projective space, the trefoil adds the unit tangent sphere
    bundle over it.
    """
    if n < 2:
        raise ValueError(f"copy count must be at least 2, got {n}")
    if knot.is_unknot():
        comps = (RepComponent.of("projective_space", n - 1),)
    elif knot.kind == "torus" and {knot.p, knot.q} == {2, 3}:
        comps = (
            RepComponent.of("projective_space", n - 1),
            RepComponent.of("sphere_bundle", n - 1),
        )
    elif n == 2:
        if knot.kind == "two_bridge":
            comps = rep_variety_two_bridge(knot.p, knot.q).components
        elif knot.kind == "torus":
            comps = rep_variety_torus(knot.p, knot.q).components
        else:
            raise Unsupported("PD-code inputs have no representation-variety route")
    else:
        raise Unsupported(f"no closed-form census for this knot at {n} copies")
    reduced = RepVarietyReport(components=comps, copies=1)
    return RepVarietyReport(components=comps, copies=n, reduced=reduced)
