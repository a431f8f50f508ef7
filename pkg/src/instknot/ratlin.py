"""Small exact linear algebra over Fraction used by the Lie-theory modules.

Vectors are tuples of Fraction, matrices are tuples of row tuples.  Sizes
never exceed a dozen here, so clarity beats asymptotics throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vec(*entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def vadd(u: Vec, v: Vec) -> Vec:
    assert len(u) == len(v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    assert len(u) == len(v)
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def dot(u: Vec, v: Vec) -> Fraction:
    assert len(u) == len(v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def solve(a: Mat, b: Vec) -> Vec | None:
    """Solve a x = b exactly; None when inconsistent.

    `a` may be rectangular.  For underdetermined systems an arbitrary
    solution (free variables set to zero) is returned.
    """
    rows = [list(row) + [bi] for row, bi in zip(a, b)]
    n_cols = len(a[0]) if a else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n_cols] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for ri, ci in pivots:
        x[ci] = rows[ri][n_cols]
    return tuple(x)


def rank(a: Mat) -> int:
    rows = [list(row) for row in a]
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def invert(a: Mat) -> Mat:
    n = len(a)
    assert all(len(row) == n for row in a), "square matrix required"
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        assert pivot is not None, "matrix is singular"
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def orthogonal_projector(basis: list[Vec], dim: int) -> Mat:
    """Euclidean-orthogonal projector onto span(basis) as a dim x dim matrix."""
    if not basis:
        return tuple(tuple(Fraction(0) for _ in range(dim)) for _ in range(dim))
    b = tuple(basis)
    gram = tuple(tuple(dot(u, v) for v in b) for u in b)
    ginv = invert(gram)
    # P = B^T G^{-1} B with B the matrix whose rows are the basis vectors.
    out = [[Fraction(0)] * dim for _ in range(dim)]
    k = len(b)
    for i in range(dim):
        for j in range(dim):
            s = Fraction(0)
            for s1 in range(k):
                for s2 in range(k):
                    s += b[s1][i] * ginv[s1][s2] * b[s2][j]
            out[i][j] = s
    return tuple(tuple(row) for row in out)


def complement_in_span(span_basis: list[Vec], killed: list[Vec], dim: int) -> list[Vec]:
    """Basis of {x in span(span_basis) : (k, x) = 0 for all k in killed}."""
    # Solve within coordinates relative to span_basis.
    k = len(span_basis)
    rows = [[dot(kv, bv) for bv in span_basis] for kv in killed]
    # Nullspace of rows (k columns).
    null = nullspace(tuple(tuple(r) for r in rows), k)
    out = []
    for coeffs in null:
        v = tuple(
            sum((c * bv[i] for c, bv in zip(coeffs, span_basis)), Fraction(0))
            for i in range(dim)
        )
        out.append(v)
    return out


def nullspace(a: Mat, n_cols: int) -> list[Vec]:
    rows = [list(row) for row in a]
    pivots: dict[int, int] = {}
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -rows[pr][fc]
        basis.append(tuple(v))
    return basis


def hermite_basis(generators: list[Vec]) -> list[Vec]:
    """Canonical basis of the lattice spanned (over Z) by the generators.

    The generators are rational; the result is the row-style Hermite normal
    form scaled back, so equal lattices always produce identical bases.
    """
    gens = [g for g in generators if not is_zero_vec(g)]
    if not gens:
        return []
    dim = len(gens[0])
    denom = 1
    for g in gens:
        for x in g:
            denom = lcm(denom, x.denominator)
    rows = [[int(x * denom) for x in g] for g in gens]
    rows = _integer_hnf(rows)
    return [tuple(Fraction(x, denom) for x in row) for row in rows]


def _integer_hnf(rows: list[list[int]]) -> list[list[int]]:
    rows = [r[:] for r in rows]
    n_cols = len(rows[0])
    r = 0
    for c in range(n_cols):
        # Euclidean elimination below row r in column c.
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i_min] = rows[i_min], rows[r]
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c] != 0:
            # Reduce the rows above to put the column in canonical form.
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
            if r == len(rows):
                break
    return [row for row in rows[:r] if any(row)]


def common_denominator_clear(v: Vec) -> tuple[int, list[int]]:
    d = 1
    for x in v:
        d = lcm(d, x.denominator)
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return d, ints
