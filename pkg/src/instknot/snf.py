"""Exact integer linear algebra for chain complexes.

Smith normal form over Z, a sparse matrix with removable rows/columns, and
a Morse-style reduction that cancels unit entries of a complex before the
dense diagonalization.  Cancelling the unit B[t][s] of d_i only corrects
d_i itself (by the outer product of column s and row t); the neighbours
merely lose basis elements: d_{i-1} drops row s, d_{i+1} drops column t.
"""

from __future__ import annotations

from .homology import AbelianGroup


def smith_normal_form(rows: list[list[int]], with_transforms: bool = False):
    """Diagonal d_1 | d_2 | ... of an integer matrix.

    Returns the list of nonzero diagonal entries; with_transforms adds
    unimodular U (rows x rows) and V (cols x cols) with U A V = D.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if with_transforms else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if with_transforms else None

    def row_op(i1, i2, f):
        # row i1 -= f * row i2
        for j in range(n):
            a[i1][j] -= f * a[i2][j]
        if u is not None:
            for j in range(m):
                u[i1][j] -= f * u[i2][j]

    def col_op(j1, j2, f):
        for i in range(m):
            a[i][j1] -= f * a[i][j2]
        if v is not None:
            for i in range(n):
                v[i][j1] -= f * v[i][j2]

    def swap_rows(i1, i2):
        a[i1], a[i2] = a[i2], a[i1]
        if u is not None:
            u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        for i in range(m):
            a[i][j1], a[i][j2] = a[i][j2], a[i][j1]
        if v is not None:
            for i in range(n):
                v[i][j1], v[i][j2] = v[i][j2], v[i][j1]

    def smallest_pivot(top):
        # smallest magnitude first, then least fill-in (Markowitz cost);
        # without the fill tie-break sparse inputs suffer entry blow-up
        row_nnz = [sum(1 for j in range(top, n) if a[i][j]) for i in range(m)]
        col_nnz = [0] * n
        for i in range(top, m):
            row = a[i]
            for j in range(top, n):
                if row[j]:
                    col_nnz[j] += 1
        best = None
        for i in range(top, m):
            if not row_nnz[i]:
                continue
            row = a[i]
            for j in range(top, n):
                x = row[j]
                if x:
                    key = (abs(x), (row_nnz[i] - 1) * (col_nnz[j] - 1))
                    if best is None or key < best[0]:
                        best = (key, i, j)
        return (best[1], best[2]) if best else None

    def flip_row(i):
        for j in range(n):
            a[i][j] = -a[i][j]
        if u is not None:
            for j in range(m):
                u[i][j] = -u[i][j]

    diag = []
    top = 0
    while True:
        found = smallest_pivot(top)
        if found is None:
            break
        swap_rows(top, found[0])
        swap_cols(top, found[1])
        while True:
            if a[top][top] < 0:
                flip_row(top)
            p = a[top][top]
            # clear the pivot column with nearest quotients; a surviving
            # remainder has magnitude at most p/2, so swapping it up makes
            # the pivot strictly smaller and the loop terminates
            carrier = None
            for i in range(top + 1, m):
                x = a[i][top]
                if x:
                    q = x // p
                    if 2 * (x - q * p) > p:
                        q += 1
                    if q:
                        row_op(i, top, q)
                    if a[i][top] and (carrier is None or abs(a[i][top]) < abs(a[carrier][top])):
                        carrier = i
            if carrier is not None:
                swap_rows(top, carrier)
                continue
            # column is clean, so these column ops touch row `top` only
            carrier = None
            for j in range(top + 1, n):
                x = a[top][j]
                if x:
                    q = x // p
                    if 2 * (x - q * p) > p:
                        q += 1
                    if q:
                        col_op(j, top, q)
                    if a[top][j] and (carrier is None or abs(a[top][j]) < abs(a[top][carrier])):
                        carrier = j
            if carrier is not None:
                swap_cols(top, carrier)
                continue
            # the pivot must divide the remaining block
            bad = None
            for i in range(top + 1, m):
                bad = next((j for j in range(top + 1, n) if a[i][j] % p), None)
                if bad is not None:
                    row_op(top, i, -1)
                    break
            if bad is None:
                break
        diag.append(a[top][top])
        top += 1
    if with_transforms:
        return diag, u, v
    return diag


class SparseMatrix:
    """Integer matrix over labelled rows and columns, built for cancellation."""

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, dict[int, int]] = {}

    def add(self, r: int, c: int, v: int):
        if not v:
            return
        row = self.rows.setdefault(r, {})
        new = row.get(c, 0) + v
        if new:
            row[c] = new
            self.cols.setdefault(c, {})[r] = new
        else:
            del row[c]
            if not row:
                del self.rows[r]
            col = self.cols[c]
            del col[r]
            if not col:
                del self.cols[c]

    def entry(self, r: int, c: int) -> int:
        return self.rows.get(r, {}).get(c, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def drop_row(self, r: int):
        for c in list(self.rows.get(r, {})):
            col = self.cols[c]
            del col[r]
            if not col:
                del self.cols[c]
        self.rows.pop(r, None)

    def drop_col(self, c: int):
        for r in list(self.cols.get(c, {})):
            row = self.rows[r]
            del row[c]
            if not row:
                del self.rows[r]
        self.cols.pop(c, None)

    def unit_entries(self):
        for r, row in self.rows.items():
            for c, v in row.items():
                if v in (1, -1):
                    yield r, c

    def to_dense(self, row_labels, col_labels) -> list[list[int]]:
        idx = {c: j for j, c in enumerate(col_labels)}
        out = [[0] * len(col_labels) for _ in row_labels]
        for i, r in enumerate(row_labels):
            for c, v in self.rows.get(r, {}).items():
                out[i][idx[c]] = v
        return out


class ChainComplex:
    """Cochain complex of free Z-modules with labelled bases.

    ``generators[i]`` is the set of labels of the i-th group; ``diff[i]``
    maps group i to group i+1, rows labelled by generators of i+1 and
    columns by generators of i.
    """

    def __init__(self):
        self.generators: dict[int, set[int]] = {}
        self.diff: dict[int, SparseMatrix] = {}

    def add_generator(self, degree: int, label: int):
        self.generators.setdefault(degree, set()).add(label)

    def add_entry(self, degree: int, target: int, source: int, value: int):
        self.diff.setdefault(degree, SparseMatrix()).add(target, source, value)

    def _matrix(self, degree: int) -> SparseMatrix:
        return self.diff.setdefault(degree, SparseMatrix())

    def _cancel(self, i: int, d: SparseMatrix, t: int, s: int):
        beta = d.entry(t, s)
        gamma = [(r, v) for r, v in d.cols[s].items() if r != t]
        rho = [(c, v) for c, v in d.rows[t].items() if c != s]
        d.drop_row(t)
        d.drop_col(s)
        for r, gv in gamma:
            for c, rv in rho:
                d.add(r, c, -beta * gv * rv)
        if i - 1 in self.diff:
            self.diff[i - 1].drop_row(s)
        if i + 1 in self.diff:
            self.diff[i + 1].drop_col(t)
        self.generators[i].discard(s)
        if i + 1 in self.generators:
            self.generators[i + 1].discard(t)

    def cancel_units(self):
        """Cancel unit entries everywhere until none remain.

        Cancelling in d_i never changes a value in another differential, so
        one pass over the degrees suffices.  Within a degree, candidates
        from one scan are replayed cheapest-first and skipped if they went
        stale or their fill-in grew; a full rescan then picks up entries
        created by the outer-product corrections.
        """
        for i in sorted(self.diff):
            d = self.diff[i]
            while True:
                batch = sorted(
                    ((len(d.cols[c]) - 1) * (len(d.rows[r]) - 1), r, c)
                    for r, c in d.unit_entries()
                )
                if not batch:
                    break
                cancelled = False
                for cost, t, s in batch:
                    if d.entry(t, s) not in (1, -1):
                        continue
                    now = (len(d.cols[s]) - 1) * (len(d.rows[t]) - 1)
                    if now > cost and now > 0:
                        continue  # fill-in grew; revisit after the rescan
                    self._cancel(i, d, t, s)
                    cancelled = True
                if not cancelled:
                    # every candidate deferred: force the cheapest current
                    # unit so the scan loop cannot stall
                    best = min(
                        ((len(d.cols[c]) - 1) * (len(d.rows[r]) - 1), r, c)
                        for r, c in d.unit_entries()
                    )
                    self._cancel(i, d, best[1], best[2])

    def homology(self, reduce_first: bool = True) -> dict[int, AbelianGroup]:
        if reduce_first:
            self.cancel_units()
        degrees = sorted(self.generators)
        dense: dict[int, list[int]] = {}
        ranks: dict[int, int] = {}
        for i in degrees:
            d = self.diff.get(i)
            if d is None or not d.rows:
                dense[i] = []
                ranks[i] = 0
                continue
            rows = sorted(self.generators.get(i + 1, set()))
            cols = sorted(self.generators.get(i, set()))
            diag = smith_normal_form(d.to_dense(rows, cols))
            dense[i] = diag
            ranks[i] = len(diag)
        out: dict[int, AbelianGroup] = {}
        for i in degrees:
            free = len(self.generators[i]) - ranks.get(i, 0) - ranks.get(i - 1, 0)
            torsion = tuple(t for t in dense.get(i - 1, []) if t > 1)
            g = AbelianGroup(free, torsion)
            if not g.trivial:
                out[i] = g
        return out
