"""Integral Khovanov homology via the cube of resolutions.

A diagram with n crossings has 2^n complete smoothings.  Circles of each
smoothing carry the rank-2 Frobenius algebra Z[x]/(x^2); flipping one
crossing from its 0- to its 1-smoothing merges two circles or splits one,
and the induced algebra maps assemble into a cochain differential.  The
quantum grading is preserved, so every j-slice is an independent integer
complex: each is reduced by unit cancellation and finished with Smith
normal form.

Gradings follow the usual normalization: a vertex v of the cube sits in
homological degree |v| - n_minus, and a labelling contributes quantum
degree (#1-labels - #x-labels) + |v| + n_plus - 2*n_minus.
"""

from __future__ import annotations

from array import array

from .errors import TooLarge
from .homology import AbelianGroup, BigradedGroup
from .pd import PDCode
from .snf import ChainComplex, SparseMatrix

DEFAULT_MAX_CROSSINGS = 12


def khovanov(pd: PDCode, *, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> BigradedGroup:
    """Integral Khovanov homology of an oriented link diagram.

    The result is invariant under Reidemeister moves; the crossing budget
    exists because chain groups grow like 2^n times the circle count.
    """
    table: dict[tuple[int, int], AbelianGroup] = {}
    for j, slice_ in _quantum_slices(pd, max_crossings):
        for i, group in slice_.homology().items():
            table[i, j] = group
    return BigradedGroup.of(table)


def khovanov_mod2(pd: PDCode, *, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict[tuple[int, int], int]:
    """Dimensions of Khovanov homology with coefficients in the field F_2.

    Unit cancellation is a basis change over Z, so reducing first and only
    then passing to F_2 ranks computes the same dimensions.
    """
    dims: dict[tuple[int, int], int] = {}
    for j, slice_ in _quantum_slices(pd, max_crossings):
        slice_.cancel_units()
        ranks = {i: _mod2_rank(m) for i, m in slice_.diff.items()}
        for i, gens in slice_.generators.items():
            d = len(gens) - ranks.get(i, 0) - ranks.get(i - 1, 0)
            if d:
                dims[i, j] = d
    return dims


def _mod2_rank(matrix: SparseMatrix) -> int:
    position = {c: k for k, c in enumerate(matrix.cols)}
    pivots: dict[int, int] = {}  # keyed by lowest set bit
    rank = 0
    for row in matrix.rows.values():
        mask = 0
        for c, v in row.items():
            if v & 1:
                mask |= 1 << position[c]
        while mask:
            low = mask & -mask
            if low in pivots:
                mask ^= pivots[low]
            else:
                pivots[low] = mask
                rank += 1
                break
    return rank


def _quantum_slices(pd: PDCode, max_crossings: int):
    """Yield (quantum degree, cochain complex) slices of the resolution cube.

    Generators are packed as (vertex << bits) | labelling so a slice can be
    staged in flat integer arrays before its sparse complex is built; bit k
    of a labelling set means circle k carries x rather than 1.
    """
    if pd.n > max_crossings:
        raise TooLarge(f"{pd.n} crossings exceed the budget of {max_crossings}")
    n = pd.n
    nminus = pd.n_negative
    shift0 = pd.n_positive - 2 * nminus
    circ = [pd.circles(v) for v in range(1 << n)]
    bits = max(count for count, _ in circ)
    if n + bits + 1 > 62:
        raise TooLarge("resolution state space does not fit the packed index")
    arcs = 2 * n

    gens: dict[int, array] = {}
    for v in range(1 << n):
        count = circ[v][0]
        base = v << bits
        top = count + v.bit_count() + shift0
        for lab in range(1 << count):
            bucket = gens.get(top - 2 * lab.bit_count())
            if bucket is None:
                bucket = gens.setdefault(top - 2 * lab.bit_count(), array("q"))
            bucket.append(base | lab)

    edges: dict[int, tuple[array, array]] = {}

    def bucket_for(j: int) -> tuple[array, array]:
        pair = edges.get(j)
        if pair is None:
            pair = edges.setdefault(j, (array("q"), array("q")))
        return pair

    for v in range(1 << n):
        count_v, idx_v = circ[v]
        j_base = count_v + v.bit_count() + shift0
        src_base = v << bits
        for c in range(n):
            if v >> c & 1:
                continue
            w = v | (1 << c)
            idx_w = circ[w][1]
            negative = (v & ((1 << c) - 1)).bit_count() & 1
            a, b, cc, d = pd.crossings[c]
            first = idx_v[a - 1]  # circle through arcs a and d of the 0-smoothing
            second = idx_v[b - 1]  # circle through arcs b and c
            # renumber the untouched circles of v in w's indexing; any arc of
            # an untouched circle works because its arc set is unchanged
            vmap = [-1] * count_v
            for arc in range(arcs):
                k = idx_v[arc]
                if vmap[k] < 0:
                    vmap[k] = idx_w[arc]
            wbit = [1 << t for t in vmap]
            tgt_base = w << bits
            if first == second:
                # split: 1 -> 1(x)x + x(x)1, x -> x(x)x
                left = 1 << idx_w[a - 1]
                right = 1 << idx_w[cc - 1]
                hole = ~(1 << first)
                for lab in range(1 << count_v):
                    wl = 0
                    rest = lab & hole
                    while rest:
                        low = rest & -rest
                        wl |= wbit[low.bit_length() - 1]
                        rest ^= low
                    src = (src_base | lab) << 1 | negative
                    targets, sources = bucket_for(j_base - 2 * lab.bit_count())
                    if lab >> first & 1:
                        targets.append(tgt_base | wl | left | right)
                        sources.append(src)
                    else:
                        targets.append(tgt_base | wl | left)
                        sources.append(src)
                        targets.append(tgt_base | wl | right)
                        sources.append(src)
            else:
                # merge: 1*1 = 1, 1*x = x*1 = x, x*x = 0
                pair_mask = (1 << first) | (1 << second)
                merged = wbit[first]  # vmap sends both circles to the union
                hole = ~pair_mask
                for lab in range(1 << count_v):
                    hit = lab & pair_mask
                    if hit == pair_mask:
                        continue
                    wl = 0
                    rest = lab & hole
                    while rest:
                        low = rest & -rest
                        wl |= wbit[low.bit_length() - 1]
                        rest ^= low
                    if hit:
                        wl |= merged
                    targets, sources = bucket_for(j_base - 2 * lab.bit_count())
                    targets.append(tgt_base | wl)
                    sources.append((src_base | lab) << 1 | negative)

    del circ
    for j in sorted(gens):
        slice_ = ChainComplex()
        for gid in gens.pop(j):
            slice_.add_generator((gid >> bits).bit_count() - nminus, gid)
        if j in edges:
            targets, sources = edges.pop(j)
            for t, s in zip(targets, sources):
                src = s >> 1
                slice_.add_entry(
                    (src >> bits).bit_count() - nminus, t, src, -1 if s & 1 else 1
                )
        yield j, slice_
