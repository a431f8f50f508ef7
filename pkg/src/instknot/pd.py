"""Planar diagram codes, braid closures, and the Kauffman bracket.

Arc labels follow the knot: walking the diagram visits arcs 1, 2, ..., 2n
in order, so every passage through a crossing steps the label by one
(mod 2n).  Crossings are recorded counterclockwise starting from the
incoming under-arc; with traversal labels this makes a crossing positive
exactly when its fourth slot follows its second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MalformedPD
from .laurent import LaurentPoly


@dataclass(frozen=True)
class PDCode:
    crossings: tuple
    signs: tuple

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def n_positive(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_negative(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @staticmethod
    def build(crossings, signs=None) -> "PDCode":
        crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        n = len(crossings)
        seen: dict[int, int] = {}
        for c in crossings:
            if len(c) != 4:
                raise MalformedPD(f"crossing {c} is not a 4-tuple")
            for x in c:
                seen[x] = seen.get(x, 0) + 1
        if crossings and sorted(seen) != list(range(1, 2 * n + 1)):
            raise MalformedPD("arc labels must be exactly 1..2n")
        if any(v != 2 for v in seen.values()):
            raise MalformedPD("every arc label must appear exactly twice")
        inferred = tuple(_infer_sign(c, n) for c in crossings)
        if signs is None:
            if any(s == 0 for s in inferred):
                raise MalformedPD("crossing signs are ambiguous; pass them explicitly")
            signs = inferred
        else:
            signs = tuple(int(s) for s in signs)
            if len(signs) != n or any(s not in (-1, 1) for s in signs):
                raise MalformedPD("signs must be one +-1 per crossing")
            for got, want in zip(signs, inferred):
                if want != 0 and got != want:
                    raise MalformedPD("declared sign contradicts the arc labelling")
        return PDCode(crossings, signs)

    def smoothing_pairs(self, index: int, bit: int):
        """Arc pairs joined by resolving crossing `index` the `bit` way."""
        a, b, c, d = self.crossings[index]
        if bit == 0:
            return (a, d), (b, c)
        return (a, b), (c, d)

    def kauffman_smoothing_count(self, resolution: int) -> int:
        """Number of A-smoothings used by a resolution bit-vector.

        Slot order already encodes which strand is over, so the 0-way
        (a-d, b-c) is the A-smoothing for either sign.
        """
        return self.n - resolution.bit_count()

    def circles(self, resolution: int):
        """Count and index the circles of a complete resolution.

        Returns (count, idx) where idx[arc-1] numbers the circle through
        each arc; circles are numbered by their smallest arc.
        """
        if self.n == 0:
            return 1, []  # crossingless unknot diagram
        n2 = 2 * self.n
        parent = list(range(n2))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for index in range(self.n):
            for x, y in self.smoothing_pairs(index, (resolution >> index) & 1):
                rx, ry = find(x - 1), find(y - 1)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        idx: list[int] = []
        order: dict[int, int] = {}
        for i in range(n2):
            r = find(i)
            if r not in order:
                order[r] = len(order)
            idx.append(order[r])
        return len(order), idx

    def mirror(self) -> "PDCode":
        # switching every crossing realizes the mirror image; the rotation
        # puts the old over-in arc into the under-in slot
        flipped = []
        for (a, b, c, d), s in zip(self.crossings, self.signs):
            flipped.append((b, c, d, a) if s > 0 else (d, a, b, c))
        return PDCode.build(flipped, tuple(-s for s in self.signs))


def _infer_sign(crossing, n: int) -> int:
    a, b, c, d = crossing
    after_b = b % (2 * n) + 1 == d
    after_d = d % (2 * n) + 1 == b
    if after_b and not after_d:
        return 1
    if after_d and not after_b:
        return -1
    return 0  # ambiguous (single-crossing diagrams) or nonstandard labels


def braid_to_pd(word, strands: int | None = None) -> PDCode:
    """PD code of the closure of a braid word.

    Generators are nonzero integers: +k crosses strand k over strand k+1,
    -k crosses it under.  The closure must be a knot, not a link.
    """
    word = [int(k) for k in word]
    if strands is None:
        strands = max((abs(k) for k in word), default=0) + 1
    if any(k == 0 or abs(k) >= strands for k in word):
        raise MalformedPD("braid letters must satisfy 1 <= |k| < strands")

    parent: dict[int, int] = {}

    def find(i):
        parent.setdefault(i, i)
        while parent[i] != i:
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    fresh = itertools.count().__next__
    start = [fresh() for _ in range(strands)]
    current = list(start)
    records = []  # (under_in, under_out, over_in, over_out, sign)
    for k in word:
        pos = abs(k) - 1
        left, right = current[pos], current[pos + 1]
        out_left, out_right = fresh(), fresh()
        if k > 0:
            records.append((right, out_left, left, out_right, 1))
        else:
            records.append((left, out_right, right, out_left, -1))
        current[pos], current[pos + 1] = out_left, out_right
    for a, b in zip(current, start):
        union(a, b)

    if not records:
        if strands != 1:
            raise MalformedPD("empty braid word closes to a link unless one strand")
        return PDCode.build(())

    successor = {}
    for under_in, under_out, over_in, over_out, _ in records:
        successor[find(under_in)] = find(under_out)
        successor[find(over_in)] = find(over_out)
    walk = [find(start[0])]
    while True:
        step = successor[walk[-1]]
        if step == walk[0]:
            break
        walk.append(step)
    if len(walk) != 2 * len(records):
        raise MalformedPD("braid closure is a link; only knots are supported")
    number = {arc: i + 1 for i, arc in enumerate(walk)}

    crossings = []
    signs = []
    for under_in, under_out, over_in, over_out, sign in records:
        a, c = number[find(under_in)], number[find(under_out)]
        o_in, o_out = number[find(over_in)], number[find(over_out)]
        if sign > 0:
            crossings.append((a, o_in, c, o_out))
        else:
            crossings.append((a, o_out, c, o_in))
        signs.append(sign)
    pd = PDCode.build(crossings, tuple(signs))
    for got, want in zip(pd.signs, signs):
        assert got == want
    return pd


def torus_pd(p: int, q: int) -> PDCode:
    """Braid-closure diagram of the (p, q) torus knot with (p-1)q crossings."""
    p, q = min(p, q), max(p, q)
    if p < 2:
        return braid_to_pd([], strands=1)
    round_word = list(range(1, p))
    return braid_to_pd(round_word * q, strands=p)


def kauffman_bracket(pd: PDCode) -> LaurentPoly:
    """Bracket state sum in the variable A."""
    n = pd.n
    delta = LaurentPoly({2: -1, -2: -1})
    delta_pow = [LaurentPoly.one()]
    for _ in range(2 * n + 1):
        delta_pow.append(delta_pow[-1] * delta)
    acc: dict[int, LaurentPoly] = {}
    for resolution in range(1 << n):
        n_a = pd.kauffman_smoothing_count(resolution)
        circles, _ = pd.circles(resolution)
        key = 2 * n_a - n
        term = delta_pow[circles - 1]
        acc[key] = acc.get(key, LaurentPoly.zero()) + term
    out = LaurentPoly.zero()
    for key, poly in acc.items():
        out = out + poly.shift(key)
    return out


def jones(pd: PDCode) -> LaurentPoly:
    """Jones polynomial in t via writhe-normalized bracket, t = A^{-4}."""
    w = pd.writhe
    normalized = kauffman_bracket(pd).shift(-3 * w)
    if w % 2:
        normalized = -normalized
    coeffs = {}
    for e, c in normalized.coeffs.items():
        assert e % 4 == 0, f"bracket exponent {e} not divisible by 4; not a knot?"
        coeffs[-e // 4] = c
    return LaurentPoly(coeffs)
