"""Abelian-group summaries for homology results.

Groups are stored as a free rank plus a multiset of prime-power torsion
orders, which is the canonical form; direct sums and comparisons reduce to
arithmetic on those.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPoly


def _prime_power_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                n //= d
                q *= d
            out.append(q)
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative rank")
        flat: list[int] = []
        for t in self.torsion:
            t = int(t)
            if t < 2:
                raise ValueError("torsion orders must be at least 2")
            flat.extend(_prime_power_factors(t))
        object.__setattr__(self, "torsion", tuple(sorted(flat)))

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __mul__(self, copies: int) -> "AbelianGroup":
        return AbelianGroup(self.free_rank * copies, self.torsion * copies)

    __rmul__ = __mul__

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        if self.trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        for t in self.torsion:
            parts.append(f"Z/{t}")
        return " + ".join(parts)


Z = AbelianGroup(1)
ZERO = AbelianGroup()


@dataclass(frozen=True)
class GradedGroup:
    """Finitely supported map degree -> abelian group."""

    groups: tuple[tuple[int, AbelianGroup], ...] = field(default=())

    @classmethod
    def of(cls, mapping) -> "GradedGroup":
        items = tuple(
            sorted((int(d), g) for d, g in dict(mapping).items() if not g.trivial)
        )
        return cls(items)

    def group(self, degree: int) -> AbelianGroup:
        for d, g in self.groups:
            if d == degree:
                return g
        return ZERO

    def degrees(self):
        return [d for d, _ in self.groups]

    def __add__(self, other: "GradedGroup") -> "GradedGroup":
        acc: dict[int, AbelianGroup] = {}
        for d, g in self.groups + other.groups:
            acc[d] = acc.get(d, ZERO) + g
        return GradedGroup.of(acc)

    def __mul__(self, copies: int) -> "GradedGroup":
        return GradedGroup.of({d: g * copies for d, g in self.groups})

    __rmul__ = __mul__

    def shifted(self, offset: int) -> "GradedGroup":
        return GradedGroup.of({d + offset: g for d, g in self.groups})

    def total(self) -> AbelianGroup:
        acc = ZERO
        for _, g in self.groups:
            acc = acc + g
        return acc

    def __str__(self):
        if not self.groups:
            return "0"
        return ", ".join(f"{d}: {g}" for d, g in self.groups)


@dataclass(frozen=True)
class BigradedGroup:
    """Finitely supported map (homological, quantum) degree -> abelian group."""

    groups: tuple[tuple[tuple[int, int], AbelianGroup], ...] = field(default=())

    @classmethod
    def of(cls, mapping) -> "BigradedGroup":
        items = tuple(
            sorted(
                ((int(i), int(j)), g)
                for (i, j), g in dict(mapping).items()
                if not g.trivial
            )
        )
        return cls(items)

    def group(self, i: int, j: int) -> AbelianGroup:
        for key, g in self.groups:
            if key == (i, j):
                return g
        return ZERO

    def bidegrees(self):
        return [key for key, _ in self.groups]

    def __add__(self, other: "BigradedGroup") -> "BigradedGroup":
        acc: dict[tuple[int, int], AbelianGroup] = {}
        for key, g in self.groups + other.groups:
            acc[key] = acc.get(key, ZERO) + g
        return BigradedGroup.of(acc)

    def __mul__(self, copies: int) -> "BigradedGroup":
        return BigradedGroup.of({key: g * copies for key, g in self.groups})

    __rmul__ = __mul__

    def total(self) -> AbelianGroup:
        acc = ZERO
        for _, g in self.groups:
            acc = acc + g
        return acc

    def total_rank(self) -> int:
        return sum(g.free_rank for _, g in self.groups)

    def graded_euler_characteristic(self) -> LaurentPoly:
        """Alternating sum of free ranks, as a polynomial in the quantum variable."""
        acc: dict[int, int] = {}
        for (i, j), g in self.groups:
            if g.free_rank:
                acc[j] = acc.get(j, 0) + (-1) ** i * g.free_rank
        return LaurentPoly({e: c for e, c in acc.items() if c})

    def __str__(self):
        if not self.groups:
            return "0"
        return ", ".join(f"({i},{j}): {g}" for (i, j), g in self.groups)
