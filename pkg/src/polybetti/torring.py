"""Products in low degrees of the Tor-algebra of an irreducible 3-polytope.

Without 3-belts, Tor^{-1,4} has a basis indexed by non-intersecting facet
pairs and Tor^{-2,8} a basis indexed by 4-belts. The product of two pair
classes is the belt class when the two pairs are the diagonals of a 4-belt,
and zero otherwise. Everything below is derived from that rule.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .hochster import BettiTable, bigraded_betti
from .polytope import Belt4, DualTriangulation, four_belts, non_adjacent_pairs, three_belts


class ReducibleError(ValueError):
    """The polytope has a 3-belt, so the product rule does not apply."""


def _require_irreducible(t: DualTriangulation) -> None:
    belts = three_belts(t)
    if belts:
        names = ["".join(b.names(t)) for b in belts]
        raise ReducibleError(f"polytope has 3-belts {names}; beta^(-1,6) != 0")


@dataclass(frozen=True)
class Deg14Generator:
    """Class [u_i v_j] in Tor^{-1,4} for non-intersecting facets i, j."""

    pair: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pair", frozenset(self.pair))
        if len(self.pair) != 2:
            raise ValueError("a generator needs two distinct facets")

    @classmethod
    def of(cls, t: DualTriangulation, a: str | int, b: str | int) -> Deg14Generator:
        u = t.index(a) if isinstance(a, str) else a
        v = t.index(b) if isinstance(b, str) else b
        if t.adjacent(u, v):
            raise ValueError(f"facets {t.name(u)} and {t.name(v)} intersect")
        return cls(frozenset((u, v)))


@dataclass(frozen=True)
class Deg28Generator:
    """Class in Tor^{-2,8} indexed by a 4-belt."""

    belt: Belt4


def product(
    t: DualTriangulation, s: Deg14Generator, u: Deg14Generator
) -> Deg28Generator | None:
    """Product of two Tor^{-1,4} generators; None stands for zero."""
    _require_irreducible(t)
    for g in (s, u):
        a, b = sorted(g.pair)
        if t.adjacent(a, b):
            raise ValueError("generator pair must not intersect")
    if s.pair & u.pair:
        return None
    i, k = sorted(s.pair)
    j, l = sorted(u.pair)
    if all(t.adjacent(x, y) for x in (i, k) for y in (j, l)):
        return Deg28Generator(Belt4((i, j, k, l)))
    return None


@dataclass(frozen=True)
class AnnihilatorReport:
    beta14: int
    belt_diagonal_pairs: tuple[tuple[int, int], ...]

    @property
    def dim_v(self) -> int:
        return self.beta14 - len(self.belt_diagonal_pairs)

    def to_json(self, t: DualTriangulation | None = None) -> str:
        def show(p: tuple[int, int]) -> list:
            return [t.name(x) for x in p] if t is not None else list(p)

        data = {
            "beta14": self.beta14,
            "belt_diagonal_pairs": [show(p) for p in self.belt_diagonal_pairs],
            "dim_v": self.dim_v,
        }
        return json.dumps(data)


def annihilator_dim(t: DualTriangulation) -> AnnihilatorReport:
    """Dimension of {x in Tor^{-1,4} : x * Tor^{-1,4} = 0}.

    Distinct belts give independent products, so x annihilates everything
    exactly when its coefficients on belt diagonals vanish.
    """
    _require_irreducible(t)
    pairs = set()
    for belt in four_belts(t):
        for d in belt.diagonals:
            pairs.add(tuple(sorted(d)))
    return AnnihilatorReport(len(non_adjacent_pairs(t)), tuple(sorted(pairs)))


class Verdict(enum.Enum):
    DISTINGUISHED = "distinguished"
    INDISTINGUISHABLE = "indistinguishable-by-these-invariants"


def rings_distinguished(
    p: DualTriangulation,
    q: DualTriangulation,
    betti_p: BettiTable | None = None,
    betti_q: BettiTable | None = None,
) -> Verdict:
    """Compare Betti tables and annihilator dimensions of two polytopes.

    INDISTINGUISHABLE never claims the Tor-algebras are isomorphic.
    """
    dim_p = annihilator_dim(p).dim_v
    dim_q = annihilator_dim(q).dim_v
    betti_p = betti_p or bigraded_betti(p)
    betti_q = betti_q or bigraded_betti(q)
    if betti_p != betti_q or dim_p != dim_q:
        return Verdict.DISTINGUISHED
    return Verdict.INDISTINGUISHABLE
