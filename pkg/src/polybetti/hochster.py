"""Bigraded Betti numbers through Hochster's formula.

beta^{-i,2j} sums, over all j-element facet sets, the reduced cohomology in
degree j-i-1 of the union of those facets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .linalg import reduced_homology
from .polytope import DualTriangulation, full_subcomplex


@dataclass(frozen=True)
class BettiTable:
    """Nonzero bigraded Betti numbers, keyed by (i, j) for beta^{-i,2j}."""

    m: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)
    n: int = 3

    def __post_init__(self) -> None:
        clean = {
            (int(i), int(j)): int(v)
            for (i, j), v in sorted(self.values.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if v
        }
        for (i, j), v in clean.items():
            if v < 0 or not 0 <= i <= j <= self.m:
                raise ValueError(f"invalid Betti cell ({i}, {j}) = {v}")
        object.__setattr__(self, "values", clean)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.values.get(ij, 0)

    def cells(self) -> list[tuple[int, int, int]]:
        """(i, j, beta) for nonzero cells, sorted by (j, i)."""
        return [(i, j, v) for (i, j), v in self.values.items()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.m == other.m and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.m, tuple(self.values.items())))

    def diff(self, other: BettiTable) -> list[tuple[int, int, int, int]]:
        """Cells where the tables disagree, as (i, j, self, other)."""
        keys = sorted(set(self.values) | set(other.values), key=lambda ij: (ij[1], ij[0]))
        return [(i, j, self[i, j], other[i, j]) for i, j in keys if self[i, j] != other[i, j]]

    def to_csv(self) -> str:
        lines = ["i,j,beta"] + [f"{i},{j},{v}" for i, j, v in self.cells()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"m": self.m, "cells": [{"i": i, "j": j, "beta": v} for i, j, v in self.cells()]}

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        return cls(data["m"], {(c["i"], c["j"]): c["beta"] for c in data["cells"]})

    def __str__(self) -> str:
        width = max((len(str(v)) for v in self.values.values()), default=1) + 1
        head = "j\\i " + "".join(f"{i:>{width}}" for i in range(self.m - self.n + 1))
        lines = [head]
        for j in range(self.m + 1):
            row = "".join(
                f"{(self[i, j] or '.'):>{width}}" for i in range(self.m - self.n + 1)
            )
            lines.append(f"{j:>3} {row}")
        return "\n".join(lines)


def _subsets(m: int) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << m):
        yield tuple(v for v in range(m) if mask >> v & 1)


def subset_contribution(t: DualTriangulation, sigma: Sequence[int]) -> dict[tuple[int, int], int]:
    """Cells fed by a single facet set sigma."""
    j = len(sigma)
    h = reduced_homology(full_subcomplex(t, sigma))
    return {(j - k - 1, j): d for k, d in h.nonzero().items()}


def bigraded_betti(
    t: DualTriangulation,
    order: Iterable[Sequence[int]] | None = None,
    seed: int | None = None,
) -> BettiTable:
    """Betti table of the polytope dual to ``t`` by summing over all facet sets.

    ``order`` (or a shuffle with ``seed``) only changes iteration order.
    """
    subsets: Iterable[Sequence[int]]
    if order is not None:
        subsets = order
    else:
        subsets = list(_subsets(t.m))
        if seed is not None:
            random.Random(seed).shuffle(subsets)
    acc: dict[tuple[int, int], int] = {}
    for sigma in subsets:
        for cell, d in subset_contribution(t, sigma).items():
            acc[cell] = acc.get(cell, 0) + d
    return BettiTable(t.m, acc)


def moment_angle_betti(b: BettiTable) -> list[int]:
    """Ordinary Betti numbers beta^0 .. beta^{m+n} of the moment-angle manifold."""
    out = [0] * (b.m + b.n + 1)
    for i, j, v in b.cells():
        p = 2 * j - i
        if p >= len(out):
            out.extend([0] * (p - len(out) + 1))
        out[p] += v
    return out


BettiTuple = tuple[int, int, int, int, int, int, int]


def betti_tuple(b: BettiTable) -> BettiTuple:
    """(beta^{-1,4}, beta^{-2,6}, ..., beta^{-7,16}) for an 11-facet 3-polytope."""
    if b.m != 11 or b.n != 3:
        raise ValueError(f"Betti tuples are defined for m=11, n=3; got m={b.m}, n={b.n}")
    return tuple(b[k, k + 1] for k in range(1, 8))  # type: ignore[return-value]
