"""Exact linear algebra over the rationals.

Everything here works on Python integers; no floating point is involved.
Ranks are computed with fraction-free (Bareiss) elimination, and reduced
simplicial homology is read off from ranks of augmented boundary maps.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

if TYPE_CHECKING:
    from .polytope import SimplicialComplex


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if not self.entries and self.rows:
            object.__setattr__(
                self, "entries", tuple((0,) * self.cols for _ in range(self.rows))
            )
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entries do not match the declared shape")
        for r in self.entries:
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(operator.index(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_sparse(
        cls, rows: int, cols: int, entries: Mapping[tuple[int, int], int]
    ) -> IntMatrix:
        dense = [[0] * cols for _ in range(rows)]
        for (r, c), v in entries.items():
            dense[r][c] += v
        return cls(rows, cols, tuple(tuple(r) for r in dense))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows([[int(r == c) for c in range(n)] for r in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ()
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                for r in self.entries
            ),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.entries[r][c]


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of a list of integer rows by in-place Bareiss elimination."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for k in range(rank, len(rows)):
            if rows[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for k in range(rank + 1, len(rows)):
            row = rows[k]
            a = row[col]
            # exact division is guaranteed by Sylvester's identity
            if a:
                rows[k] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[k] = [(p * x) // prev for x in row]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_exact(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix."""
    if isinstance(a, IntMatrix):
        if a.rows == 0 or a.cols == 0:
            return 0
        rows = [list(r) for r in a.entries]
    else:
        rows = [list(r) for r in a]
        if not rows or not rows[0]:
            return 0
    # eliminate along the shorter side
    if len(rows) > len(rows[0]):
        rows = [list(c) for c in zip(*rows)]
    return _bareiss_rank(rows)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers over Q, indexed from degree -1."""

    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, k: int) -> int:
        return self.dims.get(k, 0)

    def nonzero(self) -> dict[int, int]:
        return {k: v for k, v in sorted(self.dims.items()) if v}

    def euler(self) -> int:
        return sum((-1) ** k * v for k, v in self.dims.items())


def boundary_matrix(
    faces_k: Sequence[tuple[int, ...]], faces_km1: Sequence[tuple[int, ...]]
) -> IntMatrix:
    """Boundary map from k-faces to (k-1)-faces, both given as sorted tuples.

    Dropping the p-th vertex of a face carries the sign (-1)**p. For k = 0
    the target is the single empty face, which gives the augmentation map.
    """
    index = {f: n for n, f in enumerate(faces_km1)}
    entries: dict[tuple[int, int], int] = {}
    for c, face in enumerate(faces_k):
        for p in range(len(face)):
            sub = face[:p] + face[p + 1 :]
            entries[(index[sub], c)] = (-1) ** p
    return IntMatrix.from_sparse(len(faces_km1), len(faces_k), entries)


def reduced_homology(c: SimplicialComplex) -> HomologyProfile:
    """Reduced homology dimensions of a simplicial complex over Q.

    The empty complex has a single class in degree -1; over a field the
    cohomology dimensions coincide with these.
    """
    top = c.dim
    chains: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    for k in range(0, top + 1):
        chains[k] = c.faces_of_dim(k)
    ranks = {k: 0 for k in range(-1, top + 2)}
    for k in range(0, top + 1):
        ranks[k] = rank_exact(boundary_matrix(chains[k], chains[k - 1]))
    dims = {}
    for k in range(-1, top + 1):
        dims[k] = len(chains[k]) - ranks[k] - ranks[k + 1]
    return HomologyProfile(dims)


def reduced_euler_characteristic(face_counts: Iterable[int]) -> int:
    """-1 + f0 - f1 + f2 - ... from face counts f0, f1, ..."""
    return -1 + sum((-1) ** k * f for k, f in enumerate(face_counts))

