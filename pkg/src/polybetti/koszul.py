"""Tor of the face ring computed directly from the Koszul complex.

The complex is Lambda[u_1..u_m] (x) Q[v_1..v_m]/I with du_k = v_k and
dv_k = 0, where I is generated by square-free monomials on non-faces. A
basis element u_sigma (x) v^alpha has bidegree (-|sigma|, 2(|sigma|+|alpha|)).

This module is an independent check on :mod:`polybetti.hochster`: it never
forms full subcomplexes and never calls the simplicial homology code.

The differential also preserves the multidegree e_sigma + alpha in N^m, so
every slice splits into small blocks. Two routes use this:

* :func:`slice_betti` enumerates a slice basis and ranks each multidegree
  block of the actual slice matrices.
* :func:`tor_betti_via_koszul` enumerates block *shapes* instead. The block
  of multidegree a only depends on supp(a) and on {k : a_k >= 2}, so one
  computation serves every multidegree of that shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .hochster import BettiTable
from .linalg import IntMatrix, rank_exact
from .polytope import DualTriangulation

Exponent = tuple[int, ...]
BasisElement = tuple[tuple[int, ...], Exponent]


def _mask(items: Iterable[int]) -> int:
    out = 0
    for k in items:
        out |= 1 << k
    return out


@dataclass(frozen=True)
class StanleyReisnerData:
    """Faces of the dual complex as bitmasks, plus its minimal non-faces."""

    m: int
    faces: frozenset[int]

    @classmethod
    def from_triangulation(cls, t: DualTriangulation) -> StanleyReisnerData:
        return cls.from_maximal_faces(t.m, t.faces)

    @classmethod
    def from_maximal_faces(cls, m: int, maximal: Iterable[Iterable[int]]) -> StanleyReisnerData:
        faces = {0}
        for f in maximal:
            f = tuple(f)
            for k in range(1, len(f) + 1):
                faces.update(_mask(s) for s in combinations(f, k))
        faces.update(1 << v for v in range(m))
        return cls(m, frozenset(faces))

    def is_face(self, support: int) -> bool:
        return support in self.faces

    @cached_property
    def minimal_nonfaces(self) -> list[tuple[int, ...]]:
        out = []
        for size in range(1, self.m + 1):
            for s in combinations(range(self.m), size):
                mask = _mask(s)
                if mask in self.faces:
                    continue
                if all((mask & ~(1 << v)) in self.faces for v in s):
                    out.append(s)
        return out

    @cached_property
    def face_list(self) -> list[int]:
        return sorted(self.faces, key=lambda f: (bin(f).count("1"), f))


def _support(alpha: Exponent) -> int:
    return _mask(k for k, a in enumerate(alpha) if a)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_basis(sr: StanleyReisnerData, t: int) -> list[Exponent]:
    """Exponent vectors of degree ``t`` that survive in the face ring."""
    out = []
    for face in sr.face_list:
        verts = [k for k in range(sr.m) if face >> k & 1]
        for comp in _compositions(t, len(verts)):
            alpha = [0] * sr.m
            for k, a in zip(verts, comp):
                alpha[k] = a
            out.append(tuple(alpha))
    return sorted(out)


def _differential_terms(
    sr: StanleyReisnerData, sigma: tuple[int, ...], alpha: Exponent
) -> list[tuple[int, BasisElement]]:
    """d(u_sigma (x) v^alpha) as (sign, target) pairs, zero terms dropped."""
    terms = []
    for pos, s in enumerate(sigma):
        new_alpha = alpha[:s] + (alpha[s] + 1,) + alpha[s + 1 :]
        if sr.is_face(_support(new_alpha)):
            terms.append(((-1) ** pos, (sigma[:pos] + sigma[pos + 1 :], new_alpha)))
    return terms


def _multidegree(element: BasisElement) -> Exponent:
    sigma, alpha = element
    a = list(alpha)
    for s in sigma:
        a[s] += 1
    return tuple(a)


@dataclass(frozen=True)
class KoszulSlice:
    """Bidegree (-i, 2j) piece of the Koszul complex with its outgoing map."""

    sr: StanleyReisnerData
    i: int
    j: int
    basis: tuple[BasisElement, ...]

    @cached_property
    def target_basis(self) -> tuple[BasisElement, ...]:
        if self.i == 0:
            return ()
        return tuple(koszul_basis(self.sr, self.i - 1, self.j))

    def d_entries(self) -> dict[tuple[int, int], int]:
        """Sparse entries of d out of this slice: (row, col) -> sign."""
        index = {b: n for n, b in enumerate(self.target_basis)}
        out = {}
        for c, (sigma, alpha) in enumerate(self.basis):
            for sign, target in _differential_terms(self.sr, sigma, alpha):
                out[(index[target], c)] = sign
        return out

    @property
    def d_out(self) -> IntMatrix:
        return IntMatrix.from_sparse(len(self.target_basis), len(self.basis), self.d_entries())

    def dump(self) -> str:
        """Plain-text listing of the basis and nonzero matrix entries."""
        lines = [f"slice i={self.i} j={self.j} dim={len(self.basis)}"]
        for n, (sigma, alpha) in enumerate(self.basis):
            lines.append(f"  [{n}] u{list(sigma)} v{list(alpha)}")
        lines.append(f"d_out {len(self.target_basis)}x{len(self.basis)}")
        for (r, c), v in sorted(self.d_entries().items()):
            lines.append(f"  {r} {c} {v:+d}")
        return "\n".join(lines) + "\n"


def koszul_basis(sr: StanleyReisnerData, i: int, j: int) -> list[BasisElement]:
    if not 0 <= i <= j:
        return []
    monos = monomial_basis(sr, j - i)
    return [(sigma, alpha) for sigma in combinations(range(sr.m), i) for alpha in monos]


def koszul_slice(sr: StanleyReisnerData, i: int, j: int) -> KoszulSlice:
    if not 0 <= i <= j <= sr.m:
        raise ValueError(f"bidegree (-{i}, {2 * j}) out of range")
    return KoszulSlice(sr, i, j, tuple(koszul_basis(sr, i, j)))


def _blocked_rank(
    sr: StanleyReisnerData, source: Sequence[BasisElement]
) -> int:
    """Rank of d restricted to ``source``, one multidegree block at a time."""
    blocks: dict[Exponent, list[BasisElement]] = {}
    for b in source:
        blocks.setdefault(_multidegree(b), []).append(b)
    total = 0
    for elems in blocks.values():
        index: dict[BasisElement, int] = {}
        cols = []
        for sigma, alpha in elems:
            col = {}
            for sign, target in _differential_terms(sr, sigma, alpha):
                col[index.setdefault(target, len(index))] = sign
            cols.append(col)
        if not index:
            continue
        total += rank_exact([[col.get(r, 0) for r in range(len(index))] for col in cols])
    return total


def slice_betti(sr: StanleyReisnerData, i: int, j: int) -> int:
    """dim ker(d out of (-i,2j)) - rank(d into it), from explicit slice bases."""
    here = koszul_basis(sr, i, j)
    above = koszul_basis(sr, i + 1, j)
    return len(here) - _blocked_rank(sr, here) - _blocked_rank(sr, above)


def _block_homology(sr: StanleyReisnerData, tau: int, twice: int) -> dict[int, int]:
    """Homology by exterior degree of the block with support tau.

    ``twice`` is the set of indices whose exponent is at least 2. Basis
    elements are the sigma inside tau for which (tau - sigma) | twice is a
    face.
    """
    members = []
    for face in sr.faces:
        if face & ~tau or twice & ~face:
            continue
        # complement c with face - twice <= c <= face
        forced = face & ~twice
        free = [k for k in range(sr.m) if (face & twice) >> k & 1]
        for r in range(len(free) + 1):
            for extra in combinations(free, r):
                c = forced | _mask(extra)
                if (c | twice) == face:
                    members.append(tau & ~c)
    members = sorted(set(members))
    by_size: dict[int, list[int]] = {}
    for s in members:
        by_size.setdefault(bin(s).count("1"), []).append(s)
    ranks: dict[int, int] = {}
    for size, sources in by_size.items():
        targets = {s: n for n, s in enumerate(by_size.get(size - 1, []))}
        if not targets:
            ranks[size] = 0
            continue
        rows = []
        for s in sources:
            row = [0] * len(targets)
            bits = [k for k in range(sr.m) if s >> k & 1]
            for pos, k in enumerate(bits):
                target = s & ~(1 << k)
                if target in targets:
                    row[targets[target]] = (-1) ** pos
            rows.append(row)
        ranks[size] = rank_exact(rows)
    return {
        size: len(sources) - ranks[size] - ranks.get(size + 1, 0)
        for size, sources in by_size.items()
    }


def _shape_count(tau_size: int, twice_size: int, j: int) -> int:
    """Number of multidegrees with the given support/twice sizes and total j."""
    if twice_size == 0:
        return int(j == tau_size)
    extra = j - tau_size - twice_size
    if extra < 0:
        return 0
    return comb(extra + twice_size - 1, twice_size - 1)


def tor_betti_via_koszul(
    t: DualTriangulation | StanleyReisnerData,
    cells: Iterable[tuple[int, int]] | None = None,
) -> BettiTable:
    """Betti table as homology of the Koszul complex, cell by cell.

    Defaults to every cell with j <= m.
    """
    sr = t if isinstance(t, StanleyReisnerData) else StanleyReisnerData.from_triangulation(t)
    m = sr.m
    wanted = None if cells is None else {tuple(c) for c in cells}
    max_j = m if wanted is None else max((j for _, j in wanted), default=-1)
    acc: dict[tuple[int, int], int] = {}
    for tau in range(1 << m):
        tau_size = bin(tau).count("1")
        if tau_size > max_j:
            continue
        for twice in sr.faces:
            if twice & ~tau:
                continue
            twice_size = bin(twice).count("1")
            if tau_size + twice_size > max_j:
                continue
            homology = None
            for j in range(tau_size + twice_size, max_j + 1):
                mult = _shape_count(tau_size, twice_size, j)
                if not mult:
                    continue
                if homology is None:
                    homology = _block_homology(sr, tau, twice)
                for i, h in homology.items():
                    if h and (wanted is None or (i, j) in wanted):
                        acc[(i, j)] = acc.get((i, j), 0) + mult * h
    return BettiTable(m, acc)
