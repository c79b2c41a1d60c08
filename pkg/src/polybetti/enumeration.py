"""Isomorph-free generation of 3-connected planar triangulations.

Every triangulation other than K4 has an edge whose contraction is again a
triangulation, so splitting vertices starting from K4 reaches every class.
Duplicates are removed with a canonical code for embedded maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .polytope import DualTriangulation, PolytopeError, _trace_faces, three_belts

MAX_VERTICES = 12


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order around each vertex of an embedded graph."""

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rotation", tuple(tuple(int(x) for x in r) for r in self.rotation)
        )

    @property
    def n(self) -> int:
        return len(self.rotation)

    def validate(self) -> None:
        n = self.n
        for v, row in enumerate(self.rotation):
            if len(row) < 3:
                raise PolytopeError(f"vertex {v} has degree {len(row)}")
            if len(set(row)) != len(row):
                raise PolytopeError(f"repeated neighbour at vertex {v}")
            for u in row:
                if not 0 <= u < n or u == v or v not in self.rotation[u]:
                    raise PolytopeError(f"inconsistent adjacency {v}-{u}")
        faces = _trace_faces(self.rotation)
        if faces is None:
            raise PolytopeError("rotation system is inconsistent")
        edges = sum(len(r) for r in self.rotation) // 2
        if n - edges + len(faces) != 2:
            raise PolytopeError("embedding is not spherical")

    def is_triangulation(self) -> bool:
        faces = _trace_faces(self.rotation)
        return faces is not None and all(len(f) == 3 for f in faces)

    def to_triangulation(self, labels: Sequence[str] = ()) -> DualTriangulation:
        return DualTriangulation(self.rotation, tuple(labels))

    @classmethod
    def from_triangulation(cls, t: DualTriangulation) -> RotationSystem:
        return cls(t.rotation)

    @cached_property
    def code(self) -> bytes:
        return canonical_code(self)


def _bfs_code(rotation: Sequence[Sequence[int]], v0: int, w0: int) -> list[int]:
    """Relabel vertices breadth-first from the dart v0->w0.

    Each vertex's neighbours are listed in rotation order, starting at the
    neighbour it was reached from (w0 for the root). The output lists new
    labels (1-based), each vertex terminated by 0.
    """
    n = len(rotation)
    label = [0] * n
    parent = [-1] * n
    label[v0] = 1
    parent[v0] = w0
    queue = [v0]
    nxt = 2
    out: list[int] = []
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        row = rotation[x]
        d = len(row)
        k0 = row.index(parent[x])
        for k in range(d):
            y = row[(k0 + k) % d]
            if not label[y]:
                label[y] = nxt
                nxt += 1
                parent[y] = x
                queue.append(y)
            out.append(label[y])
        out.append(0)
    return out


def canonical_code(r: RotationSystem | DualTriangulation) -> bytes:
    """Lexicographically least BFS code over roots and both orientations.

    Roots are restricted to darts maximising (deg tail, deg head), which is
    invariant under isomorphism, so equal codes mean isomorphic maps up to
    reflection.
    """
    rot = r.rotation
    mirror = tuple(tuple(reversed(row)) for row in rot)
    deg = [len(row) for row in rot]
    best_key = max((deg[v], deg[w]) for v in range(len(rot)) for w in rot[v])
    best: list[int] | None = None
    for v in range(len(rot)):
        if deg[v] != best_key[0]:
            continue
        for w in rot[v]:
            if deg[w] != best_key[1]:
                continue
            for system in (rot, mirror):
                code = _bfs_code(system, v, w)
                if best is None or code < best:
                    best = code
    assert best is not None
    return bytes([len(rot)] + best) if len(rot) < 256 else bytes(best)


def vertex_split(r: RotationSystem, v: int, arc: tuple[int, int]) -> RotationSystem:
    """Split ``v`` into an edge v'-v''.

    ``arc = (p, q)`` are positions in v's rotation; the neighbours
    rotation[v][p..q] (cyclically) go to v' and rotation[v][q..p] go to v'',
    so the two endpoints stay adjacent to both new vertices. v' keeps
    index ``v`` and v'' gets the new index ``n``.
    """
    rot = [list(row) for row in r.rotation]
    row = rot[v]
    d = len(row)
    p, q = arc
    if not (0 <= p < d and 0 <= q < d) or p == q:
        raise PolytopeError("split positions must be two distinct rotation slots")
    span = (q - p) % d
    first = [row[(p + k) % d] for k in range(span + 1)]
    second = [row[(q + k) % d] for k in range(d - span + 1)]
    if len(first) + 1 < 3 or len(second) + 1 < 3:
        raise PolytopeError("split would create a vertex of degree < 3")
    a, b = row[p], row[q]
    w = len(rot)
    new_first = first + [w]
    new_second = second + [v]
    rot[v] = new_first
    rot.append(new_second)
    # neighbours strictly inside the second arc now see w instead of v
    for x in second[1:-1]:
        rot[x] = [w if y == v else y for y in rot[x]]
    # a sits between v' and v''; insert w next to v on the correct side
    for end, before in ((a, False), (b, True)):
        rx = rot[end]
        k = rx.index(v)
        if before:
            rx.insert(k, w)
        else:
            rx.insert(k + 1, w)
    return RotationSystem(tuple(tuple(x) for x in rot))


def _all_splits(r: RotationSystem) -> Iterable[RotationSystem]:
    for v, row in enumerate(r.rotation):
        d = len(row)
        for p in range(d):
            for q in range(p + 1, d):
                yield vertex_split(r, v, (p, q))


K4 = RotationSystem(((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)))


def enumerate_triangulations(n: int) -> list[RotationSystem]:
    """One rotation system per isomorphism class of triangulations on n vertices."""
    if not 4 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be between 4 and {MAX_VERTICES}, got {n}")
    level = {canonical_code(K4): K4}
    for _ in range(n - 4):
        nxt: dict[bytes, RotationSystem] = {}
        for parent in level.values():
            for child in _all_splits(parent):
                code = canonical_code(child)
                if code not in nxt:
                    nxt[code] = child
        level = nxt
    return [level[c] for c in sorted(level)]


def filter_irreducible(items: Iterable[RotationSystem | DualTriangulation]) -> list:
    """Keep triangulations without separating triangles (no 3-belts)."""
    out = []
    for x in items:
        t = x if isinstance(x, DualTriangulation) else x.to_triangulation()
        if not three_belts(t):
            out.append(x)
    return out
