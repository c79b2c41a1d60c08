"""Simple 3-polytopes stored as their dual triangulations.

Facets of the polytope are the vertices of the dual triangulation. Two
facets intersect exactly when the corresponding vertices are adjacent, so
all combinatorial features used elsewhere (non-intersecting pairs, belts,
unions of facets) are read off the triangulation.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class PolytopeError(ValueError):
    """Input does not describe a valid simple 3-polytope."""


def facet_name(index: int, m: int) -> str:
    if m <= 26:
        return string.ascii_lowercase[index]
    return str(index)


def default_labels(m: int) -> tuple[str, ...]:
    return tuple(facet_name(k, m) for k in range(m))


# ---------------------------------------------------------------------------
# Facet graph and the adjacency-row format
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FacetGraph:
    """Symmetric facet adjacency, with the neighbour order of the input rows."""

    m: int
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.m) for v in self.rows[u] if u < v)

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        removed = set(removed)
        alive = [v for v in range(self.m) if v not in removed]
        if not alive:
            return True
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            u = stack.pop()
            for w in self.rows[u]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)

    def is_3_connected(self) -> bool:
        if self.m < 4:
            return False
        for k in range(3):
            for cut in combinations(range(self.m), k):
                if not self.is_connected(cut):
                    return False
        return True


def parse_adjacency_rows(text: str) -> FacetGraph:
    """Parse comma-separated neighbour rows such as ``"bcd,acd,abd,abc"``.

    The n-th row lists the facets meeting the n-th facet (``a`` is 0).
    Whitespace is ignored. Row order of neighbours is kept as given.
    """
    cleaned = "".join(text.split())
    if not cleaned:
        raise PolytopeError("empty adjacency string")
    tokens = cleaned.split(",")
    m = len(tokens)
    if m > 26:
        raise PolytopeError("adjacency rows support at most 26 facets")
    rows = []
    for n, tok in enumerate(tokens):
        if not tok:
            raise PolytopeError(f"row {n} is empty")
        row = []
        for ch in tok:
            if ch not in string.ascii_lowercase:
                raise PolytopeError(f"invalid character {ch!r} in row {n}")
            k = ord(ch) - ord("a")
            if k >= m:
                raise PolytopeError(f"letter {ch!r} out of range for {m} facets")
            if k == n:
                raise PolytopeError(f"facet {ch!r} listed as its own neighbour")
            if k in row:
                raise PolytopeError(f"duplicate neighbour {ch!r} in row {n}")
            row.append(k)
        rows.append(tuple(row))
    for u, row in enumerate(rows):
        for v in row:
            if u not in rows[v]:
                raise PolytopeError(
                    f"asymmetric adjacency: {facet_name(u, m)} lists "
                    f"{facet_name(v, m)} but not conversely"
                )
    return FacetGraph(m, tuple(rows))


def format_adjacency_rows(rotation: Sequence[Sequence[int]]) -> str:
    m = len(rotation)
    if m > 26:
        raise PolytopeError("adjacency rows support at most 26 facets")
    return ",".join("".join(facet_name(v, m) for v in row) for row in rotation)


# ---------------------------------------------------------------------------
# Dual triangulation
# ---------------------------------------------------------------------------


def _trace_faces(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]] | None:
    """Face-trace a rotation system; None if it is not consistent.

    The dart u->v is followed by v->w where w comes right after u in the
    rotation at v.
    """
    succ: dict[tuple[int, int], int] = {}
    for v, row in enumerate(rotation):
        d = len(row)
        for k, u in enumerate(row):
            succ[(v, u)] = row[(k + 1) % d]
    darts = {(u, v) for v, row in enumerate(rotation) for u in row}
    for u, v in darts:
        if (u, v) not in succ:
            return None
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in sorted(darts):
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            u, v = dart
            face.append(u)
            dart = (v, succ[(v, u)])
        if dart != start:
            return None
        faces.append(tuple(face))
    return faces


def _normalize_face(face: Sequence[int]) -> tuple[int, ...]:
    k = face.index(min(face))
    return tuple(face[k:]) + tuple(face[:k])


@dataclass(frozen=True)
class DualTriangulation:
    """Rotation system of a 3-connected planar triangulation.

    ``rotation[v]`` is the cyclic order of neighbours around vertex ``v``;
    construction validates every triangulation invariant and raises
    :class:`PolytopeError` otherwise.
    """

    rotation: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        rot = tuple(tuple(int(x) for x in r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(len(rot)))
        self._validate()

    def _validate(self) -> None:
        m = self.m
        if len(self.labels) != m:
            raise PolytopeError("label count does not match vertex count")
        if m < 4:
            raise PolytopeError("a triangulation needs at least 4 vertices")
        for v, row in enumerate(self.rotation):
            if len(set(row)) != len(row):
                raise PolytopeError(f"repeated neighbour around vertex {v}")
            for u in row:
                if not 0 <= u < m or u == v:
                    raise PolytopeError(f"bad neighbour {u} of vertex {v}")
                if v not in self.rotation[u]:
                    raise PolytopeError(f"adjacency {v}-{u} is not symmetric")
            if len(row) < 3:
                raise PolytopeError(f"vertex {v} has degree {len(row)} < 3")
        faces = _trace_faces(self.rotation)
        if faces is None:
            raise PolytopeError("rotation system is inconsistent")
        edges = sum(len(r) for r in self.rotation) // 2
        if edges != 3 * m - 6:
            raise PolytopeError(f"{edges} edges, expected {3 * m - 6}")
        if any(len(f) != 3 for f in faces):
            raise PolytopeError("not every face is a triangle")
        if len(faces) != 2 * m - 4:
            raise PolytopeError("face count violates Euler's formula")
        if not self.graph.is_3_connected():
            raise PolytopeError("graph is not 3-connected")

    # -- basic structure ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.rotation)

    @cached_property
    def graph(self) -> FacetGraph:
        return FacetGraph(self.m, self.rotation)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self.graph.adj

    @cached_property
    def faces(self) -> tuple[tuple[int, int, int], ...]:
        """Oriented triangles, each starting at its smallest vertex, sorted."""
        return tuple(sorted(_normalize_face(f) for f in _trace_faces(self.rotation)))

    @cached_property
    def face_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(f) for f in self.faces)

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def name(self, v: int) -> str:
        return self.labels[v]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def relabel(self, perm: Sequence[int]) -> DualTriangulation:
        """Rename vertex v to perm[v]; labels stay attached to positions."""
        m = self.m
        rot: list[tuple[int, ...]] = [()] * m
        for v, row in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[u] for u in row)
        return DualTriangulation(tuple(rot), default_labels(m))

    def mirror(self) -> DualTriangulation:
        return DualTriangulation(tuple(r[::-1] for r in self.rotation), self.labels)

    @classmethod
    def from_faces(
        cls, m: int, faces: Iterable[Iterable[int]], labels: Sequence[str] = ()
    ) -> DualTriangulation:
        """Build from unoriented triangles by orienting them coherently."""
        tris = [tuple(sorted(f)) for f in faces]
        by_edge: dict[frozenset[int], list[int]] = {}
        for n, f in enumerate(tris):
            for e in combinations(f, 2):
                by_edge.setdefault(frozenset(e), []).append(n)
        if any(len(fs) != 2 for fs in by_edge.values()):
            raise PolytopeError("some edge does not lie in exactly two faces")
        oriented: dict[int, tuple[int, int, int]] = {}
        for root in range(len(tris)):
            if root in oriented:
                continue
            oriented[root] = tris[root]
            stack = [root]
            while stack:
                n = stack.pop()
                a, b, c = oriented[n]
                for x, y in ((a, b), (b, c), (c, a)):
                    for other in by_edge[frozenset((x, y))]:
                        if other == n:
                            continue
                        (z,) = set(tris[other]) - {x, y}
                        want = (y, x, z)
                        if other in oriented:
                            if _normalize_face(oriented[other]) != _normalize_face(want):
                                raise PolytopeError("surface is not orientable")
                        else:
                            oriented[other] = want
                            stack.append(other)
        succ: dict[int, dict[int, int]] = {v: {} for v in range(m)}
        for x, y, z in oriented.values():
            succ[y][x] = z
            succ[z][y] = x
            succ[x][z] = y
        rotation = []
        for v in range(m):
            nxt = succ[v]
            if not nxt:
                raise PolytopeError(f"vertex {v} lies in no face")
            start = min(nxt)
            row = [start]
            u = nxt[start]
            while u != start:
                if len(row) > len(nxt):
                    raise PolytopeError(f"link of vertex {v} is not a cycle")
                row.append(u)
                u = nxt[u]
            if len(row) != len(nxt):
                raise PolytopeError(f"link of vertex {v} is not a single cycle")
            rotation.append(tuple(row))
        return cls(tuple(rotation), tuple(labels))

    @classmethod
    def from_rows(cls, text: str) -> DualTriangulation:
        g = parse_adjacency_rows(text)
        return to_triangulation(g)

    def to_rows(self) -> str:
        return format_adjacency_rows(self.rotation)

    def __str__(self) -> str:
        return ",".join("".join(self.labels[u] for u in row) for row in self.rotation)


def _graph_triangles(g: FacetGraph) -> list[tuple[int, int, int]]:
    return [
        (u, v, w)
        for u in range(g.m)
        for v in g.rows[u]
        if v > u
        for w in g.adj[u] & g.adj[v]
        if w > v
    ]


def _exact_cover_faces(g: FacetGraph, limit: int = 2) -> list[list[tuple[int, int, int]]]:
    """Choose triangles so every edge lies in exactly two of them.

    Returns up to ``limit`` solutions whose vertex links are single cycles.
    """
    tris = _graph_triangles(g)
    edges = g.edges()
    by_edge: dict[tuple[int, int], list[int]] = {e: [] for e in edges}
    for n, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(n)
    need = 2 * g.m - 4
    solutions: list[list[tuple[int, int, int]]] = []
    count = {e: 0 for e in edges}
    chosen: list[int] = []
    decided: dict[int, bool] = {}

    def tri_edges(n: int) -> tuple[tuple[int, int], ...]:
        a, b, c = tris[n]
        return ((a, b), (a, c), (b, c))

    def links_ok(sol: list[tuple[int, int, int]]) -> bool:
        for v in range(g.m):
            link: dict[int, list[int]] = {}
            for f in sol:
                if v in f:
                    x, y = [w for w in f if w != v]
                    link.setdefault(x, []).append(y)
                    link.setdefault(y, []).append(x)
            if not link or any(len(ns) != 2 for ns in link.values()):
                return False
            start = next(iter(link))
            prev, cur, steps = None, start, 0
            while True:
                a, b = link[cur]
                nxt = a if a != prev else b
                prev, cur = cur, nxt
                steps += 1
                if cur == start:
                    break
            if steps != len(link):
                return False
        return True

    def search() -> None:
        if len(solutions) >= limit:
            return
        # most constrained unfinished edge
        best = None
        best_opts: list[int] = []
        for e in edges:
            if count[e] == 2:
                continue
            opts = [n for n in by_edge[e] if n not in decided]
            if len(opts) < 2 - count[e]:
                return
            if best is None or len(opts) < len(best_opts):
                best, best_opts = e, opts
        if best is None:
            sol = [tris[n] for n in chosen]
            if len(sol) == need and links_ok(sol):
                solutions.append(sol)
            return
        n = best_opts[0]
        if all(count[e] < 2 for e in tri_edges(n)):
            decided[n] = True
            chosen.append(n)
            for e in tri_edges(n):
                count[e] += 1
            search()
            for e in tri_edges(n):
                count[e] -= 1
            chosen.pop()
            del decided[n]
        decided[n] = False
        search()
        del decided[n]

    search()
    return solutions


def to_triangulation(
    g: FacetGraph,
    token_order: Sequence[Sequence[int]] | None = None,
    labels: Sequence[str] = (),
) -> DualTriangulation:
    """Recover the triangulation (faces and rotations) from neighbour rows.

    Rows are first read as rotations around each vertex; if that does not
    give a triangulation, faces are found by an exact-cover search, which
    must have a unique solution.
    """
    order = tuple(tuple(r) for r in (token_order or g.rows))
    if tuple(frozenset(r) for r in order) != g.adj:
        raise PolytopeError("token order does not match the graph")
    if not g.is_connected():
        raise PolytopeError("facet graph is disconnected")
    if g.edge_count != 3 * g.m - 6 or g.m < 4:
        raise PolytopeError(
            f"{g.edge_count} edges on {g.m} vertices: not a planar triangulation"
        )
    rows_are_cycles = all(
        order[v][(k + 1) % len(order[v])] in g.adj[u]
        for v in range(g.m)
        for k, u in enumerate(order[v])
    )
    if rows_are_cycles:
        try:
            return DualTriangulation(order, tuple(labels))
        except PolytopeError:
            pass
    solutions = _exact_cover_faces(g)
    if not solutions:
        raise PolytopeError("no face assignment: not a planar triangulation")
    if len(solutions) > 1:
        raise PolytopeError("ambiguous input: several face assignments exist")
    return DualTriangulation.from_faces(g.m, solutions[0], tuple(labels))


def recover_faces_by_cover(g: FacetGraph) -> frozenset[frozenset[int]]:
    """Face set from the exact-cover route alone (used for cross-checks)."""
    sols = _exact_cover_faces(g)
    if len(sols) != 1:
        raise PolytopeError(f"{len(sols)} face assignments found")
    return frozenset(frozenset(f) for f in sols[0])


# ---------------------------------------------------------------------------
# Belts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Belt3:
    facets: tuple[int, int, int]

    def names(self, t: DualTriangulation) -> tuple[str, ...]:
        return tuple(t.name(v) for v in self.facets)


def _dihedral_min(cycle: Sequence[int]) -> tuple[int, ...]:
    n = len(cycle)
    images = []
    for seq in (tuple(cycle), tuple(reversed(cycle))):
        for k in range(n):
            images.append(seq[k:] + seq[:k])
    return min(images)


@dataclass(frozen=True)
class Belt4:
    """A chordless 4-cycle (F_i, F_j, F_k, F_l), stored in canonical order."""

    cycle: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycle", _dihedral_min(self.cycle))

    @property
    def facets(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def diagonals(self) -> tuple[frozenset[int], frozenset[int]]:
        i, j, k, l = self.cycle
        return frozenset((i, k)), frozenset((j, l))

    def names(self, t: DualTriangulation) -> tuple[str, ...]:
        return tuple(t.name(v) for v in self.cycle)


def non_adjacent_pairs(t: DualTriangulation) -> list[tuple[int, int]]:
    """Pairs of facets that do not intersect."""
    return [(u, v) for u, v in combinations(range(t.m), 2) if not t.adjacent(u, v)]


def expected_non_adjacent_count(m: int) -> int:
    return comb(m, 2) - (3 * m - 6)


def three_belts(t: DualTriangulation) -> list[Belt3]:
    """Triangles of the graph that are not faces (separating triangles)."""
    return [
        Belt3(tri) for tri in _graph_triangles(t.graph) if frozenset(tri) not in t.face_sets
    ]


def four_belts(t: DualTriangulation) -> list[Belt4]:
    """All chordless 4-cycles of the dual graph, sorted canonically."""
    belts = set()
    for i, k in combinations(range(t.m), 2):
        if t.adjacent(i, k):
            continue
        common = sorted(t.adj[i] & t.adj[k])
        for j, l in combinations(common, 2):
            if not t.adjacent(j, l):
                belts.add(Belt4((i, j, k, l)))
    return sorted(belts, key=lambda b: b.cycle)


def is_irreducible(t: DualTriangulation) -> bool:
    return not three_belts(t)


# ---------------------------------------------------------------------------
# Simplicial complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face family given by its maximal faces.

    ``vertices`` may include isolated vertices that are not in any listed
    face.
    """

    vertices: tuple[int, ...]
    maximal: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        faces = {tuple(sorted(f)) for f in self.maximal if f}
        verts = set(self.vertices) | {v for f in faces for v in f}
        maximal = [
            f for f in faces if not any(set(f) < set(g) for g in faces if g != f)
        ]
        covered = {v for f in maximal for v in f}
        maximal += [(v,) for v in verts - covered]
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "maximal", tuple(sorted(maximal)))

    @classmethod
    def from_faces(
        cls, faces: Iterable[Iterable[int]], vertices: Iterable[int] = ()
    ) -> SimplicialComplex:
        return cls(tuple(vertices), tuple(tuple(f) for f in faces))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.maximal), default=0) - 1

    @cached_property
    def _all_faces(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, set[tuple[int, ...]]] = {}
        for f in self.maximal:
            for k in range(1, len(f) + 1):
                out.setdefault(k - 1, set()).update(combinations(f, k))
        return {k: sorted(v) for k, v in out.items()}

    def faces_of_dim(self, k: int) -> list[tuple[int, ...]]:
        if k == -1:
            return [()]
        return list(self._all_faces.get(k, []))

    def face_counts(self) -> list[int]:
        return [len(self.faces_of_dim(k)) for k in range(self.dim + 1)]

    def __contains__(self, face: Iterable[int]) -> bool:
        face = tuple(sorted(face))
        if not face:
            return True
        return face in self._all_faces.get(len(face) - 1, ())


def boundary_complex(t: DualTriangulation) -> SimplicialComplex:
    return SimplicialComplex(tuple(range(t.m)), tuple(t.faces))


def full_subcomplex(t: DualTriangulation, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces of the dual sphere spanned by ``sigma``.

    Homotopy equivalent to the union of the facets in ``sigma``.
    """
    s = frozenset(sigma)
    tris = [f for f in t.faces if s.issuperset(f)]
    edges = [(u, v) for u, v in t.edges() if u in s and v in s]
    return SimplicialComplex(tuple(sorted(s)), tuple(tris) + tuple(edges))
