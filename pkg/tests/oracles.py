"""Independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx


def rank_fractions(rows):
    """Rank by Gauss-Jordan elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def naive_reduced_homology(faces):
    """Reduced Betti numbers of the closure of ``faces`` via Fraction ranks."""
    closure = set()
    for f in faces:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            closure.update(combinations(f, k))
    by_dim = {-1: [()]}
    for f in sorted(closure):
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        index = {f: n for n, f in enumerate(by_dim[k - 1])}
        rows = [[0] * len(by_dim[k]) for _ in by_dim[k - 1]]
        for c, f in enumerate(by_dim[k]):
            for p in range(len(f)):
                rows[index[f[:p] + f[p + 1:]]][c] = (-1) ** p
        ranks[k] = rank_fractions(rows)
    return {
        k: len(by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(-1, top + 1)
    }


def labeled_triangulation_classes(n):
    """Isomorphism classes of maximal planar graphs on n labeled vertices.

    Brute force over all edge subsets of size 3n-6; planarity and
    isomorphism are decided by networkx.
    """
    all_edges = list(combinations(range(n), 2))
    reps = []
    for edges in combinations(all_edges, 3 * n - 6):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if min(deg) < 3:
            continue
        g = nx.Graph(edges)
        planar, _ = nx.check_planarity(g)
        if not planar or nx.node_connectivity(g) < 3:
            continue
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps
