"""Enumerate triangulated spheres with 11 vertices and keep the flag ones.

Duals of those are the simple 3-polytopes with 11 facets and no 3-belts.
Grouping them by their Betti tuple shows which ones collide.
"""

import time

from polybetti import classify, enumerate_triangulations, filter_irreducible
from polybetti.catalog import CatalogEntry

t0 = time.perf_counter()
level = enumerate_triangulations(11)
irreducible = filter_irreducible(level)
print(f"{len(level)} triangulations, {len(irreducible)} without 3-belts ({time.perf_counter() - t0:.1f}s)")

entries = [CatalogEntry(f"enum-{k + 1}", "enumerated", r.to_triangulation()) for k, r in enumerate(irreducible)]
report = classify(entries)
print(f"{len(report.collisions)} Betti-tuple collisions:")
for tup, group in report.collisions:
    dims = ", ".join(f"{e.id} (dim V {e.dim_v})" for e in group)
    print(f"  {tup}: {dims}")
