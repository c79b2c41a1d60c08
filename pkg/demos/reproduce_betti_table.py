"""Compute the bigraded Betti table of the two 11-facet polytopes P and Q.

Both tables come out identical, so Betti numbers alone cannot tell the
moment-angle manifolds apart.
"""

from polybetti import bigraded_betti, table2_row
from polybetti.catalog import P_ROW, Q_ROW

p, q = table2_row(P_ROW), table2_row(Q_ROW)
bp, bq = bigraded_betti(p), bigraded_betti(q)

print(f"P = row {P_ROW}: {p.to_rows()}")
print(f"Q = row {Q_ROW}: {q.to_rows()}")
print()
print(bp)
print()
print("identical tables:", bp == bq)
