"""Separate P and Q using the multiplication in the Tor-algebra.

Products of two degree (-1,4) classes land in degree (-2,8). A pair of
such generators multiplies to zero unless it comes from the diagonals
of a 4-belt, and the count of those pairs differs between P and Q.
"""

from polybetti import annihilator_dim, four_belts, rings_distinguished, table2_row

for label, row in (("P", 12), ("Q", 24)):
    t = table2_row(row)
    rep = annihilator_dim(t)
    belts = ", ".join("".join(b.names(t)) for b in four_belts(t))
    print(f"{label}: 4-belts {belts}")
    print(f"   beta^(-1,4) = {rep.beta14}, belt-diagonal pairs = {len(rep.belt_diagonal_pairs)}, dim V = {rep.dim_v}")

verdict = rings_distinguished(table2_row(12), table2_row(24))
print("verdict:", verdict.value)
