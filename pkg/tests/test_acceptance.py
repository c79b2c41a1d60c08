"""Exit criteria, one test per criterion; each prints a PASS/FAIL line.

All comparisons are exact integer equality.
"""

import json
import random
from math import comb

from oracles import labeled_triangulation_classes
from polybetti.catalog import TABLE2, classify, printed_tuples, table2_row
from polybetti.cli import main
from polybetti.enumeration import canonical_code, filter_irreducible
from polybetti.hochster import betti_tuple, bigraded_betti, moment_angle_betti
from polybetti.koszul import StanleyReisnerData, koszul_slice, tor_betti_via_koszul
from polybetti.polytope import four_belts, non_adjacent_pairs, three_belts
from polybetti.torring import Verdict, annihilator_dim, rings_distinguished
from polybetti.verify import TABLE1


def report(number, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    assert ok, detail


def test_criterion_1_betti_tables(P, Q):
    diffs = {}
    for name, t in (("row 12", P), ("row 24", Q)):
        got = bigraded_betti(t).values
        diffs[name] = {k: (got.get(k, 0), TABLE1.get(k, 0)) for k in set(got) | set(TABLE1) if got.get(k, 0) != TABLE1.get(k, 0)}
    ok = not any(diffs.values())
    report(1, ok, f"rows 12 and 24 vs Table 1, mismatched cells {diffs}")


def test_criterion_2_oracle_equivalence(P, Q, tet, octa):
    extra = sorted(random.Random(20121).sample([r for r, _, _ in TABLE2 if r not in (12, 24)], 5))
    cases = [("tetrahedron", tet), ("octahedron", octa), ("row 12", P), ("row 24", Q)]
    cases += [(f"row {r}", table2_row(r)) for r in extra]
    bad = [name for name, t in cases if tor_betti_via_koszul(t) != bigraded_betti(t)]
    report(2, not bad, f"Koszul == Hochster on {[n for n, _ in cases]}; mismatches {bad}")


def test_criterion_3_belts(P, Q, table2):
    def sets(t):
        return {frozenset(b.names(t)) for b in four_belts(t)}

    p_ok = sets(P) == {frozenset(s) for s in ("bcde", "gfjh", "acie", "cieb")}
    q_ok = sets(Q) == {frozenset(s) for s in ("acgf", "adjf", "chjd", "fghj")}
    with_3belts = [e.id for e in table2 if three_belts(e.triangulation)]
    report(3, p_ok and q_ok and not with_3belts, f"P belts {p_ok}, Q belts {q_ok}, rows with 3-belts {with_3belts}")


def test_criterion_4_ring_invariant(P, Q):
    dp, dq = annihilator_dim(P).dim_v, annihilator_dim(Q).dim_v
    verdict = rings_distinguished(P, Q)
    ok = dp == 22 and dq == 20 and verdict is Verdict.DISTINGUISHED
    report(4, ok, f"dim V = {dp}, {dq}; {verdict.value}")


def test_criterion_5_enumeration(small_triangulations, eleven, table2, table2_betti):
    counts = {n: len(small_triangulations[n]) for n in range(4, 9)}
    oracle = {n: len(labeled_triangulation_classes(n)) for n in range(4, 8)}
    irreducible = filter_irreducible(eleven)
    codes = {canonical_code(r) for r in irreducible}
    table_codes = {canonical_code(e.triangulation) for e in table2}
    tuples = sorted(betti_tuple(bigraded_betti(r.to_triangulation())) for r in irreducible)
    ok = (
        counts == {4: 1, 5: 1, 6: 2, 7: 5, 8: 14}
        and all(oracle[n] == counts[n] for n in oracle)
        and len(eleven) == 1249
        and len(irreducible) == 25
        and codes == table_codes
        and tuples == sorted(printed_tuples().values())
    )
    report(
        5,
        ok,
        f"counts {counts}, oracle {oracle}, n=11: {len(eleven)} classes, "
        f"{len(irreducible)} irreducible, {len(codes & table_codes)} matched to the table",
    )


def test_criterion_6_classification(table2):
    rep = classify(table2)
    groups = [frozenset(g) for g in rep.collision_ids()]
    expected = {
        frozenset({"table2-row-12", "table2-row-24"}),
        frozenset({"table2-row-9", "table2-row-11"}),
    }
    dims = {}
    for _, g in rep.collisions:
        if {e.id for e in g} == {"table2-row-12", "table2-row-24"}:
            dims = {e.id: e.dim_v for e in g}
    ok = len(groups) == 2 and set(groups) == expected and sorted(dims.values()) == [20, 22]
    shown = sorted(sorted(g, key=lambda s: int(s.rsplit("-", 1)[1])) for g in groups)
    report(6, ok, f"{len(groups)} collision groups {shown}; dim V of P/Q group {dims}")


def test_criterion_7_properties(table2, table2_betti, P, octa):
    failures = []
    for e in table2:
        m = e.triangulation.m
        if len(non_adjacent_pairs(e.triangulation)) != comb(m, 2) - (3 * m - 6):
            failures.append(f"{e.id} non-adjacent count")
        if table2_betti[e.id][1, 2] != comb(m, 2) - (3 * m - 6):
            failures.append(f"{e.id} beta^(-1,4)")
        beta = moment_angle_betti(table2_betti[e.id])
        if any(beta[p] != beta[14 - p] for p in range(15)):
            failures.append(f"{e.id} palindromicity")

    slices_checked = 0
    for t, max_j in ((octa, 4), (P, 3)):
        sr = StanleyReisnerData.from_triangulation(t)
        for j in range(1, max_j + 1):
            for i in range(2, j + 1):
                upper, lower = koszul_slice(sr, i, j), koszul_slice(sr, i - 1, j)
                composed = {}
                for (r, k), a in lower.d_entries().items():
                    for (k2, c), b in upper.d_entries().items():
                        if k == k2:
                            composed[(r, c)] = composed.get((r, c), 0) + a * b
                if any(composed.values()):
                    failures.append(f"d o d != 0 at ({i},{j})")
                slices_checked += 1

    if bigraded_betti(P, seed=101).to_csv() != bigraded_betti(P, seed=202).to_csv():
        failures.append("subset order dependence")

    rnd = random.Random(100)
    base = canonical_code(P)
    for _ in range(100):
        perm = list(range(11))
        rnd.shuffle(perm)
        if canonical_code(P.relabel(perm)) != base:
            failures.append("canonical code not relabeling invariant")
            break
    report(7, not failures, f"{slices_checked} slice pairs with d o d = 0; failures {failures}")


def test_criterion_8_verify_paper(tmp_path, capsys):
    code = main(["verify-paper"])
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln.startswith("[")]
    exit_ok = code == 0 and len(lines) == 6 and all(ln.startswith("[PASS]") for ln in lines)

    perturbations = []
    for cell in TABLE1:
        for delta in (1, -1):
            bad = dict(TABLE1)
            bad[cell] += delta
            perturbations.append(bad)
    extra = dict(TABLE1)
    extra[(1, 3)] = 1  # a 3-belt that does not exist
    perturbations.append(extra)
    codes = []
    for bad in perturbations:
        path = tmp_path / "table1.json"
        path.write_text(json.dumps({"m": 11, "cells": [{"i": i, "j": j, "beta": v} for (i, j), v in bad.items()]}))
        codes.append(main(["verify-paper", "--table1", str(path)]))
        capsys.readouterr()
    negative_ok = all(c == 1 for c in codes)
    with capsys.disabled():
        print("\n" + "\n".join(lines))
    report(8, exit_ok and negative_ok, f"verify-paper exit {code}; {sum(c == 1 for c in codes)}/{len(codes)} perturbations rejected")
