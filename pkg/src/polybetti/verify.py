"""End-to-end reproduction of the published numbers.

:func:`verify_paper` runs each check in order and stops at the first
failure, reporting the offending cells.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .catalog import P_ROW, Q_ROW, TABLE2, classify, load_table2, printed_tuples, table2_row
from .enumeration import canonical_code, enumerate_triangulations, filter_irreducible
from .hochster import BettiTable, betti_tuple, bigraded_betti
from .koszul import tor_betti_via_koszul
from .polytope import DualTriangulation, four_belts, three_belts
from .torring import Verdict, annihilator_dim, rings_distinguished

# Nonzero cells (i, j) -> beta^{-i,2j} shared by both polytopes.
TABLE1: dict[tuple[int, int], int] = {
    (0, 0): 1,
    (1, 2): 28,
    (2, 3): 105,
    (2, 4): 4,
    (3, 4): 166,
    (3, 5): 39,
    (4, 5): 123,
    (4, 6): 123,
    (5, 6): 39,
    (5, 7): 166,
    (6, 7): 4,
    (6, 8): 105,
    (7, 9): 28,
    (8, 11): 1,
}

P_BELTS = ("bcde", "gfjh", "acie", "cieb")
Q_BELTS = ("acgf", "adjf", "chjd", "fghj")
TRIANGULATION_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 11: 1249}


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.detail}"


def _belt_sets(t: DualTriangulation) -> set[frozenset[str]]:
    return {frozenset(b.names(t)) for b in four_belts(t)}


def tetrahedron() -> DualTriangulation:
    return DualTriangulation.from_rows("bcd,acd,abd,abc")


def octahedron() -> DualTriangulation:
    # dual of the cube: a/f, b/d, c/e are the opposite pairs
    return DualTriangulation.from_rows("bedc,acfe,adfb,aefc,abfd,bcde")


def check_table1(table1: dict[tuple[int, int], int] | None = None) -> CheckResult:
    expected = BettiTable(11, dict(TABLE1 if table1 is None else table1))
    bad = []
    for row in (P_ROW, Q_ROW):
        got = bigraded_betti(table2_row(row))
        for i, j, g, e in got.diff(expected):
            bad.append(f"row {row} cell beta^(-{i},{2 * j}): computed {g}, expected {e}")
    if bad:
        return CheckResult("betti tables", False, "; ".join(bad))
    return CheckResult(
        "betti tables", True, f"rows {P_ROW} and {Q_ROW} equal Table 1 ({len(TABLE1)} nonzero cells)"
    )


def check_oracle(seed: int = 2012, extra_rows: int = 5) -> CheckResult:
    rows = [r for r, _, _ in TABLE2 if r not in (P_ROW, Q_ROW)]
    picked = sorted(random.Random(seed).sample(rows, extra_rows))
    cases = [("tetrahedron", tetrahedron()), ("octahedron", octahedron())]
    cases += [(f"row {r}", table2_row(r)) for r in [P_ROW, Q_ROW] + picked]
    for name, t in cases:
        h = bigraded_betti(t)
        k = tor_betti_via_koszul(t)
        if h != k:
            cells = ", ".join(f"({i},{j}): {a} vs {b}" for i, j, a, b in h.diff(k))
            return CheckResult("koszul oracle", False, f"{name} disagrees at {cells}")
    return CheckResult(
        "koszul oracle", True, "Hochster == Koszul on " + ", ".join(n for n, _ in cases)
    )


def check_belts() -> CheckResult:
    expected = {P_ROW: P_BELTS, Q_ROW: Q_BELTS}
    for row, belts in expected.items():
        t = table2_row(row)
        got = _belt_sets(t)
        want = {frozenset(b) for b in belts}
        if got != want:
            show = sorted("".join(sorted(b)) for b in got)
            return CheckResult("belts", False, f"row {row} has 4-belts {show}")
    reducible = [row for row, text, _ in TABLE2 if three_belts(table2_row(row))]
    if reducible:
        return CheckResult("belts", False, f"rows with 3-belts: {reducible}")
    return CheckResult("belts", True, "4-belts of rows 12 and 24 match; no 3-belts in 25 rows")


def check_ring() -> CheckResult:
    p, q = table2_row(P_ROW), table2_row(Q_ROW)
    dp, dq = annihilator_dim(p).dim_v, annihilator_dim(q).dim_v
    verdict = rings_distinguished(p, q)
    ok = dp == 22 and dq == 20 and verdict is Verdict.DISTINGUISHED
    return CheckResult("annihilator", ok, f"dim V = {dp} and {dq}; verdict {verdict.value}")


def check_enumeration() -> CheckResult:
    counts = {}
    for n, want in TRIANGULATION_COUNTS.items():
        level = enumerate_triangulations(n)
        counts[n] = len(level)
        if counts[n] != want:
            return CheckResult("enumeration", False, f"n={n}: {counts[n]} classes, expected {want}")
    irreducible = filter_irreducible(level)
    codes = {canonical_code(r) for r in irreducible}
    table_codes = {canonical_code(e.triangulation) for e in load_table2()}
    if len(irreducible) != 25 or codes != table_codes:
        return CheckResult(
            "enumeration",
            False,
            f"{len(irreducible)} irreducible classes; "
            f"{len(codes & table_codes)} match the table",
        )
    got = sorted(betti_tuple(bigraded_betti(r.to_triangulation())) for r in irreducible)
    if got != sorted(printed_tuples().values()):
        return CheckResult("enumeration", False, "Betti tuple multiset differs from the table")
    return CheckResult(
        "enumeration",
        True,
        f"counts {counts}; 25 irreducible classes biject with the table",
    )


def _row_number(entry_id: str) -> int:
    return int(entry_id.rsplit("-", 1)[1])


def _by_first_row(groups: Iterable[set[str]]) -> list[set[str]]:
    return sorted(groups, key=lambda g: min(_row_number(s) for s in g))


def _printed_collisions() -> list[set[str]]:
    groups: dict[tuple, set[str]] = {}
    for row, _, tup in TABLE2:
        groups.setdefault(tup, set()).add(f"table2-row-{row}")
    return _by_first_row(g for g in groups.values() if len(g) > 1)


def check_classification() -> CheckResult:
    """Collision groups must be those of the printed tuples.

    Rows 12/24 must form a group of their own with dim V {22, 20} and rows
    9/11 must collide.
    """
    report = classify(load_table2())
    found = _by_first_row(report.collision_ids())
    pq = {f"table2-row-{P_ROW}", f"table2-row-{Q_ROW}"}
    dims = {}
    for _, group in report.collisions:
        if {e.id for e in group} == pq:
            dims = {e.id: e.dim_v for e in group}
    summary = "; ".join(
        "{" + ", ".join(sorted(g, key=_row_number)) + "}" for g in found
    )
    ok = (
        found == _printed_collisions()
        and pq in found
        and {"table2-row-9", "table2-row-11"} in found
        and dims == {f"table2-row-{P_ROW}": 22, f"table2-row-{Q_ROW}": 20}
    )
    return CheckResult("classification", ok, f"{len(found)} collision groups: {summary}; dim V {dims}")


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_table1,
    check_oracle,
    check_belts,
    check_ring,
    check_enumeration,
    check_classification,
)


def verify_paper(
    table1: dict[tuple[int, int], int] | None = None,
    echo: Callable[[str], None] = print,
) -> bool:
    """Run all checks, printing one line each; stop at the first failure."""
    checks: Iterable[Callable[[], CheckResult]] = (
        lambda: check_table1(table1),
    ) + CHECKS[1:]
    for check in checks:
        result = check()
        echo(result.line())
        if not result.ok:
            return False
    return True
