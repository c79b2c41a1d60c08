"""Catalogs of polytopes, file formats, and Betti-tuple classification."""

from __future__ import annotations

import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .enumeration import RotationSystem, canonical_code
from .hochster import BettiTable, BettiTuple, betti_tuple, bigraded_betti
from .polytope import DualTriangulation, PolytopeError, default_labels
from .torring import ReducibleError, annihilator_dim

PLANAR_CODE_HEADER = b">>planar_code<<"

# Irreducible simple 3-polytopes with 11 facets: (row, adjacency rows,
# printed Betti tuple), transcribed from the published table.
TABLE2: tuple[tuple[int, str, BettiTuple], ...] = (
    (1, "bcdef,afghc,abhid,acijke,adkf,aekgb,bfkjh,bgjic,chjd,dihgk,djgfe", (28, 105, 164, 112, 28, 2, 0)),
    (2, "bcdef,afghijc,abjd,acjke,adkgf,aegb,bfekh,bgki,bhkj,bikdc,djihge", (28, 105, 167, 131, 47, 5, 0)),
    (3, "bcde,aefghic,abid,acijke,adkfb,bekjg,bfjh,bgji,bhjdc,dihgfk,djfe", (28, 105, 169, 138, 54, 7, 0)),
    (4, "bcde,aefghijc,abjd,acjke,adkfb,bekg,bfkh,bgki,bhkj,bikdc,djihgfe", (28, 105, 175, 159, 75, 13, 0)),
    (5, "bcdef,afghijc,abjd,acje,adjkf,aekgb,bfkh,bgki,bhkj,bikedc,ejihgf", (28, 105, 172, 144, 60, 10, 0)),
    (6, "bcde,aefc,abfgd,acghe,adhijfb,bejgc,cfjkhd,dgkie,ehkj,eikgf,gjih", (28, 105, 171, 141, 57, 9, 0)),
    (7, "bcde,aefgc,abghijkd,acke,adkjfb,bejihg,bfhc,cgfi,chfj,cifek,cjed", (28, 105, 174, 156, 72, 12, 0)),
    (8, "bcde,aefghc,abhijd,acje,adjfb,bejkg,bfkh,bgkic,chkj,cikfed,fjihg", (28, 105, 168, 129, 45, 6, 0)),
    (9, "bcde,aefghc,abhijd,acje,adjfb,bejikg,bfkh,bgkic,chkfj,cifed,fihg", (28, 105, 170, 136, 52, 8, 0)),
    (10, "bcdef,afghic,abid,acijke,adkf,aekgb,bfkjh,bgji,bhjdc,dihgk,djgfe", (28, 105, 165, 119, 35, 3, 0)),
    (11, "bcde,aefghic,abid,acije,adjkfb,bekg,bfkh,bgkji,bhjdc,dihke,ejhgf", (28, 105, 170, 136, 52, 8, 0)),
    (12, "bcde,aefgc,abghid,acie,adijfb,bejkg,bfkhc,cgkji,chjed,eihkf,fjhg", (28, 105, 166, 123, 39, 4, 0)),
    (13, "bcde,aefgc,abghid,acie,adijfb,bejkg,bfkhc,cgki,chkjed,eikf,fjihg", (28, 105, 167, 125, 41, 5, 0)),
    (14, "bcde,aefghc,abhd,achije,adjfb,bejikg,bfkh,bgkidc,dhkfj,dife,fihg", (28, 105, 169, 134, 50, 7, 0)),
    (15, "bcde,aefghc,abhijd,acjgfe,adfb,bedg,bfdjkh,bgkic,chkj,cikgd,gjih", (28, 105, 173, 145, 61, 11, 0)),
    (16, "bcde,aefc,abfghid,acie,adijkfb,bekgc,cfkjh,cgji,chjed,eihgk,ejgf", (28, 105, 170, 143, 59, 8, 0)),
    (17, "bcde,aefc,abfghid,acie,adihjfb,bejkgc,cfkh,cgkjei,ched,ehkf,fjhg", (28, 105, 177, 159, 75, 15, 0)),
    (18, "bcde,aefghic,abid,acijgke,adkfb,bekg,bfkdjh,bgji,bhjdc,dihg,dgfe", (28, 105, 173, 149, 65, 11, 0)),
    (19, "bcde,aefghijc,abjd,acjkhgfe,adfb,bedg,bfdh,bgdki,bhkj,bikdc,djih", (28, 105, 179, 169, 85, 17, 0)),
    (20, "bcde,aefghijkc,abkd,ackjihgfe,adfb,bedg,bfdh,bgdi,bhdj,bidk,bjdc", (28, 105, 189, 189, 105, 27, 0)),
    (21, "bcde,aefgc,abghd,ache,adhijfb,bejg,bfjkhc,cgkied,ehkj,eikgf,gjih", (28, 105, 171, 141, 57, 9, 0)),
    (22, "bcde,aefc,abfghd,ache,adhijfb,bejkgc,cfkh,cgkied,ehkj,eikf,fjihg", (28, 105, 173, 145, 61, 11, 0)),
    (23, "bcdefg,aghc,abhijd,acje,adjf,aejkhg,afhb,bgfkic,chkj,cikfed,fjih", (28, 105, 171, 137, 53, 9, 0)),
    (24, "bcdef,afgc,abghid,acije,adjf,aejkgb,bfkhc,cgkji,chjd,dihkfe,fjhg", (28, 105, 166, 123, 39, 4, 0)),
    (25, "bcdef,afgc,abghijd,acje,adjkhgf,aegb,bfehc,cgeki,chkj,ciked,ejih", (28, 105, 173, 149, 65, 11, 0)),
)

# The two polytopes with equal Betti tables and different Tor-algebras.
# The first is row 12 of the table: its 4-belts and its Betti tuple match,
# whereas row 11's printed tuple does not.
P_ROW = 12
Q_ROW = 24


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    source: str
    triangulation: DualTriangulation
    betti: BettiTable | None = None
    tuple: BettiTuple | None = None
    dim_v: int | None = None

    def with_invariants(self) -> CatalogEntry:
        betti = self.betti or bigraded_betti(self.triangulation)
        tup = self.tuple
        if tup is None and betti.m == 11:
            tup = betti_tuple(betti)
        dim_v = self.dim_v
        if dim_v is None:
            try:
                dim_v = annihilator_dim(self.triangulation).dim_v
            except ReducibleError:
                dim_v = None
        return replace(self, betti=betti, tuple=tup, dim_v=dim_v)


def table2_row(k: int) -> DualTriangulation:
    for row, text, _ in TABLE2:
        if row == k:
            return DualTriangulation.from_rows(text)
    raise KeyError(f"no row {k} in the 11-facet table (rows 1-25)")


def load_table2() -> list[CatalogEntry]:
    entries = []
    for row, text, _ in TABLE2:
        t = DualTriangulation.from_rows(text)
        if t.m != 11:
            raise AssertionError(f"row {row} has {t.m} facets")
        entries.append(CatalogEntry(f"table2-row-{row}", f"table2-row-{row}", t))
    return entries


def printed_tuples() -> dict[int, BettiTuple]:
    return {row: tup for row, _, tup in TABLE2}


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------


def parse_planar_code(data: bytes) -> list[RotationSystem]:
    """Decode a planar_code stream (one-byte vertex counts)."""
    if not data.startswith(PLANAR_CODE_HEADER):
        raise PolytopeError("missing >>planar_code<< header")
    pos = len(PLANAR_CODE_HEADER)
    out = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise PolytopeError("graph with zero vertices")
        rotation = []
        for v in range(n):
            row = []
            while True:
                if pos >= len(data):
                    raise PolytopeError("truncated planar_code record")
                x = data[pos]
                pos += 1
                if x == 0:
                    break
                if x > n:
                    raise PolytopeError(f"neighbour {x} out of range for {n} vertices")
                row.append(x - 1)
            rotation.append(tuple(row))
        out.append(RotationSystem(tuple(rotation)))
    return out


def emit_planar_code(items: Iterable[RotationSystem | DualTriangulation]) -> bytes:
    chunks = [PLANAR_CODE_HEADER]
    for r in items:
        rot = r.rotation
        if len(rot) > 255:
            raise ValueError("planar_code output supports at most 255 vertices")
        buf = bytearray([len(rot)])
        for row in rot:
            buf.extend(u + 1 for u in row)
            buf.append(0)
        chunks.append(bytes(buf))
    return b"".join(chunks)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def triangulation_to_json(t: DualTriangulation) -> dict:
    return {"m": t.m, "labels": list(t.labels), "rotation": [list(r) for r in t.rotation]}


def triangulation_from_json(data: dict) -> DualTriangulation:
    rotation = tuple(tuple(r) for r in data["rotation"])
    if len(rotation) != data["m"]:
        raise PolytopeError("'m' does not match the rotation length")
    labels = tuple(data.get("labels") or default_labels(len(rotation)))
    return DualTriangulation(rotation, labels)


def read_polytopes(path: str, fmt: str) -> list[DualTriangulation]:
    """Read one or more polytopes in rows, planar or json format."""
    if fmt == "planar":
        with open(path, "rb") as fh:
            return [r.to_triangulation() for r in parse_planar_code(fh.read())]
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "rows":
        lines = [ln.strip() for ln in text.splitlines()]
        return [DualTriangulation.from_rows(ln) for ln in lines if ln and not ln.startswith("#")]
    if fmt == "json":
        data = json.loads(text)
        if isinstance(data, list):
            return [triangulation_from_json(d) for d in data]
        return [triangulation_from_json(data)]
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CollisionReport:
    groups: dict[tuple, list[CatalogEntry]] = field(default_factory=dict)

    @property
    def collisions(self) -> list[tuple[tuple, list[CatalogEntry]]]:
        return [(k, g) for k, g in self.groups.items() if len(g) >= 2]

    def collision_ids(self) -> list[set[str]]:
        return [{e.id for e in g} for _, g in self.collisions]

    def to_json(self) -> str:
        data = {
            "groups": len(self.groups),
            "collisions": [
                {
                    "tuple": list(k),
                    "members": [{"id": e.id, "dim_v": e.dim_v} for e in g],
                    "dim_v_separates": len({e.dim_v for e in g}) == len(g),
                }
                for k, g in self.collisions
            ],
        }
        return json.dumps(data, indent=2)


def _worker_count() -> int:
    env = os.environ.get("POLYBETTI_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def _complete(entry: CatalogEntry) -> CatalogEntry:
    return entry.with_invariants()


def complete_entries(entries: Sequence[CatalogEntry]) -> list[CatalogEntry]:
    """Fill in Betti tables, tuples and dim V, optionally in parallel."""
    workers = _worker_count()
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_complete, entries))
    return [_complete(e) for e in entries]


def _entry_sort_key(e: CatalogEntry) -> tuple:
    return (canonical_code(e.triangulation), e.id)


def classify(catalog: Sequence[CatalogEntry], allow_mixed: bool = False) -> CollisionReport:
    """Group entries by Betti tuple (or the full table when m != 11)."""
    ms = {e.triangulation.m for e in catalog}
    if len(ms) > 1 and not allow_mixed:
        raise ValueError(f"catalog mixes facet counts {sorted(ms)}")
    done = complete_entries(list(catalog))
    groups: dict[tuple, list[CatalogEntry]] = defaultdict(list)
    for e in done:
        key = e.tuple if e.tuple is not None else (e.triangulation.m,) + tuple(
            e.betti.cells()
        )
        groups[key].append(e)
    ordered = {k: sorted(groups[k], key=_entry_sort_key) for k in sorted(groups)}
    return CollisionReport(ordered)
