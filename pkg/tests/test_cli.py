import json
import subprocess
import sys

import pytest

from polybetti.catalog import PLANAR_CODE_HEADER, parse_planar_code
from polybetti.cli import main
from polybetti.verify import TABLE1


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def table1_csv():
    cells = sorted(TABLE1.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    return "i,j,beta\n" + "".join(f"{i},{j},{v}\n" for (i, j), v in cells)


def test_betti_row12(capsys):
    code, out, _ = run(capsys, "betti", "--table2-row", "12")
    assert code == 0 and out == table1_csv()


def test_betti_koszul_route(capsys):
    code, out, _ = run(capsys, "betti", "--table2-row", "24", "--koszul")
    assert code == 0 and out == table1_csv()


def test_annihilator_row24(capsys):
    code, out, _ = run(capsys, "annihilator", "--table2-row", "24")
    assert code == 0 and json.loads(out)["dim_v"] == 20


def test_belts(capsys):
    code, out, _ = run(capsys, "belts", "--table2-row", "12")
    assert code == 0
    assert out == "3-belts (0):\n4-belts (4): acie bcde bcie fghj\n"


def test_enumerate_rows_and_planar(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5")
    assert code == 0 and len(out.splitlines()) == 1
    proc = subprocess.run(
        [sys.executable, "-m", "polybetti", "enumerate", "--n", "8", "--irreducible", "--output-format", "planar"],
        capture_output=True,
        check=True,
    )
    assert proc.stdout.startswith(PLANAR_CODE_HEADER)
    assert len(parse_planar_code(proc.stdout)) == 2


def test_input_files(tmp_path, capsys, P):
    f = tmp_path / "p.txt"
    f.write_text(P.to_rows() + "\n")
    code, out, _ = run(capsys, "betti", str(f))
    assert code == 0 and out == table1_csv()
    g = tmp_path / "p.json"
    g.write_text(json.dumps({"m": 11, "labels": list(P.labels), "rotation": [list(r) for r in P.rotation]}))
    code, out2, _ = run(capsys, "betti", str(g), "--format", "json")
    assert out2 == out


def test_classify_file(tmp_path, capsys, P, Q):
    f = tmp_path / "cat.txt"
    f.write_text(P.to_rows() + "\n" + Q.to_rows() + "\n")
    code, out, _ = run(capsys, "classify", "--catalog", str(f))
    data = json.loads(out)
    assert code == 0 and len(data["collisions"]) == 1
    assert sorted(m["dim_v"] for m in data["collisions"][0]["members"]) == [20, 22]


def test_validation_errors_exit_1(tmp_path, capsys, stacked):
    f = tmp_path / "bad.txt"
    f.write_text("bd,ac,bd,ac\n")
    assert run(capsys, "betti", str(f))[0] == 1
    assert run(capsys, "betti", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "betti", "--table2-row", "40")[0] == 1
    reducible = tmp_path / "stacked.txt"
    reducible.write_text(stacked.to_rows() + "\n")
    assert run(capsys, "belts", str(reducible))[0] == 0
    code, _, err = run(capsys, "annihilator", str(reducible))
    assert code == 1 and "3-belts" in err


def test_usage_errors_exit_2(capsys):
    for argv in ([], ["frobnicate"], ["enumerate"], ["enumerate", "--n", "40"], ["betti"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_deterministic_output(capsys):
    first = run(capsys, "classify", "--table2")[1]
    second = run(capsys, "classify", "--table2")[1]
    assert first == second
