import csv
import io
import json
import subprocess
import sys

import pytest

from proxrem.cli import main
from proxrem.graph import complete_bipartite_graph, format_edge_list, path_graph
from proxrem.sequences import construct_y, format_seq


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p5_file(tmp_path):
    f = tmp_path / "p5.txt"
    f.write_text(format_edge_list(path_graph(5)))
    return str(f)


@pytest.fixture
def k33_file(tmp_path):
    f = tmp_path / "k33.txt"
    f.write_text(format_edge_list(complete_bipartite_graph(3, 3)))
    return str(f)


def test_metrics_p5(capsys, p5_file):
    code, out, _ = run(capsys, "metrics", p5_file)
    data = json.loads(out)
    assert code == 0
    assert data["remoteness"] == {"num": 5, "den": 2}
    assert list(data) == ["n", "m", "min_degree", "radius", "diameter", "proximity",
                          "remoteness", "triangle_free", "c4_free"]


def test_metrics_k33(capsys, k33_file):
    code, out, _ = run(capsys, "metrics", k33_file)
    data = json.loads(out)
    assert data["proximity"] == {"num": 7, "den": 5} and data["c4_free"] is False


def test_metrics_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("0 1\n1 2\noops\n")
    code, _, err = run(capsys, "metrics", str(f))
    assert code == 2 and "line 3" in err


def test_metrics_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "metrics", str(tmp_path / "nope.txt"))
    assert code == 2 and "error" in err


def test_metrics_disconnected(capsys, tmp_path):
    f = tmp_path / "two.txt"
    f.write_text("0 1\n2 3\n")
    code, _, err = run(capsys, "metrics", str(f))
    assert code == 2 and "disconnected" in err


def test_construct_sequences(capsys):
    assert run(capsys, "construct", "z", "--n", "16", "--delta", "3")[1] == "1,1,6,1,1,1,1,4\n"
    code, _, err = run(capsys, "construct", "w", "--n", "16", "--delta", "3")
    assert code == 2 and "delta >= 4" in err
    code, _, err = run(capsys, "construct", "x", "--n", "18")
    assert code == 2 and "--delta" in err


def test_construct_polarity_q2(capsys):
    code, out, _ = run(capsys, "construct", "polarity", "--q", "2")
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert code == 0 and lines[0] == "n 7" and len(lines) == 1 + 9


def test_construct_pruned_has_terminal_comments(capsys):
    _, out, _ = run(capsys, "construct", "pruned", "--q", "4")
    assert out.splitlines()[:2] == ["# u 4", "# v 9"]


def test_construct_gx_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "construct", "gx", "--n", "24", "--delta", "3")
    f = tmp_path / "gx.txt"
    f.write_text(out)
    _, out, _ = run(capsys, "metrics", str(f))
    data = json.loads(out)
    assert data["n"] == 24 and data["min_degree"] == 3


def test_maximize(capsys):
    code, out, _ = run(capsys, "maximize", "--family", "a", "--n", "18", "--delta", "3")
    data = json.loads(out)
    assert code == 0 and data["best_g"] == 85 and data["exhaustive"] is True
    data = json.loads(run(capsys, "maximize", "--family", "c", "--n", "16", "--delta", "3")[1])
    assert data["best_g"] == 59


def test_maximize_infeasible_vs_budget(capsys):
    data = json.loads(run(capsys, "maximize", "--family", "a", "--n", "5", "--delta", "3")[1])
    assert data["status"] == "infeasible"
    data = json.loads(run(capsys, "maximize", "--family", "b", "--n", "60", "--delta", "3",
                          "--node-budget", "20")[1])
    assert data["status"] == "truncated" and data["exhaustive"] is False
    data = json.loads(run(capsys, "maximize", "--family", "a", "--n", "18", "--delta", "3",
                          "--cap", "2")[1])
    assert data["exhaustive"] is False


def test_localopt_y68(capsys):
    seq = format_seq(construct_y(68, 4))
    code, out, _ = run(capsys, "localopt", "--family", "b", "--n", "68", "--delta", "4",
                       "--seq", seq)
    data = json.loads(out)
    assert code == 0 and data["beating_moves"] == [] and data["locally_optimal"]


def test_props_all_k33(capsys, k33_file):
    code, out, _ = run(capsys, "props", k33_file, "--all")
    data = json.loads(out)
    rows = [r for r in data["rows"] if r["check"] == "A"]
    assert code == 0 and len(rows) == 6 and all(r["passed"] for r in rows)


def test_props_vertex(capsys, p5_file):
    data = json.loads(run(capsys, "props", p5_file, "--vertex", "4")[1])
    assert {r["vertex"] for r in data["rows"]} == {4}


def test_audit_gx18(capsys, tmp_path):
    _, out, _ = run(capsys, "construct", "gx", "--n", "18", "--delta", "3")
    f = tmp_path / "gx.txt"
    f.write_text(out)
    code, out, _ = run(capsys, "audit", str(f))
    data = json.loads(out)
    row = next(b for b in data["bounds"] if b["name"] == "rho_trianglefree_seq")
    assert row["margin"] == {"num": 0, "den": 1}
    assert code == 3 and data["status"] == "paper-discrepancy"


def test_audit_path_exit_zero(capsys, p5_file):
    assert run(capsys, "audit", p5_file)[0] == 0


def test_sweep_chain(capsys):
    code, out, _ = run(capsys, "sweep", "--kind", "chain", "--q", "5", "--k", "2..8")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0])[:9] == ["kind", "params", "n", "delta", "invariant", "bound_name",
                                 "bound_num", "bound_den", "margin_sign"]
    assert len({r["params"] for r in rows}) == 7
    assert all(r["margin_sign"] in ("0", "1") for r in rows)


def test_sweep_sequences_and_probe(capsys):
    code, out, _ = run(capsys, "sweep", "--kind", "x", "--n", "18..30", "--delta", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 13
    assert code == 3  # n = 21 and 27 exceed the closed form
    code, out, _ = run(capsys, "sweep", "--kind", "probe", "--delta", "4")
    assert code == 3 and "g_w_polynomial" in out


def test_unknown_flag_is_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["metrics", "x.txt", "--delta", "3"])
    assert exc.value.code == 2


def test_bad_range(capsys):
    with pytest.raises(SystemExit):
        main(["sweep", "--kind", "chain", "--q", "5", "--k", "8..2"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "proxrem", "construct", "z", "--n", "17",
                          "--delta", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1,1,6,1,1,1,1,4,1"
