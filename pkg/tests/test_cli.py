import json
import subprocess
import sys

import pytest

from qdham import graph as G
from qdham.cli import main
from qdham.graph6 import emit_graph6

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_compute_report_fields(capsys):
    code, rep = run_json(capsys, "compute", "--expr", "join(kn(4), e(4))", "-t", "6")
    assert code == 0
    assert list(rep)[:4] == ["input", "g6", "n", "m"]
    assert rep["n"] == 8 and rep["m"] == 22
    assert rep["rho_d"] == pytest.approx(18.0, abs=1e-6)
    assert rep["verdicts"][0]["outcome"] == "ConditionNotMet"
    assert rep["tol"] == "1e-10"


def test_float_format_six_decimals(capsys):
    _, out = run(capsys, "compute", "--expr", "join(kn(5), e(6))")
    assert '"rho_d": 27.262' in out
    frac = out.split('"rho_d": ')[1].split(",")[0]
    assert len(frac.split(".")[1]) == 6


def test_compute_deterministic(capsys):
    _, a = run(capsys, "compute", "--expr", "h(2,4)", "-t", "3", "--matrices")
    _, b = run(capsys, "compute", "--expr", "h(2,4)", "-t", "3", "--matrices")
    assert a == b


def test_emit_g6_round_trip(capsys):
    _, g6 = run(capsys, "compute", "--expr", "join(kn(3), bip(2, 5))", "--emit-g6")
    g6 = g6.strip()
    _, via_g6 = run_json(capsys, "compute", "--g6", g6, "-t", "6")
    _, via_expr = run_json(capsys, "compute", "--expr", "join(kn(3), bip(2, 5))", "-t", "6")
    via_g6.pop("input")
    via_expr.pop("input")
    assert via_g6 == via_expr


def test_edge_list_input(capsys, tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, rep = run_json(capsys, "compute", "--edges", str(f))
    assert code == 0 and rep["g6"] == emit_graph6(G.cycle(5))
    assert rep["rho_d"] == pytest.approx(12.0)


def test_check_theorem3(capsys):
    code, v = run_json(capsys, "check", "--expr", "bip(4,4)", "-t", "3")
    assert code == 0 and v["outcome"] == "ConditionMet" and v["conclusion"] == "hamiltonian"


@pytest.mark.parametrize(
    "prop,expr,holds",
    [
        ("ham-connected", "join(kn(3), union(kn(3), e(2)))", False),
        ("ham-cycle", "h(2,4)", False),
        ("ham-path", "kn(5)", True),
        ("traceable-all", "join(kn(2), union(kn(3), e(2)))", False),
    ],
)
def test_oracle_examples(capsys, prop, expr, holds):
    code, ans = run_json(capsys, "oracle", "--prop", prop, "--expr", expr)
    assert code == 0 and ans["holds"] is holds
    if holds:
        assert sorted(ans["witness"]) == list(range(5))


def test_oracle_between(capsys):
    code, ans = run_json(capsys, "oracle", "--prop", "ham-path-between", "--expr", "path(4)", "--u", "0", "--v", "3")
    assert ans["witness"] == [0, 1, 2, 3]
    code, ans = run_json(capsys, "oracle", "--prop", "ham-path-between", "--expr", "path(4)")
    assert code == 2 and ans["error"]["type"] == "InvalidParameter"


def test_size_limit_exit_code(capsys):
    code, err = run_json(capsys, "oracle", "--prop", "ham-connected", "--expr", "kn(17)")
    assert code == 4 and err["error"]["type"] == "size-limit"
    code, _ = run_json(capsys, "oracle", "--prop", "ham-cycle", "--expr", "cycle(6)", "--limit-n", "5")
    assert code == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--expr", "kn("],
        ["compute", "--g6", "D?"],
        ["compute", "--expr", "union(kn(2), kn(2))"],
        ["compute", "--edges", "/nonexistent/file"],
    ],
)
def test_input_errors(capsys, argv):
    code, err = run_json(capsys, *argv)
    assert code == 2 and set(err["error"]) == {"type", "message"}


def test_tables_flags_mismatch(capsys):
    code, out = run_json(capsys, "tables", "--table", "1")
    assert code == 0 and out["flagged"] == []
    assert len(out["rows"]) == 10
    code, out = run_json(capsys, "tables", "--table", "2")
    assert code == 3
    assert out["flagged"] == [{"table": 2, "graph": "K3v(K1,4+K1)"}]


def test_tables_pretty(capsys):
    code, out = run(capsys, "tables", "--pretty")
    assert code == 3 and "MISMATCH" in out and "K6v6K1" in out


def test_audit_small_corpus(capsys):
    corpus = DATA / "graphs_n6.g6"
    code, s = run_json(capsys, "audit", "--corpus", str(corpus), "-t", "8")
    assert code == 0 and s["counterexamples"] == [] and s["scanned"] == 156
    assert s["counts"]["8"]["Inapplicable"] < 156


def test_audit_deterministic_and_parallel(capsys):
    corpus = str(DATA / "graphs_n5.g6")
    _, a = run(capsys, "audit", "--corpus", corpus)
    _, b = run(capsys, "audit", "--corpus", corpus)
    _, c = run(capsys, "audit", "--corpus", corpus, "--workers", "2")
    assert a == b == c


def test_audit_skips(capsys, tmp_path):
    f = tmp_path / "mixed.g6"
    f.write_text("# comment\nBw\n!!bad\n" + emit_graph6(G.complete(6)) + "\n")
    code, s = run_json(capsys, "audit", "--corpus", str(f), "--limit-n", "5")
    assert code == 0 and s["scanned"] == 1
    assert s["skipped"] == {"over-limit-n": 1, "parse-error": 1}


def test_audit_reports_counterexample(capsys, tmp_path, monkeypatch):
    from qdham import audit

    monkeypatch.setitem(audit.ORACLE_FOR, "hamilton-connected", lambda g: False)
    f = tmp_path / "k8.g6"
    f.write_text(emit_graph6(G.complete(8)) + "\n")
    code, s = run_json(capsys, "audit", "--corpus", str(f), "-t", "6")
    assert code == 3
    (ce,) = s["counterexamples"]
    assert ce["g6"] == emit_graph6(G.complete(8)) and ce["report"]["n"] == 8


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "qdham", "compute", "--expr", "kn(3)", "--emit-g6"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "Bw"
