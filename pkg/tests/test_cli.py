import io
import json
import subprocess
import sys

import pytest

from ceigraph import graph6
from ceigraph.canon import canonical_form
from ceigraph.cli import ReportDocument, main
from ceigraph.graph import Graph, complete_graph, path_graph

P4 = graph6.encode(path_graph(4))


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, stdout=out, stderr=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_compute_cei():
    code, out, _ = run(["compute", "--index", "cei"], "Bw\n")
    assert code == 0
    (rec,) = records(out)
    assert rec["cei"] == "6/1" and rec["graph6"] == "Bw" and rec["n"] == 3 and rec["edges"] == 3
    assert rec["cei_decimal"] == "6.000000"


def test_compute_all():
    code, out, _ = run(["compute"], P4 + "\n")
    (rec,) = records(out)
    assert code == 0
    assert (rec["cei"], rec["eci"], rec["diameter"]) == ("8/3", 14, 3)
    assert rec["cei_decimal"] == "2.666667"


def test_compute_errors_continue_then_exit_1():
    disconnected = graph6.encode(Graph.from_edges(3, [(0, 1)]))
    code, out, _ = run(["compute", "--index", "cei"], f"Bw\nnot graph6!\n{disconnected}\nC~\n")
    recs = records(out)
    assert code == 1
    assert [("error" in r) for r in recs] == [False, True, True, False]
    assert recs[3]["cei"] == "12/1"


def test_compute_reads_file(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Bw\nC~\n")
    code, out, _ = run(["compute", "--index", "eci", "--input", str(f)])
    assert code == 0 and [r["eci"] for r in records(out)] == [6, 12]


def test_construct_g():
    code, out, _ = run(["construct", "g-nkd", "--n", "6", "--k", "1", "--d", "4"])
    assert code == 0
    (line,) = out.split()
    assert graph6.decode(line).n == 6


def test_construct_h_family_lines():
    code, out, _ = run(["construct", "h-family", "--n", "8", "--k", "1", "--d", "3"])
    assert code == 0 and len(out.split()) == 5
    code, out, _ = run(["construct", "h-family", "--n", "8", "--k", "1", "--d", "3", "--s", "2"])
    assert code == 0 and len(out.split()) == 1


def test_construct_infeasible():
    code, out, err = run(["construct", "m-delta", "--n", "6", "--k", "1", "--delta", "4"])
    assert code == 1 and out == ""
    assert "2*delta-k+2" in err


def test_construct_missing_option():
    code, _, err = run(["construct", "s-alpha", "--n", "6", "--k", "2"])
    assert code == 1 and "--alpha" in err


def test_enumerate_examples():
    code, out, err = run(["enumerate", "--class", "diam", "--n", "4", "--k", "1", "--value", "3"])
    assert code == 0 and canonical_form(path_graph(4)) in out.split()
    assert json.loads(err)["count"] == len(out.split())
    code, out, _ = run(["enumerate", "--class", "alpha", "--n", "4", "--k", "1", "--value", "1"])
    assert out == "C~\n"
    code, out, _ = run(["enumerate", "--class", "delta", "--n", "5", "--k", "4", "--value", "4"])
    assert out.split() == [canonical_form(complete_graph(5))] == ["D~{"]


def test_enumerate_cap(monkeypatch):
    code, _, err = run(["enumerate", "--class", "diam", "--n", "8", "--k", "1", "--value", "3", "--cap", "7"])
    assert code == 1 and "cap" in err
    monkeypatch.setenv("CEIGRAPH_CAP", "5")
    code, _, err = run(["enumerate", "--class", "diam", "--n", "6", "--k", "1", "--value", "3"])
    assert code == 1 and "cap" in err


def test_enumerate_from_stdin_stream():
    lines = "\n".join(graph6.encode(path_graph(4).relabel(p)) for p in ([0, 1, 2, 3], [2, 0, 3, 1])) + "\nC~\n"
    code, out, err = run(["enumerate", "--class", "diam", "--n", "4", "--k", "1", "--value", "3", "--input", "-"], lines)
    assert code == 0 and out.split() == [canonical_form(path_graph(4))]


def test_verify_confirmed():
    code, out, _ = run(["verify", "t1", "--n", "6", "--k", "1", "--d", "4", "--workers", "1"])
    assert code == 0
    doc = ReportDocument.from_json(out)
    assert doc.results["verdict"] == "CONFIRMED"
    assert doc.results["observed"]["max_cei"] == "11/2"
    assert doc.timing["elapsed_ms"] >= 0
    assert doc.parameters["connectivity"] == "at-least"


def test_verify_lemma1():
    code, out, _ = run(["verify", "lemma1", "--max-n", "6", "--workers", "1"])
    doc = json.loads(out)
    assert code == 0 and doc["results"]["pairs_checked"] > 0 and doc["results"]["violations"] == []


def test_verify_infeasible():
    code, out, err = run(["verify", "t3", "--n", "6", "--k", "2", "--delta", "5"])
    assert code == 1 and out == "" and err.startswith("error:")


def test_verify_refuted_exit_2():
    code, out, _ = run(["verify", "t2", "--n", "6", "--k", "2", "--alpha", "2", "--connectivity", "at-least", "--workers", "1"])
    assert code == 2 and json.loads(out)["results"]["verdict"] == "REFUTED"


def test_verify_empty_class_exit_3(tmp_path):
    f = tmp_path / "k6.g6"
    f.write_text(graph6.encode(complete_graph(6)) + "\n")
    code, out, _ = run(["verify", "t1", "--n", "6", "--k", "1", "--d", "4", "--input", str(f)])
    assert code == 3 and json.loads(out)["results"]["verdict"] == "EMPTY_CLASS"


def test_verify_env_input(tmp_path, monkeypatch):
    f = tmp_path / "k6.g6"
    f.write_text(graph6.encode(complete_graph(6)) + "\n")
    monkeypatch.setenv("CEIGRAPH_INPUT", str(f))
    code, out, _ = run(["verify", "t1", "--n", "6", "--k", "1", "--d", "4"])
    assert code == 3 and json.loads(out)["parameters"]["input"] == str(f)


def test_usage_errors_exit_1():
    assert run(["verify", "t9"])[0] == 1
    assert run(["frobnicate"])[0] == 1
    assert run(["verify", "t1", "--n", "6", "--k", "1"])[0] == 1
    assert run(["verify", "t1", "--n", "x"])[0] == 1


def test_bad_env_worker_count(monkeypatch):
    monkeypatch.setenv("CEIGRAPH_WORKERS", "many")
    code, _, err = run(["verify", "t1", "--n", "6", "--k", "1", "--d", "4"])
    assert code == 1 and "CEIGRAPH_WORKERS" in err


def test_report_document_roundtrip():
    doc = ReportDocument("verify t1", {"n": 6}, {"verdict": "CONFIRMED"}, timing={"elapsed_ms": 1.5})
    again = ReportDocument.from_json(doc.to_json())
    assert again == doc
    assert "timing" not in json.loads(doc.to_json(include_timing=False))


def test_no_timing_is_byte_stable():
    argv = ["verify", "t3", "--n", "6", "--k", "2", "--delta", "3", "--no-timing", "--workers", "1"]
    first, second = run(argv)[1], run(argv)[1]
    assert first == second and "elapsed_ms" not in first
    assert list(json.loads(first)) == sorted(json.loads(first))


def test_every_emitted_line_decodes():
    emitted = []
    for argv in (
        ["construct", "h-family", "--n", "9", "--k", "1", "--d", "5"],
        ["construct", "s-alpha", "--n", "7", "--k", "2", "--alpha", "3"],
        ["construct", "m-delta", "--n", "7", "--k", "2", "--delta", "2"],
        ["enumerate", "--class", "delta", "--n", "6", "--k", "1", "--value", "2"],
    ):
        code, out, _ = run(argv)
        assert code == 0
        emitted += out.split()
    code, out, _ = run(["verify", "t1", "--n", "8", "--k", "1", "--d", "3", "--no-timing"])
    emitted += json.loads(out)["results"]["expected"]
    assert emitted
    for line in emitted:
        graph6.decode(line)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ceigraph", "compute", "--index", "cei"],
        input="C~\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["cei"] == "12/1"


@pytest.mark.parametrize("flag", ["--version", "--help"])
def test_info_flags_exit_0(flag, capsys):
    assert main([flag]) == 0
