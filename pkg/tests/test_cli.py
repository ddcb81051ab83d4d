"""Command-line surface: formats, round trips, exit codes."""

import json
import re

import pytest

from adlv import cli
from adlv.gu import StratumClass, classify, s_admissible, stratum_record


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_table_minimal(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2  # header + single row
    assert "(1,2)" in lines[1] and "dl" in lines[1]


def test_classify_json_n5(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["n"] == 5
    assert len(data["strata"]) == 10
    nonempty = [s for s in data["strata"] if s["class"] != "empty"]
    assert len(nonempty) == 6
    not_dl = [s for s in data["strata"] if s["class"] == "not_dl"]
    assert [(s["k"], s["l"]) for s in not_dl] == [(3, 4)]
    assert not_dl[0]["target"] == {"k": 1, "l": 4}


def test_classify_json_roundtrip():
    # parse(emit(x)) reproduces every record field, n <= 14
    for n in range(2, 15):
        data = json.loads(json.dumps(cli.classify_json(n)))
        assert data == cli.classify_json(n)
        for s in data["strata"]:
            k, l = s["k"], s["l"]
            cls = classify(n, k, l)
            assert s["class"] == cls.value
            if cls is StratumClass.EMPTY:
                assert s["dim"] is None and s["parahoric"] is None
                continue
            rec = stratum_record(n, k, l)
            assert s["length"] == rec.length and s["dim"] == rec.dim
            assert s["parahoric"] == sorted(rec.parahoric)
            assert s["supp_sigma"] == sorted(rec.supp_sigma)
            assert s["s_w_sigma"] == sorted(rec.s_w_sigma)
            assert s["positive_coxeter"] == rec.positive_coxeter
            assert s["rank"] == rec.rank
            if rec.target is None:
                assert s["target"] is None
            else:
                assert s["target"] == {"k": rec.target.k, "l": rec.target.l}


def test_classify_json_deterministic():
    for n in (5, 13):
        a = json.dumps(cli.classify_json(n))
        b = json.dumps(cli.classify_json(n))
        assert a == b


_NODE_RE = re.compile(r'^  "w_\d+_\d+" \[label="w_\{\d+,\d+\}"\];$')
_EDGE_RE = re.compile(r'^  "w_\d+_\d+" -> "w_\d+_\d+";$')
_RANK_RE = re.compile(r'^  \{ rank=same;( "w_\d+_\d+";)+ \}$')


def _dot_is_well_formed(text):
    lines = text.splitlines()
    if lines[0] != "digraph strata {" or lines[-1] != "}":
        return False
    depth = 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
    if depth != 0:
        return False
    if text.count('"') % 2:
        return False
    for line in lines[1:-1]:
        if line == "  node [shape=box];":
            continue
        if not (_NODE_RE.match(line) or _EDGE_RE.match(line) or _RANK_RE.match(line)):
            return False
    return True


def test_classify_dot(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "13", "--format", "dot")
    assert code == 0
    assert _dot_is_well_formed(out)
    # node set matches the figure
    nodes = set(re.findall(r'"w_(\d+)_(\d+)" \[', out))
    assert len(nodes) == 42
    assert ("7", "12") in nodes and ("2", "4") in nodes and ("2", "8") not in nodes
    assert '"w_3_12" -> "w_1_12";' in out


def test_classify_usage_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--n", "1")
    assert code == 2
    assert "at least 2" in err


def test_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_figures(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "figures")
    assert code == 0
    assert "[ok] figures n=13" in out and "[ok] figures n=14" in out


def test_verify_oracle_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "oracle", "--n-max", "6")
    assert code == 0
    assert out.count("[ok]") == 5


def test_verify_reduction_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "reduction", "--n-max", "7")
    assert code == 0
    assert "chain convention" in out


def test_verify_reports_failure(monkeypatch, capsys):
    # force a failing check through the suite registry to pin the exit code
    def fake(n_max, budget):
        return [("forced", False, "injected counterexample (3,4)")]
    monkeypatch.setitem(cli.__dict__, "_suite_oracle", fake)
    code, out, _ = run_cli(capsys, "verify", "--suite", "oracle")
    assert code == 1
    assert "[FAIL] forced" in out


# ---------------------------------------------------------------------------
# element
# ---------------------------------------------------------------------------

def test_element_w15(capsys):
    code, out, _ = run_cli(capsys, "element", "--n", "5", "--word", "0,1,2",
                           "--omega", "-2")
    assert code == 0
    report = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert report["length"] == "3"
    assert report["omega"] == "-2"
    assert report["empty"] == "False"


def test_element_identity(capsys):
    code, out, _ = run_cli(capsys, "element", "--n", "5", "--word", "")
    assert code == 0
    report = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert report["length"] == "0"
    assert report["empty"].startswith("not applicable")


def test_element_empty_verdict_with_witness(monkeypatch, capsys):
    # the word of w_{4,10} at n=13: (s_0...s_7)(s_12 s_0 s_1) tau;
    # its length-positive set dwarfs the budget, but the witness comes early
    monkeypatch.setenv("ADLV_BFS_BUDGET", "20000")
    word = ",".join(str(i) for i in list(range(0, 8)) + [12, 0, 1])
    code, out, _ = run_cli(capsys, "element", "--n", "13", "--word", word,
                           "--omega", "-2")
    assert code == 0
    report = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert report["length"] == str(4 + 10 - 3)
    assert report["lp_size"].startswith("not computed")
    assert report["empty"] == "True"
    assert "witness" in report


def test_element_show_filter(capsys):
    code, out, _ = run_cli(capsys, "element", "--n", "5", "--word", "2",
                           "--show", "length,omega")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == ["length: 1", "omega: 0"]


def test_element_malformed_word(capsys):
    code, _, err = run_cli(capsys, "element", "--n", "5", "--word", "0,9")
    assert code == 2
    assert "out of range" in err
    code, _, err = run_cli(capsys, "element", "--n", "5", "--word", "a,b")
    assert code == 2
