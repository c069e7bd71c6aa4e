from __future__ import annotations

import io
import subprocess
import sys

import pytest

from cubiclab.cli import main
from cubiclab.codec import decode_graph6, encode_graph6, write_adjlist
from cubiclab.constructions import heawood, k33
from cubiclab.symmetry import certificate


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_generate_graph6():
    code, out = run("generate", "-n", "14")
    assert code == 0
    (line,) = out.split()
    assert certificate(decode_graph6(line)) == certificate(heawood())


def test_generate_count_and_split():
    assert run("generate", "-n", "20", "--count-only") == (0, "10\n")
    shares = [run("generate", "-n", "18", "--split", f"{k}/3")[1].split() for k in range(3)]
    assert sorted(x for s in shares for x in s) == sorted(run("generate", "-n", "18")[1].split())


@pytest.mark.parametrize("argv", [["generate", "-n", "15"], ["generate", "-n", "14", "-g", "5"],
                                  ["generate", "-n", "14", "--split", "3/3"], ["scan", "14", "-g", "7"],
                                  ["frobnicate"], []])
def test_bad_arguments_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_analyze_stdin_with_error_line():
    text = encode_graph6(k33()) + "\nnot graph6!\n" + encode_graph6(heawood()) + "\n"
    code, out = run("analyze", "--fields", "n,two_factor_hamiltonian", stdin=text)
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "# n\ttwo_factor_hamiltonian"
    assert lines[1] == "6\ttrue"
    assert lines[2].startswith("# error\tline 2\t")
    assert lines[3] == "14\ttrue"


def test_analyze_adjlist_file_with_witnesses(tmp_path, named_graphs):
    p = tmp_path / "mk.adj"
    p.write_text(write_adjlist(named_graphs["MoebiusKantor"]))
    code, out = run("analyze", "--witnesses", str(p))
    assert code == 0
    header, row = out.splitlines()
    cols = dict(zip(header[2:].split("\t"), row.split("\t")))
    assert cols["pseudo_2fi"] == "false" and cols["aut_group_size"] == "96"
    assert cols["witnesses"].startswith("pseudo:")


def test_analyze_unknown_field():
    assert run("analyze", "--fields", "n,colour", stdin="")[0] == 2


def test_verify_counterexample():
    code, out = run("verify-counterexample")
    assert code == 0
    assert out.count("PASS\t") == 13 and out.rstrip().endswith("13/13 checks passed")


def test_verify_other_graph_fails(tmp_path):
    p = tmp_path / "h.g6"
    p.write_text(encode_graph6(heawood()) + "\n")
    code, out = run("verify-counterexample", "--graph", str(p))
    assert code == 1 and "FAIL\t30 vertices" in out


def test_crosscheck(tmp_path):
    text = "\n".join(encode_graph6(g) for g in (k33(), heawood())) + "\n"
    assert run("crosscheck", stdin=text) == (0, "agreement 2/2\n")


def test_scan_small():
    code, out = run("scan", "18")
    assert code == 0
    assert "# order 18\tgraphs=3" in out
    assert out.rstrip().endswith("# survivors 2")


def test_seed_fixtures(tmp_path):
    code, out = run("--seed-fixtures", str(tmp_path))
    assert code == 0
    assert (tmp_path / "Heawood.g6").read_text().strip() == encode_graph6(heawood())
    assert len(list(tmp_path.iterdir())) == 10


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cubiclab", "generate", "-n", "16", "--count-only"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "1\n"


def test_verify_pappus_fixture(tmp_path, named_graphs):
    p = tmp_path / "pappus.adj"
    p.write_text(write_adjlist(named_graphs["Pappus"]))
    code, out = run("verify-counterexample", "--graph", str(p))
    assert code == 1
    assert out.splitlines()[0].startswith("FAIL\t30 vertices")


def test_crosscheck_skips_non_cubic():
    c6 = "\n".join(f"{i}: {(i - 1) % 6} {(i + 1) % 6}" for i in range(6))
    code, out = run("crosscheck", stdin=c6 + "\n")
    assert code == 0
    assert out == "# skipped\tline 1\tnot cubic\nagreement 0/0\n"


def test_analyze_parallel_keeps_order():
    graphs = run("generate", "-n", "16", "-g", "4")[1]
    serial = run("analyze", "--fields", "certificate,two_factor_count", stdin=graphs)
    parallel = run("analyze", "--fields", "certificate,two_factor_count", "-j", "2", stdin=graphs)
    assert serial == parallel and serial[1].count("\n") == 39
