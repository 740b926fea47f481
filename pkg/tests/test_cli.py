import json
import subprocess
import sys

import pytest

from graphsplice import cycle, to_plf
from graphsplice.cli import main
from graphsplice.formats import parse_graph, write_graph


@pytest.fixture
def k5_file(tmp_path):
    target = tmp_path / "k5.plfg"
    assert main(["gen", "complete", "5", "--out", str(target)]) == 0
    return target


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_writes_parseable_file(k5_file):
    g = parse_graph(k5_file.read_text())
    assert g.order == 5
    assert g.size == 10


def test_gen_to_stdout(capsys):
    code, out = run_cli(capsys, "gen", "cycle", "3")
    assert code == 0
    assert parse_graph(out) == cycle(3)


def test_gen_bipartite_takes_two_params(capsys):
    code, out = run_cli(capsys, "gen", "bipartite", "2", "2")
    assert code == 0
    assert parse_graph(out).size == 4


def test_gen_arity_error(capsys):
    assert main(["gen", "bipartite", "2"]) == 2


def test_gen_domain_error(capsys):
    assert main(["gen", "cycle", "2"]) == 2


def test_cut_k5_payload(capsys, k5_file):
    code, out = run_cli(capsys, "cut", "--rule", "2,3", str(k5_file))
    assert code == 0
    payload = json.loads(out)
    assert payload["power"] == 6
    assert payload["power_formula_left"] == 6
    assert payload["power_formula_right"] == 6
    assert payload["vcut"] is None
    assert payload["ecut"] == [
        [1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5],
    ]
    assert payload["prefix"]["intact"] == [[1, 2]]
    assert payload["suffix"]["intact"] == [[3, 4], [3, 5], [4, 5]]
    assert payload["prefix"]["half_vertex"] is None
    assert [h["anchor"] for h in payload["suffix"]["hanging"]] == [3, 4, 5, 3, 4, 5]


def test_cut_reflexive_payload(capsys, tmp_path):
    target = tmp_path / "p3.plfg"
    main(["gen", "path", "3", "--out", str(target)])
    code, out = run_cli(capsys, "cut", "--rule", "2,2", str(target))
    assert code == 0
    payload = json.loads(out)
    assert payload["vcut"] == 2
    assert payload["power"] == 0
    assert payload["power_formula_left"] is None
    assert payload["prefix"]["half_vertex"] == 2


def test_cut_bad_rule_exit_codes(capsys, k5_file):
    assert main(["cut", "--rule", "9,9", str(k5_file)]) == 2
    assert main(["cut", "--rule", "2:3", str(k5_file)]) == 2
    assert main(["cut", "--rule", "a,b", str(k5_file)]) == 2


def test_missing_file_is_usage_error(capsys):
    assert main(["cut", "--rule", "1,2", "no-such-file.plfg"]) == 2


def test_unparseable_file_exit(capsys, tmp_path):
    bad = tmp_path / "bad.plfg"
    bad.write_text("plfg 1\norder 2\nedge 1 1\n")
    assert main(["cut", "--rule", "1,2", str(bad)]) == 3


def test_verify_cap_exit(capsys):
    assert main(["verify", "--max-order", "8",
                 "--theorem", "power-formula"]) == 4


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_splice_products_and_files(capsys, tmp_path):
    c3 = tmp_path / "c3.plfg"
    c4 = tmp_path / "c4.plfg"
    outdir = tmp_path / "products"
    outdir.mkdir()
    main(["gen", "cycle", "3", "--out", str(c3)])
    main(["gen", "cycle", "4", "--out", str(c4)])
    code, out = run_cli(
        capsys, "splice", "--rule", "1,2:2,3",
        "--out", str(outdir), str(c3), str(c4),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert [r["direction"] for r in payload["products"]] == [1, 1, 2, 2]
    files = sorted(outdir.iterdir())
    assert [f.name for f in files] == [
        "product-001.plfg", "product-002.plfg",
        "product-003.plfg", "product-004.plfg",
    ]
    first = parse_graph(files[0].read_text())
    assert first.order == 3
    assert "direction 1" in files[0].read_text()


def test_splice_creates_missing_out_directory(capsys, tmp_path):
    c3 = tmp_path / "c3.plfg"
    main(["gen", "cycle", "3", "--out", str(c3)])
    outdir = tmp_path / "nested" / "products"
    code, out = run_cli(
        capsys, "splice", "--rule", "1,2:2,3",
        "--out", str(outdir), str(c3), str(c3),
    )
    assert code == 0
    assert json.loads(out)["count"] == 4
    names = sorted(f.name for f in outdir.iterdir())
    assert names == [
        "product-001.plfg", "product-002.plfg",
        "product-003.plfg", "product-004.plfg",
    ]


def test_splice_single_direction(capsys, tmp_path):
    c3 = tmp_path / "c3.plfg"
    main(["gen", "cycle", "3", "--out", str(c3)])
    code, out = run_cli(
        capsys, "splice", "--rule", "1,2:2,3",
        "--direction", "first", str(c3), str(c3),
    )
    assert code == 0
    assert json.loads(out)["count"] == 2


def test_splice_inapplicable_rule_exit(capsys, tmp_path):
    c3 = tmp_path / "c3.plfg"
    main(["gen", "cycle", "3", "--out", str(c3)])
    assert main(["splice", "--rule", "1,2:1,1", str(c3), str(c3)]) == 2


def test_lang_runs_the_worked_example(capsys, tmp_path):
    system = tmp_path / "two-cycles.plfs"
    system.write_text(
        "plfs 1\n"
        "axiom 3 : 1-2 2-3 1-3\n"
        "axiom 4 : 1-2 2-3 3-4 1-4\n"
        "rule 1,2 : 2,3\n"
        "max-iterations 1\n"
        "max-order 8\n"
    )
    code, out = run_cli(capsys, "lang", str(system))
    assert code == 0
    payload = json.loads(out)
    assert len(payload["classes"]) == 4
    assert payload["trace"][1]["raw_products"] == 16
    assert payload["saturated"] is False


def test_lang_output_is_byte_identical(capsys, tmp_path):
    system = tmp_path / "seed.plfs"
    system.write_text("plfs 1\naxiom 3 : 1-2 2-3 1-3\nrule 1,2 : 2,3\n")
    code_a, out_a = run_cli(capsys, "lang", str(system))
    code_b, out_b = run_cli(capsys, "lang", str(system))
    assert code_a == code_b == 0
    assert out_a == out_b


def test_verify_single_check_passes(capsys):
    code, out = run_cli(capsys, "verify", "--max-order", "4",
                        "--theorem", "power-formula")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["check"] == "power-formula"
    assert reports[0]["status"] == "verified"


def test_verify_reports_known_violation(capsys):
    # the blanket regularity claim fails on reflexive pairs, so the
    # exit code surfaces it
    code, out = run_cli(capsys, "verify", "--max-order", "3",
                        "--theorem", "regularity-preservation")
    assert code == 1
    reports = json.loads(out)
    assert reports[0]["status"] == "violated"
    assert reports[0]["extras"]["gap_rule_violations"] == 0


def test_verify_unknown_check(capsys):
    assert main(["verify", "--theorem", "flat-earth"]) == 2


def test_iso_verdicts(capsys, tmp_path):
    a = tmp_path / "a.plfg"
    b = tmp_path / "b.plfg"
    a.write_text(write_graph(cycle(3)))
    b.write_text(write_graph(to_plf(3, cycle(3).edges, (2, 3, 1))))
    code, out = run_cli(capsys, "iso", str(a), str(b))
    assert code == 0
    assert json.loads(out) == {"isomorphic": True}

    b.write_text(write_graph(cycle(4)))
    code, out = run_cli(capsys, "iso", str(a), str(b))
    assert code == 0
    assert json.loads(out) == {"isomorphic": False}


def test_export_dot(capsys, tmp_path):
    c3 = tmp_path / "c3.plfg"
    main(["gen", "cycle", "3", "--out", str(c3)])
    code, out = run_cli(capsys, "export-dot", str(c3))
    assert code == 0
    assert '2 [pos="2,0!"];' in out
    assert "1 -- 3;" in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "graphsplice", "gen", "cycle", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert parse_graph(proc.stdout) == cycle(4)
