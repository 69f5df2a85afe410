import json
import subprocess
import sys

import pytest

from tsallisnet.cli import main

TABLE2 = {0.5: "7.005657", 1: "2.976405", 1.5: "1.541335", 2.0: "0.945822", 2.5: "0.657896",
          3.0: "0.498362", 3.5: "0.399666", 4.0: "0.333261", 4.5: "0.285698", 5.0: "0.249996"}


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    assert main(["gen", "example", "-o", str(path)]) == 0
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys, example_file):
    code, out, _ = run(capsys, "info", example_file)
    assert code == 0
    assert out.splitlines()[0] == "nodes: 21, edges: 33, total degree: 66"
    assert "min 1, max 6" in out


def test_info_empty_and_comment_only(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    comments = tmp_path / "c.txt"
    comments.write_text("# nothing\n")
    for f in (empty, comments):
        code, out, err = run(capsys, "info", f)
        assert code == 2 and out == "" and "error" in err


def test_info_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3\n")
    code, _, err = run(capsys, "info", bad)
    assert code == 2 and "line 2" in err


def test_info_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "info", tmp_path / "nope.txt")
    assert code == 2


def test_info_warnings_on_stderr(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("1 2 0.5\n2 1\n")
    code, out, err = run(capsys, "info", f)
    assert code == 0 and "weight ignored" in err and "duplicate" in err and "warning" not in out


@pytest.mark.parametrize("q, expected", sorted(TABLE2.items()))
def test_entropy_table2(capsys, example_file, q, expected):
    code, out, _ = run(capsys, "entropy", example_file, "--q", q)
    assert code == 0 and out == expected + "\n"


def test_entropy_machine_formats(capsys, example_file):
    _, out, _ = run(capsys, "entropy", example_file, "--q", 1, "--format", "csv")
    assert out == "q,entropy\n1,2.976405168196328\n"
    _, out, _ = run(capsys, "entropy", example_file, "--q", 2, "--k", 2, "--format", "json")
    doc = json.loads(out)
    assert doc["entropy"] == pytest.approx(2 * 0.945821854912764, rel=1e-15) and doc["k"] == 2.0


def test_entropy_exit_codes(capsys, tmp_path):
    edgeless = tmp_path / "iso.net"
    edgeless.write_text("*Vertices 3\n*Edges\n")
    assert run(capsys, "entropy", edgeless, "--q", 2)[0] == 3
    isolated = tmp_path / "iso2.net"
    isolated.write_text("*Vertices 3\n*Edges\n1 2\n")
    assert run(capsys, "entropy", isolated, "--q", -1)[0] == 4
    assert run(capsys, "entropy", isolated, "--q", 2, "--k", 0)[0] == 4


def test_input_format_override(capsys, tmp_path):
    f = tmp_path / "graph.dat"
    f.write_text("*Vertices 2\n*Edges\n1 2\n")
    assert run(capsys, "info", f)[0] == 2
    code, out, _ = run(capsys, "info", f, "--input-format", "pajek")
    assert code == 0 and out.startswith("nodes: 2, edges: 1")


def test_sweep_defaults_csv(capsys, example_file):
    code, out, _ = run(capsys, "sweep", example_file, "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "q,entropy" and len(lines) == 52
    values = [float(ln.split(",")[1]) for ln in lines[1:]]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert lines[4].startswith("0.3,")


def test_sweep_table2_table_mode(capsys, example_file):
    code, out, _ = run(capsys, "sweep", example_file, "--q-min", 0.5, "--q-max", 5, "--q-step", 0.5)
    header, row = out.splitlines()
    assert header.split() == ["q"] + [format(q, "g") for q in TABLE2]
    assert row.split() == ["example"] + list(TABLE2.values())


def test_sweep_json(capsys, example_file):
    code, out, _ = run(capsys, "sweep", example_file, "--q-min", 0.5, "--q-max", 5, "--q-step", 0.5,
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["points"]) == 10
    assert doc["source"]["nodes"] == 21 and doc["source"]["edges"] == 33


def test_sweep_bad_range(capsys, example_file):
    assert run(capsys, "sweep", example_file, "--q-min", 2, "--q-max", 1)[0] == 5
    assert run(capsys, "sweep", example_file, "--q-step", 0)[0] == 5


def test_gen_er_complete(capsys, tmp_path):
    out = tmp_path / "k10.txt"
    assert run(capsys, "gen", "er", "--n", 10, "--p", 1, "-o", out)[0] == 0
    assert len(out.read_text().splitlines()) == 45


def test_gen_errors(capsys):
    assert run(capsys, "gen", "ba", "--n", 2, "--m", 5)[0] == 6
    assert run(capsys, "gen", "er", "--n", 10)[0] == 6
    assert run(capsys, "gen", "er", "--n", 10, "--p", 2)[0] == 6


def test_gen_pajek_output_keeps_isolated(capsys, tmp_path):
    out = tmp_path / "er.net"
    assert run(capsys, "gen", "er", "--n", 30, "--p", 0.02, "--seed", 1, "-o", out)[0] == 0
    _, info, _ = run(capsys, "info", out)
    assert info.startswith("nodes: 30") and "min 0" in info


def test_gen_stdout_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "ba", "--n", 40, "--m", 2, "--seed", 5)
    _, b, _ = run(capsys, "gen", "ba", "--n", 40, "--m", 2, "--seed", 5)
    assert a == b and len(a.splitlines()) == 3 + 37 * 2


def test_pipeline_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "tsallisnet", "gen", "example"],
                         capture_output=True, check=True)
    for q, expected in TABLE2.items():
        out = subprocess.run([sys.executable, "-m", "tsallisnet", "entropy", "-", "--q", str(q)],
                             input=gen.stdout, capture_output=True, check=True)
        assert abs(float(out.stdout) - float(expected)) <= 5e-7
        assert out.stdout.decode() == expected + "\n"
