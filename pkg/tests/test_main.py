import pytest

from threearc.config.settings import CONFIG_ENV
from threearc.core.io import parse_edge_list
from threearc.main import run

from conftest import PETERSEN_EDGES

PETERSEN_TEXT = "10 15\n" + "".join(f"{u} {v}\n" for u, v in PETERSEN_EDGES)
K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
C5_TEXT = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.setenv("HOME", str(tmp_path / "home"))


def test_hamcycle_prints_a_closed_cycle(write_graph, capsys):
    assert run(["hamcycle", write_graph(PETERSEN_TEXT)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 31
    assert lines[0] == lines[-1]


def test_hamcycle_writes_a_certificate_that_verifies(write_graph, tmp_path, capsys):
    graph = write_graph(PETERSEN_TEXT)
    certificate = str(tmp_path / "cycle.cert")
    assert run(["hamcycle", graph, "--output", certificate]) == 0
    capsys.readouterr()
    assert run(["verify", graph, certificate]) == 0
    assert capsys.readouterr().out.strip() == "valid cycle with 30 arcs"


def test_hampath_endpoints(write_graph, capsys):
    assert run(["hampath", write_graph(K4_TEXT), "0", "1", "2", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 12
    assert (lines[0], lines[-1]) == ("0>1", "2>3")


def test_hampath_rejects_a_foreign_arc(write_graph):
    assert run(["hampath", write_graph(C5_TEXT), "0", "2", "1", "2"]) == 2


def test_check_reports_failures(write_graph, capsys):
    assert run(["check", write_graph(C5_TEXT)]) == 1
    assert "(b) no adjacent degree-2 vertices: false" in capsys.readouterr().out


def test_check_paths(write_graph, capsys):
    assert run(["check", write_graph(K4_TEXT), "--paths"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "X(G) Hamilton-connected by construction: true"


def test_hamcycle_on_a_failing_graph_prints_the_report(write_graph, capsys):
    assert run(["hamcycle", write_graph(C5_TEXT)]) == 1
    assert "X(G) hamiltonian: false" in capsys.readouterr().out


def test_xgraph_output_parses(write_graph, capsys):
    assert run(["xgraph", write_graph(K4_TEXT), "--emit-arc-index"]) == 0
    out = capsys.readouterr().out
    xgraph = parse_edge_list(out)
    assert (xgraph.vertex_count, xgraph.edge_count) == (12, 24)
    index_lines = [line for line in out.splitlines() if line.startswith("#")]
    assert index_lines[0] == "# 0 0 1"
    assert len(index_lines) == 12


def test_iterate_with_certificates(write_graph, capsys):
    assert run(["iterate", write_graph(K4_TEXT), "2", "--certify"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "X^1(G): 12 vertices, 24 edges",
        "X^1(G): verified Hamilton cycle on 12 vertices",
        "X^2(G): 48 vertices, 216 edges",
        "X^2(G): verified Hamilton cycle on 48 vertices",
    ]


def test_iterate_with_path_certificates(write_graph, capsys):
    assert run(["iterate", write_graph(K4_TEXT), "1", "--certify-paths"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "X^1(G): verified 132 Hamilton paths"


def test_iterate_size_cap(write_graph):
    assert run(["iterate", write_graph(K4_TEXT), "3", "--max-vertices", "100"]) == 2


def test_verify_rejects_a_broken_certificate(write_graph, tmp_path, capsys):
    certificate = tmp_path / "broken.cert"
    certificate.write_text("path 2\n0>1\n2>3\n")
    assert run(["verify", write_graph(K4_TEXT), str(certificate)]) == 1
    assert capsys.readouterr().out.startswith("invalid path: wrong-length")


@pytest.mark.parametrize("text", ["3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 0\n", "x y\n"])
def test_malformed_graphs(write_graph, text):
    assert run(["check", write_graph(text)]) == 2


def test_undecodable_graph(tmp_path):
    path = tmp_path / "latin.g"
    path.write_bytes(b"2 1\n0 1 \xff\n")
    assert run(["check", str(path)]) == 2


def test_undecodable_certificate(write_graph, tmp_path):
    certificate = tmp_path / "latin.cert"
    certificate.write_bytes(b"path 1\n0>1\xe9\n")
    assert run(["verify", write_graph(K4_TEXT), str(certificate)]) == 2


def test_missing_file(tmp_path):
    assert run(["check", str(tmp_path / "absent.g")]) == 2


def test_bad_settings_file(write_graph, tmp_path):
    settings = tmp_path / "bad.yaml"
    settings.write_text("colour: blue\n")
    with pytest.raises(SystemExit) as info:
        run(["check", write_graph(K4_TEXT), "--config", str(settings)])
    assert info.value.code == 2


def test_unknown_sweep_suite():
    with pytest.raises(SystemExit) as info:
        run(["sweep", "everything"])
    assert info.value.code == 2


def test_sweep_lemma(capsys):
    assert run(["sweep", "lemma"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["suite", "instances", "passed", "failed", "seconds"]
    assert lines[2].split()[:4] == ["lemma", "3", "3", "0"]
