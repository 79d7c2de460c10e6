import json

import pytest

from barnette.canon import canonical_form
from barnette.cli import main
from barnette.io import from_bgf, split_records


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0
    names = out.split()
    assert "cube" in names and "horton" in names


def test_catalog_graph6(capsys, k33):
    code, out, _ = run(capsys, "catalog", "k33", "--format", "graph6")
    assert code == 0
    assert out.strip() == "EFz_"


def test_catalog_bgf_carries_markers(capsys, asano):
    code, out, _ = run(capsys, "catalog", "asano")
    assert code == 0
    g, rot, cuts = from_bgf(out)
    assert g.edges == asano.graph.edges
    assert rot is None
    assert len(cuts) == 1
    assert set(cuts[0][1]) == asano.marked_cut.edge_ids


def test_catalog_requires_name(capsys):
    code, _, err = run(capsys, "catalog")
    assert code == 2
    assert "name" in err


def test_catalog_unknown_name(capsys):
    code, _, err = run(capsys, "catalog", "petersen")
    assert code == 2
    assert "unknown catalog entry" in err


def test_generate_counts(capsys):
    code, out, _ = run(capsys, "generate", "--max-n", "16", "--format", "graph6")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_generate_bgf_with_family_round_trips(capsys):
    code, out, _ = run(capsys, "generate", "--max-n", "14", "--with-family")
    assert code == 0
    blocks = split_records(out)
    assert len(blocks) == 3
    cut_counts = []
    for block in blocks:
        g, rot, cuts = from_bgf(block)
        assert rot is not None
        cut_counts.append(len(cuts))
    assert cut_counts == [0, 0, 1]  # only the 14-vertex graph carries a cut


def test_generate_rejects_family_over_graph6(capsys):
    code, _, err = run(
        capsys, "generate", "--max-n", "12", "--format", "graph6", "--with-family"
    )
    assert code == 2
    assert "famil" in err


def test_generate_usage_error(capsys):
    code, _, err = run(capsys, "generate", "--max-n", "7")
    assert code == 2
    assert "error:" in err


def test_catalog_decompose_pipeline(capsys, monkeypatch, cube):
    _, bgf, _ = run(capsys, "catalog", "asano")
    code, out, _ = run(capsys, "decompose", stdin=bgf, monkeypatch=monkeypatch)
    assert code == 0
    lines = out.split()
    from barnette.graphs import BipartiteGraph

    c4 = canonical_form(BipartiteGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3))))
    assert lines == sorted([c4, canonical_form(cube)])


def test_decompose_json(capsys, monkeypatch, cube):
    _, bgf, _ = run(capsys, "catalog", "asano")
    code, out, _ = run(capsys, "decompose", "--json", stdin=bgf, monkeypatch=monkeypatch)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["n"] == 26
    assert payload["braces"][canonical_form(cube)] == 3
    assert len(payload["trace"]) == 5


def test_check_properties_json(capsys, monkeypatch):
    _, bgf, _ = run(capsys, "catalog", "heawood")
    code, out, _ = run(
        capsys, "check-properties", "--json", stdin=bgf, monkeypatch=monkeypatch
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    for key in ("hamiltonian", "p2", "p3", "p4", "p5", "h_minus", "h_plus_minus"):
        assert payload[key] is True


def test_check_properties_text(capsys, monkeypatch):
    _, bgf, _ = run(capsys, "catalog", "cube")
    code, out, _ = run(capsys, "check-properties", stdin=bgf, monkeypatch=monkeypatch)
    assert code == 0
    assert "p5: false" in out
    assert "p4: true" in out


def test_pfaffian_json_with_witness(capsys, monkeypatch):
    _, g6, _ = run(capsys, "catalog", "k33", "--format", "graph6")
    code, out, _ = run(capsys, "pfaffian", "--json", stdin=g6, monkeypatch=monkeypatch)
    assert code == 0  # non-Pfaffian is not a failure; inconsistency would be
    payload = json.loads(out)
    assert payload["pfaffian"] is False
    assert payload["consistent"] is True
    assert payload["witness"] is not None
    assert len(payload["witness"]["paths"]) == 3


def test_pfaffian_text(capsys, monkeypatch):
    _, bgf, _ = run(capsys, "catalog", "cube")
    code, out, _ = run(capsys, "pfaffian", stdin=bgf, monkeypatch=monkeypatch)
    assert code == 0
    assert out.strip() == "pfaffian: true"


def test_generate_verify_round_trip(capsys, monkeypatch, tmp_path):
    path = tmp_path / "out.bgf"
    code, _, _ = run(
        capsys, "generate", "--max-n", "14", "--with-family", "--out", str(path)
    )
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert len(lines) == 3
    assert all(ln.endswith(": ok") for ln in lines)


def test_verify_flags_corrupted_family(capsys, monkeypatch, tmp_path):
    _, text, _ = run(capsys, "generate", "--max-n", "14", "--with-family")
    # drop the cut line from the 14-vertex record: the family is now incomplete
    lines = [ln for ln in text.splitlines() if not ln.startswith("cut ")]
    path = tmp_path / "tampered.bgf"
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL" in out
    assert "family_complete" in out


def test_verify_requires_rotation(capsys, monkeypatch):
    _, g6, _ = run(capsys, "catalog", "cube", "--format", "graph6")
    code, _, err = run(capsys, "verify", stdin=g6, monkeypatch=monkeypatch)
    assert code == 2
    assert "rotation" in err


def test_survey_table(capsys):
    code, out, _ = run(capsys, "survey", "--max-n", "12", "--p2")
    assert code == 0
    header, *rows = [ln for ln in out.splitlines() if ln.strip()]
    assert "graphs" in header and "p2" in header
    assert len(rows) == 2  # orders 8 and 12; order 10 is empty


def test_survey_json(capsys):
    code, out, _ = run(capsys, "survey", "--max-n", "12", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert [row["n"] for row in payload["rows"]] == [8, 12]


def test_missing_subcommand(capsys):
    code, _, _ = run(capsys, "definitely-not-a-command")
    assert code == 2


def test_empty_stdin(capsys, monkeypatch):
    code, _, err = run(capsys, "decompose", stdin="", monkeypatch=monkeypatch)
    assert code == 2
    assert "error:" in err
