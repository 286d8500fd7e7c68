"""End-to-end CLI tests: exit codes, artifacts, determinism."""

import json
import os

import pytest

from cmwb.cli import run

EXAMPLES = os.path.join(os.path.dirname(__file__), os.pardir, "examples")


def ex(name):
    return os.path.join(EXAMPLES, name)


def test_dim_exit_zero(capsys):
    assert run(["dim", ex("plane.wb")]) == 0
    out = capsys.readouterr().out
    assert "dim:F" in out and "dim = 2" in out


def test_dim_zero_module(tmp_path, capsys):
    p = tmp_path / "zero.wb"
    p.write_text("field q\nvars x\nmodule Z gens 1\nrel 1\nend\n")
    assert run(["dim", str(p)]) == 0
    assert "-inf" in capsys.readouterr().out


def test_cm_witness_exit_one(capsys):
    assert run(["cm", ex("non_cm_plane.wb")]) == 1
    out = capsys.readouterr().out
    assert "not_cm" in out and "witness: y" in out


def test_verify_corollary(capsys):
    assert run(["verify", "--theorem", "corollary", ex("corpus.wb")]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 6 and "0 fail" in out


def test_all_theorems_exit_zero(capsys):
    for theorem in ("th", "thm62", "prop53", "prop54"):
        target = ex("corpus.wb") if theorem == "th" else ex("plane.wb")
        assert run(["verify", "--theorem", theorem, target]) == 0, theorem
    assert run(["verify", "--theorem", "lemma-w", ex("corpus.wb"),
                "--pool-budget", "3"]) == 0


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit):
        run(["frobnicate", ex("plane.wb")])   # argparse exits 2
    assert run(["dim", str(tmp_path / "missing.wb")]) == 2
    bad = tmp_path / "bad.wb"
    bad.write_text("field q\nvars x\nnonsense\n")
    assert run(["dim", str(bad)]) == 2


def test_strict_flag(capsys):
    # starved bounds make wpr undetermined; exit 0 normally, 1 with --strict
    assert run(["wpr", ex("cross.wb"), "--bounds", "2,0"]) == 0
    assert run(["wpr", ex("cross.wb"), "--bounds", "2,0", "--strict"]) == 1


def test_field_override(capsys):
    assert run(["dim", ex("plane.wb"), "--field", "p:31"]) == 0


def test_json_byte_identical(tmp_path, capsys):
    p1 = tmp_path / "a.json"
    p2 = tmp_path / "b.json"
    for p in (p1, p2):
        assert run(["verify", "--theorem", "corollary", ex("corpus.wb"),
                    "--json", str(p)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    rep = json.loads(p1.read_text())
    assert rep["tool"]["name"] == "cmwb"
    assert rep["summary"] == {"pass": 6, "fail": 0, "undetermined": 0}
    assert len(rep["input"]["sha256"]) == 64


def test_csv_and_figure(tmp_path, capsys):
    csv_path = tmp_path / "out.csv"
    fig_path = tmp_path / "out.png"
    assert run(["cm", ex("non_cm_plane.wb"), "--csv", str(csv_path),
                "--figure", str(fig_path)]) == 1
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "command,check,status,detail"
    assert any("not_cm" in line for line in lines[1:])
    data = fig_path.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"


def test_timings_optional(tmp_path, capsys):
    p = tmp_path / "t.json"
    assert run(["dim", ex("plane.wb"), "--json", str(p), "--timings"]) == 0
    rep = json.loads(p.read_text())
    assert "timings" in rep and rep["timings"]["total_seconds"] >= 0
    assert run(["dim", ex("plane.wb"), "--json", str(p)]) == 0
    assert "timings" not in json.loads(p.read_text())


def test_negative_verdict_embeds_reverifiable_witness(tmp_path, capsys):
    p = tmp_path / "r.json"
    assert run(["cm", ex("non_cm_plane.wb"), "--json", str(p)]) == 1
    rep = json.loads(p.read_text())
    witness = rep["checks"][0]["verdict"]["evidence"]["witness"]
    # one membership query re-verifies the witness
    from cmwb import parse_input, is_regular_sequence
    from cmwb.modules import RingSequence
    wi = parse_input(open(ex("non_cm_plane.wb")).read())
    M = wi.modules["M"]
    seq = RingSequence(wi.ring, [wi.ring.poly_ring.parse(t)
                                 for t in witness["sequence"]])
    assert not is_regular_sequence(seq, M, weak=False).is_yes
