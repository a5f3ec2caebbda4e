"""JSON round-trips, bundled fixtures, and the command-line interface."""

import json

import pytest

from hammock_lab import cli
from hammock_lab import corpus as C
from hammock_lab import io as hio
from hammock_lab.fincat import nerve


def test_category_roundtrip_is_exact():
    for name in C.CATEGORY_NAMES:
        cat = C.category(name)
        doc = hio.category_to_doc(cat)
        back = hio.category_from_doc(json.loads(hio.dumps(doc)))
        assert back.morphisms == cat.morphisms
        assert back.compose_table == cat.compose_table
        assert hio.dumps(hio.category_to_doc(back)) == hio.dumps(doc)


def test_model_structure_roundtrip():
    for (name, kind), m in C.model_structures().items():
        doc = hio.model_to_doc(m)
        back = hio.model_from_doc(json.loads(hio.dumps(doc)))
        assert back.weq == m.weq and back.cof == m.cof and back.fib == m.fib
        assert back.fact_cf == m.fact_cf


def test_sset_roundtrip():
    x = nerve(C.z2_category(), 2)
    doc = hio.sset_to_doc(x)
    back = hio.sset_from_doc(json.loads(hio.dumps(doc)))
    assert back.level_counts() == x.level_counts()
    assert hio.dumps(hio.sset_to_doc(back)) == hio.dumps(doc)


def test_bundled_fixtures_load():
    import os

    d = cli.corpus_dir()
    files = [f for f in sorted(os.listdir(d)) if f.endswith(".json")]
    assert len(files) >= 18
    for name in files:
        kind, obj = hio.load_path(os.path.join(d, name))
        assert kind


def test_malformed_document_raises_input_error():
    with pytest.raises(hio.InputError):
        hio.category_from_doc({"format": "hammock-lab/1", "kind": "category"})
    with pytest.raises(hio.InputError):
        hio.category_from_doc({"kind": "category"})


def _run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_cli_model_check_pass(capsys):
    code, out = _run(
        ["model-check", "chain3-trivial.json", "--format", "json"], capsys
    )
    assert code == 0
    rep = json.loads(out)
    assert all(rep["verdicts"].values())


def test_cli_model_check_failure_exit_code(tmp_path, capsys):
    label, bad = C.corrupted_structures()[0]
    p = tmp_path / "bad.json"
    hio.save(hio.model_to_doc(bad), str(p))
    code, out = _run(["model-check", str(p), "--format", "json"], capsys)
    assert code == 1


def test_cli_homology_of_group_nerve(capsys):
    code, out = _run(
        ["homology", "nerve-z2.json", "--degree", "1", "--format", "json"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["facts"]["groups"][1]["torsion"] == [2]


def test_cli_bad_input_exit_2(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    code, _ = _run(["validate", str(p)], capsys)
    assert code == 2


def test_cli_json_output_deterministic(capsys):
    argv = ["nerve", "z2.json", "-k", "2", "--format", "json"]
    _, out1 = _run(argv, capsys)
    _, out2 = _run(argv, capsys)
    assert out1 == out2
    json.loads(out1)


def test_cli_compare_chain3(capsys):
    code, out = _run(
        [
            "compare",
            "chain3-trivial.json",
            "--A",
            "0",
            "--B",
            "2",
            "-k",
            "2",
            "-d",
            "1",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert all(rep["verdicts"].values())


def test_cli_out_artifact_revalidates(tmp_path, capsys):
    art = tmp_path / "nerve.json"
    code, _ = _run(["nerve", "chain3.json", "-k", "2", "--out", str(art)], capsys)
    assert code == 0
    kind, x = hio.load_path(str(art))
    assert kind == "sset"
    from hammock_lab.sset import validate_sset

    assert not validate_sset(x)
