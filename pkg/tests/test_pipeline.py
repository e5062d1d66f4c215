import json
import shutil
import xml.etree.ElementTree as ET

import pytest

from puzzlekit.core import ALL_KINDS, PuzzleKind, Rng, from_jsonable, to_jsonable
from puzzlekit.pipeline import RECORD_KEYS, REGISTRY, compile_dataset, stats, verify_dataset
from puzzlekit.pipeline.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from puzzlekit.pipeline.dataset import DATA_FILE, MANIFEST_FILE, PAYLOAD_FILE, generate_instance

SEED = 20240601


@pytest.fixture(scope="module")
def dataset(tmp_path_factory):
    out = tmp_path_factory.mktemp("ds") / "one"
    manifest = compile_dataset(SEED, 1, out)
    return out, manifest


def fresh_copy(dataset, tmp_path):
    dst = tmp_path / "copy"
    shutil.copytree(dataset[0], dst)
    return dst


def test_registry_covers_every_kind():
    assert set(REGISTRY) == set(ALL_KINDS) and len(ALL_KINDS) == 18


def test_compile_one_per_kind(dataset):
    out, manifest = dataset
    lines = (out / DATA_FILE).read_text().splitlines()
    assert len(lines) == manifest["record_count"] == 18
    for line in lines:
        rec = json.loads(line)
        assert tuple(rec) == RECORD_KEYS
        assert (out / rec["image"]).exists()
        ET.fromstring((out / rec["image"]).read_text())
        assert len(rec["options"]) == (2 if rec["puzzle"] == "board_tiling" else 4)
        assert rec["options"][rec["answer"]] == rec["gold_value"]
    report = verify_dataset(out)
    assert report.ok, report.violations


def test_recompile_is_byte_identical(dataset, tmp_path):
    out, manifest = dataset
    again = compile_dataset(SEED, 1, tmp_path / "again")
    assert again == manifest
    for name in (DATA_FILE, PAYLOAD_FILE, MANIFEST_FILE):
        assert (tmp_path / "again" / name).read_bytes() == (out / name).read_bytes()


def test_other_seed_differs(dataset, tmp_path):
    assert compile_dataset(SEED + 1, 1, tmp_path / "x")["content_hash"] != dataset[1]["content_hash"]


def test_payloads_round_trip_and_resolve(dataset):
    out, _ = dataset
    gold = {json.loads(l)["id"]: json.loads(l)["gold_value"]
            for l in (out / DATA_FILE).read_text().splitlines()}
    for line in (out / PAYLOAD_FILE).read_text().splitlines():
        row = json.loads(line)
        kind = PuzzleKind(row["id"].rsplit("_", 1)[0])
        payload = from_jsonable(REGISTRY[kind].payload_type, row["payload"])
        assert to_jsonable(payload) == row["payload"]
        assert REGISTRY[kind].solve(payload).render() == gold[row["id"]]


def test_instances_are_seed_determined():
    for kind in ALL_KINDS:
        assert generate_instance(kind, SEED, 3) == generate_instance(kind, SEED, 3)


def test_mutated_answer_is_one_violation(dataset, tmp_path):
    root = fresh_copy(dataset, tmp_path)
    lines = (root / DATA_FILE).read_text().splitlines()
    rec = json.loads(lines[5])
    rec["answer"] = next(k for k in rec["options"] if k != rec["answer"])
    lines[5] = json.dumps(rec)
    (root / DATA_FILE).write_text("\n".join(lines) + "\n")
    report = verify_dataset(root)
    assert not report.ok and len(report.violations) == 1
    assert report.violations[0].where == rec["id"]


def test_wrong_manifest_seed_is_hash_mismatch(dataset, tmp_path):
    root = fresh_copy(dataset, tmp_path)
    manifest = json.loads((root / MANIFEST_FILE).read_text())
    manifest["master_seed"] += 1
    (root / MANIFEST_FILE).write_text(json.dumps(manifest))
    assert "hash_mismatch" in verify_dataset(root).codes()


def test_missing_file_is_reported(dataset, tmp_path):
    root = fresh_copy(dataset, tmp_path)
    (root / PAYLOAD_FILE).unlink()
    assert not verify_dataset(root).ok


def test_stats(dataset):
    summary = stats(dataset[0])
    assert summary["records"] == 18 and len(summary["kinds"]) == 18


def test_cli_round_trip(tmp_path, capsys):
    out = tmp_path / "cli"
    assert main(["gen", "--seed", "5", "--count", "1", "--puzzle", "clock", "--puzzle",
                 "calendar", "--out", str(out)]) == EXIT_OK
    assert main(["verify", str(out)]) == EXIT_OK
    assert main(["stats", "--json", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["render", "--record", "clock_0000", "--out", str(tmp_path / "c.svg"),
                 "--dir", str(out)]) == EXIT_OK
    ET.fromstring((tmp_path / "c.svg").read_text())
    assert main(["export", "--out", str(tmp_path / "e.jsonl"), str(out)]) == EXIT_OK
    rows = [json.loads(l) for l in (tmp_path / "e.jsonl").read_text().splitlines()]
    assert len(rows) == 2 and all(r["image_svg"].startswith("<svg") for r in rows)


def test_cli_solve(tmp_path, capsys):
    payload = to_jsonable(REGISTRY[PuzzleKind.CLOCK].generate(Rng(1)))
    path = tmp_path / "p.json"
    path.write_text(json.dumps(payload))
    assert main(["solve", "--puzzle", "clock", "--instance", str(path)]) == EXIT_OK
    expected = REGISTRY[PuzzleKind.CLOCK].solve(REGISTRY[PuzzleKind.CLOCK].generate(Rng(1)))
    assert capsys.readouterr().out.strip() == expected.render()
    path.write_text("{}")
    assert main(["solve", "--puzzle", "clock", "--instance", str(path)]) == EXIT_INVALID


def test_cli_usage_errors(tmp_path, capsys):
    assert main(["gen", "--seed", "1", "--count", "0", "--out", str(tmp_path)]) == EXIT_USAGE
    assert main(["gen", "--seed", "1", "--count", "1", "--puzzle", "origami",
                 "--out", str(tmp_path)]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["render", "--record", "nonsense", "--out", str(tmp_path / "x.svg")]) == EXIT_USAGE
    assert main(["export", "--format", "csv", str(tmp_path)]) == EXIT_USAGE
    assert main(["verify", str(tmp_path / "absent")]) == EXIT_INVALID
