"""Dataset compilation, verification and summary statistics.

A compiled dataset directory holds:

* ``data.jsonl``: one record per line, sorted by kind then index, keys in RECORD_KEYS order.
* ``payloads.jsonl``: the generator parameters behind each record (same order), so records can
  be re-rendered or re-solved without regenerating.
* ``images/<id>.svg``: the visual context of each record.
* ``manifest.json``: master seed, counts, convention constants and the content hash.
"""

from __future__ import annotations

import hashlib
import json
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping

from .. import __version__
from ..authoring import assemble_mcq, format_question, gen_distractors, render_svg
from ..authoring.mcq import numeric_range
from ..core import (ALL_KINDS, GOLDEN_GAMMA, MCQ_STREAM, MIX_MUL_1, MIX_MUL_2, GeneratorError,
                    PuzzleInstance, PuzzleKind, Rng, derive_seed, from_jsonable, instance_id,
                    ontology_for, parse_instance_id, to_jsonable)
from ..maze import ENTRANCE, ENTRY_HEADING, HEADINGS
from ..sliding.klotski import CENSUS
from ..statemachines.cube import FACES, SOLVED_COLOURS
from ..statemachines.thinkadot import DEFLECT, ROUTES
from .registry import entry, wheel_prizes

RECORD_KEYS = ("id", "puzzle", "image", "question", "options", "answer", "gold_value", "ontology",
               "seed")
DATA_FILE = "data.jsonl"
PAYLOAD_FILE = "payloads.jsonl"
MANIFEST_FILE = "manifest.json"
IMAGE_DIR = "images"


class CompileError(GeneratorError):
    def __init__(self, kind: PuzzleKind, index: int, seed: int, cause: Exception):
        super().__init__(f"{kind.value} #{index} (seed {seed:016x}) failed: {cause}")
        self.kind, self.index, self.seed = kind, index, seed


def seed_hex(seed: int) -> str:
    return f"{seed:016x}"


def generate_instance(kind: PuzzleKind | str, seed: int, index: int = 0) -> PuzzleInstance:
    kind = PuzzleKind(kind)
    e = entry(kind)
    payload = e.generate(Rng(seed))
    return PuzzleInstance(instance_id(kind, index), kind, seed, payload, e.solve(payload),
                          ontology_for(kind))


def build_record(inst: PuzzleInstance) -> tuple[dict[str, Any], str]:
    """Record dict (keys in RECORD_KEYS order) and the SVG image of one instance."""
    question = format_question(inst.kind, inst.payload)
    # MCQ draws use their own stream so option order never perturbs generation.
    rng = Rng(inst.seed).fork(MCQ_STREAM)
    distractors = gen_distractors(inst.gold, inst.kind, rng, wheel_prizes(inst.payload))
    item = assemble_mcq(question, inst.gold, distractors, rng)
    record = {
        "id": inst.id,
        "puzzle": inst.kind.value,
        "image": f"{IMAGE_DIR}/{inst.id}.svg",
        "question": item.question,
        "options": item.option_map(),
        "answer": item.answer_letter,
        "gold_value": inst.gold.render(),
        "ontology": inst.tags.to_dict(),
        "seed": seed_hex(inst.seed),
    }
    return record, render_svg(inst.kind, inst.payload)


def _dump(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


@dataclass(frozen=True)
class _Built:
    record_line: str
    payload_line: str
    image_name: str
    svg: str


def _build(job: tuple[str, int, int]) -> _Built:
    kind_name, index, master = job
    kind = PuzzleKind(kind_name)
    seed = derive_seed(master, kind, index)
    try:
        inst = generate_instance(kind, seed, index)
        record, svg = build_record(inst)
    except Exception as exc:  # noqa: BLE001 - re-raised with the failing coordinates
        raise CompileError(kind, index, seed, exc) from exc
    payload_line = _dump({"id": inst.id, "payload": to_jsonable(inst.payload)})
    return _Built(_dump(record), payload_line, f"{inst.id}.svg", svg)


def normalise_counts(counts: int | Mapping[PuzzleKind | str, int]) -> dict[PuzzleKind, int]:
    if isinstance(counts, int):
        counts = {k: counts for k in ALL_KINDS}
    out = {PuzzleKind(k): int(n) for k, n in counts.items()}
    if any(n < 1 for n in out.values()):
        raise ValueError("every requested count must be at least 1")
    return dict(sorted(out.items(), key=lambda kv: kv[0].value))


def build_all(master_seed: int, counts: Mapping[PuzzleKind, int], jobs: int = 1) -> list[_Built]:
    work = [(k.value, i, master_seed) for k, n in counts.items() for i in range(n)]
    if jobs > 1:
        # Parallel builders, but results come back in submission order.
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_build, work, chunksize=8))
    return [_build(w) for w in work]


def content_hash(data_bytes: bytes) -> str:
    return hashlib.sha256(data_bytes).hexdigest()


def _lines_bytes(lines: Iterable[str]) -> bytes:
    return "".join(line + "\n" for line in lines).encode("utf-8")


def conventions() -> dict[str, Any]:
    """Convention constants that fix the meaning of generated answers."""
    return {
        "rng": {"algorithm": "splitmix64", "golden_gamma": hex(GOLDEN_GAMMA),
                "mix_mul_1": hex(MIX_MUL_1), "mix_mul_2": hex(MIX_MUL_2),
                "mcq_stream": hex(MCQ_STREAM),
                "derive_seed": "mix64(master ^ mix64((kind_ordinal << 32) | index))"},
        "cube": {"face_order": list(FACES), "solved_colours": dict(SOLVED_COLOURS)},
        "think_a_dot": {"deflect": {"yellow": DEFLECT[False], "blue": DEFLECT[True]},
                        "routes": {str(k): list(v) for k, v in ROUTES.items()},
                        "routing_state": "pre-flip"},
        "maze": {"entrance": list(ENTRANCE), "entry_heading": ENTRY_HEADING,
                 "headings_clockwise": list(HEADINGS), "path_cost": "moves, then turns"},
        "wood_slide": {"census_rows_by_cols": {f"{h}x{w}": n for (h, w), n in CENSUS.items()},
                       "move": "one block, one unit"},
        "distractors": {"numeric_ladder": [[1, 6], [1, 10], [1, 50], [1, 100]],
                        "above_100": "[g-50, g+50]", "clock_offset_minutes": [1, 59],
                        "sampling": "sample-reject until distinct"},
        "calendar": {"grid_first_weekday": "Sunday"},
        "record_keys": list(RECORD_KEYS),
        "image_format": "svg",
    }


def compile_dataset(master_seed: int, counts: int | Mapping[PuzzleKind | str, int],
                    out_dir: str | os.PathLike, jobs: int = 1) -> dict[str, Any]:
    counts = normalise_counts(counts)
    out = Path(out_dir)
    (out / IMAGE_DIR).mkdir(parents=True, exist_ok=True)
    built = build_all(master_seed, counts, jobs)
    data = _lines_bytes(b.record_line for b in built)
    (out / DATA_FILE).write_bytes(data)
    (out / PAYLOAD_FILE).write_bytes(_lines_bytes(b.payload_line for b in built))
    for b in built:
        (out / IMAGE_DIR / b.image_name).write_text(b.svg, encoding="utf-8")
    manifest = {
        "master_seed": master_seed,
        "generator_version": __version__,
        "counts": {k.value: n for k, n in counts.items()},
        "record_count": len(built),
        "conventions": conventions(),
        "content_hash": content_hash(data),
    }
    (out / MANIFEST_FILE).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest


# --------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class Violation:
    code: str  # missing_file, bad_manifest, hash_mismatch, gold_mismatch, record_mismatch, ...
    where: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code} [{self.where}] {self.detail}"


@dataclass
class VerifyReport:
    records_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> Counter:
        return Counter(v.code for v in self.violations)


def _read_jsonl(path: Path) -> list[dict]:
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


def _static_check(rec: dict, root: Path) -> Violation | None:
    rid = rec.get("id", "?")
    if list(rec) != list(RECORD_KEYS):
        return Violation("schema", rid, f"keys {list(rec)}")
    try:
        kind, _ = parse_instance_id(rid)
    except ValueError as exc:
        return Violation("schema", rid, str(exc))
    if rec["puzzle"] != kind.value:
        return Violation("schema", rid, f"puzzle {rec['puzzle']!r} disagrees with id")
    options = rec["options"]
    letters = list(options)
    expected_letters = ["A", "B"] if kind is PuzzleKind.BOARD_TILING else ["A", "B", "C", "D"]
    if letters != expected_letters:
        return Violation("bad_options", rid, f"option letters {letters}")
    if len(set(options.values())) != len(options):
        return Violation("bad_options", rid, "options are not pairwise distinct")
    if rec["answer"] not in options:
        return Violation("bad_answer", rid, f"answer {rec['answer']!r} not among options")
    if options[rec["answer"]] != rec["gold_value"]:
        return Violation("bad_answer", rid, f"option {rec['answer']} is not the gold value")
    if rec["ontology"] != ontology_for(kind).to_dict():
        return Violation("bad_ontology", rid, "ontology differs from the kind's tags")
    if not (root / rec["image"]).is_file():
        return Violation("missing_file", rid, rec["image"])
    return None


def verify_dataset(out_dir: str | os.PathLike) -> VerifyReport:
    """Re-derive every instance from the manifest and compare it with what is on disk."""
    root = Path(out_dir)
    report = VerifyReport()
    for name in (MANIFEST_FILE, DATA_FILE, PAYLOAD_FILE):
        if not (root / name).is_file():
            report.violations.append(Violation("missing_file", name, "not found"))
    if report.violations:
        return report
    try:
        manifest = json.loads((root / MANIFEST_FILE).read_text(encoding="utf-8"))
        counts = normalise_counts(manifest["counts"])
        master = int(manifest["master_seed"])
        records = _read_jsonl(root / DATA_FILE)
        payloads = _read_jsonl(root / PAYLOAD_FILE)
    except (KeyError, TypeError, ValueError) as exc:
        report.violations.append(Violation("bad_manifest", str(root), str(exc)))
        return report
    report.records_checked = len(records)

    flagged: set[str] = set()

    def flag(v: Violation) -> None:
        # One violation per record keeps single faults from cascading.
        if v.where not in flagged:
            flagged.add(v.where)
            report.violations.append(v)

    expected_ids = [instance_id(k, i) for k, n in counts.items() for i in range(n)]
    actual_ids = [r.get("id") for r in records]
    if actual_ids != expected_ids:
        report.violations.append(Violation(
            "record_count", DATA_FILE,
            f"expected {len(expected_ids)} dense ids, found {len(actual_ids)} records"))
    for rec in records:
        bad = _static_check(rec, root)
        if bad:
            flag(bad)

    data_bytes = (root / DATA_FILE).read_bytes()
    built = build_all(master, counts)
    regenerated = _lines_bytes(b.record_line for b in built)
    if content_hash(regenerated) != manifest.get("content_hash"):
        # Manifest and generator disagree; record-level comparison would be meaningless.
        report.violations.append(Violation(
            "hash_mismatch", MANIFEST_FILE, "records regenerated from the manifest seed do not "
            "match the manifest content hash"))
        return report

    by_id = {r.get("id"): (r, p) for r, p in zip(records, payloads)}
    for b in built:
        want = json.loads(b.record_line)
        rid = want["id"]
        if rid not in by_id:
            continue
        have, payload = by_id[rid]
        if have.get("gold_value") != want["gold_value"]:
            flag(Violation("gold_mismatch", rid,
                           f"{have.get('gold_value')!r} != {want['gold_value']!r}"))
            continue
        for key in RECORD_KEYS:
            if have.get(key) != want[key]:
                flag(Violation("record_mismatch", rid, f"field {key!r} differs"))
                break
        if json.dumps(payload, ensure_ascii=False) != b.payload_line:
            flag(Violation("payload_mismatch", rid, "stored payload differs"))
        image = root / IMAGE_DIR / b.image_name
        if image.is_file() and image.read_text(encoding="utf-8") != b.svg:
            flag(Violation("image_mismatch", rid, "re-rendered image differs"))
    if content_hash(data_bytes) != manifest["content_hash"] and not report.violations:
        report.violations.append(Violation("hash_mismatch", DATA_FILE,
                                           "data file bytes differ from the content hash"))
    return report


# --------------------------------------------------------------------------
# Statistics


def instance_size(kind: PuzzleKind, payload: Any) -> str:
    """Headline size parameter of a payload, used for histograms."""
    p = payload
    size = {
        PuzzleKind.BOARD_TILING: lambda: f"{p.rows}x{p.cols}",
        PuzzleKind.CALENDAR: lambda: f"year_offset={p.query_year_offset}",
        PuzzleKind.CHAIN_LINK: lambda: f"pieces={p.total_pieces}",
        PuzzleKind.CHECKER_MOVE: lambda: f"cells={len(p.start.cells)}",
        PuzzleKind.CLOCK: lambda: f"delta_hours={abs(p.delta_minutes) // 60}",
        PuzzleKind.COLOUR_HUE: lambda: f"{p.rows}x{p.cols}",
        PuzzleKind.MAP_COLOUR: lambda: f"regions={p.map.size}",
        PuzzleKind.MAZE_SOLVE: lambda: f"{p.maze.size}x{p.maze.size}",
        PuzzleKind.MOVE_BOX: lambda: f"{p.board.rows}x{p.board.cols}",
        PuzzleKind.N_QUEENS: lambda: f"n={p.n}",
        PuzzleKind.NUMBER_SLIDE: lambda: f"{p.board.n}x{p.board.n}",
        PuzzleKind.ROTTING_FRUIT: lambda: f"{p.board.rows}x{p.board.cols}",
        PuzzleKind.RUBIKS_CUBE: lambda: f"moves={len(p.moves)}",
        PuzzleKind.THINK_A_DOT: lambda: f"drops={len(p.config.drops)}",
        PuzzleKind.TOWER_OF_HANOI: lambda: f"disks={p.start.n}",
        PuzzleKind.WATER_JUGS: lambda: f"jugs={len(p.start.capacities)}",
        PuzzleKind.WHEEL_OF_FORTUNE: lambda: f"segments={len(p.spec.segments)}",
        PuzzleKind.WOOD_SLIDE: lambda: "5x4",
    }[kind]
    return size()


def stats(out_dir: str | os.PathLike) -> dict[str, Any]:
    root = Path(out_dir)
    records = _read_jsonl(root / DATA_FILE)
    payloads = {p["id"]: p["payload"] for p in _read_jsonl(root / PAYLOAD_FILE)}
    per_kind: dict[str, dict[str, Any]] = defaultdict(
        lambda: {"count": 0, "gold": Counter(), "letters": Counter(), "params": Counter()})
    letters: Counter = Counter()
    numeric_letters: Counter = Counter()
    for rec in records:
        kind = PuzzleKind(rec["puzzle"])
        row = per_kind[kind.value]
        row["count"] += 1
        row["gold"][rec["gold_value"]] += 1
        row["letters"][rec["answer"]] += 1
        letters[rec["answer"]] += 1
        if rec["gold_value"].lstrip("-").isdigit():
            numeric_letters[rec["answer"]] += 1
        payload = from_jsonable(entry(kind).payload_type, payloads[rec["id"]])
        row["params"][instance_size(kind, payload)] += 1
    return {
        "records": len(records),
        "kinds": {k: {"count": v["count"], "gold": dict(sorted(v["gold"].items())),
                      "letters": dict(sorted(v["letters"].items())),
                      "params": dict(sorted(v["params"].items()))}
                  for k, v in sorted(per_kind.items())},
        "letters": dict(sorted(letters.items())),
        "numeric_letters": dict(sorted(numeric_letters.items())),
    }


def format_stats(summary: Mapping[str, Any]) -> str:
    lines = [f"{'puzzle':18s} {'n':>5s}  letters            gold (top 5)"]
    for kind, row in summary["kinds"].items():
        lets = " ".join(f"{k}:{v}" for k, v in row["letters"].items())
        top = sorted(row["gold"].items(), key=lambda kv: (-kv[1], kv[0]))[:5]
        gold = ", ".join(f"{g}x{n}" for g, n in top)
        lines.append(f"{kind:18s} {row['count']:5d}  {lets:18s} {gold}")
    total = sum(summary["letters"].values()) or 1
    shares = " ".join(f"{k}={100 * v / total:.1f}%" for k, v in summary["letters"].items())
    lines.append(f"records: {summary['records']}  answer letters: {shares}")
    return "\n".join(lines)


def numeric_band_ok(gold: int, value: int) -> bool:
    lo, hi = numeric_range(gold)
    return lo <= value <= hi and value != gold
