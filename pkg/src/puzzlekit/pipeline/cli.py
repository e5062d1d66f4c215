"""Command-line entry point: gen, solve, render, verify, stats, export."""

from __future__ import annotations

import argparse
import json
import shutil
import subprocess
import sys
from pathlib import Path
from typing import Sequence

from ..authoring import render_svg
from ..core import (ALL_KINDS, GeneratorError, InvalidInstanceError, PuzzleKind, from_jsonable,
                    parse_instance_id)
from .dataset import (DATA_FILE, PAYLOAD_FILE, compile_dataset, format_stats, stats,
                      verify_dataset)
from .registry import entry

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_GENERATOR = 0, 1, 2, 3

RASTERIZERS = (
    ("rsvg-convert", lambda src, dst: ["rsvg-convert", "-o", dst, src]),
    ("inkscape", lambda src, dst: ["inkscape", src, "--export-filename", dst]),
    ("magick", lambda src, dst: ["magick", src, dst]),
)


class UsageError(Exception):
    pass


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _kind(text: str) -> PuzzleKind:
    try:
        return PuzzleKind(text)
    except ValueError:
        names = ", ".join(k.value for k in ALL_KINDS)
        raise argparse.ArgumentTypeError(f"unknown puzzle {text!r} (one of {names})") from None


def _rasterize(svg_paths: list[Path]) -> None:
    for name, command in RASTERIZERS:
        if shutil.which(name):
            for src in svg_paths:
                subprocess.run(command(str(src), str(src.with_suffix(".png"))), check=True)
            return
    raise UsageError("--png needs rsvg-convert, inkscape or magick on PATH")


def cmd_gen(args: argparse.Namespace) -> int:
    kinds = args.puzzle or list(ALL_KINDS)
    manifest = compile_dataset(args.seed, {k: args.count for k in kinds}, args.out, jobs=args.jobs)
    if args.png:
        _rasterize(sorted((Path(args.out) / "images").glob("*.svg")))
    print(f"wrote {manifest['record_count']} records to {args.out} "
          f"(hash {manifest['content_hash'][:16]})")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.instance in (None, "-") else Path(args.instance).read_text()
    e = entry(args.puzzle)
    try:
        payload = from_jsonable(e.payload_type, json.loads(text))
        print(e.solve(payload).render())
    except (InvalidInstanceError, ValueError, KeyError, TypeError) as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _payload_for(root: Path, record_id: str):
    kind, _ = parse_instance_id(record_id)
    with (root / PAYLOAD_FILE).open(encoding="utf-8") as fh:
        for line in fh:
            row = json.loads(line)
            if row["id"] == record_id:
                return kind, from_jsonable(entry(kind).payload_type, row["payload"])
    raise UsageError(f"no record {record_id!r} in {root}")


def cmd_render(args: argparse.Namespace) -> int:
    try:
        parse_instance_id(args.record)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kind, payload = _payload_for(Path(args.dir), args.record)
    Path(args.out).write_text(render_svg(kind, payload), encoding="utf-8")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_dataset(args.dir)
    for v in report.violations:
        print(v)
    status = "clean" if report.ok else f"{len(report.violations)} violation(s)"
    print(f"checked {report.records_checked} records: {status}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_stats(args: argparse.Namespace) -> int:
    summary = stats(args.dir)
    print(json.dumps(summary, indent=2) if args.json else format_stats(summary))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    if args.format != "jsonl":
        raise UsageError(f"unsupported export format {args.format!r}")
    root = Path(args.dir)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        # Self-contained records: the SVG text rides along with each record.
        for line in (root / DATA_FILE).read_text(encoding="utf-8").splitlines():
            rec = json.loads(line)
            rec["image_svg"] = (root / rec["image"]).read_text(encoding="utf-8")
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puzzlekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="compile a dataset directory")
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--count", type=int, required=True, help="instances per puzzle kind")
    p.add_argument("--puzzle", type=_kind, action="append", help="restrict to these kinds")
    p.add_argument("--out", required=True)
    p.add_argument("--png", action="store_true", help="also rasterize images to PNG")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="print the gold answer of a payload")
    p.add_argument("--puzzle", type=_kind, required=True)
    p.add_argument("--instance", help="payload JSON file; standard input when omitted or '-'")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="render one record's image")
    p.add_argument("--record", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dir", default=".", help="dataset directory")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="regenerate and check a dataset")
    p.add_argument("dir")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="summarize a dataset")
    p.add_argument("dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="write self-contained records")
    p.add_argument("--format", default="jsonl")
    p.add_argument("--out")
    p.add_argument("dir")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "count", 1) < 1:
            raise UsageError("--count must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeneratorError as exc:
        print(f"generator failure: {exc}", file=sys.stderr)
        return EXIT_GENERATOR
    except FileNotFoundError as exc:
        print(f"missing file: {exc.filename}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
