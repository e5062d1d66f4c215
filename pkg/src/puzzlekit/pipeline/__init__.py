"""Dataset compilation, verification, statistics and the command line."""

from .dataset import (RECORD_KEYS, VerifyReport, Violation, build_record, compile_dataset,
                      generate_instance, stats, verify_dataset)
from .registry import REGISTRY, PuzzleEntry, entry

__all__ = ["RECORD_KEYS", "VerifyReport", "Violation", "build_record", "compile_dataset",
           "generate_instance", "stats", "verify_dataset", "REGISTRY", "PuzzleEntry", "entry"]
