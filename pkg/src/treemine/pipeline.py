"""End-to-end orchestration.

Discovers inputs split by split, processes one project at a time (first-level
subdirectories, plus loose files under the split root), runs the full stage
chain per file, and writes outputs in a fixed order so results are
byte-identical at any parallelism level.
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .ast_builder import build_ast
from .config import PipelineConfig
from .errors import ConfigError, LexError, ParseError
from .filters import accept
from .granularity import split as split_units
from .labels import extract_method_name, extract_none
from .parser import parse_file
from .paths import enumerate_paths, sample_contexts
from .storage import RunStatistics, finalize, format_sample
from .type_resolver import annotate_types

logger = logging.getLogger("treemine")

SPLIT_NAMES = ("train", "val", "test")

# label for the pseudo-project made of files sitting directly in a split root
LOOSE_PROJECT = "."


@dataclass
class UnitResult:
    kept: bool
    rejected_by: tuple[str, ...]
    n_contexts: int
    line: str | None


@dataclass
class FileResult:
    relpath: str
    error: str | None
    units: list[UnitResult]


def discover_splits(input_dir: Path) -> list[tuple[str, Path]]:
    named = [(name, input_dir / name) for name in SPLIT_NAMES
             if (input_dir / name).is_dir()]
    if named:
        return named
    return [("data", input_dir)]


def discover_projects(split_root: Path,
                      extensions: tuple[str, ...]) -> list[tuple[str, list[Path]]]:
    """Ordered (project label, sorted files) pairs; loose files come first."""
    projects = []
    loose = sorted(
        (p for p in split_root.iterdir()
         if p.is_file() and _matches(p, extensions)),
        key=lambda p: p.name)
    if loose:
        projects.append((LOOSE_PROJECT, loose))
    for sub in sorted((d for d in split_root.iterdir() if d.is_dir()),
                      key=lambda d: d.name):
        files = sorted(
            (p for p in sub.rglob("*") if p.is_file() and _matches(p, extensions)),
            key=lambda p: p.relative_to(split_root).as_posix())
        projects.append((sub.name, files))
    return projects


def _matches(path: Path, extensions: tuple[str, ...]) -> bool:
    return any(path.name.endswith(ext) for ext in extensions)


def process_file(path: Path, relpath: str, config: PipelineConfig) -> FileResult:
    """Run parse through serialization for one file. Pure; no shared state."""
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        return FileResult(relpath, f"not valid UTF-8: {exc}", [])
    try:
        cst = parse_file(text, relpath)
    except (LexError, ParseError) as exc:
        return FileResult(relpath, str(exc), [])
    tree = annotate_types(build_ast(cst, config.ignore))
    units = []
    for unit in split_units(tree, config.granularity):
        rejected = tuple(spec.name for spec in config.filters
                         if not accept(unit, unit.span, spec))
        if rejected:
            units.append(UnitResult(False, rejected, 0, None))
            continue
        if config.extractor_name == "method_name":
            sample = extract_method_name(unit, config.name_token,
                                         config.recursion_token)
        else:
            sample = extract_none(unit)
        if config.storage_format == "jsonl_trees":
            contexts = []
        else:
            mined = enumerate_paths(sample.tree, config.miner)
            leaf_count = sum(1 for _ in sample.tree.leaves())
            contexts = sample_contexts(mined, config.miner,
                                       tree_key=f"{sample.label}:{leaf_count}")
        line = format_sample(sample, contexts, config.storage_format)
        units.append(UnitResult(True, (), len(contexts), line))
    return FileResult(relpath, None, units)


def run(config: PipelineConfig, summary_sink: TextIO | None = None) -> RunStatistics:
    """Execute the whole pipeline; returns the collected statistics.

    Per-file lex/parse failures are recorded and skipped; configuration and
    I/O problems raise.
    """
    if not config.input_dir.is_dir():
        raise ConfigError(f"input_dir does not exist: {config.input_dir}")
    config.output_dir.mkdir(parents=True, exist_ok=True)
    storage_spec = config.storage_spec()
    stats = RunStatistics()
    for split_name, split_root in discover_splits(config.input_dir):
        out_path = storage_spec.output_path(split_name)
        with open(out_path, "w", encoding="utf-8", newline="") as sink:
            for _, files in discover_projects(split_root,
                                              config.source_extensions):
                for result in _process_project(files, split_root, config):
                    _consume(result, stats, sink)
    finalize(stats, summary_sink or sys.stdout, config.output_dir)
    return stats


def _process_project(files: list[Path], split_root: Path,
                     config: PipelineConfig) -> list[FileResult]:
    jobs = [(path, path.relative_to(split_root).as_posix()) for path in files]
    if config.parallelism > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=config.parallelism) as executor:
            # map preserves submission order, keeping output deterministic
            return list(executor.map(
                lambda job: process_file(job[0], job[1], config), jobs))
    return [process_file(path, rel, config) for path, rel in jobs]


def _consume(result: FileResult, stats: RunStatistics, sink: TextIO) -> None:
    stats.files_seen += 1
    if result.error is not None:
        stats.parse_failures += 1
        logger.warning("skipping %s: %s", result.relpath, result.error)
        return
    stats.files_parsed += 1
    for unit in result.units:
        stats.trees_before_filters += 1
        if not unit.kept:
            for name in unit.rejected_by:
                stats.record_rejection(name)
            continue
        stats.trees_after_filters += 1
        if unit.line is not None:
            sink.write(unit.line)
        stats.record_sample(unit.n_contexts)
