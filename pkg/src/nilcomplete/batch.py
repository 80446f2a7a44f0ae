"""Exhaustive sweeps: every (n, r, lambda) with 0 < r < n <= max_n and at most
r parts, each run through the engine and certified by the Jordan oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .engine import RunOptions, run
from .errors import NilcompleteError
from .jordan import jordan_type
from .matrices import make_nr
from .partitions import Partition, format_partition, partitions


@dataclass
class BatchReport:
    max_n: int
    instances: int = 0
    failures: list[tuple[int, int, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"max_n: {self.max_n}", f"instances: {self.instances}",
                 f"failures: {len(self.failures)}"]
        for n, r, lam, why in sorted(self.failures):
            lines.append(f"FAIL n={n} r={r} lambda={lam}: {why}")
        return "\n".join(lines) + "\n"


def iter_instances(max_n: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    for n in range(2, max_n + 1):
        for r in range(1, n):
            for lam in partitions(n, max_parts=r):
                yield n, r, lam


def check_instance(n: int, r: int, lam: Partition, check: bool = True) -> str | None:
    """Return None if the completion certifies, otherwise a reason."""
    try:
        X = run(n, r, lam, RunOptions(check_invariants=check, trace=False)).X
    except NilcompleteError as exc:
        return f"{type(exc).__name__}: {exc}"
    if not X.is_binary():
        return "X is not binary"
    if not X.is_strictly_upper():
        return "X is not strictly upper triangular"
    try:
        got = jordan_type(make_nr(n, r) + X).partition
    except NilcompleteError as exc:
        return f"{type(exc).__name__}: {exc}"
    if got != lam:
        return f"oracle type {got} != {lam}"
    return None


def _run_chunk(args: tuple[int, int, bool]) -> tuple[int, list[tuple[int, int, str, str]]]:
    n, r, check = args
    count = 0
    failures = []
    for parts in partitions(n, max_parts=r):
        count += 1
        lam = Partition._from_items(_items_of(parts))
        why = check_instance(n, r, lam, check)
        if why is not None:
            failures.append((n, r, format_partition(lam), why))
    return count, failures


def _items_of(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    items: list[tuple[int, int]] = []
    for p in parts:
        if items and items[-1][0] == p:
            items[-1] = (p, items[-1][1] + 1)
        else:
            items.append((p, 1))
    return items


def run_batch(max_n: int, jobs: int = 1, check: bool = True) -> BatchReport:
    """Sweep all instances up to ``max_n``.  Work is split by (n, r) and,
    with ``jobs > 1``, spread over processes; the report is sorted so it does
    not depend on scheduling."""
    report = BatchReport(max_n)
    chunks = [(n, r, check) for n in range(2, max_n + 1) for r in range(1, n)]
    if jobs > 1:
        # largest chunks first keeps the tail short
        chunks.sort(key=lambda c: -c[0])
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, chunks, chunksize=1))
    else:
        results = map(_run_chunk, chunks)
    for count, failures in results:
        report.instances += count
        report.failures.extend(failures)
    report.failures.sort()
    return report
