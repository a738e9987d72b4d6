"""Benchmark harness: ordering x backend matrix over the corpus, variable
permutation sweeps, CSV/markdown reporting.

Timed runs execute serially; a result is only recorded as Ok after the
verification suite passed on it once, so reported durations always belong
to correct answers.
"""

from __future__ import annotations

import csv
import io
import itertools
import statistics
from dataclasses import dataclass

from .buchberger import compute_groebner
from .corpus import CORPUS_NAMES, builtin, permute_vars
from .errors import (
    CoefficientOverflow,
    EngineTimeout,
    ImageOverflow,
    InputError,
    VerificationError,
)
from .powerprods import Ordering
from .rationals import Backend
from .verify import verify_result

OUTCOME_OK = "ok"
OUTCOME_COEFF_OVERFLOW = "coefficient-overflow"
OUTCOME_IMAGE_OVERFLOW = "image-overflow"
OUTCOME_TIMEOUT = "timeout"

CSV_COLUMNS = (
    "system",
    "ordering",
    "backend",
    "permutation",
    "outcome",
    "basis_size",
    "duration_ms",
    "repeats",
)


@dataclass
class BenchRecord:
    system: str
    ordering: str
    backend: str
    permutation: str
    outcome: str
    basis_size: int | None
    duration_ms: float | None
    repeats: int

    def row(self):
        return [
            self.system,
            self.ordering,
            self.backend,
            self.permutation,
            self.outcome,
            "" if self.basis_size is None else self.basis_size,
            "" if self.duration_ms is None else f"{self.duration_ms:.3f}",
            self.repeats,
        ]


@dataclass
class BenchConfig:
    systems: tuple = CORPUS_NAMES
    orderings: tuple = (Ordering.TOTAL_DEGREE, Ordering.PRIME_BASED)
    backends: tuple = (Backend.FIXED64, Backend.BIG)
    repeats: int = 5
    timeout_s: float = 600.0

    def __post_init__(self):
        if self.repeats < 1:
            raise InputError("repeats must be at least 1")
        if self.timeout_s <= 0:
            raise InputError("timeout must be positive")


def _resolve(system, permutation):
    sys_obj = builtin(system) if isinstance(system, str) else system
    if permutation:
        sys_obj = permute_vars(sys_obj, permutation)
    return sys_obj


def run_case(system, ordering, backend, permutation=None, repeats=5, timeout_s=600.0):
    """One benchmark cell: warm-up plus `repeats` timed runs, median duration.

    The warm-up result is verified; a verification failure is a hard error
    because timing a wrong answer would be meaningless.  Engine failures
    (overflow, timeout) become outcome codes instead."""
    sys_obj = _resolve(system, permutation)
    label = sys_obj.vartable.order_label
    base = dict(
        system=sys_obj.name,
        ordering=ordering.value,
        backend=backend.value,
        permutation=label,
        repeats=repeats,
    )
    try:
        first = compute_groebner(sys_obj, ordering, backend, timeout_s=timeout_s)
        report = verify_result(sys_obj, first)
        if not report.ok:
            raise VerificationError(
                f"{sys_obj.name} [{ordering.value}/{backend.value}/{label}] "
                f"failed verification:\n{report.render()}"
            )
        durations = []
        for _ in range(repeats):
            result = compute_groebner(sys_obj, ordering, backend, timeout_s=timeout_s)
            durations.append(result.duration_ms)
        return BenchRecord(
            outcome=OUTCOME_OK,
            basis_size=len(result.basis),
            duration_ms=statistics.median(durations),
            **base,
        )
    except CoefficientOverflow:
        return BenchRecord(
            outcome=OUTCOME_COEFF_OVERFLOW, basis_size=None, duration_ms=None, **base
        )
    except ImageOverflow:
        return BenchRecord(
            outcome=OUTCOME_IMAGE_OVERFLOW, basis_size=None, duration_ms=None, **base
        )
    except EngineTimeout:
        return BenchRecord(
            outcome=OUTCOME_TIMEOUT, basis_size=None, duration_ms=None, **base
        )


def run_table1(config=None):
    """Full corpus x ordering x backend matrix under default variable orders."""
    config = config or BenchConfig()
    records = []
    for name in config.systems:
        for backend in config.backends:
            for ordering in config.orderings:
                records.append(
                    run_case(
                        name,
                        ordering,
                        backend,
                        repeats=config.repeats,
                        timeout_s=config.timeout_s,
                    )
                )
    return records


def run_permutations(system, config=None):
    """Every variable order of one system, across orderings and backends."""
    config = config or BenchConfig()
    sys_obj = builtin(system) if isinstance(system, str) else system
    names = sys_obj.vartable.names
    if len(names) > 6:
        raise InputError(
            f"{sys_obj.name} has {len(names)} variables; permutation sweeps "
            "are limited to 6 (factorial growth)"
        )
    records = []
    for perm in itertools.permutations(sorted(names)):
        permuted = permute_vars(sys_obj, perm)
        for backend in config.backends:
            for ordering in config.orderings:
                records.append(
                    run_case(
                        permuted,
                        ordering,
                        backend,
                        repeats=config.repeats,
                        timeout_s=config.timeout_s,
                    )
                )
    return records


def max_min_ratios(records):
    """Slowest/fastest duration ratio per (ordering, backend) column."""
    out = {}
    for rec in records:
        if rec.outcome != OUTCOME_OK:
            continue
        out.setdefault((rec.ordering, rec.backend), []).append(rec.duration_ms)
    return {
        key: (max(vals) / min(vals) if min(vals) > 0 else float("inf"))
        for key, vals in out.items()
    }


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def records_from_csv(text):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_COLUMNS:
        raise InputError(f"unexpected CSV header: {header}")
    records = []
    for row in reader:
        if not row:
            continue
        records.append(
            BenchRecord(
                system=row[0],
                ordering=row[1],
                backend=row[2],
                permutation=row[3],
                outcome=row[4],
                basis_size=int(row[5]) if row[5] else None,
                duration_ms=float(row[6]) if row[6] else None,
                repeats=int(row[7]),
            )
        )
    return records


def _cell(rec):
    if rec is None:
        return ""
    if rec.outcome != OUTCOME_OK:
        return rec.outcome
    return f"{rec.duration_ms:.2f}/{rec.basis_size}"


def reduction_percent(total_rec, prime_rec):
    """Duration saved by the prime-based run, as a percentage; None unless
    both runs completed."""
    if (
        total_rec is None
        or prime_rec is None
        or total_rec.outcome != OUTCOME_OK
        or prime_rec.outcome != OUTCOME_OK
        or total_rec.duration_ms <= 0
    ):
        return None
    return (1.0 - prime_rec.duration_ms / total_rec.duration_ms) * 100.0


def render_matrix_markdown(records):
    """Markdown table: per system and backend, the total-degree and
    prime-based cells (duration ms / basis size) and the reduction column."""
    by_key = {}
    systems = []
    backends = []
    for rec in records:
        if rec.system not in systems:
            systems.append(rec.system)
        if rec.backend not in backends:
            backends.append(rec.backend)
        by_key[(rec.system, rec.backend, rec.ordering)] = rec

    td = Ordering.TOTAL_DEGREE.value
    pb = Ordering.PRIME_BASED.value
    head = ["system"]
    for b in backends:
        head += [f"{b} deglex ms/size", f"{b} prime ms/size", f"{b} reduction %"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for name in systems:
        row = [name]
        for b in backends:
            t = by_key.get((name, b, td))
            p = by_key.get((name, b, pb))
            pct = reduction_percent(t, p)
            row += [_cell(t), _cell(p), "" if pct is None else f"{pct:.1f}"]
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def render_permutations_markdown(records):
    """Markdown table of a permutation sweep plus max/min ratio footer."""
    by_key = {}
    perms = []
    columns = []
    for rec in records:
        if rec.permutation not in perms:
            perms.append(rec.permutation)
        col = (rec.backend, rec.ordering)
        if col not in columns:
            columns.append(col)
        by_key[(rec.permutation, rec.backend, rec.ordering)] = rec

    head = ["order"] + [f"{b} {o} ms" for b, o in columns]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for perm in perms:
        row = [perm]
        for b, o in columns:
            rec = by_key.get((perm, b, o))
            if rec is None or rec.outcome != OUTCOME_OK:
                row.append("" if rec is None else rec.outcome)
            else:
                row.append(f"{rec.duration_ms:.2f}")
        lines.append("| " + " | ".join(row) + " |")
    ratios = max_min_ratios(records)
    row = ["max/min"]
    for b, o in columns:
        r = ratios.get((o, b))
        row.append("" if r is None else f"{r:.1f}")
    lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"
