"""Batch experiment runner: replicate runs, milestone errors, exports.

Errors follow the f(x) - f(x_opt) reporting convention wherever a
published optimum exists.  Per-run seeds are a pure function of the base
seed and the run index, so reordering or parallelizing replicates cannot
change any number in the report.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

from pssopt import objectives
from pssopt.analysis import StatsSummary, aggregate_stats
from pssopt.engine import PssParams, run
from pssopt.sampling import replicate_seed

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class ExperimentConfig:
    """One batch setup: problem, run controls, replicate count, outputs."""

    problem: str
    iters: int
    runs: int
    dims: Optional[int] = None
    alpha: float = 0.95
    pop: int = 30
    base_seed: int = 1
    milestones: tuple[int, ...] = ()
    success_region: Optional[tuple[float, float]] = None
    out: Optional[str] = None
    fmt: str = "csv"
    jobs: int = 1

    def __post_init__(self):
        spec = objectives.get(self.problem)  # unknown id fails before any run
        object.__setattr__(self, "dims", spec.resolve_dims(self.dims))
        object.__setattr__(self, "milestones", tuple(int(m) for m in self.milestones))
        PssParams(max_iters=self.iters, accept_prob=self.alpha, pop_size=self.pop)
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if any(m < 0 or m > self.iters for m in self.milestones):
            raise ValueError("milestones must lie inside [0, iters]")
        if any(a >= b for a, b in zip(self.milestones, self.milestones[1:])):
            raise ValueError("milestones must be strictly increasing")
        if self.success_region is not None:
            lo, hi = self.success_region
            if not lo <= hi:
                raise ValueError("success region must satisfy lo <= hi")

    def params(self) -> PssParams:
        return PssParams(max_iters=self.iters, accept_prob=self.alpha, pop_size=self.pop)


@dataclass(frozen=True)
class RunResult:
    """One replicate's outcome."""

    index: int
    seed: int
    final_value: float
    final_error: float
    final_x: tuple[float, ...]
    milestone_errors: tuple[float, ...]
    wall_clock: float


@dataclass(frozen=True)
class BatchReport:
    """Replicate outcomes plus aggregate statistics."""

    config: ExperimentConfig
    results: tuple[RunResult, ...]
    error_stats: StatsSummary
    value_stats: StatsSummary
    success_rate: Optional[float] = None


def _reference_optimum(config: ExperimentConfig) -> float:
    spec = objectives.get(config.problem)
    if spec.optimum_for is None:
        return 0.0  # error column degenerates to the raw value
    return objectives.true_optimum(config.problem, config.dims)


def _execute_run(config: ExperimentConfig, index: int) -> RunResult:
    spec = objectives.get(config.problem)
    domain = spec.domain(config.dims)
    seed = replicate_seed(config.base_seed, index)
    optimum = _reference_optimum(config)
    started = time.perf_counter()
    record = run(spec.evaluate, domain, config.params(), seed)
    elapsed = time.perf_counter() - started
    final = record.final_best
    return RunResult(
        index=index,
        seed=seed,
        final_value=final.fitness,
        final_error=final.fitness - optimum,
        final_x=tuple(float(v) for v in final.x),
        milestone_errors=tuple(float(record.history_fitness[m] - optimum)
                               for m in config.milestones),
        wall_clock=elapsed,
    )


def _run_records_for_success(config: ExperimentConfig, results) -> Optional[float]:
    if config.success_region is None:
        return None
    lo, hi = config.success_region
    hits = sum(
        1 for res in results
        if all(lo <= v <= hi for v in res.final_x)
    )
    return hits / len(results)


def run_batch(config: ExperimentConfig) -> BatchReport:
    """Execute all replicates and aggregate their final errors."""
    indices = range(config.runs)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = tuple(pool.map(_execute_run, [config] * config.runs, indices))
    else:
        results = tuple(_execute_run(config, k) for k in indices)

    errors = [res.final_error for res in results]
    values = [res.final_value for res in results]
    return BatchReport(
        config=config,
        results=results,
        error_stats=aggregate_stats(errors),
        value_stats=aggregate_stats(values),
        success_rate=_run_records_for_success(config, results),
    )


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def render_csv(report: BatchReport) -> str:
    """CSV body: run rows first, then a commented stats trailer."""
    header = ["run", "seed", "final_error"]
    header += [f"milestone_{m}" for m in report.config.milestones]
    lines = [",".join(header)]
    for res in report.results:
        row = [str(res.index), str(res.seed), _fmt(res.final_error)]
        row += [_fmt(e) for e in res.milestone_errors]
        lines.append(",".join(row))
    stats = report.error_stats
    lines.append("# stats")
    for name in ("min", "max", "median", "mean", "std"):
        lines.append(f"# {name},{_fmt(getattr(stats, name))}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: BatchReport) -> dict:
    """JSON-ready mirror of the report structure."""
    doc = {
        "config": asdict(report.config),
        "runs": [asdict(res) for res in report.results],
        "error_stats": asdict(report.error_stats),
        "value_stats": asdict(report.value_stats),
        "success_rate": report.success_rate,
    }
    doc["config"]["milestones"] = list(report.config.milestones)
    for row in doc["runs"]:
        row["final_x"] = list(row["final_x"])
        row["milestone_errors"] = list(row["milestone_errors"])
    return doc


def render_json(report: BatchReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def export(report: BatchReport, fmt: str, path: str) -> None:
    """Write the report; CSV and JSON are UTF-8 with \\n line endings."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    text = render_csv(report) if fmt == "csv" else render_json(report)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"could not export report to {path}: {exc}") from exc
