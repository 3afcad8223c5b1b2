#!/usr/bin/env python

"""
Evaluates sweep points numerically and/or analytically, compares the
two paths, and writes the fixed CSV schema.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator, List, Optional
import itertools
import math
import pandas as pd
from loguru import logger
from unruhcoh.analytic.closed_forms import evaluate_analytic, normalized_coherence
from unruhcoh.coherence.measures import evaluate_numeric
from unruhcoh.errors import NumericBudgetExceeded, UnsupportedPattern
from unruhcoh.fock.rindler import DEFAULT_TAIL_TOL
from unruhcoh.states.builders import MAX_TERMS
from unruhcoh.states.families import (
    Family,
    StateSpec,
    TRIPARTITE,
    inertial_weight,
    star_scenario,
)
from unruhcoh.sweeps.config import Mode, SweepConfig

COLUMNS = [
    "family", "theta", "phi", "r1", "r2", "N", "n_accel",
    "c_total_numeric", "c_global_numeric", "c_local_numeric",
    "c_total_analytic", "c_global_analytic", "c_local_analytic",
    "n_max", "tail_bound",
]

METRICS = ("c_total", "c_global", "c_local")


@dataclass(frozen=True)
class Point:
    """
    One state to evaluate. r1/r2 are the grid coordinates written to
    the CSV; when unset they come from the accelerated parties.
    With strict, a path that cannot run raises instead of leaving its
    columns empty.
    """
    spec: StateSpec
    mode: Mode = Mode.both
    normalized: bool = False
    max_terms: int = MAX_TERMS
    pair: Optional[str] = None
    tail_tol: float = DEFAULT_TAIL_TOL
    r1: Optional[float] = None
    r2: Optional[float] = None
    strict: bool = False


def family_label(spec: StateSpec) -> str:
    "Family column value; star rows name their scenario."
    if spec.family == Family.star and spec.accel:
        try:
            return f"star[{star_scenario(spec.accelerated).value}]"
        except ValueError:
            pass
    return spec.family.value


def iter_points(blocks: Iterable[SweepConfig], strict: bool = False) -> Iterator[Point]:
    "Grid points of every block in lexicographic grid order."
    for block in blocks:
        axes = itertools.product(
            block.thetas, block.phis, block.r1,
            block.r2 or (None,), block.n_accel or (None,),
        )
        for (theta, phi, r1, r2, n) in axes:
            accel = block.accel_map(r1, r2, n)
            spec = StateSpec(
                block.family, theta, phi, block.n_parties, accel, block.policy)
            yield Point(
                spec=spec,
                mode=block.mode,
                normalized=block.normalized,
                max_terms=block.max_terms,
                pair=block.pair,
                tail_tol=block.tail_tol,
                r1=block.acceleration(r1).r,
                r2=None if r2 is None else block.acceleration(r2).r,
                strict=strict,
            )


def _normalize(values: dict, inertial: float) -> dict:
    return {
        key: None if value is None else normalized_coherence(value, inertial)
        for (key, value) in values.items()
    }


def evaluate_point(point: Point) -> dict:
    "One CSV row for a point."
    spec = point.spec
    rs = spec.r_values
    row = dict.fromkeys(COLUMNS)
    row.update(
        family=family_label(spec),
        theta=spec.theta,
        phi=spec.phi,
        r1=point.r1 if point.r1 is not None else (rs[0] if rs else None),
        r2=point.r2 if point.r2 is not None else (rs[1] if len(rs) > 1 else None),
        N=None if spec.family in TRIPARTITE else spec.n_parties,
        n_accel=len(spec.accel),
    )

    if point.mode in (Mode.numeric, Mode.both):
        try:
            report = evaluate_numeric(
                spec, point.max_terms, point.pair, inertial=point.normalized)
        except NumericBudgetExceeded as err:
            if point.mode == Mode.numeric or point.strict:
                raise
            logger.warning(f"{row['family']} r={spec.r_map()}: numeric skipped, {err}")
        else:
            values = report.to_row()
            if point.normalized:
                values = _normalize(values, report.c_total + report.c_inaccessible)
            row.update(values)
            if report.n_max_used:
                row["n_max"] = ";".join(
                    str(report.n_max_used[p]) for p in sorted(report.n_max_used))
            row["tail_bound"] = report.tail_bound_total

    if point.mode in (Mode.analytic, Mode.both):
        try:
            report = evaluate_analytic(spec, point.pair)
        except UnsupportedPattern as err:
            if point.mode == Mode.analytic or point.strict:
                raise
            logger.warning(f"{row['family']} r={spec.r_map()}: analytic skipped, {err}")
        else:
            values = report.to_row()
            if point.normalized:
                values = _normalize(values, report.c_total + report.c_inaccessible)
            row.update(values)
    return row


def run_sweep(blocks: Iterable[SweepConfig], workers: int = 1, strict: bool = False) -> List[dict]:
    """
    Evaluate every grid point. Rows come back in grid order whatever
    the number of workers.
    """
    points = list(iter_points(blocks, strict))
    logger.info(f"evaluating {len(points)} points with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate_point, points, chunksize=8))
    return [evaluate_point(point) for point in points]


def propagated_bound(point: Point) -> float:
    """
    Truncation error scale of a point: (sum |psi|)^2 times the sum of
    cosh(r_k) * tail_tol over accelerated parties.
    """
    spec = point.spec
    weight = inertial_weight(spec)
    return weight * math.fsum(
        math.cosh(spec.accel[p].r) * point.tail_tol for p in spec.accelerated)


@dataclass
class CompareResult:
    max_deviation: float
    tolerance: float
    passed: bool
    npoints: int
    worst: Optional[dict] = None


def compare(blocks: Iterable[SweepConfig], workers: int = 1) -> CompareResult:
    """
    Evaluate both paths on every point and check that
    |numeric - analytic| <= 10 * propagated_bound + 1e-9 throughout.
    """
    blocks = [replace(block, mode=Mode.both) for block in blocks]
    points = list(iter_points(blocks, strict=True))
    rows = run_sweep(blocks, workers, strict=True)

    result = CompareResult(0.0, 0.0, True, len(rows))
    worst_ratio = -1.0
    for (point, row) in zip(points, rows):
        tolerance = 10.0 * propagated_bound(point) + 1e-9
        for metric in METRICS:
            numeric = row[f"{metric}_numeric"]
            analytic = row[f"{metric}_analytic"]
            if numeric is None or analytic is None:
                continue
            deviation = abs(numeric - analytic)
            result.max_deviation = max(result.max_deviation, deviation)
            if deviation > tolerance:
                result.passed = False
            if deviation / tolerance > worst_ratio:
                worst_ratio = deviation / tolerance
                result.tolerance = tolerance
                result.worst = dict(row, metric=metric, deviation=deviation)
    logger.info(
        f"compare: max deviation {result.max_deviation:.3e}, "
        f"passed={result.passed} over {result.npoints} points")
    return result


def to_frame(rows: List[dict]) -> pd.DataFrame:
    data = pd.DataFrame(rows, columns=COLUMNS)
    for column in ("N", "n_accel"):
        data[column] = pd.to_numeric(data[column]).astype("Int64")
    return data


def write_csv(rows: List[dict], out: Optional[Path] = None, preset=None) -> str:
    """
    Serialize rows with 17 significant digits and empty fields for
    missing values; prefixed by '# preset=NAME' for presets. Writes to
    `out` when given and returns the text.
    """
    text = to_frame(rows).to_csv(index=False, float_format="%.17g", na_rep="")
    if preset is not None:
        text = f"# preset={getattr(preset, 'value', preset)}\n" + text
    if out is not None:
        Path(out).write_text(text)
        logger.info(f"wrote {len(rows)} rows to {out}")
    return text
