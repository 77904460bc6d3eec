"""Pearson and Spearman correlation with tie handling and significance flags.

Spearman is computed as Pearson on fractional (mean-of-positions) ranks,
which is the tie-correct estimator; assessment data are full of tied
values, so the naive 1 - 6*sum(d^2)/(n(n^2-1)) shortcut is only valid for
tie-free inputs and is kept to the tests as a cross-check.

Significance uses the t approximation t = r * sqrt((n-2)/(1-r^2)) with
n-2 degrees of freedom for both coefficients, two-sided, at alpha = 0.05.
"""

from __future__ import annotations

import csv
import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.stats import t as student_t

from refh.metrics import GroupMetrics, ScoreSet

ALPHA = 0.05

CORRELATIONS_HEADER = [
    "discipline", "x", "y", "n",
    "pearson_r", "p_pearson", "sig_pearson",
    "spearman_rho", "p_spearman", "sig_spearman",
]
CORR_SERIES_HEADER = CORRELATIONS_HEADER + ["measurement_year"]
FIG_POINTS_HEADER = ["x_value", "y_value", "institution"]

_H_LABEL = re.compile(r"^h(?:_hat)?_(\d{4})$")

log = logging.getLogger(__name__)


class InsufficientDataError(ValueError):
    """Raised when a correlation is requested over fewer than 3 joined pairs."""


def _as_vector(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return arr


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation, clamped to [-1, 1] against rounding."""
    xv = _as_vector(x, "x")
    yv = _as_vector(y, "y")
    if xv.size != yv.size:
        raise ValueError(f"length mismatch: {xv.size} vs {yv.size}")
    if xv.size < 3:
        raise ValueError(f"need at least 3 observations, got {xv.size}")
    xc = xv - xv.mean()
    yc = yv - yv.mean()
    dx = float(xc @ xc)
    dy = float(yc @ yc)
    if dx == 0.0 or dy == 0.0:
        raise ValueError("correlation undefined for a constant vector")
    # single sqrt of the product keeps r exactly 1 for identical vectors
    r = float(xc @ yc) / math.sqrt(dx * dy)
    return max(-1.0, min(1.0, r))


def fractional_ranks(x: Sequence[float]) -> np.ndarray:
    """Ranks 1..n with tied values sharing the mean of their positions."""
    a = _as_vector(x, "x")
    n = a.size
    if n == 0:
        raise ValueError("cannot rank an empty vector")
    order = np.argsort(a, kind="mergesort")
    ranks = np.empty(n, dtype=float)
    i = 0
    while i < n:
        j = i
        while j + 1 < n and a[order[j + 1]] == a[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Rank correlation: Pearson applied to fractional ranks of both vectors."""
    xv = _as_vector(x, "x")
    yv = _as_vector(y, "y")
    if xv.size != yv.size:
        raise ValueError(f"length mismatch: {xv.size} vs {yv.size}")
    if xv.size < 3:
        raise ValueError(f"need at least 3 observations, got {xv.size}")
    return pearson(fractional_ranks(xv), fractional_ranks(yv))


def significance(r: float, n: int, kind: str = "pearson") -> tuple[float, bool]:
    """Two-sided p-value and alpha = 0.05 flag for a correlation of r over n pairs.

    The same t approximation is used for both coefficient kinds.  |r| = 1
    yields p = 0 by convention.  Requires n >= 3 so that the t statistic
    has at least one degree of freedom.
    """
    if kind not in ("pearson", "spearman"):
        raise ValueError(f"kind must be 'pearson' or 'spearman', got {kind!r}")
    if n < 3:
        raise ValueError(f"need at least 3 observations, got {n}")
    if not -1.0 <= r <= 1.0:
        raise ValueError(f"correlation {r} outside [-1, 1]")
    if abs(r) == 1.0:
        return 0.0, True
    df = n - 2
    t_stat = r * math.sqrt(df / (1.0 - r * r))
    p = 2.0 * float(student_t.sf(abs(t_stat), df))
    p = max(0.0, min(1.0, p))
    return p, p < ALPHA


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation of one measure pair over the joined sample."""

    discipline: str
    measure_x: str
    measure_y: str
    n: int
    pearson_r: float
    spearman_rho: float
    p_pearson: float
    p_spearman: float
    significant_pearson: bool
    significant_spearman: bool
    n_dropped: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"report requires n >= 3, got {self.n}")
        for name in ("pearson_r", "spearman_rho"):
            if abs(getattr(self, name)) > 1.0:
                raise ValueError(f"{name} outside [-1, 1]")


@dataclass(frozen=True)
class CorrelationSeries:
    """One measure correlated against h over successive measurement years,
    with the optional x-vs-nci report as a fixed comparison line."""

    measure_x: str
    baseline: CorrelationReport | None = None
    by_year: Mapping[int, CorrelationReport] = field(default_factory=dict)

    def __post_init__(self):
        years = sorted(self.by_year)
        if years and years != list(range(years[0], years[-1] + 1)):
            raise ValueError(f"measurement years must be contiguous, got {years}")
        object.__setattr__(self, "by_year", dict(sorted(self.by_year.items())))


def _score_value(scores: ScoreSet, label: str) -> float | None:
    if label == "s":
        return scores.s
    if label == "s_prime":
        return scores.s_prime
    if label == "s_output":
        return scores.s_output
    if label == "strength":
        return scores.strength
    raise ValueError(f"unknown measure label: {label!r}")


def _metric_value(metrics: GroupMetrics, label: str) -> float | None:
    if label == "i":
        return metrics.nci
    m = _H_LABEL.match(label)
    if m:
        h = metrics.h_by_year.get(int(m.group(1)))
        return None if h is None else float(h)
    raise ValueError(f"unknown measure label: {label!r}")


def joined_points(
    scores: Iterable[ScoreSet],
    metrics: Iterable[GroupMetrics],
    x_label: str,
    y_label: str,
) -> tuple[list[tuple[str, float, float]], int]:
    """Join scores and metrics on (institution, discipline) for one pair.

    Returns (points, dropped) where points are (institution, x, y) rows for
    groups carrying both values and dropped counts the groups present on
    both sides but missing either value.
    """
    score_map = {(s.institution, s.discipline): s for s in scores}
    metric_map = {(m.institution, m.discipline): m for m in metrics}
    points: list[tuple[str, float, float]] = []
    dropped = 0
    for key in sorted(score_map.keys() & metric_map.keys()):
        x = _score_value(score_map[key], x_label)
        y = _metric_value(metric_map[key], y_label)
        if x is None or y is None:
            dropped += 1
            continue
        points.append((key[0], float(x), float(y)))
    return points, dropped


def correlation_table(
    scores: Iterable[ScoreSet],
    metrics: Iterable[GroupMetrics],
    pairs: Sequence[tuple[str, str]],
) -> list[CorrelationReport]:
    """One report per requested (x, y) measure pair.

    Groups missing either value are dropped pairwise; the drop count is
    carried on the report and logged.  Fewer than 3 complete pairs raises
    :class:`InsufficientDataError` naming the pair.
    """
    scores = list(scores)
    metrics = list(metrics)
    reports = []
    for x_label, y_label in pairs:
        points, dropped = joined_points(scores, metrics, x_label, y_label)
        if len(points) < 3:
            raise InsufficientDataError(
                f"pair ({x_label}, {y_label}): only {len(points)} complete "
                f"joined pairs ({dropped} dropped); need at least 3"
            )
        if dropped:
            log.info("pair (%s, %s): dropped %d incomplete rows", x_label, y_label, dropped)
        xs = [p[1] for p in points]
        ys = [p[2] for p in points]
        r = pearson(xs, ys)
        rho = spearman(xs, ys)
        p_r, sig_r = significance(r, len(points), "pearson")
        p_rho, sig_rho = significance(rho, len(points), "spearman")
        disciplines = {s.discipline for s in scores} | {m.discipline for m in metrics}
        reports.append(
            CorrelationReport(
                discipline=disciplines.pop() if len(disciplines) == 1 else "all",
                measure_x=x_label,
                measure_y=y_label,
                n=len(points),
                pearson_r=r,
                spearman_rho=rho,
                p_pearson=p_r,
                p_spearman=p_rho,
                significant_pearson=sig_r,
                significant_spearman=sig_rho,
                n_dropped=dropped,
            )
        )
    return reports


def correlation_series(
    scores: Iterable[ScoreSet],
    metrics: Iterable[GroupMetrics],
    x_label: str,
    years: Sequence[int],
) -> CorrelationSeries:
    """Correlate ``x_label`` against h for each measurement year in ``years``,
    plus against nci once, when any group carries one."""
    scores = list(scores)
    metrics = list(metrics)
    by_year = {
        year: correlation_table(scores, metrics, [(x_label, f"h_{year}")])[0]
        for year in years
    }
    baseline = None
    if any(m.nci is not None for m in metrics):
        baseline = correlation_table(scores, metrics, [(x_label, "i")])[0]
    return CorrelationSeries(measure_x=x_label, baseline=baseline, by_year=by_year)


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _fmt6(value: float) -> str:
    return f"{value:.6f}"


def _report_row(report: CorrelationReport) -> list[str]:
    return [
        report.discipline,
        report.measure_x,
        report.measure_y,
        str(report.n),
        _fmt6(report.pearson_r),
        _fmt6(report.p_pearson),
        "true" if report.significant_pearson else "false",
        _fmt6(report.spearman_rho),
        _fmt6(report.p_spearman),
        "true" if report.significant_spearman else "false",
    ]


def write_correlations_csv(reports: Iterable[CorrelationReport], path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CORRELATIONS_HEADER)
        for report in reports:
            writer.writerow(_report_row(report))


def write_corr_series_csv(series: Iterable[CorrelationSeries], path: str | Path) -> None:
    """Per-year rows plus one year-less baseline row per series when present."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CORR_SERIES_HEADER)
        for s in series:
            if s.baseline is not None:
                writer.writerow(_report_row(s.baseline) + [""])
            for year, report in sorted(s.by_year.items()):
                writer.writerow(_report_row(report) + [str(year)])


def write_fig_points_csv(points: Iterable[tuple[str, float, float]], path: str | Path) -> None:
    """Scatter-plot export: one (x, y) point per institution."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(FIG_POINTS_HEADER)
        for institution, x, y in points:
            writer.writerow([_fmt6(x), _fmt6(y), institution])
