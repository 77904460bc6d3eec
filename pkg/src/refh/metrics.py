"""Departmental h-indices over publication windows, and quality scores.

The h-index of a group is the largest n such that n of its publications
have at least n citations each.  ``h`` for measurement year Y counts
citations with citing year <= Y-1, i.e. citations to the end of the
previous calendar year.

Quality scores come from graded profiles:

    s        = p4 + (3/7) p3 + (1/7) p2     (the post-2008 funding weights)
    s_prime  = p4 + (1/3) p3                (the later, more concentrated weights)
    s_output = s applied to the output-only sub-profile
    strength = s * staff_fte
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from refh.corpus import (
    Corpus,
    PublicationRecord,
    PublicationWindow,
    QualityProfile,
    filter_documents,
    normalize_country,
)

HSERIES_HEADER = ["institution", "discipline", "window_start", "window_end", "measurement_year", "h"]
SCORES_HEADER = ["institution", "discipline", "s", "s_prime", "s_output", "strength", "nci"]


def citations_to_end_of(record: PublicationRecord, year: int) -> int:
    """Total citations received in citing years <= ``year``."""
    return sum(c for y, c in record.citations_by_year.items() if y <= year)


def compute_h(citation_counts: Iterable[int]) -> int:
    """Largest n such that at least n of the counts are >= n (0 for empty)."""
    ranked = sorted(citation_counts, reverse=True)
    h = 0
    for i, count in enumerate(ranked, start=1):
        if count >= i:
            h = i
        else:
            break
    return h


def departmental_h(
    corpus: Corpus,
    country: str,
    window: PublicationWindow,
    discipline: str,
    institution: str,
    measurement_year: int,
) -> int:
    """h-index of the filtered group, with citations counted to the end of
    ``measurement_year - 1``."""
    if measurement_year <= window.start_year:
        raise ValueError(
            f"measurement year {measurement_year} must come after "
            f"window start {window.start_year}"
        )
    records = filter_documents(corpus, country, window, discipline, institution)
    cutoff = measurement_year - 1
    return compute_h(citations_to_end_of(r, cutoff) for r in records)


@dataclass(frozen=True)
class HIndexSeries:
    """Per-measurement-year h values for one (institution, discipline) group.

    With a fixed window, citations only accumulate, so the series must be
    non-decreasing across consecutive measurement years; construction
    rejects a series violating that.
    """

    institution: str
    discipline: str
    window: PublicationWindow
    values: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        values = {int(y): int(h) for y, h in self.values.items()}
        for year, h in values.items():
            if h < 0:
                raise ValueError(f"negative h {h} at {year}")
            if (year + 1) in values and values[year + 1] < h:
                raise ValueError(
                    f"{self.institution}: h must not decrease between consecutive "
                    f"years ({year}: {h}, {year + 1}: {values[year + 1]})"
                )
        object.__setattr__(self, "values", dict(sorted(values.items())))


def h_series(
    corpus: Corpus,
    country: str,
    window: PublicationWindow,
    discipline: str,
    institution: str,
    years: Sequence[int],
) -> HIndexSeries:
    """Departmental h per measurement year; ``years`` must be strictly ascending."""
    years = list(years)
    if any(b <= a for a, b in zip(years, years[1:])):
        raise ValueError(f"measurement years must be strictly ascending, got {years}")
    values = {
        year: departmental_h(corpus, country, window, discipline, institution, year)
        for year in years
    }
    return HIndexSeries(institution=institution, discipline=discipline, window=window, values=values)


@dataclass(frozen=True)
class GroupMetrics:
    """Citation-side measures for one group: h by measurement year, plus the
    externally supplied nci when a profile carries one."""

    institution: str
    discipline: str
    window: PublicationWindow
    h_by_year: Mapping[int, int] = field(default_factory=dict)
    nci: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "h_by_year", dict(sorted(self.h_by_year.items())))


def matching_publications(
    corpus: Corpus, country: str, window: PublicationWindow, discipline: str
) -> list[PublicationRecord]:
    """Records matching country, window, and discipline for any institution."""
    dmap = corpus.discipline_map(discipline)
    wanted = normalize_country(country)
    return [
        r
        for r in corpus.publications
        if r.country is not None
        and normalize_country(r.country) == wanted
        and window.contains(r.pub_year)
        and dmap.matches(r.categories)
    ]


def group_metrics(
    corpus: Corpus,
    country: str,
    window: PublicationWindow,
    discipline: str,
    years: Sequence[int],
) -> list[GroupMetrics]:
    """Per-institution h series for every institution with at least one
    matching publication, in institution order.

    Institutions whose publications never pass the filter are omitted,
    mirroring how groups absent from a citation database drop out of
    published lists.
    """
    matched = matching_publications(corpus, country, window, discipline)
    roster = sorted({a for r in matched for a in r.affiliations})
    out = []
    for institution in roster:
        series = h_series(corpus, country, window, discipline, institution, years)
        profile = corpus.profile_for(institution, discipline)
        out.append(
            GroupMetrics(
                institution=institution,
                discipline=discipline,
                window=window,
                h_by_year=series.values,
                nci=None if profile is None else profile.nci,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Quality scores
# ---------------------------------------------------------------------------


def score_s(profile: QualityProfile) -> float:
    """Weighted profile score with weights 1, 3/7, 1/7 on 4*, 3*, 2*."""
    return profile.p4 + (3.0 * profile.p3) / 7.0 + profile.p2 / 7.0


def score_s_prime(profile: QualityProfile) -> float:
    """Weighted profile score with weights 1, 1/3 on 4*, 3*."""
    return profile.p4 + profile.p3 / 3.0


def score_s_output(profile: QualityProfile) -> float | None:
    """``score_s`` on the output-only sub-profile; None when absent."""
    if not profile.has_output_profile:
        return None
    return profile.p4_out + (3.0 * profile.p3_out) / 7.0 + profile.p2_out / 7.0


def strength(profile: QualityProfile) -> float:
    """Overall strength: quality score times submitted staff count."""
    if not profile.staff_fte > 0:
        raise ValueError(f"staff_fte must be positive, got {profile.staff_fte}")
    return score_s(profile) * profile.staff_fte


@dataclass(frozen=True)
class ScoreSet:
    """All four profile-derived scores for one group."""

    institution: str
    discipline: str
    s: float
    s_prime: float
    s_output: float | None = None
    strength: float | None = None

    def __post_init__(self):
        for name in ("s", "s_prime", "s_output"):
            v = getattr(self, name)
            if v is not None and not 0.0 <= v <= 100.0 + 1e-9:
                raise ValueError(f"{self.institution}: {name} = {v} outside [0, 100]")


def score_profile(profile: QualityProfile) -> ScoreSet:
    return ScoreSet(
        institution=profile.institution,
        discipline=profile.discipline,
        s=score_s(profile),
        s_prime=score_s_prime(profile),
        s_output=score_s_output(profile),
        strength=strength(profile),
    )


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _fmt6(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def write_hseries_csv(series: Iterable[HIndexSeries], path: str | Path) -> None:
    """``hseries.csv``: one row per (institution, measurement year)."""
    rows = []
    for s in series:
        for year, h in sorted(s.values.items()):
            rows.append([s.institution, s.discipline, s.window.start_year, s.window.end_year, year, h])
    rows.sort(key=lambda r: (r[0], r[1], r[4]))
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(HSERIES_HEADER)
        writer.writerows(rows)


def write_scores_csv(profiles: Iterable[QualityProfile], path: str | Path) -> None:
    """``scores.csv``: s, s_prime, s_output, strength, and nci per profile."""
    rows = []
    for p in sorted(profiles, key=lambda p: (p.institution, p.discipline)):
        scores = score_profile(p)
        rows.append(
            [
                p.institution,
                p.discipline,
                _fmt6(scores.s),
                _fmt6(scores.s_prime),
                _fmt6(scores.s_output),
                _fmt6(scores.strength),
                _fmt6(p.nci),
            ]
        )
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SCORES_HEADER)
        writer.writerows(rows)
