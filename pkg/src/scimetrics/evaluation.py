"""Experiment layer: award rankings under several schemes, effectiveness and
predictive power over time, robustness filters, and measure-vs-measure
correlation matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rankcorr
from .corpus import (
    AuthorCorpus,
    Snapshot,
    avg_authors_per_publication,
    snapshot_at,
)
from .errors import DegenerateInputError
from .indices import Measure, compute_all, compute_measure

AWARD_MODES = ("equal_weight", "selective_weight", "binary")
FILTER_MODES = ("all", "no_hyperauthors", "bottom_half_citations", "peak_in_window")
CRITERIA = ("tau_b", "auc", "somers_d", "gamma", "rho")


@dataclass(frozen=True)
class AwardScheme:
    mode: str = "equal_weight"
    selective_threshold: int = 100
    selective_factor: float = 10.0
    subset_fraction: float = 1.0
    rng_seed: int = 0

    def __post_init__(self):
        if self.mode not in AWARD_MODES:
            raise ValueError(f"unknown award mode {self.mode!r}")
        if self.selective_threshold < 1:
            raise ValueError("selective_threshold must be >= 1")
        if self.selective_factor <= 0:
            raise ValueError("selective_factor must be > 0")
        if not 0 < self.subset_fraction <= 1:
            raise ValueError("subset_fraction must be in (0, 1]")


@dataclass(frozen=True)
class AuthorFilter:
    mode: str = "all"
    max_avg_authors: float = 100.0
    window: tuple[int, int] = (2000, 2010)

    def __post_init__(self):
        if self.mode not in FILTER_MODES:
            raise ValueError(f"unknown filter mode {self.mode!r}")
        if self.mode == "peak_in_window" and self.window[0] >= self.window[1]:
            raise ValueError("window start must precede end")


@dataclass(frozen=True)
class EvaluationSeries:
    measure: Measure
    criterion: str
    horizon: int
    years: tuple[int, ...]
    values: tuple[float | None, ...]  # None marks a degenerate (gap) year
    n_authors: tuple[int, ...]


def _retained_award_ids(corpus: AuthorCorpus, scheme: AwardScheme) -> set[str]:
    award_ids = sorted(corpus.catalog)
    if scheme.subset_fraction >= 1:
        return set(award_ids)
    # Subsetting removes whole award types, deterministically per seed.
    n_remove = round((1 - scheme.subset_fraction) * len(award_ids))
    rng = np.random.default_rng(scheme.rng_seed)
    removed = set(rng.choice(award_ids, size=n_remove, replace=False).tolist())
    return set(award_ids) - removed


def award_scores(
    corpus: AuthorCorpus, year: int, scheme: AwardScheme = AwardScheme()
) -> dict[str, float]:
    """Per-author award score counting grants conferred up to `year`."""
    retained = _retained_award_ids(corpus, scheme)
    scores: dict[str, float] = {}
    for author_id, author in corpus.authors.items():
        total = 0.0
        for grant in author.awards:
            if grant.year_conferred > year or grant.award_id not in retained:
                continue
            if (
                scheme.mode == "selective_weight"
                and corpus.catalog[grant.award_id].total_laureates
                <= scheme.selective_threshold
            ):
                total += scheme.selective_factor
            else:
                total += 1.0
        if scheme.mode == "binary":
            total = 1.0 if total > 0 else 0.0
        scores[author_id] = total
    return scores


def apply_filter(
    corpus: AuthorCorpus, snapshot: Snapshot, author_filter: AuthorFilter
) -> list[str]:
    """Author subset (sorted by id) surviving a robustness filter."""
    ids = sorted(snapshot.publications)
    if author_filter.mode == "all":
        kept = ids
    elif author_filter.mode == "no_hyperauthors":
        kept = [
            a
            for a in ids
            if avg_authors_per_publication(a, snapshot)
            <= author_filter.max_avg_authors
        ]
    elif author_filter.mode == "bottom_half_citations":
        totals = {
            a: sum(p.citations for p in snapshot.publications[a]) for a in ids
        }
        ranked = sorted(ids, key=lambda a: (totals[a], a))
        kept = sorted(ranked[: len(ids) // 2])
    else:  # peak_in_window, judged on the full corpus history
        start, end = author_filter.window
        kept = []
        for a in ids:
            counts: dict[int, int] = {}
            for pub in corpus.authors[a].publications:
                counts[pub.effective_year] = counts.get(pub.effective_year, 0) + 1
            if not counts:
                continue
            peak = max(counts.values())
            peak_year = min(y for y, c in counts.items() if c == peak)
            if start <= peak_year < end:
                kept.append(a)
    if not kept:
        raise DegenerateInputError(
            f"filter {author_filter.mode!r} leaves no authors at "
            f"{snapshot.observation_year}"
        )
    return kept


def apply_criterion(criterion: str, measure_values, award_values) -> float:
    """Dispatch a named criterion over aligned value sequences."""
    if criterion == "tau_b":
        return rankcorr.kendall_tau_b(measure_values, award_values)
    if criterion == "auc":
        return rankcorr.roc_auc(measure_values, award_values)
    if criterion == "somers_d":
        return rankcorr.somers_d(measure_values, award_values)
    if criterion == "gamma":
        return rankcorr.goodman_gamma(measure_values, award_values)
    if criterion == "rho":
        return rankcorr.spearman_rho(measure_values, award_values)
    raise ValueError(f"unknown criterion {criterion!r}")


def _evaluate(
    corpus: AuthorCorpus,
    measure: Measure,
    criterion: str,
    snapshot_year: int,
    award_year: int,
    scheme: AwardScheme,
    author_filter: AuthorFilter,
) -> float:
    snapshot = snapshot_at(corpus, snapshot_year)
    ids = apply_filter(corpus, snapshot, author_filter)
    if len(ids) < 2:
        raise DegenerateInputError(
            f"fewer than 2 authors at year {snapshot_year} after filtering"
        )
    values = [compute_measure(a, snapshot, measure) for a in ids]
    scores = award_scores(corpus, award_year, scheme)
    awards = [scores[a] for a in ids]
    try:
        return apply_criterion(criterion, values, awards)
    except DegenerateInputError as exc:
        raise DegenerateInputError(
            f"{criterion} degenerate at year {snapshot_year} "
            f"for measure {measure.value}: {exc}"
        ) from exc


def effectiveness(
    corpus: AuthorCorpus,
    measure: Measure,
    criterion: str,
    year: int,
    scheme: AwardScheme = AwardScheme(),
    author_filter: AuthorFilter = AuthorFilter(),
) -> float:
    """Correlation of a measure's ranking with same-year award scores."""
    return _evaluate(corpus, measure, criterion, year, year, scheme, author_filter)


def predictive_power(
    corpus: AuthorCorpus,
    measure: Measure,
    criterion: str,
    year: int,
    horizon: int,
    scheme: AwardScheme = AwardScheme(),
    author_filter: AuthorFilter = AuthorFilter(),
) -> float:
    """Correlation of a measure at year Y with awards held by Y + horizon."""
    return _evaluate(
        corpus, measure, criterion, year, year + horizon, scheme, author_filter
    )


def series(
    corpus: AuthorCorpus,
    measure: Measure,
    criterion: str,
    year_range: tuple[int, int],
    horizon: int = 0,
    scheme: AwardScheme = AwardScheme(),
    author_filter: AuthorFilter = AuthorFilter(),
) -> EvaluationSeries:
    """Per-year evaluation over [start, end]; degenerate years become gaps."""
    start, end = year_range
    if start > end:
        raise ValueError("empty year range")
    years = []
    values: list[float | None] = []
    counts = []
    for year in range(start, end + 1):
        years.append(year)
        try:
            snapshot = snapshot_at(corpus, year)
            ids = apply_filter(corpus, snapshot, author_filter)
            counts.append(len(ids))
            values.append(
                _evaluate(
                    corpus, measure, criterion, year, year + horizon, scheme,
                    author_filter,
                )
            )
        except DegenerateInputError:
            if len(counts) < len(years):
                counts.append(0)
            values.append(None)
    return EvaluationSeries(
        measure=measure,
        criterion=criterion,
        horizon=horizon,
        years=tuple(years),
        values=tuple(values),
        n_authors=tuple(counts),
    )


def measure_correlation_matrix(
    corpus: AuthorCorpus, year: int, measures: list[Measure]
) -> np.ndarray:
    """Symmetric tau_b matrix over per-author measure values; constant
    columns yield NaN (undefined), never 0."""
    ids = sorted(corpus.authors)
    if len(ids) < 2:
        raise DegenerateInputError("need at least 2 authors")
    snapshot = snapshot_at(corpus, year)
    per_author = [compute_all(a, snapshot) for a in ids]
    columns = {m: [vals[m] for vals in per_author] for m in measures}
    k = len(measures)
    matrix = np.full((k, k), np.nan)
    for i, mi in enumerate(measures):
        for j in range(i, k):
            mj = measures[j]
            try:
                value = rankcorr.kendall_tau_b(columns[mi], columns[mj])
            except DegenerateInputError:
                continue
            matrix[i, j] = value
            matrix[j, i] = value
    return matrix
