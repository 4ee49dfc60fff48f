"""Group-difference and agreement statistics.

Kruskal-Wallis is computed from the textbook rank formula with the usual
tie correction and a chi-squared tail for the p-value; Cohen's kappa from
the confusion matrix; Shannon entropy in nats. The MBFC category collapse
used when validating external political/reliability ratings ships here as
a config table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as sps

# External-rating collapse: MBFC-style fine categories -> coarse classes.
MBFC_POLITICAL_COLLAPSE = {
    "left": "Left",
    "extreme_left": "Left",
    "pro_science": "Left",
    "center": "Center",
    "left_center": "Center",
    "right_center": "Center",
    "right": "Right",
    "extreme_right": "Right",
}

MBFC_RELIABILITY_COLLAPSE = {
    "reliable": "Reliable",
    "very_high": "Reliable",
    "high": "Reliable",
    "mostly_factual": "Reliable",
    "questionable": "Questionable",
    "mixed": "Questionable",
    "low": "Questionable",
    "very_low": "Questionable",
    "conspiracy_pseudoscience": "Questionable",
    "satire": "Questionable",
}


@dataclass(frozen=True)
class KruskalResult:
    h_statistic: float
    dof: int
    p_value: float
    group_sizes: tuple[int, ...]
    degenerate: bool = False  # all observations identical


@dataclass(frozen=True)
class AgreementResult:
    kappa: float
    observed_agreement: float
    expected_agreement: float
    confusion_matrix: dict[tuple[str, str], int] = field(default_factory=dict)
    degenerate: bool = False  # expected agreement == 1


def kruskal_wallis(groups: list[list[float]]) -> KruskalResult:
    """Rank-based H with tie correction; chi-squared upper-tail p-value.

    When every pooled observation is identical the statistic is undefined
    after tie correction; that case comes back flagged with H=0, p=1.
    """
    if len(groups) < 2:
        raise ValueError("need at least two groups")
    sizes = tuple(len(g) for g in groups)
    if any(s < 1 for s in sizes):
        raise ValueError("every group needs at least one observation")
    n = sum(sizes)
    if n < 3:
        raise ValueError("need at least three observations in total")

    pooled = np.concatenate([np.asarray(g, dtype=float) for g in groups])
    ranks = sps.rankdata(pooled)
    dof = len(groups) - 1

    h = 0.0
    start = 0
    for s in sizes:
        r = ranks[start : start + s].sum()
        h += r * r / s
        start += s
    h = 12.0 / (n * (n + 1)) * h - 3.0 * (n + 1)

    tie_counts = Counter(pooled.tolist()).values()
    correction = 1.0 - sum(t**3 - t for t in tie_counts) / (n**3 - n)
    if correction == 0.0:
        return KruskalResult(0.0, dof, 1.0, sizes, degenerate=True)
    h /= correction
    p = float(sps.chi2.sf(h, dof))
    return KruskalResult(float(h), dof, p, sizes)


def cohen_kappa(labels_a, labels_b) -> AgreementResult:
    """Chance-corrected agreement between two equal-length label sequences."""
    labels_a, labels_b = list(labels_a), list(labels_b)
    if len(labels_a) != len(labels_b):
        raise ValueError("label sequences must have equal length")
    if not labels_a:
        raise ValueError("label sequences are empty")
    n = len(labels_a)

    confusion = Counter(zip(labels_a, labels_b))
    p_o = sum(v for (a, b), v in confusion.items() if a == b) / n
    row = Counter(labels_a)
    col = Counter(labels_b)
    cats = set(row) | set(col)
    p_e = sum(row.get(c, 0) * col.get(c, 0) for c in cats) / (n * n)

    if p_e >= 1.0:
        return AgreementResult(
            kappa=0.0, observed_agreement=p_o, expected_agreement=p_e,
            confusion_matrix=dict(confusion), degenerate=True,
        )
    kappa = (p_o - p_e) / (1.0 - p_e)
    return AgreementResult(
        kappa=kappa, observed_agreement=p_o, expected_agreement=p_e,
        confusion_matrix=dict(confusion),
    )


def shannon_entropy(counts) -> float:
    """S = -sum p_i ln p_i over the normalized counts (natural log)."""
    arr = np.asarray(list(counts), dtype=float)
    if (arr < 0).any():
        raise ValueError("counts must be non-negative")
    total = arr.sum()
    if total == 0:
        raise ValueError("all counts are zero")
    p = arr[arr > 0] / total
    return float(-(p * np.log(p)).sum()) + 0.0  # +0.0 normalizes -0.0


def collapse_external_rating(raw: str, table: dict[str, str] | None = None) -> str:
    """Map a fine-grained external rating onto the coarse label alphabet."""
    table = MBFC_POLITICAL_COLLAPSE if table is None else table
    return table.get(raw.strip().lower(), "Unknown")
