"""User-level aggregation: complexity scores, behavior scores, activity fits.

A profile is built per user from the labeled corpus: tweets are cleaned,
concatenated and pushed through the token pipeline; users whose text
yields zero tokens are excluded (and logged). Negativity/offensiveness
scores are proportions over the user's classified tweets; quartile
classes are assigned over the population of scored users.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as sps

from . import complexity, textpipe
from .ingest import LabeledCorpus, UserLabels, clean_tweet

logger = logging.getLogger(__name__)

QUARTILE_CLASSES = ("Low", "Medium", "High", "VeryHigh")

TWEET_JOINER = "\n"  # separator for per-user concatenated text


@dataclass
class UserProfile:
    user_id: str
    n_tweets: int
    n_tokens: int
    n_types: int
    scores: complexity.ComplexityScores
    labels: UserLabels
    n_classified_sentiment: int = 0
    n_classified_offensive: int = 0
    negativity_score: float | None = None
    offensiveness_score: float | None = None
    negativity_class: str | None = None
    offensiveness_class: str | None = None


@dataclass(frozen=True)
class OlsFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


@dataclass
class ProfileBuild:
    profiles: list[UserProfile]
    excluded_zero_token: list[str] = field(default_factory=list)


def build_profiles(
    corpus: LabeledCorpus,
    stopwords: frozenset[str] | None = None,
    compression_level: int = complexity.DEFAULT_COMPRESSION_LEVEL,
) -> ProfileBuild:
    """One profile per user with at least one surviving token.

    Also assigns quartile classes for negativity and offensiveness over
    the users that have classified tweets.
    """
    profiles: list[UserProfile] = []
    excluded: list[str] = []

    for uid in corpus.user_ids():
        tweets = corpus.tweets_by_user[uid]
        cleaned = [clean_tweet(t.text) for t in tweets]
        joined = TWEET_JOINER.join(c for c in cleaned if c)
        seq = textpipe.preprocess_user_text(joined, stopwords)
        if not seq:
            excluded.append(uid)
            continue
        spectrum = textpipe.frequency_spectrum(seq)
        scores = complexity.score_text(spectrum, joined, level=compression_level)

        n_sent = n_neg = n_off_known = n_off = 0
        for t in tweets:
            lab = corpus.tweet_labels.get(t.tweet_id)
            if lab is None:
                continue
            if lab.sentiment is not None:
                n_sent += 1
                n_neg += lab.sentiment == "Negative"
            if lab.offensive is not None:
                n_off_known += 1
                n_off += lab.offensive
        profiles.append(
            UserProfile(
                user_id=uid,
                n_tweets=len(tweets),
                n_tokens=seq.n_tokens,
                n_types=seq.n_types,
                scores=scores,
                labels=corpus.user_labels[uid],
                n_classified_sentiment=n_sent,
                n_classified_offensive=n_off_known,
                negativity_score=(n_neg / n_sent) if n_sent else None,
                offensiveness_score=(n_off / n_off_known) if n_off_known else None,
            )
        )

    if excluded:
        logger.info("excluded %d zero-token user(s): %s", len(excluded), excluded[:10])

    _assign_classes(profiles, "negativity_score", "negativity_class")
    _assign_classes(profiles, "offensiveness_score", "offensiveness_class")
    return ProfileBuild(profiles=profiles, excluded_zero_token=excluded)


def _assign_classes(profiles: list[UserProfile], score_attr: str, class_attr: str) -> None:
    scored = [p for p in profiles if getattr(p, score_attr) is not None]
    if not scored:
        return
    classes = assign_quartile_classes([getattr(p, score_attr) for p in scored])
    for p, cls in zip(scored, classes):
        setattr(p, class_attr, cls)


def assign_quartile_classes(scores: list[float]) -> list[str]:
    """Quartile bins: <=Q1 Low, (Q1,Q2] Medium, (Q2,Q3] High, >Q3 VeryHigh.

    Quartiles use the linear-interpolation quantile rule; boundary ties
    fall into the lower class.
    """
    if not scores:
        return []
    arr = np.asarray(scores, dtype=float)
    q1, q2, q3 = np.quantile(arr, [0.25, 0.5, 0.75], method="linear")
    out = []
    for s in arr:
        if s <= q1:
            out.append("Low")
        elif s <= q2:
            out.append("Medium")
        elif s <= q3:
            out.append("High")
        else:
            out.append("VeryHigh")
    return out


def loglog_ols(x, y) -> OlsFit:
    """OLS of log10(y) on log10(x) for paired positive values."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-d arrays of equal length")
    if x.size < 2:
        raise ValueError("need at least two points")
    if (x <= 0).any() or (y <= 0).any():
        raise ValueError("log-log fit requires strictly positive values")
    lx, ly = np.log10(x), np.log10(y)
    if np.ptp(lx) == 0:
        raise ValueError("zero variance in x")
    res = sps.linregress(lx, ly)
    return OlsFit(
        slope=float(res.slope),
        intercept=float(res.intercept),
        r_squared=float(res.rvalue**2),
        n_points=int(x.size),
    )
