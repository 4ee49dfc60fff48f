"""Corpus ingestion: load tweet and label tables, clean text, join by user.

Input formats are fixed:
  tweets.jsonl     one JSON object per line with keys
                   tweet_id, user_id, timestamp (RFC 3339), text, lang
  tweets.csv       same columns, with a header row
  user_labels.csv  header: user_id,account_type,political_leaning,reliability
  tweet_labels.csv header: tweet_id,sentiment,offensive   (offensive in {0,1})

Rows that do not parse are counted and reported with their line numbers,
never silently dropped. Only English rows (lang == "en") are kept.
"""

from __future__ import annotations

import csv
import json
import logging
import re
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path

from .emoji_ranges import strip_emoji

logger = logging.getLogger(__name__)

ACCOUNT_TYPES = ("Individual", "Organization", "Unknown")
POLITICAL_LEANINGS = ("Left", "Center", "Right", "Unknown")
RELIABILITIES = ("Reliable", "Questionable", "Unknown")
SENTIMENTS = ("Positive", "Neutral", "Negative")

_URL_TOKEN = re.compile(r"^(?:https?://|www\.|t\.co/)\S*", re.IGNORECASE)
_WS = re.compile(r"\s+")


class IngestError(Exception):
    """Unusable input: missing file, zero valid rows, duplicate labels."""


@dataclass(frozen=True)
class Tweet:
    tweet_id: str
    user_id: str
    timestamp: datetime
    text: str
    lang: str


@dataclass(frozen=True)
class UserLabels:
    user_id: str
    account_type: str = "Unknown"
    political_leaning: str = "Unknown"
    reliability: str = "Unknown"


@dataclass(frozen=True)
class TweetLabels:
    tweet_id: str
    sentiment: str | None = None
    offensive: bool | None = None


@dataclass
class LoadReport:
    """Bookkeeping for a single file load."""

    path: str
    n_loaded: int = 0
    n_malformed: int = 0
    malformed_lines: list[int] = field(default_factory=list)
    n_non_english: int = 0
    n_duplicate_id: int = 0


@dataclass
class JoinStats:
    n_tweets: int = 0
    n_users: int = 0
    n_users_unlabeled: int = 0
    n_tweets_unlabeled: int = 0
    n_orphan_tweet_labels: int = 0
    orphan_tweet_ids: list[str] = field(default_factory=list)


@dataclass
class LabeledCorpus:
    """Per-user tweet lists joined with user- and tweet-level labels."""

    tweets_by_user: dict[str, list[Tweet]]
    user_labels: dict[str, UserLabels]
    tweet_labels: dict[str, TweetLabels]
    join_stats: JoinStats
    provenance: dict[str, object] = field(default_factory=dict)

    @property
    def n_users(self) -> int:
        return len(self.tweets_by_user)

    @property
    def n_tweets(self) -> int:
        return sum(len(v) for v in self.tweets_by_user.values())

    def user_ids(self) -> list[str]:
        return sorted(self.tweets_by_user)


def clean_tweet(text: str) -> str:
    """Strip emoji, #hashtags, @mentions and URL tokens from a tweet.

    Emoji are removed codepoint-wise first; then any whitespace-delimited
    token starting with '#', '@', 'http://', 'https://', 'www.' or 't.co/'
    is dropped whole. Remaining whitespace runs collapse to single spaces.
    All other characters pass through verbatim.
    """
    text = strip_emoji(text)
    kept = []
    for token in text.split():
        if token.startswith(("#", "@")):
            continue
        if _URL_TOKEN.match(token):
            continue
        kept.append(token)
    return _WS.sub(" ", " ".join(kept)).strip()


def _parse_tweet_record(rec: dict) -> Tweet:
    tweet_id = str(rec["tweet_id"]).strip()
    user_id = str(rec["user_id"]).strip()
    raw_ts = str(rec["timestamp"]).strip()
    text = rec["text"]
    lang = str(rec["lang"]).strip()
    if not tweet_id or not user_id or not isinstance(text, str) or not text.strip():
        raise ValueError("missing or empty field")
    ts = datetime.fromisoformat(raw_ts.replace("Z", "+00:00"))
    return Tweet(tweet_id=tweet_id, user_id=user_id, timestamp=ts, text=text, lang=lang)


def load_corpus(path: str | Path, format: str = "jsonl") -> tuple[list[Tweet], LoadReport]:
    """Load tweets from disk, keeping well-formed English rows.

    Returns the tweets plus a LoadReport with malformed line numbers,
    the count of non-English rows dropped and duplicate-id rejects.
    Raises IngestError when the file is unreadable or yields zero
    well-formed rows.
    """
    path = Path(path)
    if format not in ("jsonl", "csv"):
        raise ValueError(f"unknown corpus format: {format!r}")
    if not path.is_file():
        raise IngestError(f"corpus file not found: {path}")

    report = LoadReport(path=str(path))
    tweets: list[Tweet] = []
    seen_ids: set[str] = set()

    def consume(lineno: int, rec: dict) -> None:
        try:
            tw = _parse_tweet_record(rec)
        except (KeyError, ValueError, TypeError):
            report.n_malformed += 1
            report.malformed_lines.append(lineno)
            return
        if tw.lang != "en":
            report.n_non_english += 1
            return
        if tw.tweet_id in seen_ids:
            report.n_duplicate_id += 1
            report.malformed_lines.append(lineno)
            return
        seen_ids.add(tw.tweet_id)
        tweets.append(tw)

    with open(path, encoding="utf-8", newline="") as fh:
        if format == "jsonl":
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    report.n_malformed += 1
                    report.malformed_lines.append(lineno)
                    continue
                if not isinstance(rec, dict):
                    report.n_malformed += 1
                    report.malformed_lines.append(lineno)
                    continue
                consume(lineno, rec)
        else:
            reader = csv.DictReader(fh)
            for lineno, rec in enumerate(reader, 2):
                consume(lineno, rec or {})

    report.n_loaded = len(tweets)
    if report.n_malformed:
        logger.warning(
            "%s: %d malformed row(s) at lines %s",
            path, report.n_malformed, report.malformed_lines[:20],
        )
    if not tweets:
        raise IngestError(f"zero well-formed rows in {path}")
    return tweets, report


def load_user_labels(path: str | Path) -> dict[str, UserLabels]:
    """Read user_labels.csv; duplicate user_id rows are an error."""
    path = Path(path)
    if not path.is_file():
        raise IngestError(f"user label file not found: {path}")
    out: dict[str, UserLabels] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            uid = (row.get("user_id") or "").strip()
            if not uid:
                continue
            if uid in out:
                raise IngestError(f"duplicate user_id in {path}: {uid!r}")
            out[uid] = UserLabels(
                user_id=uid,
                account_type=_norm_enum(row.get("account_type"), ACCOUNT_TYPES),
                political_leaning=_norm_enum(row.get("political_leaning"), POLITICAL_LEANINGS),
                reliability=_norm_enum(row.get("reliability"), RELIABILITIES),
            )
    return out


def load_tweet_labels(path: str | Path) -> dict[str, TweetLabels]:
    path = Path(path)
    if not path.is_file():
        raise IngestError(f"tweet label file not found: {path}")
    out: dict[str, TweetLabels] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            tid = (row.get("tweet_id") or "").strip()
            if not tid:
                continue
            sentiment = _norm_enum(row.get("sentiment"), SENTIMENTS, default=None)
            raw_off = (row.get("offensive") or "").strip()
            offensive = {"0": False, "1": True}.get(raw_off)
            out[tid] = TweetLabels(tweet_id=tid, sentiment=sentiment, offensive=offensive)
    return out


def _norm_enum(value, allowed, default="Unknown"):
    if value is None:
        return default
    v = str(value).strip()
    for a in allowed:
        if v.lower() == a.lower():
            return a
    return default


def attach_labels(
    tweets: list[Tweet],
    user_labels: dict[str, UserLabels] | None = None,
    tweet_labels: dict[str, TweetLabels] | None = None,
    provenance: dict | None = None,
    expected_totals: dict[str, int] | None = None,
) -> LabeledCorpus:
    """Left-join label tables onto the corpus, grouping tweets by user.

    Users or tweets that are absent from the label tables are kept with
    Unknown / absent markers; tweet labels that reference no tweet in the
    corpus are reported in the join stats, not dropped silently. When
    expected_totals carries n_tweets / n_users (e.g. a published dataset
    breakdown), the realized totals are checked and mismatches logged and
    recorded in provenance.
    """
    user_labels = user_labels or {}
    tweet_labels = tweet_labels or {}

    by_user: dict[str, list[Tweet]] = {}
    for tw in tweets:
        by_user.setdefault(tw.user_id, []).append(tw)

    stats = JoinStats(n_tweets=len(tweets), n_users=len(by_user))

    joined_users: dict[str, UserLabels] = {}
    for uid in by_user:
        if uid in user_labels:
            joined_users[uid] = user_labels[uid]
        else:
            joined_users[uid] = UserLabels(user_id=uid)
            stats.n_users_unlabeled += 1

    corpus_ids = {tw.tweet_id for tw in tweets}
    joined_tweets: dict[str, TweetLabels] = {}
    for tid, lab in tweet_labels.items():
        if tid in corpus_ids:
            joined_tweets[tid] = lab
        else:
            stats.n_orphan_tweet_labels += 1
            if len(stats.orphan_tweet_ids) < 50:
                stats.orphan_tweet_ids.append(tid)
    stats.n_tweets_unlabeled = len(corpus_ids) - len(joined_tweets)

    if stats.n_orphan_tweet_labels:
        logger.warning(
            "%d tweet label(s) reference ids absent from the corpus",
            stats.n_orphan_tweet_labels,
        )

    provenance = dict(provenance or {})
    if expected_totals:
        realized = {"n_tweets": stats.n_tweets, "n_users": stats.n_users}
        mismatches = {
            key: {"expected": expected_totals[key], "got": realized[key]}
            for key in expected_totals
            if key in realized and expected_totals[key] != realized[key]
        }
        provenance["expected_totals"] = expected_totals
        provenance["total_mismatches"] = mismatches
        if mismatches:
            logger.warning("corpus totals differ from expectations: %s", mismatches)

    return LabeledCorpus(
        tweets_by_user=by_user,
        user_labels=joined_users,
        tweet_labels=joined_tweets,
        join_stats=stats,
        provenance=provenance,
    )
