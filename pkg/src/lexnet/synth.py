"""Synthetic corpora with planted block structure.

Each block of users draws most tokens from its own vocabulary and the rest
from a shared pool, with Zipf-distributed ranks inside every vocabulary so
the type-frequency spectra show a natural heavy tail. Labels, sentiment
and offensiveness rates are assigned per block. A fixed seed fully
determines the output, including the files written to disk.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from pathlib import Path

import numpy as np

from .ingest import Tweet, TweetLabels, UserLabels

_EPOCH = datetime(2021, 6, 1, tzinfo=timezone.utc)

DEFAULT_BLOCK_LABELS = [
    ("Individual", "Left", "Reliable"),
    ("Organization", "Right", "Questionable"),
    ("Individual", "Center", "Reliable"),
    ("Organization", "Left", "Questionable"),
]


@dataclass
class SynthConfig:
    n_blocks: int = 2
    users_per_block: int = 20
    shared_vocab_size: int = 200
    block_vocab_size: int = 300
    tweets_per_user: float = 20.0      # mean; counts are 1 + Poisson(mean - 1)
    tokens_per_tweet: float = 12.0     # mean; counts are 1 + Poisson(mean - 1)
    block_token_share: float = 0.9     # probability a token comes from the block pool
    zipf_exponent: float = 1.1
    zipf_exponent_by_block: dict[int, float] = field(default_factory=dict)
    negative_rate_by_block: dict[int, float] = field(default_factory=dict)
    offensive_rate_by_block: dict[int, float] = field(default_factory=dict)
    negative_rate: float = 0.2
    offensive_rate: float = 0.1
    block_labels: list[tuple[str, str, str]] | None = None  # (account, political, reliability)
    seed: int = 0

    def validate(self) -> None:
        if min(self.n_blocks, self.users_per_block, self.shared_vocab_size,
               self.block_vocab_size) < 1:
            raise ValueError("all synth sizes must be positive")
        if self.tweets_per_user < 1 or self.tokens_per_tweet < 1:
            raise ValueError("per-user and per-tweet means must be >= 1")
        if not 0.0 <= self.block_token_share <= 1.0:
            raise ValueError("block_token_share must lie in [0, 1]")


@dataclass
class SynthCorpus:
    tweets: list[Tweet]
    user_labels: dict[str, UserLabels]
    tweet_labels: dict[str, TweetLabels]
    ground_truth: dict[str, int]  # user_id -> block
    config: SynthConfig


def _zipf_probs(size: int, exponent: float) -> np.ndarray:
    ranks = np.arange(1, size + 1, dtype=float)
    p = ranks**-exponent
    return p / p.sum()


def generate_corpus(config: SynthConfig) -> SynthCorpus:
    """Draw a labeled corpus plus its ground-truth block partition."""
    config.validate()
    rng = np.random.default_rng(config.seed)

    shared_vocab = [f"shrd{r}" for r in range(config.shared_vocab_size)]
    block_vocabs = [
        [f"blk{b}w{r}" for r in range(config.block_vocab_size)]
        for b in range(config.n_blocks)
    ]
    shared_p = _zipf_probs(config.shared_vocab_size, config.zipf_exponent)
    block_p = [
        _zipf_probs(
            config.block_vocab_size,
            config.zipf_exponent_by_block.get(b, config.zipf_exponent),
        )
        for b in range(config.n_blocks)
    ]
    labels = config.block_labels or DEFAULT_BLOCK_LABELS

    tweets: list[Tweet] = []
    user_labels: dict[str, UserLabels] = {}
    tweet_labels: dict[str, TweetLabels] = {}
    ground_truth: dict[str, int] = {}
    tid = 0

    for b in range(config.n_blocks):
        account, political, reliability = labels[b % len(labels)]
        neg_rate = config.negative_rate_by_block.get(b, config.negative_rate)
        off_rate = config.offensive_rate_by_block.get(b, config.offensive_rate)
        for u in range(config.users_per_block):
            uid = f"user_b{b}_{u:03d}"
            ground_truth[uid] = b
            user_labels[uid] = UserLabels(
                user_id=uid, account_type=account,
                political_leaning=political, reliability=reliability,
            )
            n_tweets = 1 + rng.poisson(config.tweets_per_user - 1)
            for t in range(n_tweets):
                n_tokens = 1 + rng.poisson(config.tokens_per_tweet - 1)
                from_block = rng.random(n_tokens) < config.block_token_share
                words = []
                for fb in from_block:
                    if fb:
                        words.append(block_vocabs[b][rng.choice(config.block_vocab_size, p=block_p[b])])
                    else:
                        words.append(shared_vocab[rng.choice(config.shared_vocab_size, p=shared_p)])
                tweet_id = f"t{tid:07d}"
                tid += 1
                tweets.append(
                    Tweet(
                        tweet_id=tweet_id,
                        user_id=uid,
                        timestamp=_EPOCH + timedelta(minutes=tid),
                        text=" ".join(words) + ".",
                        lang="en",
                    )
                )
                sentiment = "Negative" if rng.random() < neg_rate else (
                    "Neutral" if rng.random() < 0.5 else "Positive"
                )
                tweet_labels[tweet_id] = TweetLabels(
                    tweet_id=tweet_id,
                    sentiment=sentiment,
                    offensive=bool(rng.random() < off_rate),
                )
    return SynthCorpus(
        tweets=tweets,
        user_labels=user_labels,
        tweet_labels=tweet_labels,
        ground_truth=ground_truth,
        config=config,
    )


def write_corpus(corpus: SynthCorpus, out_dir: str | Path) -> dict[str, str]:
    """Write the standard input files plus ground_truth.csv; returns paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "tweets": out / "tweets.jsonl",
        "user_labels": out / "user_labels.csv",
        "tweet_labels": out / "tweet_labels.csv",
        "ground_truth": out / "ground_truth.csv",
    }

    with open(paths["tweets"], "w", encoding="utf-8", newline="\n") as fh:
        for tw in corpus.tweets:
            rec = {
                "tweet_id": tw.tweet_id,
                "user_id": tw.user_id,
                "timestamp": tw.timestamp.isoformat().replace("+00:00", "Z"),
                "text": tw.text,
                "lang": tw.lang,
            }
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")

    with open(paths["user_labels"], "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["user_id", "account_type", "political_leaning", "reliability"])
        for uid in sorted(corpus.user_labels):
            lab = corpus.user_labels[uid]
            writer.writerow([uid, lab.account_type, lab.political_leaning, lab.reliability])

    with open(paths["tweet_labels"], "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["tweet_id", "sentiment", "offensive"])
        for tid in sorted(corpus.tweet_labels):
            lab = corpus.tweet_labels[tid]
            writer.writerow([tid, lab.sentiment, int(lab.offensive)])

    with open(paths["ground_truth"], "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["user_id", "block"])
        for uid in sorted(corpus.ground_truth):
            writer.writerow([uid, corpus.ground_truth[uid]])

    return {k: str(v) for k, v in paths.items()}
