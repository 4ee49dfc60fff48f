import json
from pathlib import Path

import pytest

from lexnet.synth import SynthConfig, generate_corpus, write_corpus


@pytest.fixture
def tiny_corpus_dir(tmp_path: Path) -> Path:
    """Three users, two blocks, written in the standard input formats."""
    corpus = generate_corpus(
        SynthConfig(n_blocks=2, users_per_block=3, tweets_per_user=6.0,
                    tokens_per_tweet=8.0, shared_vocab_size=40,
                    block_vocab_size=60, seed=11)
    )
    write_corpus(corpus, tmp_path)
    return tmp_path


def write_jsonl(path: Path, records: list[dict]) -> Path:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")
    return path


def make_tweet_record(i: int, user: str = "u1", text: str = "hello world", **kw) -> dict:
    rec = {
        "tweet_id": f"t{i}",
        "user_id": user,
        "timestamp": "2021-06-01T12:00:00Z",
        "text": text,
        "lang": "en",
    }
    rec.update(kw)
    return rec
