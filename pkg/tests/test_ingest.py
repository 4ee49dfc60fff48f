import json

import pytest
from hypothesis import given, strategies as st

from lexnet.ingest import (
    IngestError,
    attach_labels,
    clean_tweet,
    load_corpus,
    load_tweet_labels,
    load_user_labels,
)

from conftest import make_tweet_record, write_jsonl


class TestCleanTweet:
    def test_removes_urls_hashtags_mentions_emoji(self):
        assert clean_tweet("see https://t.co/x #cop26 @user now \U0001F30D") == "see now"

    def test_identity_on_clean_text(self):
        assert clean_tweet("plain sentence.") == "plain sentence."

    def test_all_tokens_removable(self):
        assert clean_tweet("@a @b #c") == ""

    def test_url_variants(self):
        assert clean_tweet("a http://x.com b") == "a b"
        assert clean_tweet("a www.example.org/path b") == "a b"
        assert clean_tweet("a t.co/abc123 b") == "a b"

    def test_emoji_stripped_inside_tokens(self):
        assert clean_tweet("wow\U0001F600za") == "wowza"
        # emoji removal happens first, so a revealed #token is still dropped
        assert clean_tweet("\U0001F30D#abc") == ""

    def test_whitespace_collapse(self):
        assert clean_tweet("a   b\t\tc\n\nd") == "a b c d"

    @given(st.text(max_size=200))
    def test_idempotent(self, text):
        once = clean_tweet(text)
        assert clean_tweet(once) == once

    @given(st.text(max_size=200))
    def test_no_new_characters(self, text):
        allowed = set(text) | {" "}
        assert set(clean_tweet(text)) <= allowed


class TestLoadCorpus:
    def test_loads_valid_rows(self, tmp_path):
        path = write_jsonl(tmp_path / "t.jsonl", [make_tweet_record(i) for i in range(3)])
        tweets, report = load_corpus(path)
        assert len(tweets) == 3
        assert report.n_malformed == 0

    def test_reports_malformed_with_line_numbers(self, tmp_path):
        recs = [make_tweet_record(0), make_tweet_record(1)]
        bad = make_tweet_record(2)
        del bad["user_id"]
        path = write_jsonl(tmp_path / "t.jsonl", recs + [bad])
        tweets, report = load_corpus(path)
        assert len(tweets) == 2
        assert report.n_malformed == 1
        assert report.malformed_lines == [3]

    def test_empty_file_errors(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("")
        with pytest.raises(IngestError, match="zero well-formed"):
            load_corpus(path)

    def test_empty_text_rejected(self, tmp_path):
        path = write_jsonl(
            tmp_path / "t.jsonl",
            [make_tweet_record(0), make_tweet_record(1, text="   ")],
        )
        tweets, report = load_corpus(path)
        assert len(tweets) == 1
        assert report.n_malformed == 1

    def test_non_english_dropped(self, tmp_path):
        path = write_jsonl(
            tmp_path / "t.jsonl",
            [make_tweet_record(0), make_tweet_record(1, lang="it")],
        )
        tweets, report = load_corpus(path)
        assert len(tweets) == 1
        assert report.n_non_english == 1

    def test_duplicate_tweet_id_rejected(self, tmp_path):
        path = write_jsonl(
            tmp_path / "t.jsonl",
            [make_tweet_record(0), make_tweet_record(0)],
        )
        tweets, report = load_corpus(path)
        assert len(tweets) == 1
        assert report.n_duplicate_id == 1

    def test_csv_format(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text(
            "tweet_id,user_id,timestamp,text,lang\n"
            "t1,u1,2021-06-01T12:00:00Z,hello,en\n"
            "t2,u1,2021-06-01T12:01:00Z,world,en\n"
        )
        tweets, _ = load_corpus(path, format="csv")
        assert [t.tweet_id for t in tweets] == ["t1", "t2"]

    def test_missing_file(self, tmp_path):
        with pytest.raises(IngestError):
            load_corpus(tmp_path / "nope.jsonl")


class TestAttachLabels:
    def test_unlabeled_user_gets_unknown(self, tmp_path):
        path = write_jsonl(
            tmp_path / "t.jsonl",
            [make_tweet_record(0, user="u1"), make_tweet_record(1, user="u2")],
        )
        tweets, _ = load_corpus(path)
        lab_path = tmp_path / "labels.csv"
        lab_path.write_text(
            "user_id,account_type,political_leaning,reliability\n"
            "u1,Individual,Left,Reliable\n"
        )
        corpus = attach_labels(tweets, load_user_labels(lab_path), {})
        assert corpus.user_labels["u1"].political_leaning == "Left"
        assert corpus.user_labels["u2"].political_leaning == "Unknown"
        assert corpus.join_stats.n_users_unlabeled == 1

    def test_orphan_tweet_labels_reported(self, tmp_path):
        path = write_jsonl(tmp_path / "t.jsonl", [make_tweet_record(0)])
        tweets, _ = load_corpus(path)
        lab_path = tmp_path / "tl.csv"
        lab_path.write_text("tweet_id,sentiment,offensive\nt0,Negative,1\nghost,Positive,0\n")
        corpus = attach_labels(tweets, {}, load_tweet_labels(lab_path))
        assert corpus.join_stats.n_orphan_tweet_labels == 1
        assert corpus.tweet_labels["t0"].offensive is True

    def test_full_match_zero_unknowns(self, tmp_path):
        path = write_jsonl(tmp_path / "t.jsonl", [make_tweet_record(0, user="u1")])
        tweets, _ = load_corpus(path)
        lab_path = tmp_path / "labels.csv"
        lab_path.write_text(
            "user_id,account_type,political_leaning,reliability\n"
            "u1,Individual,Left,Reliable\n"
        )
        corpus = attach_labels(tweets, load_user_labels(lab_path), {})
        assert corpus.join_stats.n_users_unlabeled == 0

    def test_duplicate_user_label_errors(self, tmp_path):
        lab_path = tmp_path / "labels.csv"
        lab_path.write_text(
            "user_id,account_type,political_leaning,reliability\n"
            "u1,Individual,Left,Reliable\nu1,Organization,Right,Questionable\n"
        )
        with pytest.raises(IngestError, match="duplicate user_id"):
            load_user_labels(lab_path)

    def test_count_conservation(self, tmp_path):
        recs = [make_tweet_record(i, user=f"u{i % 3}") for i in range(10)]
        path = write_jsonl(tmp_path / "t.jsonl", recs)
        tweets, report = load_corpus(path)
        corpus = attach_labels(tweets, {}, {})
        assert corpus.n_tweets + report.n_malformed == len(recs)

    def test_expected_totals_checked(self, tmp_path):
        recs = [make_tweet_record(i, user=f"u{i % 2}") for i in range(6)]
        path = write_jsonl(tmp_path / "t.jsonl", recs)
        tweets, _ = load_corpus(path)
        good = attach_labels(tweets, expected_totals={"n_tweets": 6, "n_users": 2})
        assert good.provenance["total_mismatches"] == {}
        off = attach_labels(tweets, expected_totals={"n_tweets": 7})
        assert off.provenance["total_mismatches"]["n_tweets"] == {"expected": 7, "got": 6}
