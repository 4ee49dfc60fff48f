import csv
import hashlib
import json
from pathlib import Path

import pytest

from lexnet.cli import main


def run(args: list[str]) -> int:
    return main(args)


def tree_hashes(root: Path) -> dict[str, str]:
    return {
        str(p.relative_to(root)): hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def pipeline_args(data_dir: Path, out_dir: Path, extra: list[str] | None = None) -> list[str]:
    return [
        "--out-dir", str(out_dir),
        "--tweets", str(data_dir / "tweets.jsonl"),
        "--user-labels", str(data_dir / "user_labels.csv"),
        "--tweet-labels", str(data_dir / "tweet_labels.csv"),
        "--louvain-runs", "5",
    ] + (extra or [])


class TestGen:
    def test_writes_standard_files(self, tmp_path):
        assert run(["gen", "--out-dir", str(tmp_path), "--seed", "2",
                    "--users-per-block", "3"]) == 0
        for name in ("tweets.jsonl", "user_labels.csv", "tweet_labels.csv",
                     "ground_truth.csv", "manifest.json"):
            assert (tmp_path / name).is_file()


class TestMetrics:
    def test_one_row_per_user(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run(["metrics"] + pipeline_args(tiny_corpus_dir, out)) == 0
        with open(out / "profiles.csv") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 6
        assert all(float(r["yule_k"]) >= 0 for r in rows)

    def test_single_user_corpus(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        (data / "tweets.jsonl").write_text(
            '{"tweet_id": "t1", "user_id": "solo", "timestamp": '
            '"2021-01-01T00:00:00Z", "text": "solar panels rising",'
            ' "lang": "en"}\n'
        )
        out = tmp_path / "out"
        code = run(["metrics", "--out-dir", str(out), "--tweets", str(data / "tweets.jsonl")])
        assert code == 0
        with open(out / "profiles.csv") as fh:
            assert len(list(csv.DictReader(fh))) == 1

    def test_missing_input_is_exit_1(self, tmp_path):
        assert run(["metrics", "--out-dir", str(tmp_path),
                    "--tweets", str(tmp_path / "nope.jsonl")]) == 1


class TestNetwork:
    def test_disjoint_blocks_no_cross_edges(self, tmp_path):
        data = tmp_path / "data"
        assert run(["gen", "--out-dir", str(data), "--seed", "4",
                    "--users-per-block", "10", "--block-share", "1.0"]) == 0
        out = tmp_path / "out"
        assert run(["network"] + pipeline_args(data, out)) == 0
        with open(out / "validated_edges.csv") as fh:
            rows = list(csv.DictReader(fh))
        cross = [r for r in rows if r["rejected"] == "1"
                 and r["i_user_id"][:7] != r["j_user_id"][:7]]
        assert not cross

    def test_single_user_empty_projection(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        (data / "tweets.jsonl").write_text(
            '{"tweet_id": "t1", "user_id": "solo", "timestamp": '
            '"2021-01-01T00:00:00Z", "text": "solar panels rising",'
            ' "lang": "en"}\n'
        )
        out = tmp_path / "out"
        assert run(["network", "--out-dir", str(out),
                    "--tweets", str(data / "tweets.jsonl")]) == 0
        assert (out / "validated_edges.csv").read_text().strip().count("\n") == 0

    def test_nonconvergence_is_exit_2(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        code = run(["network"] + pipeline_args(
            tiny_corpus_dir, out, ["--bicm-max-iter", "1", "--bicm-tol", "1e-15"]
        ))
        assert code == 2

    def test_manifest_density_consistent(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run(["network"] + pipeline_args(tiny_corpus_dir, out)) == 0
        manifest = json.loads((out / "manifest.json").read_text())
        proj = manifest["network"]["projection"]
        with open(out / "validated_edges.csv") as fh:
            edges = [r for r in csv.DictReader(fh) if r["rejected"] == "1"]
        n, e = proj["nodes"], proj["edges"]
        assert e == len(edges)
        if n > 1:
            assert proj["density"] == pytest.approx(2 * e / (n * (n - 1)))


class TestCommunitiesCmd:
    def test_recovers_blocks_and_profiles(self, tmp_path):
        data = tmp_path / "data"
        assert run(["gen", "--out-dir", str(data), "--seed", "6",
                    "--users-per-block", "12"]) == 0
        out = tmp_path / "out"
        assert run(["network"] + pipeline_args(data, out)) == 0
        assert run(["communities"] + pipeline_args(data, out)) == 0
        with open(out / "communities.csv") as fh:
            rows = list(csv.DictReader(fh))
        blocks = {}
        for r in rows:
            blocks.setdefault(r["community_id"], set()).add(r["user_id"][:7])
        assert len(blocks) == 2
        assert all(len(v) == 1 for v in blocks.values())
        profiles = json.loads((out / "community_profiles.json").read_text())
        assert profiles["n_communities"] == 2
        assert all(p["political_entropy"] == 0.0 for p in profiles["profiles"])

    def test_requires_network_stage(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "fresh"
        assert run(["communities"] + pipeline_args(tiny_corpus_dir, out)) == 1


class TestReport:
    def test_grid_and_fits(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run(["metrics"] + pipeline_args(tiny_corpus_dir, out)) == 0
        assert run(["report"] + pipeline_args(tiny_corpus_dir, out,
                                              ["--dataset", "tiny"])) == 0
        report = json.loads((out / "stats_report.json").read_text())
        assert len(report["kruskal_wallis"]) == 15
        cells = {(c["metric"], c["feature"]): c for c in report["kruskal_wallis"]}
        assert cells[("yule_k", "account_type")]["dataset"] == "tiny"
        assert "all" in report["ols_loglog_tweets_vs_types"]

    def test_kappa_against_identical_file_is_one(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run(["metrics"] + pipeline_args(tiny_corpus_dir, out)) == 0
        assert run(["report"] + pipeline_args(
            tiny_corpus_dir, out,
            ["--external-labels", str(tiny_corpus_dir / "user_labels.csv")],
        )) == 0
        report = json.loads((out / "stats_report.json").read_text())
        kappa = report["cohen_kappa"]
        assert kappa["political_leaning"]["kappa"] == pytest.approx(1.0)
        assert kappa["reliability"]["kappa"] == pytest.approx(1.0)

    def test_planted_complexity_shift_detected(self, tmp_path):
        from lexnet.synth import SynthConfig, generate_corpus, write_corpus

        corpus = generate_corpus(SynthConfig(
            n_blocks=2, users_per_block=30, seed=19,
            zipf_exponent_by_block={0: 0.8, 1: 1.6},  # block 1 far more repetitive
        ))
        data = tmp_path / "data"
        write_corpus(corpus, data)
        out = tmp_path / "out"
        assert run(["metrics"] + pipeline_args(data, out)) == 0
        assert run(["report"] + pipeline_args(data, out)) == 0
        report = json.loads((out / "stats_report.json").read_text())
        cells = {(c["metric"], c["feature"]): c for c in report["kruskal_wallis"]}
        # blocks carry distinct political labels, so the planted K shift
        # shows up on that feature
        assert cells[("yule_k", "political_leaning")]["p_value"] < 0.01

    def test_absent_feature_skipped(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        (data / "tweets.jsonl").write_text(
            "\n".join(
                json.dumps({
                    "tweet_id": f"t{i}", "user_id": f"u{i % 3}",
                    "timestamp": "2021-01-01T00:00:00Z",
                    "text": f"unique{i} words here", "lang": "en",
                }) for i in range(9)
            ) + "\n"
        )
        out = tmp_path / "out"
        assert run(["metrics", "--out-dir", str(out),
                    "--tweets", str(data / "tweets.jsonl")]) == 0
        assert run(["report", "--out-dir", str(out),
                    "--tweets", str(data / "tweets.jsonl")]) == 0
        report = json.loads((out / "stats_report.json").read_text())
        # no labels at all: every grid cell is skipped, none crashes
        assert all(c["skipped"] for c in report["kruskal_wallis"])


class TestAll:
    def test_full_run_and_determinism(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        args = ["all"] + pipeline_args(tiny_corpus_dir, out, ["--dataset", "tiny"])
        assert run(args) == 0
        first = tree_hashes(out)
        assert run(args) == 0
        second = tree_hashes(out)
        assert first == second

    def test_config_file_with_flag_override(self, tiny_corpus_dir, tmp_path):
        cfg = tmp_path / "run.toml"
        cfg.write_text(
            f'tweets = "{tiny_corpus_dir / "tweets.jsonl"}"\n'
            f'user_labels = "{tiny_corpus_dir / "user_labels.csv"}"\n'
            f'out_dir = "{tmp_path / "cfg_out"}"\n'
            "fdr_alpha = 0.10\n"
            "louvain_runs = 4\n"
        )
        assert run(["metrics", "-c", str(cfg)]) == 0
        assert (tmp_path / "cfg_out" / "profiles.csv").is_file()
        # flag overrides the file
        assert run(["metrics", "-c", str(cfg), "--out-dir", str(tmp_path / "flag_out")]) == 0
        assert (tmp_path / "flag_out" / "profiles.csv").is_file()
        manifest = json.loads((tmp_path / "flag_out" / "manifest.json").read_text())
        assert manifest["config"]["fdr_alpha"] == 0.10

    def test_unknown_config_key_is_input_error(self, tmp_path):
        cfg = tmp_path / "bad.toml"
        cfg.write_text("no_such_key = 1\n")
        assert run(["metrics", "-c", str(cfg)]) == 1

    def test_manifest_records_tunables(self, tiny_corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run(["all"] + pipeline_args(tiny_corpus_dir, out)) == 0
        manifest = json.loads((out / "manifest.json").read_text())
        cfg = manifest["config"]
        for key in ("compression_level", "fdr_alpha", "bicm_tol", "bicm_max_iter",
                    "dp_cutoff", "louvain_runs", "louvain_resolution", "quantile_rule"):
            assert key in cfg
        env = manifest["environment"]
        assert env["unicode_emoji_version"]
        assert len(env["stopword_checksum"]) == 64
