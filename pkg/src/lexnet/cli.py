"""Pipeline orchestration: config handling, subcommands, artifact output.

Subcommands
    gen           write a synthetic corpus (plus ground truth) to disk
    metrics       ingest -> tokens -> complexity -> profiles.csv
    network       bipartite -> RCA -> null model -> validated_edges.csv
    communities   Louvain on the validated projection -> communities.csv
    report        Kruskal-Wallis grid, activity/vocabulary fits, kappa
    all           every stage in order

Each stage reads its inputs from the output directory of the previous
stage, so stages can be re-run independently. All tunables live in a TOML
config file and can be overridden by flags (flags > file > defaults); the
run manifest records the effective values. Outputs are byte-stable for a
fixed config and input.

Exit codes: 0 success, 1 input error, 2 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from . import __version__, complexity, profiles, stats, synth, textpipe
from .bipartite import (
    BicmConvergenceError,
    build_bipartite,
    cooccurrence_pvalues,
    fdr_filter,
    project,
    rca_binarize,
    solve_bicm,
)
from .communities import (
    average_modularity,
    community_label_profile,
    projection_graph,
)
from .emoji_ranges import UNICODE_VERSION
from .ingest import (
    IngestError,
    LabeledCorpus,
    UserLabels,
    attach_labels,
    load_corpus,
    load_tweet_labels,
    load_user_labels,
)

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

logger = logging.getLogger(__name__)

KW_METRICS = ("yule_k", "gzip_ratio", "flesch")
KW_FEATURES = (
    "account_type",
    "political_leaning",
    "reliability",
    "offensiveness_class",
    "negativity_class",
)

PROFILE_COLUMNS = [
    "user_id", "n_tweets", "n_tokens", "n_types",
    "yule_k", "gzip_ratio", "flesch", "s_raw", "s_compressed",
    "n_classified_sentiment", "negativity_score", "negativity_class",
    "n_classified_offensive", "offensiveness_score", "offensiveness_class",
    "account_type", "political_leaning", "reliability",
]

METRIC_COLUMNS = [
    "user_id", "n_tweets", "n_tokens", "n_types",
    "yule_k", "gzip_ratio", "flesch", "s_raw", "s_compressed",
]


@dataclass
class RunConfig:
    """Effective settings of a pipeline run; defaults are the pinned ones."""

    dataset: str = "dataset"
    tweets: str = "tweets.jsonl"
    tweets_format: str = "jsonl"
    user_labels: str = ""
    tweet_labels: str = ""
    stopwords: str = ""          # empty -> packaged Snowball English list
    out_dir: str = "out"
    compression_level: int = complexity.DEFAULT_COMPRESSION_LEVEL
    fdr_alpha: float = 0.05
    bicm_tol: float = 1e-8
    bicm_max_iter: int = 10_000
    dp_cutoff: int = 5_000
    louvain_runs: int = 100
    louvain_seed_base: int = 0
    louvain_resolution: float = 1.0
    quantile_rule: str = "linear"
    workers: int = 0             # 0 -> number of processors
    external_labels: str = ""
    # synth settings (gen subcommand)
    synth_seed: int = 0
    synth_blocks: int = 2
    synth_users_per_block: int = 20
    synth_shared_vocab: int = 200
    synth_block_vocab: int = 300
    synth_tweets_per_user: float = 20.0
    synth_tokens_per_tweet: float = 12.0
    synth_block_share: float = 0.9
    synth_zipf_exponent: float = 1.1

    @classmethod
    def load(cls, path: str | None, overrides: dict) -> "RunConfig":
        cfg = cls()
        if path:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
            known = {f.name for f in dataclasses.fields(cls)}
            unknown = set(data) - known
            if unknown:
                raise ValueError(f"unknown config keys: {sorted(unknown)}")
            for key, value in data.items():
                setattr(cfg, key, type(getattr(cfg, key))(value))
        for key, value in overrides.items():
            if value is not None:
                setattr(cfg, key, value)
        if cfg.workers <= 0:
            cfg.workers = os.cpu_count() or 1
        return cfg

    def effective(self) -> dict:
        return dataclasses.asdict(self)


# ---------------------------------------------------------------------------
# deterministic writers

def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _update_manifest(out_dir: Path, section: str, payload: dict, cfg: RunConfig) -> None:
    path = out_dir / "manifest.json"
    manifest = {}
    if path.is_file():
        manifest = json.loads(path.read_text("utf-8"))
    manifest["config"] = cfg.effective()
    manifest["environment"] = {
        "package_version": __version__,
        "unicode_emoji_version": UNICODE_VERSION,
        "stopword_checksum": textpipe.stopword_list_checksum(_stopwords(cfg)),
        "quantile_rule": cfg.quantile_rule,
        "entropy_log_base": "e",
    }
    manifest[section] = payload
    _write_json(path, manifest)


# ---------------------------------------------------------------------------
# shared stages

def _stopwords(cfg: RunConfig):
    if cfg.stopwords:
        return textpipe.load_stopwords(cfg.stopwords)
    return textpipe.default_stopwords()


def _ingest(cfg: RunConfig) -> LabeledCorpus:
    tweets, report = load_corpus(cfg.tweets, format=cfg.tweets_format)
    user_labels = load_user_labels(cfg.user_labels) if cfg.user_labels else {}
    tweet_labels = load_tweet_labels(cfg.tweet_labels) if cfg.tweet_labels else {}
    corpus = attach_labels(
        tweets,
        user_labels,
        tweet_labels,
        provenance={
            "tweets_path": str(cfg.tweets),
            "n_loaded": report.n_loaded,
            "n_malformed": report.n_malformed,
            "malformed_lines": report.malformed_lines[:100],
            "n_non_english": report.n_non_english,
            "n_duplicate_id": report.n_duplicate_id,
        },
    )
    return corpus


def _token_streams(cfg: RunConfig, corpus: LabeledCorpus) -> dict[str, tuple[str, ...]]:
    stop = _stopwords(cfg)
    streams = {}
    for uid in corpus.user_ids():
        cleaned = [profiles.clean_tweet(t.text) for t in corpus.tweets_by_user[uid]]
        seq = textpipe.preprocess_user_text(profiles.TWEET_JOINER.join(c for c in cleaned if c), stop)
        if seq:
            streams[uid] = seq.tokens
    return streams


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    corpus = synth.generate_corpus(
        synth.SynthConfig(
            n_blocks=cfg.synth_blocks,
            users_per_block=cfg.synth_users_per_block,
            shared_vocab_size=cfg.synth_shared_vocab,
            block_vocab_size=cfg.synth_block_vocab,
            tweets_per_user=cfg.synth_tweets_per_user,
            tokens_per_tweet=cfg.synth_tokens_per_tweet,
            block_token_share=cfg.synth_block_share,
            zipf_exponent=cfg.synth_zipf_exponent,
            seed=cfg.synth_seed,
        )
    )
    paths = synth.write_corpus(corpus, out_dir)
    _update_manifest(out_dir, "gen", {
        "n_tweets": len(corpus.tweets),
        "n_users": len(corpus.user_labels),
        "paths": paths,
    }, cfg)
    print(f"gen: wrote {len(corpus.tweets)} tweets for {len(corpus.user_labels)} users to {out_dir}")
    return 0


def cmd_metrics(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = _ingest(cfg)
    build = profiles.build_profiles(
        corpus, stopwords=_stopwords(cfg), compression_level=cfg.compression_level
    )
    if not build.profiles:
        raise IngestError("no users left after preprocessing (all zero-token)")

    metric_rows, profile_rows = [], []
    for p in build.profiles:
        s = p.scores
        base = [p.user_id, p.n_tweets, p.n_tokens, p.n_types,
                _fmt(s.yule_k), _fmt(s.gzip_ratio), _fmt(s.flesch), s.s_raw, s.s_compressed]
        metric_rows.append(base)
        profile_rows.append(base + [
            p.n_classified_sentiment, _fmt(p.negativity_score), _fmt(p.negativity_class),
            p.n_classified_offensive, _fmt(p.offensiveness_score), _fmt(p.offensiveness_class),
            p.labels.account_type, p.labels.political_leaning, p.labels.reliability,
        ])
    _write_csv(out_dir / "user_metrics.csv", METRIC_COLUMNS, metric_rows)
    _write_csv(out_dir / "profiles.csv", PROFILE_COLUMNS, profile_rows)

    _update_manifest(out_dir, "metrics", {
        "n_users": len(build.profiles),
        "n_tweets": corpus.n_tweets,
        "excluded_zero_token": build.excluded_zero_token,
        "join_stats": dataclasses.asdict(corpus.join_stats),
        "provenance": corpus.provenance,
        "compression_level": cfg.compression_level,
    }, cfg)
    print(f"metrics: {len(build.profiles)} profiles "
          f"({len(build.excluded_zero_token)} zero-token users excluded)")
    return 0


def cmd_network(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = _ingest(cfg)
    streams = _token_streams(cfg, corpus)
    if not streams:
        raise IngestError("no users with tokens; nothing to project")

    w = build_bipartite(streams)
    m = rca_binarize(w)

    n_inf, n_typ = m.shape
    if n_inf < 2:
        logger.warning("projection is empty: fewer than two influencers survive RCA")
        _write_csv(out_dir / "validated_edges.csv",
                   ["i_user_id", "j_user_id", "observed_shared", "p_value", "method", "rejected"],
                   [])
        _write_json(out_dir / "bicm_diagnostics.json", {
            "alpha": cfg.fdr_alpha, "n_pairs_tested": 0, "n_edges": 0,
            "note": "fewer than two influencers after RCA filtering",
        })
        _export_graph(out_dir, [], [])
        _update_manifest(out_dir, "network", {"projection": {"nodes": 0, "edges": 0}}, cfg)
        print("network: empty projection (fewer than two influencers after RCA)")
        return 0

    model = solve_bicm(m, tol=cfg.bicm_tol, max_iter=cfg.bicm_max_iter)
    pairs = cooccurrence_pvalues(m, model, dp_cutoff=cfg.dp_cutoff, workers=cfg.workers)
    decisions = fdr_filter([pr.p_value for pr in pairs], alpha=cfg.fdr_alpha)
    proj = project(m, pairs, decisions, cfg.fdr_alpha)

    edge_rows = []
    method_counts: dict[str, int] = {}
    for pr, keep in zip(pairs, decisions):
        method_counts[pr.method] = method_counts.get(pr.method, 0) + 1
        if pr.observed >= 1:
            edge_rows.append([
                m.row_ids[pr.i], m.row_ids[pr.j], pr.observed,
                _fmt(pr.p_value), pr.method, int(bool(keep)),
            ])
    _write_csv(out_dir / "validated_edges.csv",
               ["i_user_id", "j_user_id", "observed_shared", "p_value", "method", "rejected"],
               edge_rows)

    bip_stats = {
        "nodes": n_inf + n_typ,
        "nodes_influencers": n_inf,
        "nodes_types": n_typ,
        "edges": int(m.matrix.nnz),
        "density": m.matrix.nnz / (n_inf * n_typ),
        "average_degree": 2.0 * m.matrix.nnz / (n_inf + n_typ),
    }
    n_proj, e_proj = proj.n_nodes, proj.n_edges
    proj_stats = {
        "nodes": n_proj,
        "edges": e_proj,
        "density": (2.0 * e_proj / (n_proj * (n_proj - 1))) if n_proj > 1 else 0.0,
        "average_degree": (2.0 * e_proj / n_proj) if n_proj else 0.0,
    }
    _write_json(out_dir / "bicm_diagnostics.json", {
        "alpha": cfg.fdr_alpha,
        "max_degree_residual": model.max_residual,
        "iterations": model.iterations,
        "tolerance": cfg.bicm_tol,
        "n_forced_rows": model.n_forced_rows,
        "n_forced_cols": model.n_forced_cols,
        "rca_dropped_rows": m.dropped_rows,
        "rca_dropped_cols": m.n_dropped_cols,
        "n_pairs_tested": proj.n_pairs_tested,
        "n_edges": e_proj,
        "pvalue_methods": method_counts,
        "dp_cutoff": cfg.dp_cutoff,
    })
    _export_graph(out_dir, proj.node_ids, proj.edges)
    _update_manifest(out_dir, "network", {
        "bipartite": bip_stats, "projection": proj_stats,
    }, cfg)
    print(f"network: {n_proj} nodes, {e_proj} validated edges "
          f"(of {proj.n_pairs_tested} pairs tested at alpha={cfg.fdr_alpha})")
    return 0


def _export_graph(out_dir: Path, node_ids: list[str], edges: list[tuple]) -> None:
    g = projection_graph(node_ids, edges)
    nx.write_graphml(g, out_dir / "projection.graphml", named_key_ids=True)
    with open(out_dir / "projection_edges.txt", "w", encoding="utf-8", newline="\n") as fh:
        for e in edges:
            fh.write(f"{e[0]}\t{e[1]}\n")


def _read_projection(out_dir: Path) -> nx.Graph:
    path = out_dir / "validated_edges.csv"
    if not path.is_file():
        raise IngestError(f"{path} not found; run the network stage first")
    g = nx.Graph()
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            if row["rejected"] == "1":
                g.add_edge(row["i_user_id"], row["j_user_id"])
    return g


def cmd_communities(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    graph = _read_projection(out_dir)
    if graph.number_of_edges() == 0:
        logger.warning("projection has no edges; writing empty community outputs")
        _write_csv(out_dir / "communities.csv", ["user_id", "community_id"], [])
        _write_json(out_dir / "community_profiles.json", {
            "n_communities": 0, "profiles": [], "note": "empty projection",
        })
        _update_manifest(out_dir, "communities", {"n_communities": 0}, cfg)
        print("communities: empty projection, nothing to detect")
        return 0

    user_labels = (
        load_user_labels(cfg.user_labels) if cfg.user_labels else {}
    )
    seeds = list(range(cfg.louvain_seed_base, cfg.louvain_seed_base + cfg.louvain_runs))
    mean_q, std_q, best = average_modularity(
        graph, seeds=seeds, resolution=cfg.louvain_resolution
    )
    comm_rows = [[uid, cid] for uid, cid in sorted(best.assignment.items())]
    _write_csv(out_dir / "communities.csv", ["user_id", "community_id"], comm_rows)

    label_map = {uid: user_labels.get(uid, UserLabels(user_id=uid)) for uid in best.assignment}
    comm_profiles = community_label_profile(best, label_map)
    _write_json(out_dir / "community_profiles.json", {
        "n_communities": best.n_communities,
        "modularity_best": best.modularity,
        "modularity_mean": mean_q,
        "modularity_std": std_q,
        "n_runs": len(seeds),
        "best_seed": best.seed,
        "resolution": cfg.louvain_resolution,
        "profiles": [dataclasses.asdict(p) for p in comm_profiles],
    })
    _update_manifest(out_dir, "communities", {
        "n_communities": best.n_communities,
        "modularity_mean": mean_q,
        "modularity_std": std_q,
        "best_seed": best.seed,
    }, cfg)
    print(f"communities: {best.n_communities} communities, "
          f"Q = {mean_q:.4f} +/- {std_q:.4f} over {len(seeds)} runs")
    return 0


def _read_profiles(out_dir: Path) -> list[dict]:
    path = out_dir / "profiles.csv"
    if not path.is_file():
        raise IngestError(f"{path} not found; run the metrics stage first")
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def cmd_report(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = _read_profiles(out_dir)

    cells = []
    for metric in KW_METRICS:
        for feature in KW_FEATURES:
            groups: dict[str, list[float]] = {}
            for row in rows:
                label = row.get(feature, "")
                if not label or label == "Unknown":
                    continue
                try:
                    value = float(row[metric])
                except (ValueError, KeyError):
                    continue
                groups.setdefault(label, []).append(value)
            cell = {"metric": metric, "feature": feature, "dataset": cfg.dataset}
            if len(groups) < 2 or sum(len(v) for v in groups.values()) < 3:
                cell["skipped"] = True
                cell["reason"] = "fewer than two labeled groups"
            else:
                names = sorted(groups)
                res = stats.kruskal_wallis([groups[g] for g in names])
                cell.update({
                    "skipped": False,
                    "h_statistic": res.h_statistic,
                    "dof": res.dof,
                    "p_value": res.p_value,
                    "group_sizes": {g: len(groups[g]) for g in names},
                    "degenerate": res.degenerate,
                })
            cells.append(cell)

    fits = {}
    xy = [(float(r["n_tweets"]), float(r["n_types"])) for r in rows
          if float(r["n_tweets"]) > 0 and float(r["n_types"]) > 0]
    if len(xy) >= 2:
        try:
            fits["all"] = _fit_to_dict(xy)
        except ValueError:
            pass
    for account in ("Individual", "Organization"):
        sub = [(float(r["n_tweets"]), float(r["n_types"])) for r in rows
               if r["account_type"] == account
               and float(r["n_tweets"]) > 0 and float(r["n_types"]) > 0]
        if len(sub) >= 2:
            try:
                fits[account] = _fit_to_dict(sub)
            except ValueError:
                pass

    kappa_report = None
    if cfg.external_labels:
        kappa_report = _external_kappa(cfg, rows)

    _write_json(out_dir / "stats_report.json", {
        "dataset": cfg.dataset,
        "kruskal_wallis": cells,
        "ols_loglog_tweets_vs_types": fits,
        "cohen_kappa": kappa_report,
    })
    _update_manifest(out_dir, "report", {
        "n_kruskal_cells": len(cells),
        "n_skipped": sum(1 for c in cells if c.get("skipped")),
    }, cfg)
    n_sig = sum(1 for c in cells if not c.get("skipped") and c["p_value"] < 0.05)
    print(f"report: {len(cells)} Kruskal-Wallis cells "
          f"({n_sig} with p < 0.05), {len(fits)} OLS fits")
    return 0


def _fit_to_dict(xy: list[tuple[float, float]]) -> dict:
    fit = profiles.loglog_ols([p[0] for p in xy], [p[1] for p in xy])
    return dataclasses.asdict(fit)


def _external_kappa(cfg: RunConfig, rows: list[dict]) -> dict:
    """Agreement between corpus labels and an external rating file."""
    own_pol = {r["user_id"]: r["political_leaning"] for r in rows}
    own_rel = {r["user_id"]: r["reliability"] for r in rows}
    ext_pol, ext_rel = {}, {}
    with open(cfg.external_labels, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            uid = row.get("user_id", "").strip()
            if not uid:
                continue
            if row.get("political_leaning"):
                ext_pol[uid] = stats.collapse_external_rating(
                    row["political_leaning"], stats.MBFC_POLITICAL_COLLAPSE)
            if row.get("reliability"):
                ext_rel[uid] = stats.collapse_external_rating(
                    row["reliability"], stats.MBFC_RELIABILITY_COLLAPSE)

    def agreement(own: dict, ext: dict) -> dict | None:
        shared = sorted(
            uid for uid in own
            if uid in ext and own[uid] != "Unknown" and ext[uid] != "Unknown"
        )
        if not shared:
            return None
        res = stats.cohen_kappa([own[u] for u in shared], [ext[u] for u in shared])
        return {
            "kappa": res.kappa,
            "observed_agreement": res.observed_agreement,
            "expected_agreement": res.expected_agreement,
            "n_matched": len(shared),
            "degenerate": res.degenerate,
            "confusion": {f"{a}|{b}": v for (a, b), v in sorted(res.confusion_matrix.items())},
        }

    return {
        "political_leaning": agreement(own_pol, ext_pol),
        "reliability": agreement(own_rel, ext_rel),
    }


def cmd_all(cfg: RunConfig) -> int:
    for step in (cmd_metrics, cmd_network, cmd_communities, cmd_report):
        code = step(cfg)
        if code != 0:
            return code
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexnet",
        description="Lexical complexity metrics and validated language-similarity networks",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-c", "--config", help="TOML config file")
        p.add_argument("--out-dir", dest="out_dir")
        p.add_argument("--dataset", dest="dataset")
        p.add_argument("--tweets", dest="tweets")
        p.add_argument("--tweets-format", dest="tweets_format", choices=["jsonl", "csv"])
        p.add_argument("--user-labels", dest="user_labels")
        p.add_argument("--tweet-labels", dest="tweet_labels")
        p.add_argument("--stopwords", dest="stopwords")
        p.add_argument("--compression-level", dest="compression_level", type=int)
        p.add_argument("--fdr-alpha", dest="fdr_alpha", type=float)
        p.add_argument("--bicm-tol", dest="bicm_tol", type=float)
        p.add_argument("--bicm-max-iter", dest="bicm_max_iter", type=int)
        p.add_argument("--dp-cutoff", dest="dp_cutoff", type=int)
        p.add_argument("--louvain-runs", dest="louvain_runs", type=int)
        p.add_argument("--louvain-seed-base", dest="louvain_seed_base", type=int)
        p.add_argument("--louvain-resolution", dest="louvain_resolution", type=float)
        p.add_argument("--workers", dest="workers", type=int)
        p.add_argument("--external-labels", dest="external_labels")

    for name, fn in [
        ("gen", cmd_gen), ("metrics", cmd_metrics), ("network", cmd_network),
        ("communities", cmd_communities), ("report", cmd_report), ("all", cmd_all),
    ]:
        p = sub.add_parser(name)
        add_common(p)
        p.set_defaults(func=fn)
        if name == "gen":
            p.add_argument("--seed", dest="synth_seed", type=int)
            p.add_argument("--blocks", dest="synth_blocks", type=int)
            p.add_argument("--users-per-block", dest="synth_users_per_block", type=int)
            p.add_argument("--shared-vocab", dest="synth_shared_vocab", type=int)
            p.add_argument("--block-vocab", dest="synth_block_vocab", type=int)
            p.add_argument("--tweets-per-user", dest="synth_tweets_per_user", type=float)
            p.add_argument("--tokens-per-tweet", dest="synth_tokens_per_tweet", type=float)
            p.add_argument("--block-share", dest="synth_block_share", type=float)
            p.add_argument("--zipf-exponent", dest="synth_zipf_exponent", type=float)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose >= 2 else
        logging.INFO if args.verbose == 1 else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    overrides = {
        k: v for k, v in vars(args).items()
        if k not in ("command", "func", "config", "verbose")
    }
    try:
        cfg = RunConfig.load(args.config, overrides)
        return args.func(cfg)
    except BicmConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IngestError, FileNotFoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
