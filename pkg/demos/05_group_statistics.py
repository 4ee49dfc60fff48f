"""Group comparisons: Kruskal-Wallis, quartile classes, activity fits.

Two planted user groups differ in how concentrated their vocabulary is
(different Zipf exponents), so their Yule's K distributions separate and
the rank test flags it. The activity-vocabulary relation comes out as a
clean power law on log-log axes.
"""

import numpy as np

from lexnet.ingest import attach_labels
from lexnet.profiles import assign_quartile_classes, build_profiles, loglog_ols
from lexnet.stats import cohen_kappa, kruskal_wallis, shannon_entropy
from lexnet.synth import SynthConfig, generate_corpus

corpus_raw = generate_corpus(
    SynthConfig(
        n_blocks=2, users_per_block=40, seed=3,
        zipf_exponent_by_block={0: 0.8, 1: 1.6},  # block 1 reuses words far more
    )
)
corpus = attach_labels(corpus_raw.tweets, corpus_raw.user_labels,
                       corpus_raw.tweet_labels)
profiles = build_profiles(corpus).profiles

by_block = {0: [], 1: []}
for p in profiles:
    by_block[corpus_raw.ground_truth[p.user_id]].append(p.scores.yule_k)
for b, ks in by_block.items():
    print(f"block {b}: median K = {np.median(ks):8.1f}  (n={len(ks)})")

res = kruskal_wallis([by_block[0], by_block[1]])
print(f"Kruskal-Wallis: H={res.h_statistic:.2f}, dof={res.dof}, p={res.p_value:.2e}")

# quartile classes over the negativity scores
scores = [p.negativity_score for p in profiles if p.negativity_score is not None]
classes = assign_quartile_classes(scores)
from collections import Counter
print("negativity classes:", dict(sorted(Counter(classes).items())))

# activity vs vocabulary, log-log: pool users across activity levels so
# the x-axis actually spans a range
xs, ys = [], []
for mean_tweets in (5.0, 15.0, 45.0, 120.0):
    sub_raw = generate_corpus(SynthConfig(
        n_blocks=1, users_per_block=25, tweets_per_user=mean_tweets,
        seed=int(mean_tweets)))
    sub = attach_labels(sub_raw.tweets, sub_raw.user_labels, sub_raw.tweet_labels)
    for p in build_profiles(sub).profiles:
        xs.append(p.n_tweets)
        ys.append(p.n_types)
fit = loglog_ols(xs, ys)
print(f"vocabulary ~ tweets^{fit.slope:.2f}  (r^2 = {fit.r_squared:.2f}, "
      f"n = {fit.n_points})")

# agreement between two label sets, and entropy of a label distribution
a = ["Left"] * 30 + ["Right"] * 30
b = ["Left"] * 25 + ["Right"] * 5 + ["Right"] * 26 + ["Left"] * 4
print(f"kappa(planted vs noisy labels) = {cohen_kappa(a, b).kappa:.3f}")
print(f"entropy of a 50/50 split = {shannon_entropy([30, 30]):.3f} (= ln 2)")
