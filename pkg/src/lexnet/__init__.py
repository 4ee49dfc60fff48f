"""Lexical complexity and language-similarity network toolkit.

Measures per-user lexical complexity (Yule's K, compression ratio, Flesch
reading ease) over a tweet corpus, compares groups of users statistically,
and builds a statistically validated influencer network from shared
vocabulary: RCA-filtered bipartite usage -> degree-preserving maximum-
entropy null model -> Poisson-binomial co-occurrence p-values -> FDR ->
Louvain communities profiled by label entropy.
"""

__version__ = "0.1.0"

from .bipartite import (  # noqa: F401
    BicmConvergenceError,
    BicmModel,
    BinaryBipartite,
    ValidatedProjection,
    WeightedBipartite,
    build_bipartite,
    cooccurrence_pvalues,
    fdr_filter,
    poisson_binomial_tail,
    project,
    rca_binarize,
    solve_bicm,
    validated_projection,
)
from .communities import (  # noqa: F401
    CommunityProfile,
    Partition,
    average_modularity,
    community_label_profile,
    louvain,
    modularity,
)
from .complexity import (  # noqa: F401
    ComplexityScores,
    compression_ratio,
    count_syllables,
    flesch_index,
    split_sentences,
    yule_k,
)
from .ingest import (  # noqa: F401
    IngestError,
    LabeledCorpus,
    Tweet,
    TweetLabels,
    UserLabels,
    attach_labels,
    clean_tweet,
    load_corpus,
    load_tweet_labels,
    load_user_labels,
)
from .profiles import (  # noqa: F401
    OlsFit,
    UserProfile,
    assign_quartile_classes,
    build_profiles,
    loglog_ols,
)
from .stats import (  # noqa: F401
    AgreementResult,
    KruskalResult,
    cohen_kappa,
    kruskal_wallis,
    shannon_entropy,
)
from .synth import SynthConfig, generate_corpus, write_corpus  # noqa: F401
from .textpipe import (  # noqa: F401
    FrequencySpectrum,
    TokenSequence,
    frequency_spectrum,
    preprocess_user_text,
)
