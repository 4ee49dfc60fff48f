"""Influencer-by-type bipartite network, null model and validated projection.

The chain is: raw usage counts -> RCA binarization -> maximum-entropy null
model preserving both degree sequences in expectation -> one shared-type
p-value per influencer pair from the Poisson-binomial null ->
Benjamini-Hochberg filtering -> projected influencer graph.

The null model is encoded by one multiplier per influencer (x_i) and per
type (y_a); a link is present with probability x_i*y_a / (1 + x_i*y_a).
Multipliers are fitted by damped fixed-point iteration on the degree
constraints. Rows/columns whose degree forces their links to the boundary
(present in every consistent configuration, or absent from all) are peeled
off before solving -- the fixed point diverges there -- and their cells get
probability exactly 1 or 0, encoded as x = inf or x = 0.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.sparse as sp
from scipy import stats as sps

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 10_000
DP_PROB_FLOOR = 1e-12
DEFAULT_DP_CUTOFF = 5_000


class BicmConvergenceError(RuntimeError):
    """Solver did not reach the degree-residual tolerance."""

    def __init__(self, residual: float, iterations: int):
        super().__init__(
            f"null-model solver failed to converge: residual {residual:.3e} "
            f"after {iterations} iterations"
        )
        self.residual = residual
        self.iterations = iterations


@dataclass
class WeightedBipartite:
    """Sparse usage counts: rows are influencers, columns are types."""

    row_ids: list[str]
    col_ids: list[str]
    weights: sp.csr_matrix  # non-negative counts, no all-zero rows/columns

    @property
    def shape(self) -> tuple[int, int]:
        return self.weights.shape


@dataclass
class BinaryBipartite:
    row_ids: list[str]
    col_ids: list[str]
    matrix: sp.csr_matrix  # 0/1 float, no all-zero rows/columns
    dropped_rows: list[str] = field(default_factory=list)
    n_dropped_cols: int = 0

    @property
    def row_degrees(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel()

    @property
    def col_degrees(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=0)).ravel()

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


@dataclass
class BicmModel:
    """Fitted multipliers; x/y may be 0 or inf for boundary-forced nodes."""

    x: np.ndarray
    y: np.ndarray
    matrix: sp.csr_matrix
    max_residual: float
    iterations: int
    n_forced_rows: int = 0
    n_forced_cols: int = 0

    def row_probs(self, i: int) -> np.ndarray:
        """Link probabilities of row i against every column."""
        xi = self.x[i]
        if xi == 0.0:
            p = np.where(np.isinf(self.y), np.nan, 0.0)
        elif np.isinf(xi):
            p = np.where(self.y > 0.0, 1.0, np.nan)
        else:
            with np.errstate(over="ignore", invalid="ignore"):
                xy = xi * self.y
                p = np.where(np.isinf(xy), 1.0, xy / (1.0 + xy))
        if np.isnan(p).any():
            # both endpoints boundary-forced: the observed entry is the limit
            m_row = np.asarray(self.matrix.getrow(i).todense()).ravel()
            p = np.where(np.isnan(p), m_row, p)
        return p

    def link_probability_matrix(self) -> np.ndarray:
        """Dense probability matrix; intended for small models."""
        return np.vstack([self.row_probs(i) for i in range(len(self.x))])


@dataclass(frozen=True)
class PairResult:
    i: int
    j: int
    observed: int
    p_value: float
    method: str  # "exact-dp" or "poisson"


@dataclass
class ValidatedProjection:
    """Influencer graph of FDR-surviving co-usage edges."""

    node_ids: list[str]  # endpoints of surviving edges only
    edges: list[tuple[str, str, int, float]]  # (u, v, shared, p_value)
    alpha: float
    n_pairs_tested: int

    @property
    def n_nodes(self) -> int:
        return len(self.node_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


def build_bipartite(token_streams: dict[str, list[str] | tuple[str, ...]]) -> WeightedBipartite:
    """Count each user's type usage into a sparse weighted matrix."""
    if not token_streams:
        raise ValueError("empty corpus: no token streams")
    row_ids = sorted(token_streams)
    per_user = [Counter(token_streams[uid]) for uid in row_ids]
    col_ids = sorted(set().union(*per_user)) if per_user else []
    if not col_ids:
        raise ValueError("empty corpus: no tokens")
    col_index = {tok: k for k, tok in enumerate(col_ids)}

    rows, cols, vals = [], [], []
    for r, counts in enumerate(per_user):
        for tok, c in counts.items():
            rows.append(r)
            cols.append(col_index[tok])
            vals.append(c)
    weights = sp.csr_matrix(
        (np.asarray(vals, dtype=float), (rows, cols)),
        shape=(len(row_ids), len(col_ids)),
    )
    keep_rows = np.flatnonzero(np.asarray(weights.sum(axis=1)).ravel() > 0)
    if len(keep_rows) < len(row_ids):
        weights = weights[keep_rows]
        row_ids = [row_ids[r] for r in keep_rows]
    return WeightedBipartite(row_ids=row_ids, col_ids=col_ids, weights=weights)


def rca_matrix(weights: sp.csr_matrix) -> sp.csr_matrix:
    """Revealed comparative advantage of every non-zero cell.

    RCA_ia = (w_ia / sum_b w_ib) / (sum_j w_ja / sum_jb w_jb): the user's
    share of the type relative to the type's global share.
    """
    total = weights.sum()
    if total <= 0:
        raise ValueError("bipartite weights sum to zero")
    row_sums = np.asarray(weights.sum(axis=1)).ravel()
    col_sums = np.asarray(weights.sum(axis=0)).ravel()
    coo = weights.tocoo()
    rca_vals = (coo.data / row_sums[coo.row]) / (col_sums[coo.col] / total)
    return sp.csr_matrix((rca_vals, (coo.row, coo.col)), shape=weights.shape)


def rca_binarize(w: WeightedBipartite) -> BinaryBipartite:
    """Keep cells with RCA strictly above 1; drop emptied rows/columns."""
    rca = rca_matrix(w.weights)
    coo = rca.tocoo()
    mask = coo.data > 1.0
    m = sp.csr_matrix(
        (np.ones(mask.sum()), (coo.row[mask], coo.col[mask])), shape=w.shape
    )
    row_deg = np.asarray(m.sum(axis=1)).ravel()
    col_deg = np.asarray(m.sum(axis=0)).ravel()
    keep_r = np.flatnonzero(row_deg > 0)
    keep_c = np.flatnonzero(col_deg > 0)
    dropped_rows = [w.row_ids[r] for r in np.flatnonzero(row_deg == 0)]
    if dropped_rows or len(keep_c) < len(w.col_ids):
        logger.info(
            "RCA filter dropped %d empty row(s) and %d empty column(s)",
            len(dropped_rows), len(w.col_ids) - len(keep_c),
        )
    m = m[keep_r][:, keep_c].tocsr()
    return BinaryBipartite(
        row_ids=[w.row_ids[r] for r in keep_r],
        col_ids=[w.col_ids[c] for c in keep_c],
        matrix=m,
        dropped_rows=dropped_rows,
        n_dropped_cols=len(w.col_ids) - len(keep_c),
    )


def _peel_boundary(
    k: np.ndarray, kappa: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Iteratively mark rows/cols whose links are forced to 0 or 1.

    Returns (row_state, col_state, k_reduced, kappa_reduced) where state is
    0 = interior, -1 = forced empty, +1 = forced full. Reduced degrees are
    the constraints that remain for the interior sub-problem.
    """
    n, m = len(k), len(kappa)
    row_state = np.zeros(n, dtype=np.int8)
    col_state = np.zeros(m, dtype=np.int8)
    kr = k.astype(float).copy()
    cr = kappa.astype(float).copy()
    changed = True
    while changed:
        changed = False
        n_active_cols = int((col_state == 0).sum())
        for i in np.flatnonzero(row_state == 0):
            if kr[i] <= 0:
                row_state[i] = -1
                changed = True
            elif kr[i] >= n_active_cols:
                row_state[i] = 1
                cr[col_state == 0] -= 1
                changed = True
        n_active_rows = int((row_state == 0).sum())
        for a in np.flatnonzero(col_state == 0):
            if cr[a] <= 0:
                col_state[a] = -1
                changed = True
            elif cr[a] >= n_active_rows:
                col_state[a] = 1
                kr[row_state == 0] -= 1
                changed = True
    return row_state, col_state, kr, cr


def solve_bicm(
    m: BinaryBipartite,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> BicmModel:
    """Fit the degree-preserving null model for a binary bipartite matrix.

    Fixed-point scheme on the multipliers, one representative per distinct
    degree value (nodes with equal degree share their multiplier exactly).
    Raises BicmConvergenceError when the residual stays above tol.
    """
    k = m.row_degrees
    kappa = m.col_degrees
    if (k == 0).any() or (kappa == 0).any():
        raise ValueError("zero-degree rows/columns must be dropped before solving")

    row_state, col_state, kr, cr = _peel_boundary(k, kappa)
    x = np.zeros(len(k))
    y = np.zeros(len(kappa))
    x[row_state == 1] = np.inf
    y[col_state == 1] = np.inf
    # forced-empty stay at 0

    int_rows = np.flatnonzero(row_state == 0)
    int_cols = np.flatnonzero(col_state == 0)
    iterations = 0
    residual = 0.0

    if int_rows.size and int_cols.size:
        dk = kr[int_rows]
        dc = cr[int_cols]
        uk, inv_k = np.unique(dk, return_inverse=True)
        uc, inv_c = np.unique(dc, return_inverse=True)
        cnt_k = np.bincount(inv_k).astype(float)
        cnt_c = np.bincount(inv_c).astype(float)

        total_links = float(dk.sum())
        xs = uk / np.sqrt(2.0 * total_links)
        ys = uc / np.sqrt(2.0 * total_links)

        def residual_of(xs_, ys_):
            xy = np.outer(xs_, ys_)
            p = xy / (1.0 + xy)
            row_err = np.abs(p @ cnt_c - uk).max()
            col_err = np.abs(cnt_k @ p - uc).max()
            return max(row_err, col_err)

        damp = False
        prev_res = np.inf
        for iterations in range(1, max_iter + 1):
            denom = 1.0 + np.outer(xs, ys)
            xs_new = uk / ((ys[None, :] / denom) @ cnt_c)
            denom = 1.0 + np.outer(xs_new, ys)
            ys_new = uc / (cnt_k @ (xs_new[:, None] / denom))
            if damp:
                xs_new = 0.5 * (xs_new + xs)
                ys_new = 0.5 * (ys_new + ys)
            xs, ys = xs_new, ys_new
            residual = residual_of(xs, ys)
            if residual <= tol:
                break
            damp = residual > prev_res  # oscillation: damp the next sweep
            prev_res = residual
        else:
            raise BicmConvergenceError(residual, max_iter)

        x[int_rows] = xs[inv_k]
        y[int_cols] = ys[inv_c]

    model = BicmModel(
        x=x,
        y=y,
        matrix=m.matrix,
        max_residual=float(residual),
        iterations=iterations,
        n_forced_rows=int((row_state != 0).sum()),
        n_forced_cols=int((col_state != 0).sum()),
    )
    return model


def poisson_binomial_tail(probs: np.ndarray, observed: int) -> float:
    """P(X >= observed) for X a sum of independent Bernoulli(probs).

    Dynamic-programming convolution capped at `observed` states: the mass
    that escapes the cap is exactly the tail.
    """
    if observed <= 0:
        return 1.0
    v = np.zeros(observed)
    v[0] = 1.0
    for q in probs:
        shifted = v[:-1] * q
        v *= 1.0 - q
        v[1:] += shifted
    return float(max(1.0 - v.sum(), 0.0))


def _pair_pvalue(
    p_i: np.ndarray, p_j: np.ndarray, observed: int, dp_cutoff: int
) -> tuple[float, str]:
    if observed <= 0:
        return 1.0, "exact-dp"
    q = p_i * p_j
    q = q[q > DP_PROB_FLOOR]
    if q.size <= dp_cutoff:
        return poisson_binomial_tail(q, observed), "exact-dp"
    return float(sps.poisson.sf(observed - 1, q.sum())), "poisson"


def cooccurrence_pvalues(
    m: BinaryBipartite,
    model: BicmModel,
    dp_cutoff: int = DEFAULT_DP_CUTOFF,
    workers: int = 1,
    block: int = 256,
) -> list[PairResult]:
    """Shared-type count and null p-value for every influencer pair.

    The null for pair (i, j) is a sum of independent Bernoulli trials with
    success probabilities p_ia * p_ja over types a; the p-value is the
    upper tail at the observed shared count. Exact dynamic programming is
    used up to `dp_cutoff` effective types (probabilities below 1e-12
    pruned), a Poisson approximation beyond it; the method is recorded per
    pair. Results come back in canonical (i < j) order regardless of
    scheduling.
    """
    n = m.shape[0]
    observed = np.asarray((m.matrix @ m.matrix.T).todense()).astype(int)

    def run_chunk(pairs_chunk, rows_i, rows_j, off_i, off_j):
        out = []
        for i, j in pairs_chunk:
            p, method = _pair_pvalue(
                rows_i[i - off_i], rows_j[j - off_j], int(observed[i, j]), dp_cutoff
            )
            out.append(PairResult(i=i, j=j, observed=int(observed[i, j]), p_value=p, method=method))
        return out

    results: list[PairResult] = []
    for bi in range(0, n, block):
        hi_i = min(bi + block, n)
        rows_i = [model.row_probs(i) for i in range(bi, hi_i)]
        for bj in range(bi, n, block):
            hi_j = min(bj + block, n)
            rows_j = rows_i if bj == bi else [model.row_probs(j) for j in range(bj, hi_j)]
            pairs = [
                (i, j)
                for i in range(bi, hi_i)
                for j in range(max(bj, i + 1), hi_j)
            ]
            if not pairs:
                continue
            if workers > 1 and len(pairs) > 64:
                step = (len(pairs) + workers - 1) // workers
                chunks = [pairs[s : s + step] for s in range(0, len(pairs), step)]
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    futures = [
                        pool.submit(run_chunk, c, rows_i, rows_j, bi, bj) for c in chunks
                    ]
                    for fut in futures:
                        results.extend(fut.result())
            else:
                results.extend(run_chunk(pairs, rows_i, rows_j, bi, bj))
    results.sort(key=lambda r: (r.i, r.j))
    return results


def fdr_filter(pvalues, alpha: float = 0.05) -> np.ndarray:
    """Benjamini-Hochberg decisions, aligned with the input order.

    Sort ascending, find the largest rank r with p_(r) <= r * alpha / m,
    reject the hypotheses at ranks 1..r.
    """
    p = np.asarray(list(pvalues), dtype=float)
    if p.size == 0:
        raise ValueError("no p-values to filter")
    if ((p < 0) | (p > 1)).any():
        raise ValueError("p-values must lie in [0, 1]")
    m_tests = p.size
    order = np.argsort(p, kind="stable")
    passing = np.flatnonzero(p[order] <= alpha * np.arange(1, m_tests + 1) / m_tests)
    decisions = np.zeros(m_tests, dtype=bool)
    if passing.size:
        decisions[order[: passing[-1] + 1]] = True
    return decisions


def project(
    m: BinaryBipartite,
    pair_results: list[PairResult],
    decisions: np.ndarray,
    alpha: float,
) -> ValidatedProjection:
    """Keep the FDR-surviving pairs as an unweighted influencer graph.

    Influencers that end up isolated are dropped from the node set.
    """
    edges = []
    nodes: set[str] = set()
    for pr, keep in zip(pair_results, decisions):
        if not keep:
            continue
        u, v = m.row_ids[pr.i], m.row_ids[pr.j]
        edges.append((u, v, pr.observed, pr.p_value))
        nodes.add(u)
        nodes.add(v)
    return ValidatedProjection(
        node_ids=sorted(nodes),
        edges=edges,
        alpha=alpha,
        n_pairs_tested=len(pair_results),
    )


def validated_projection(
    token_streams: dict[str, list[str] | tuple[str, ...]],
    alpha: float = 0.05,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    dp_cutoff: int = DEFAULT_DP_CUTOFF,
    workers: int = 1,
) -> tuple[WeightedBipartite, BinaryBipartite, BicmModel, list[PairResult], np.ndarray, ValidatedProjection]:
    """Full chain from token streams to the validated influencer graph."""
    w = build_bipartite(token_streams)
    m = rca_binarize(w)
    if m.shape[0] < 2:
        empty = ValidatedProjection(node_ids=[], edges=[], alpha=alpha, n_pairs_tested=0)
        model = BicmModel(
            x=np.zeros(m.shape[0]), y=np.zeros(m.shape[1]),
            matrix=m.matrix, max_residual=0.0, iterations=0,
        )
        return w, m, model, [], np.zeros(0, dtype=bool), empty
    model = solve_bicm(m, tol=tol, max_iter=max_iter)
    pairs = cooccurrence_pvalues(m, model, dp_cutoff=dp_cutoff, workers=workers)
    decisions = fdr_filter([pr.p_value for pr in pairs], alpha=alpha)
    proj = project(m, pairs, decisions, alpha)
    return w, m, model, pairs, decisions, proj
