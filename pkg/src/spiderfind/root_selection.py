"""A/B in-degree partition, root scoring and selection, and Q-path enumeration.

All functions here operate on the regularized working subgraph in which
every out-degree equals d = 2l.  The root score d*|A_r| + |VB_r| is computed
exactly for every candidate in a handful of vectorized passes; averaging
over the high-in-degree class guarantees the selected root scores at least
d^2 - d, and that guarantee is asserted at runtime.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .digraph import Digraph
from .errors import AveragingBoundViolated, EmptyA, QBoundViolated
from .extenders import ExtenderPool

__all__ = [
    "ABPartition",
    "RootScore",
    "RootScores",
    "QPath",
    "QPaths",
    "partition_by_in_degree",
    "score_roots",
    "select_root",
    "compute_q_paths",
]

# Reverse-edge lookups use a dense n*n scatter table while it stays small,
# and a sorted-key binary search beyond that.
_PAIR_TABLE_MAX_CELLS = 32_000_000


@dataclass
class ABPartition:
    """Split of V at in-degree 2l, taken on the d-out-regular subgraph."""

    ell: int
    a_mask: np.ndarray

    @cached_property
    def a_set(self) -> frozenset[int]:
        return frozenset(int(v) for v in np.flatnonzero(self.a_mask))

    @cached_property
    def b_set(self) -> frozenset[int]:
        return frozenset(int(v) for v in np.flatnonzero(~self.a_mask))


@dataclass(frozen=True)
class RootScore:
    x: int
    a_x: int
    vb_x: int
    score: int


class RootScores(Sequence[RootScore]):
    """Per-candidate scores for every member of the A class, array-backed."""

    def __init__(self, xs: np.ndarray, a: np.ndarray, vb: np.ndarray, ell: int):
        self.xs = xs
        self.a = a
        self.vb = vb
        self.ell = ell
        self.score = 2 * ell * a + vb

    def __len__(self) -> int:
        return int(self.xs.shape[0])

    def __getitem__(self, i) -> RootScore:
        return RootScore(
            x=int(self.xs[i]),
            a_x=int(self.a[i]),
            vb_x=int(self.vb[i]),
            score=int(self.score[i]),
        )


@dataclass(frozen=True)
class QPath:
    first: int
    middle: int
    last: int


class QPaths(Sequence[QPath]):
    """The 2-paths first -> middle -> r surviving the strong-extender exclusion."""

    def __init__(self, first: np.ndarray, middle: np.ndarray, r: int, n: int):
        self.first = first
        self.middle = middle
        self.r = int(r)
        self.n = int(n)

    def __len__(self) -> int:
        return int(self.first.shape[0])

    def __getitem__(self, i) -> QPath:
        return QPath(int(self.first[i]), int(self.middle[i]), self.r)


def partition_by_in_degree(g: Digraph, ell: int) -> ABPartition:
    """Threshold split at in-degree 2l; input must be exactly 2l-out-regular."""
    d = 2 * ell
    deg = g.out_degrees
    if g.n == 0:
        raise ValueError("cannot partition the empty graph")
    if deg.min() != d or deg.max() != d:
        bad = int(np.argmax(deg != d))
        raise ValueError(
            f"vertex {bad} has out-degree {int(deg[bad])}, expected exactly {d}"
        )
    return ABPartition(ell=ell, a_mask=g.in_degrees >= d)


def _reverse_edge_exists(
    g: Digraph, qsrc: np.ndarray, qdst: np.ndarray, mark_sel=None
) -> np.ndarray:
    """For query edges (qsrc[i], qdst[i]), does the reverse edge exist in g?

    `mark_sel` may restrict which graph edges are eligible as reverses,
    when the caller knows queries can only hit a subset.
    """
    n = g.n
    if qsrc.size == 0:
        return np.zeros(0, dtype=bool)
    rev = qdst.astype(np.int64) * n + qsrc
    src = g.edge_src if mark_sel is None else g.edge_src[mark_sel]
    dst = g.edge_dst if mark_sel is None else g.edge_dst[mark_sel]
    if n * n <= _PAIR_TABLE_MAX_CELLS:
        table = np.zeros(n * n, dtype=bool)
        table[src.astype(np.int64) * n + dst] = True
        return table[rev]
    keys = np.sort(src.astype(np.int64) * n + dst)
    if keys.size == 0:
        return np.zeros(rev.shape[0], dtype=bool)
    pos = np.searchsorted(keys, rev)
    pos[pos >= keys.size] = 0
    return keys[pos] == rev


def score_roots(g: Digraph, part: ABPartition, ell: int) -> RootScores:
    """Exact a_x = |N^-(x) & A| and vb_x = sum over B-in-neighbors b of
    |N^-(b) \\ {x}|, for every x in the A class."""
    n = g.n
    a_mask = part.a_mask
    if not a_mask.any():
        raise EmptyA("no vertex reaches the in-degree threshold")
    src = g.edge_src
    dst = g.edge_dst
    in_deg = g.in_degrees

    a_src = a_mask[src]
    a_dst = a_mask[dst]
    a_vec = np.bincount(dst[a_src & a_dst], minlength=n)

    # vb is only reported for the A class, so edges b -> x with x outside A
    # never contribute.
    sel_b = ~a_src & a_dst
    bsrc = src[sel_b]
    bdst = dst[sel_b]
    in_deg_f = in_deg.astype(np.float64)
    vb0 = np.bincount(bdst, weights=in_deg_f[bsrc], minlength=n)
    # b -> x contributes |N^-(b)| minus one when the path v = x would repeat,
    # i.e. when the antiparallel edge x -> b is also present.  Eligible
    # reverses run from A into B.
    has_rev = _reverse_edge_exists(g, bsrc, bdst, mark_sel=a_src & ~a_dst)
    corr = np.bincount(bdst[has_rev], minlength=n)
    vb = vb0.astype(np.int64) - corr

    xs = np.flatnonzero(a_mask).astype(np.int64)
    return RootScores(xs=xs, a=a_vec[xs].astype(np.int64), vb=vb[xs], ell=ell)


def select_root(
    scores: Union[RootScores, Sequence[RootScore]], ell: int, checked: bool = True
) -> RootScore:
    """Maximal-score entry, smallest vertex id on ties.

    The averaging argument guarantees the winner scores at least d^2 - d on
    2l-out-regular input; in checked mode a shortfall raises, because it can
    only mean an upstream bug.
    """
    if len(scores) == 0:
        raise EmptyA("cannot select a root from empty scores")
    if isinstance(scores, RootScores):
        best = int(scores.score.max())
        tied = scores.xs[scores.score == best]
        winner_x = int(tied.min())
        idx = int(np.flatnonzero(scores.xs == winner_x)[0])
        winner = scores[idx]
    else:
        winner = scores[0]
        for entry in scores[1:]:
            if entry.score > winner.score or (
                entry.score == winner.score and entry.x < winner.x
            ):
                winner = entry
    d = 2 * ell
    bound = d * d - d
    if checked and winner.score < bound:
        raise AveragingBoundViolated(winner.score, bound)
    return winner


def compute_q_paths(
    g: Digraph,
    r: int,
    part: ABPartition,
    pool: ExtenderPool,
    checked: bool = True,
) -> QPaths:
    """All v -> b -> r with b in B, avoiding r and every strong extender.

    The count is guaranteed to be at least d^2 - d - (a+c)(4l-1); in checked
    mode a shortfall raises (the bound may be vacuously negative).
    """
    n = g.n
    r = int(r)
    ell = part.ell
    src = g.edge_src
    dst = g.edge_dst

    excluded = np.zeros(n, dtype=bool)
    for v in pool.a_r:
        excluded[v] = True
    for v in pool.c_r:
        excluded[v] = True

    in_r_mask = np.zeros(n, dtype=bool)
    in_r_mask[src[dst == r]] = True
    mid_ok = in_r_mask & ~part.a_mask & ~excluded
    sel = mid_ok[dst] & (src != r) & ~excluded[src]

    first = src[sel]
    middle = dst[sel]
    d = 2 * ell
    a = len(pool.a_r)
    c = len(pool.c_r)
    bound = d * d - d - (a + c) * (4 * ell - 1)
    if checked and first.shape[0] < bound:
        raise QBoundViolated(int(first.shape[0]), bound)
    return QPaths(first=first, middle=middle, r=r, n=n)
