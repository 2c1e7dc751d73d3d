"""Extension sets, extender classification, and greedy spider growth.

For a root r and a vertex x != r, the extension set O(x, r) collects every
vertex y that closes a simple 2-path with x ending at r, in either
orientation: x -> y -> r or y -> x -> r.  A vertex with |O(x, r)| >= i is an
i-extender for r; a (2l-1)-extender is called strong.  Strong extenders can
always be attached to a growing spider greedily, which is what
`greedy_extend` does.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import Digraph
from .errors import ExtensionExhausted
from .spider import Spider

__all__ = [
    "ExtensionSet",
    "ExtenderPool",
    "extension_set",
    "is_i_extender",
    "strong_extender_pool",
    "greedy_extend",
]


@dataclass(frozen=True)
class ExtensionSet:
    x: int
    r: int
    members: frozenset[int]


@dataclass(frozen=True)
class ExtenderPool:
    """Strong extenders for r: a_r from the high-in-degree class, c_r the rest."""

    r: int
    a_r: frozenset[int]
    c_r: frozenset[int]
    ell: int


def extension_set(g: Digraph, x: int, r: int) -> ExtensionSet:
    """O(x, r): vertices forming a simple 2-path with x that ends at r."""
    if x == r:
        raise ValueError("extension set requires x != r")
    in_map = g.in_neighbor_map([x, r])
    in_r = set(in_map[r].tolist())
    out_x = g.out_neighbors(x).tolist()
    members = {y for y in out_x if y in in_r}
    if r in out_x:
        members.update(y for y in in_map[x].tolist() if y != r)
    return ExtensionSet(x=int(x), r=int(r), members=frozenset(members))


def is_i_extender(g: Digraph, x: int, r: int, i: int) -> bool:
    return len(extension_set(g, x, r).members) >= i


def _as_mask(vertices, n: int) -> np.ndarray:
    if isinstance(vertices, np.ndarray) and vertices.dtype == bool:
        return vertices
    mask = np.zeros(n, dtype=bool)
    idx = list(vertices)
    if idx:
        mask[idx] = True
    return mask


def strong_extender_pool(g: Digraph, r: int, ell: int, a_set) -> ExtenderPool:
    """Classify every (2l-1)-extender for r.

    a_r is N^-(r) intersected with the given high-in-degree class; each of
    its members is automatically strong (it points at r and has at least
    2l-1 in-neighbors besides r).  c_r holds every other strong extender.
    `a_set` may be a vertex set or a boolean mask over [0, n).
    """
    n = g.n
    thr = 2 * ell - 1
    r = int(r)
    src = g.edge_src
    dst = g.edge_dst
    a_mask = _as_mask(a_set, n)

    in_r_vertices = src[dst == r]
    in_r_mask = np.zeros(n, dtype=bool)
    in_r_mask[in_r_vertices] = True
    a_r = in_r_vertices[a_mask[in_r_vertices]]

    # First-clause count |N^+(x) & N^-(r)| for every x in one pass.
    count1 = np.bincount(src[in_r_mask[dst]], minlength=n)
    strong_mask = count1 >= thr

    # In-neighbors of r outside a_r may still be strong through the second
    # clause; compute the exact union size just for the unresolved ones.
    cand = in_r_vertices[~a_mask[in_r_vertices]]
    cand = cand[count1[cand] < thr]
    in_map = g.in_neighbor_map(cand.tolist())
    scratch = np.zeros(n, dtype=bool)
    for x in cand.tolist():
        row = g.out_neighbors(x)
        hits = row[in_r_mask[row]]
        incoming = in_map[x]
        incoming = incoming[incoming != r]
        scratch[hits] = True
        extra = int((~scratch[incoming]).sum())
        scratch[hits] = False
        if hits.shape[0] + extra >= thr:
            strong_mask[x] = True

    strong_mask[r] = False
    strong_mask[a_r] = False
    c_r = frozenset(int(v) for v in np.flatnonzero(strong_mask))
    return ExtenderPool(
        r=r,
        a_r=frozenset(int(v) for v in a_r.tolist()),
        c_r=c_r,
        ell=ell,
    )


def greedy_extend(
    g: Digraph, r: int, base: Spider, f_seq: Sequence[int]
) -> Spider:
    """Attach one leg per f_seq vertex, in order, onto the base spider.

    Each x in f_seq must be a sufficiently large extender for r (position i,
    1-based, needs |O(x, r)| >= f + 2s + i - 1 where f = len(f_seq) and s is
    the base leg count); under that precondition an attachment vertex always
    exists.  The attachment y is the smallest-id member of O(x, r) outside
    the current spider and the unprocessed tail of f_seq; the leg is
    oriented x -> y -> r when that path exists, else y -> x -> r.
    """
    r = int(r)
    if base.root != r:
        raise ValueError("base spider must be rooted at r")
    f_list = [int(x) for x in f_seq]
    if len(set(f_list)) != len(f_list):
        raise ValueError("f_seq vertices must be distinct")
    spider_verts = base.vertices()
    if spider_verts & set(f_list):
        raise ValueError("f_seq must be disjoint from the base spider")
    if not f_list:
        return base

    in_map = g.in_neighbor_map([r, *f_list])
    in_r_arr = in_map[r]
    in_r_mask = np.zeros(g.n, dtype=bool)
    in_r_mask[in_r_arr] = True
    legs = list(base.legs)
    blocked = spider_verts | set(f_list)
    for x in f_list:
        blocked.discard(x)
        row = g.out_neighbors(x)
        via_out = row[in_r_mask[row]]
        if in_r_mask[x]:
            incoming = in_map[x]
            pool = np.concatenate([via_out, incoming[incoming != r]])
        else:
            pool = via_out
        # Smallest admissible candidate: walk the sorted pool, skipping the
        # current spider and the unprocessed tail of f_seq.
        y = None
        forward = set(via_out.tolist())
        for cand in np.unique(pool).tolist():
            if cand not in blocked:
                y = cand
                break
        if y is None:
            raise ExtensionExhausted(x)
        if y in forward:
            legs.append((x, y))
        else:
            legs.append((y, x))
        blocked.add(x)
        blocked.add(y)
    return Spider(root=r, legs=tuple(legs))
