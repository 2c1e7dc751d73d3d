"""Auxiliary extension graph and constructive Vizing edge coloring.

The extension graph H has one undirected edge per vertex pair realized by a
surviving 2-path into the root; each edge carries the directed path that
realizes it.  Because every strong extender is excluded from H, its maximum
degree is at most 2l-2, so a proper coloring with at most Delta(H)+1 colors
exists and any color class is a matching of independently orientable legs.

The coloring itself follows the classical constructive proof of Vizing's
theorem: insert edges one at a time; when no color is free at both
endpoints, build a fan at one endpoint, fold it, and when folding is blocked
flip a two-color alternating path first.  A largest color class of size s
always covers at least |E(H)| / (Delta+1) edges by pigeonhole.

Every nondeterministic choice in the textbook proof (which free color, which
fan vertex, which chain) is pinned to the lowest index, so colorings are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DegreeBoundViolated, InternalInvariantError
from .root_selection import QPath, QPaths

__all__ = [
    "ExtensionGraph",
    "EdgeColoring",
    "build_extension_graph",
    "truncate_for_coloring",
    "vizing_color",
    "largest_color_class",
    "format_coloring_dump",
]


class ExtensionGraph:
    """Undirected graph whose edges are realizable spider legs at root r."""

    __slots__ = (
        "n",
        "r",
        "ell",
        "excluded",
        "edge_u",
        "edge_v",
        "leaf",
        "mid",
        "max_degree",
        "truncated",
    )

    def __init__(
        self,
        n: int,
        r: int,
        excluded: frozenset[int],
        edge_u: np.ndarray,
        edge_v: np.ndarray,
        leaf: np.ndarray,
        mid: np.ndarray,
        ell: Optional[int] = None,
        truncated: bool = False,
    ):
        self.n = int(n)
        self.r = int(r)
        self.excluded = excluded
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.leaf = leaf
        self.mid = mid
        self.ell = ell
        self.truncated = truncated
        if edge_u.size:
            deg = np.bincount(
                np.concatenate([edge_u, edge_v]).astype(np.int64), minlength=self.n
            )
            self.max_degree = int(deg.max())
        else:
            self.max_degree = 0

    @property
    def num_edges(self) -> int:
        return int(self.edge_u.shape[0])

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.excluded - {self.r}

    def edge(self, i: int) -> tuple[int, int]:
        return (int(self.edge_u[i]), int(self.edge_v[i]))

    def payload(self, i: int) -> tuple[int, int]:
        """Directed realization (leaf, middle): leaf -> middle -> r."""
        return (int(self.leaf[i]), int(self.mid[i]))

    def __repr__(self) -> str:
        return (
            f"ExtensionGraph(r={self.r}, edges={self.num_edges}, "
            f"max_degree={self.max_degree}, truncated={self.truncated})"
        )


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge color indices; palette is the bound Delta+1, not colors used."""

    color_of: np.ndarray
    palette: int

    def colors_used(self) -> int:
        return int(np.unique(self.color_of).shape[0]) if self.color_of.size else 0


def build_extension_graph(
    q: Union[QPaths, Sequence[QPath]],
    r: int,
    excluded: Iterable[int],
    ell: Optional[int] = None,
    checked: bool = True,
) -> ExtensionGraph:
    """One undirected edge per realized pair, first payload wins.

    When ell is given, enforces the degree bound max_degree <= 2l-2; a
    violation means a strong extender leaked past the exclusion set.
    """
    r = int(r)
    excluded = frozenset(int(v) for v in excluded)
    if isinstance(q, QPaths):
        first = q.first.astype(np.int64)
        middle = q.middle.astype(np.int64)
        n = q.n
    else:
        first = np.asarray([p.first for p in q], dtype=np.int64)
        middle = np.asarray([p.middle for p in q], dtype=np.int64)
        top = int(max([r, *first.tolist(), *middle.tolist()])) if len(q) else r
        n = top + 1
    if checked and first.size:
        for arr in (first, middle):
            if bool(np.any(arr == r)):
                raise ValueError("a path touches the root off-root")
            if excluded and bool(np.any(np.isin(arr, list(excluded)))):
                raise ValueError("a path touches an excluded vertex")

    if first.size:
        u = np.minimum(first, middle)
        v = np.maximum(first, middle)
        key = u * n + v
        _, first_idx = np.unique(key, return_index=True)
        keep = np.sort(first_idx)
        edge_u = u[keep].astype(np.int32)
        edge_v = v[keep].astype(np.int32)
        leaf = first[keep].astype(np.int32)
        mid = middle[keep].astype(np.int32)
    else:
        edge_u = edge_v = leaf = mid = np.empty(0, dtype=np.int32)

    h = ExtensionGraph(
        n=n, r=r, excluded=excluded, edge_u=edge_u, edge_v=edge_v,
        leaf=leaf, mid=mid, ell=ell,
    )
    if ell is not None and h.max_degree > 2 * ell - 2:
        deg = np.bincount(
            np.concatenate([edge_u, edge_v]).astype(np.int64), minlength=n
        )
        vtx = int(np.argmax(deg))
        raise DegreeBoundViolated(vtx, int(deg[vtx]), 2 * ell - 2)
    return h


def truncation_threshold(ell: int) -> int:
    return (2 * ell - 1) * (ell - 1) + 1


def truncate_for_coloring(h: ExtensionGraph, ell: int) -> ExtensionGraph:
    """Cap the coloring instance at (2l-1)(l-1)+1 edges.

    Above the cap, pigeonhole already guarantees a color class of size >= l,
    so dropping the tail edges never loses the spider; the coloring cost
    becomes O(l^2) regardless of input size.
    """
    cap = truncation_threshold(ell)
    if h.num_edges <= cap:
        return h
    return ExtensionGraph(
        n=h.n,
        r=h.r,
        excluded=h.excluded,
        edge_u=h.edge_u[:cap],
        edge_v=h.edge_v[:cap],
        leaf=h.leaf[:cap],
        mid=h.mid[:cap],
        ell=ell,
        truncated=True,
    )


# ---- Vizing coloring ----------------------------------------------------------


def vizing_color(h: ExtensionGraph, checked: bool = True) -> EdgeColoring:
    """Proper edge coloring with palette exactly Delta(h)+1 (0 when edgeless)."""
    m = h.num_edges
    if m == 0:
        return EdgeColoring(color_of=np.empty(0, dtype=np.int32), palette=0)

    # Compact vertex ids; the coloring never compares vertex ids, so any
    # deterministic remap yields the identical color sequence.
    ends = np.concatenate([h.edge_u, h.edge_v])
    uniq, inv = np.unique(ends, return_inverse=True)
    nv = int(uniq.shape[0])
    eu = inv[:m].tolist()
    ev = inv[m:].tolist()

    k = h.max_degree + 1
    full = (1 << k) - 1
    free = [full] * nv
    at: list[dict[int, tuple[int, int]]] = [dict() for _ in range(nv)]
    col = [-1] * m

    for ei in range(m):
        u = eu[ei]
        v = ev[ei]
        f = free[u] & free[v]
        if f:
            c = (f & -f).bit_length() - 1
            col[ei] = c
            bit = 1 << c
            free[u] &= ~bit
            free[v] &= ~bit
            at[u][c] = (v, ei)
            at[v][c] = (u, ei)
        else:
            _insert_with_fan(ei, u, v, col, free, at)

    coloring = EdgeColoring(color_of=np.asarray(col, dtype=np.int32), palette=k)
    if checked:
        _check_proper(eu, ev, col, k)
    return coloring


def _assign(e, u, v, c, col, free, at):
    old = col[e]
    if old >= 0:
        bit = 1 << old
        free[u] |= bit
        free[v] |= bit
        del at[u][old]
        del at[v][old]
    col[e] = c
    bit = 1 << c
    free[u] &= ~bit
    free[v] &= ~bit
    at[u][c] = (v, e)
    at[v][c] = (u, e)


def _insert_with_fan(e0, x, y0, col, free, at):
    """Color e0 = (x, y0) when no color is free at both ends.

    Grows a fan at x: each added edge (x, w) has a color missing at an
    earlier fan vertex.  The fan folds as soon as x and the fan tip share a
    free color; when two fan vertices share a free color instead, one
    alternating-path flip makes the fan foldable.  One of the two exits
    always arrives because the palette has Delta+1 colors.
    """
    fan = [e0]
    rim = [y0]
    rim_missing = free[y0]
    used_in_fan = 0
    while True:
        avail = rim_missing & ~free[x] & ~used_in_fan
        if not avail:
            raise InternalInvariantError(
                "fan ran out of extensions; coloring state is corrupt"
            )
        c = (avail & -avail).bit_length() - 1
        w, ew = at[x][c]
        fan.append(ew)
        rim.append(w)
        used_in_fan |= 1 << c
        if free[x] & free[w]:
            _fold(fan, rim, x, col, free, at)
            return
        fw = free[w]
        reduced = False
        for j in range(len(rim) - 1):
            if free[rim[j]] & fw:
                _flip_and_fold(j, fan, rim, x, col, free, at)
                reduced = True
                break
        if reduced:
            return
        rim_missing |= fw


def _fold(fan, rim, x, col, free, at):
    """Cascade colors down the fan until the base edge is colored."""
    while True:
        tip_e = fan[-1]
        tip_y = rim[-1]
        common = free[x] & free[tip_y]
        c = (common & -common).bit_length() - 1
        old = col[tip_e]
        _assign(tip_e, x, tip_y, c, col, free, at)
        if len(fan) == 1:
            return
        oldbit = 1 << old
        for j in range(len(rim) - 1):
            if free[rim[j]] & oldbit:
                break
        else:
            raise InternalInvariantError("fan lost its defining property")
        del fan[j + 1 :]
        del rim[j + 1 :]


def _flip_and_fold(j, fan, rim, x, col, free, at):
    """Two fan vertices share a missing color: flip one Kempe chain, fold.

    a is missing at rim[j] and the tip; b is missing at x and present at
    every rim vertex.  Flipping the a/b path from rim[j] frees b there
    unless that path ends at x, in which case the path from the tip is
    flipped instead (the two paths cannot both reach x).
    """
    tip = rim[-1]
    shared = free[rim[j]] & free[tip]
    a = (shared & -shared).bit_length() - 1
    fx = free[x]
    b = (fx & -fx).bit_length() - 1
    if _flip_chain(rim[j], a, b, x, col, free, at):
        del fan[j + 1 :]
        del rim[j + 1 :]
    else:
        _flip_chain(tip, a, b, x, col, free, at)
    _fold(fan, rim, x, col, free, at)


def _flip_chain(start, a, b, x, col, free, at) -> bool:
    """Swap colors a/b along the alternating path from `start` (which misses
    a), unless the path ends at x; returns whether the flip happened."""
    chain = []
    z = start
    cur = b
    while cur in at[z]:
        w, e = at[z][cur]
        chain.append((z, w, e))
        z = w
        cur = a if cur == b else b
    if z == x:
        return False
    if not chain:
        return True
    for u, v, e in chain:
        c = col[e]
        del at[u][c]
        del at[v][c]
    for u, v, e in chain:
        c = a if col[e] == b else b
        col[e] = c
        at[u][c] = (v, e)
        at[v][c] = (u, e)
    ab = (1 << a) | (1 << b)
    free[start] ^= ab
    free[z] ^= ab
    return True


def _check_proper(eu, ev, col, palette):
    colors = np.asarray(col, dtype=np.int64)
    if colors.size and (colors.min() < 0 or colors.max() >= palette):
        raise InternalInvariantError("an edge was colored outside the palette")
    ends = np.concatenate([np.asarray(eu, np.int64), np.asarray(ev, np.int64)])
    keys = ends * palette + np.concatenate([colors, colors])
    if np.unique(keys).shape[0] != keys.shape[0]:
        raise InternalInvariantError("incident edges share a color")


def largest_color_class(
    h: ExtensionGraph, col: EdgeColoring, checked: bool = True
) -> np.ndarray:
    """Edge indices of a maximum color class, smallest color index on ties.

    The result is a matching.  On an untruncated extension graph the class
    size s satisfies s * (2l-1) >= |E(h)| by pigeonhole, and that is
    asserted here.
    """
    m = h.num_edges
    if m == 0:
        return np.empty(0, dtype=np.int64)
    counts = np.bincount(col.color_of, minlength=max(col.palette, 1))
    c = int(np.argmax(counts))
    s = int(counts[c])
    idx = np.flatnonzero(col.color_of == c).astype(np.int64)
    if checked:
        ends = np.concatenate([h.edge_u[idx], h.edge_v[idx]])
        if np.unique(ends).shape[0] != ends.shape[0]:
            raise InternalInvariantError("largest color class is not a matching")
    if h.ell is not None and not h.truncated:
        if s * (2 * h.ell - 1) < m:
            raise InternalInvariantError(
                f"largest class {s} cannot cover {m} edges with {2 * h.ell - 1} classes"
            )
    return idx


def format_coloring_dump(h: ExtensionGraph, col: EdgeColoring) -> str:
    """Debug dump, one 'u v color' line per edge."""
    lines = [
        f"{int(u)} {int(v)} {int(c)}"
        for u, v, c in zip(h.edge_u, h.edge_v, col.color_of)
    ]
    return "\n".join(lines) + ("\n" if lines else "")
