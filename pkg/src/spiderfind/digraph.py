"""Directed-graph core: representation, degree queries, generators, text I/O.

A Digraph is an immutable simple directed graph (antiparallel pairs allowed,
no loops, no duplicate edges) over dense 0-based vertex ids.  Out-adjacency
is the primary representation, stored CSR-style in two numpy arrays; the
mirrored in-adjacency and a few derived arrays are computed lazily and
cached, so algorithms that never need them do not pay for them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EdgeListError, InsufficientOutDegree

__all__ = [
    "Digraph",
    "DegreeProfile",
    "degree_profile",
    "parse_edge_list",
    "write_edge_list",
    "gen_complete_digraph",
    "gen_random_out_regular",
    "gen_regular_tournament",
    "extract_exact_outdegree_subgraph",
    "min_out_degree",
]

# Rejection sampling is used while the expected per-row collision count stays
# small; denser rows switch to a blocked Fisher-Yates shuffle.
_FY_BLOCK_CELLS = 4_000_000


class Digraph:
    """Immutable directed graph with synchronized out- and in-adjacency."""

    __slots__ = (
        "n",
        "m",
        "_indptr",
        "_indices",
        "_src",
        "_in_deg",
        "_in_indptr",
        "_in_indices",
    )

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.m = int(indices.shape[0])
        indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        indices = np.ascontiguousarray(indices, dtype=np.int32)
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._indptr = indptr
        self._indices = indices
        self._src = None
        self._in_deg = None
        self._in_indptr = None
        self._in_indices = None

    # ---- construction ----------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], validate: bool = True
    ) -> "Digraph":
        """Build from an edge sequence, keeping per-source edge order."""
        pairs = list(edges)
        if pairs:
            src = np.asarray([u for u, _ in pairs], dtype=np.int64)
            dst = np.asarray([v for _, v in pairs], dtype=np.int64)
        else:
            src = np.empty(0, dtype=np.int64)
            dst = np.empty(0, dtype=np.int64)
        return cls.from_edge_arrays(n, src, dst, validate=validate)

    @classmethod
    def from_edge_arrays(
        cls, n: int, src: np.ndarray, dst: np.ndarray, validate: bool = True
    ) -> "Digraph":
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        src = np.asarray(src)
        dst = np.asarray(dst)
        if validate:
            if src.size and (src.min() < 0 or src.max() >= n):
                raise ValueError("source vertex out of range")
            if dst.size and (dst.min() < 0 or dst.max() >= n):
                raise ValueError("destination vertex out of range")
            if np.any(src == dst):
                bad = int(np.flatnonzero(src == dst)[0])
                raise ValueError(f"self-loop at edge {bad}")
            key = src.astype(np.int64) * n + dst
            uniq = np.unique(key)
            if uniq.size != key.size:
                raise ValueError("duplicate directed edge")
        order = np.argsort(src, kind="stable")
        counts = np.bincount(src, minlength=n) if src.size else np.zeros(n, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, dst[order].astype(np.int32))

    # ---- queries -----------------------------------------------------------

    @property
    def out_degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    @property
    def in_degrees(self) -> np.ndarray:
        if self._in_deg is None:
            deg = np.bincount(self._indices, minlength=self.n).astype(np.int64)
            deg.setflags(write=False)
            self._in_deg = deg
        return self._in_deg

    @property
    def edge_src(self) -> np.ndarray:
        """Per-edge source vertex, aligned with `edge_dst`."""
        if self._src is None:
            src = np.repeat(
                np.arange(self.n, dtype=np.int32), np.diff(self._indptr)
            )
            src.setflags(write=False)
            self._src = src
        return self._src

    @property
    def edge_dst(self) -> np.ndarray:
        """Per-edge destination vertex, in out-adjacency order."""
        return self._indices

    def out_degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def in_degree(self, v: int) -> int:
        return int(self.in_degrees[v])

    def out_neighbors(self, v: int) -> np.ndarray:
        return self._indices[self._indptr[v] : self._indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        self._build_in_csr()
        return self._in_indices[self._in_indptr[v] : self._in_indptr[v + 1]]

    def in_neighbor_map(self, targets: Sequence[int]) -> dict[int, np.ndarray]:
        """In-neighbor arrays for a few vertices via one pass over the edges.

        Cheaper than materializing the full in-adjacency when only a handful
        of vertices matter (greedy extension, extender classification).
        """
        targets = list(dict.fromkeys(int(t) for t in targets))
        if self._in_indices is not None or not targets:
            return {t: self.in_neighbors(t) for t in targets}
        mask = np.zeros(self.n, dtype=bool)
        mask[targets] = True
        sel = mask[self._indices]
        hit_dst = self._indices[sel]
        hit_src = self.edge_src[sel]
        out = {t: [] for t in targets}
        order = np.argsort(hit_dst, kind="stable")
        hit_dst = hit_dst[order]
        hit_src = hit_src[order]
        bounds = np.searchsorted(hit_dst, np.asarray(targets, dtype=np.int32))
        ends = np.searchsorted(
            hit_dst, np.asarray(targets, dtype=np.int32), side="right"
        )
        for t, b, e in zip(targets, bounds, ends):
            out[t] = hit_src[b:e]
        return out

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        row = self._indices[self._indptr[u] : self._indptr[u + 1]]
        return v in row.tolist()

    @property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        """Ordered out-adjacency as nested tuples (small-graph convenience)."""
        ptr = self._indptr
        idx = self._indices.tolist()
        return tuple(
            tuple(idx[ptr[v] : ptr[v + 1]]) for v in range(self.n)
        )

    @property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        """Ordered in-adjacency (mirror of edge order), as nested tuples."""
        self._build_in_csr()
        ptr = self._in_indptr
        idx = self._in_indices.tolist()
        return tuple(
            tuple(idx[ptr[v] : ptr[v + 1]]) for v in range(self.n)
        )

    def edges(self) -> Iterator[tuple[int, int]]:
        src = self.edge_src.tolist()
        dst = self._indices.tolist()
        return zip(src, dst)

    def _build_in_csr(self) -> None:
        if self._in_indptr is not None:
            return
        order = np.argsort(self._indices, kind="stable")
        counts = np.bincount(self._indices, minlength=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = self.edge_src[order].astype(np.int32)
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._in_indptr = indptr
        self._in_indices = indices

    # ---- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self):
        return hash((self.n, self.m, self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    out_deg: tuple[int, ...]
    in_deg: tuple[int, ...]
    min_out: int
    max_in: int


def degree_profile(g: Digraph) -> DegreeProfile:
    out_deg = g.out_degrees
    in_deg = g.in_degrees
    return DegreeProfile(
        out_deg=tuple(out_deg.tolist()),
        in_deg=tuple(in_deg.tolist()),
        min_out=int(out_deg.min()) if g.n else 0,
        max_in=int(in_deg.max()) if g.n else 0,
    )


# ---- text I/O ---------------------------------------------------------------


def parse_edge_list(text) -> Digraph:
    """Parse the edge-list interchange format from a string or file-like.

    First non-comment line is "n m"; the next m non-comment lines are "u v",
    one directed edge each, 0-indexed.  Lines starting with '#' and blank
    lines are ignored.  Rejects self-loops and duplicate directed edges,
    reporting the offending physical line.
    """
    if hasattr(text, "read"):
        text = text.read()
    header = None
    header_line = 0
    src: list[int] = []
    dst: list[int] = []
    seen: set[int] = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListError(lineno, "header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(lineno, "header must be two integers") from None
            if n < 0 or m < 0:
                raise EdgeListError(lineno, "header values must be non-negative")
            header = (n, m)
            header_line = lineno
            continue
        if len(parts) != 2:
            raise EdgeListError(lineno, "edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, "edge line must be two integers") from None
        if len(src) >= m:
            raise EdgeListError(lineno, f"more than {m} edges")
        if not (0 <= u < n):
            raise EdgeListError(lineno, f"vertex {u} out of range [0, {n})")
        if not (0 <= v < n):
            raise EdgeListError(lineno, f"vertex {v} out of range [0, {n})")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        key = u * n + v
        if key in seen:
            raise EdgeListError(lineno, f"duplicate directed edge {u} -> {v}")
        seen.add(key)
        src.append(u)
        dst.append(v)
    if header is None:
        raise EdgeListError(1, "missing header")
    if len(src) != m:
        raise EdgeListError(
            header_line, f"expected {m} edges, found {len(src)}"
        )
    return Digraph.from_edge_arrays(
        n,
        np.asarray(src, dtype=np.int64),
        np.asarray(dst, dtype=np.int64),
        validate=False,
    )


def write_edge_list(g: Digraph) -> str:
    """Serialize per out-adjacency order; parse_edge_list round-trips exactly."""
    out = [f"{g.n} {g.m}"]
    src = g.edge_src
    dst = g.edge_dst
    out.extend(f"{u} {v}" for u, v in zip(src.tolist(), dst.tolist()))
    return "\n".join(out) + "\n"


# ---- generators --------------------------------------------------------------


def gen_complete_digraph(n: int) -> Digraph:
    """All n(n-1) ordered pairs; out-rows ascending by neighbor id."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = np.tile(np.arange(n - 1, dtype=np.int32), (n, 1))
    base += base >= np.arange(n, dtype=np.int32)[:, None]
    indptr = np.arange(n + 1, dtype=np.int64) * (n - 1)
    return Digraph(n, indptr, base.ravel())


def _rows_have_duplicates(mat: np.ndarray) -> np.ndarray:
    srt = np.sort(mat, axis=1)
    return (srt[:, 1:] == srt[:, :-1]).any(axis=1)


def _sample_rows_rejection(rng, rows, n_choices, d):
    """rows x d matrix, each row d distinct draws from [0, n_choices)."""
    mat = rng.integers(0, n_choices, size=(rows, d), dtype=np.int32)
    if d > 1:
        bad = _rows_have_duplicates(mat)
        while bad.any():
            k = int(bad.sum())
            redraw = rng.integers(0, n_choices, size=(k, d), dtype=np.int32)
            mat[bad] = redraw
            idx = np.flatnonzero(bad)
            bad[idx] = _rows_have_duplicates(redraw)
    return mat


def _sample_rows_fisher_yates(rng, rows, n_choices, d):
    """Dense case: partial Fisher-Yates per row, blocked to bound memory."""
    out = np.empty((rows, d), dtype=np.int32)
    dtype = np.int16 if n_choices <= np.iinfo(np.int16).max else np.int32
    block = max(1, _FY_BLOCK_CELLS // max(1, n_choices))
    for lo in range(0, rows, block):
        hi = min(rows, lo + block)
        b = hi - lo
        pool = np.empty((b, n_choices), dtype=dtype)
        pool[:] = np.arange(n_choices, dtype=dtype)
        rix = np.arange(b)
        for i in range(d):
            j = rng.integers(i, n_choices, size=b)
            tmp = pool[rix, j].copy()
            pool[rix, j] = pool[:, i]
            pool[:, i] = tmp
        out[lo:hi] = pool[:, :d]
    return out


def gen_random_out_regular(n: int, d: int, seed: int) -> Digraph:
    """Every vertex gets d out-neighbors drawn uniformly without replacement."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 0:
        raise ValueError("d must be >= 0")
    if d >= n:
        raise ValueError(f"d = {d} must be < n = {n}")
    rng = np.random.default_rng(seed)
    if d == 0:
        return Digraph(n, np.zeros(n + 1, np.int64), np.empty(0, np.int32))
    if d == n - 1:
        return gen_complete_digraph(n)
    # Rejection keeps the clean-row probability above ~0.2 while
    # d^2 <= 3(n-1); denser rows fall back to per-row Fisher-Yates.
    if d * d <= 3 * (n - 1):
        mat = _sample_rows_rejection(rng, n, n - 1, d)
    else:
        mat = _sample_rows_fisher_yates(rng, n, n - 1, d)
    # Drawn from [0, n-2]; shift to skip each row's own vertex.
    mat += mat >= np.arange(n, dtype=np.int32)[:, None]
    indptr = np.arange(n + 1, dtype=np.int64) * d
    return Digraph(n, indptr, mat.ravel())


def gen_regular_tournament(n: int, seed: int) -> Digraph:
    """Circulant orientation u -> u+j (mod n), j = 1..(n-1)/2, randomly relabeled."""
    if n < 1 or n % 2 == 0:
        raise ValueError("regular tournaments require odd order n >= 1")
    k = (n - 1) // 2
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n).astype(np.int32)
    if k == 0:
        return Digraph(1, np.zeros(2, np.int64), np.empty(0, np.int32))
    shifts = (
        np.arange(n, dtype=np.int64)[:, None] + np.arange(1, k + 1, dtype=np.int64)
    ) % n
    rows = np.empty((n, k), dtype=np.int32)
    rows[perm] = perm[shifts]
    indptr = np.arange(n + 1, dtype=np.int64) * k
    return Digraph(n, indptr, rows.ravel())


# ---- derived graphs -----------------------------------------------------------


def extract_exact_outdegree_subgraph(g: Digraph, d: int) -> Digraph:
    """Spanning subgraph where every vertex keeps its first d out-edges."""
    if d < 0:
        raise ValueError("d must be >= 0")
    deg = g.out_degrees
    if g.n and deg.min() < d:
        v = int(np.argmax(deg < d))
        raise InsufficientOutDegree(v, int(deg[v]), d)
    if g.n == 0 or bool((deg == d).all()):
        return g
    starts = g._indptr[:-1]
    take = (starts[:, None] + np.arange(d, dtype=np.int64)).ravel()
    indptr = np.arange(g.n + 1, dtype=np.int64) * d
    return Digraph(g.n, indptr, g._indices[take])


def min_out_degree(g: Digraph) -> int:
    if g.n < 1:
        raise ValueError("empty graph has no minimum out-degree")
    return int(g.out_degrees.min())
