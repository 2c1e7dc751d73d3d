"""End-to-end spider construction with proof-inequality instrumentation.

Pipeline: regularize to exact out-degree d = 2l, partition by in-degree,
pick the root maximizing d*|A_r| + |VB_r|, classify strong extenders,
enumerate surviving 2-paths, edge-color the extension graph and lift the
largest color class to a base spider, then greedily extend with strong
extenders until l legs.  Every inequality the construction relies on is
recorded in the trace; in "checked" mode a violated inequality raises (it
can only mean a bug, never bad input), in "fast" mode checks are recorded
but nothing is enforced beyond what is needed to produce output.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple, Optional

from .digraph import Digraph, extract_exact_outdegree_subgraph, min_out_degree
from .edge_coloring import (
    build_extension_graph,
    format_coloring_dump,
    largest_color_class,
    truncate_for_coloring,
    vizing_color,
)
from .errors import EmptyA, InternalInvariantError, PreconditionOutDegree
from .extenders import greedy_extend, strong_extender_pool
from .root_selection import (
    compute_q_paths,
    partition_by_in_degree,
    score_roots,
    select_root,
)
from .spider import Spider, verify_spider

__all__ = [
    "SolveMode",
    "ProofCheck",
    "SolveTrace",
    "SolveOutcome",
    "find_spider",
    "explain_trace",
]

SolveMode = Literal["checked", "fast"]


class ProofCheck(NamedTuple):
    name: str
    lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class SolveTrace:
    d: int
    root: int
    a: int
    c: int
    s: int
    q_size: int
    vb_r: int
    a_r_size: int
    checks: tuple[ProofCheck, ...]
    truncated: bool


@dataclass(frozen=True)
class SolveOutcome:
    spider: Spider
    trace: SolveTrace


def _check(name: str, lhs: int, rhs: int, ge: bool = True) -> ProofCheck:
    passed = lhs >= rhs if ge else lhs <= rhs
    return ProofCheck(name=name, lhs=int(lhs), rhs=int(rhs), passed=passed)


def find_spider(
    g: Digraph,
    ell: int,
    mode: SolveMode = "checked",
    dump: Optional[Callable[[str], None]] = None,
) -> SolveOutcome:
    """Construct a (2,ell)-spider in any graph with min out-degree >= 2*ell.

    The returned spider is expressed in the original graph's vertices and,
    in checked mode, re-verified against the original graph.  `dump`, when
    given, receives the colored extension graph in 'u v color' lines.
    """
    if mode not in ("checked", "fast"):
        raise ValueError(f"unknown mode {mode!r}")
    checked = mode == "checked"
    if ell < 1:
        raise ValueError("ell must be >= 1")
    d = 2 * ell
    mo = min_out_degree(g)
    if mo < d:
        raise PreconditionOutDegree(mo, d)

    work = extract_exact_outdegree_subgraph(g, d)
    part = partition_by_in_degree(work, ell)
    if not part.a_mask.any():
        raise EmptyA("2l-out-regular graph must contain a high-in-degree vertex")

    scores = score_roots(work, part, ell)
    root_score = select_root(scores, ell, checked=checked)
    r = root_score.x

    pool = strong_extender_pool(work, r, ell, part.a_mask)
    a = len(pool.a_r)
    c = len(pool.c_r)

    q = compute_q_paths(work, r, part, pool, checked=checked)
    q_size = len(q)

    h = build_extension_graph(
        q, r, pool.a_r | pool.c_r, ell=ell, checked=checked
    )
    ht = truncate_for_coloring(h, ell)
    coloring = vizing_color(ht, checked=checked)
    cls = largest_color_class(ht, coloring, checked=checked)
    s = int(cls.shape[0])
    base_legs = tuple(
        (int(ht.leaf[i]), int(ht.mid[i])) for i in cls.tolist()
    )
    if dump is not None:
        dump(format_coloring_dump(ht, coloring))

    checks = [
        _check("score >= d^2 - d", root_score.score, d * d - d),
        _check(
            "|Q_r| >= d^2 - d - (a+c)(4l-1)",
            q_size,
            d * d - d - (a + c) * (4 * ell - 1),
        ),
        _check("max_deg(H) <= 2l - 2", h.max_degree, 2 * ell - 2, ge=False),
        _check("palette <= 2l - 1", coloring.palette, 2 * ell - 1, ge=False),
    ]
    if not ht.truncated:
        checks.append(_check("s(2l-1) >= |Q_r|", s * (2 * ell - 1), q_size))
    checks.append(_check("a + c + s >= l", a + c + s, ell))
    if checked:
        for chk in checks:
            if not chk.passed:
                raise InternalInvariantError(
                    f"proof inequality failed: {chk.name} "
                    f"({chk.lhs} vs {chk.rhs})"
                )

    if s >= ell:
        spider = Spider(root=int(r), legs=base_legs[:ell])
    else:
        need = ell - s
        f_seq = sorted(pool.a_r) + sorted(pool.c_r)
        if len(f_seq) < need:
            raise InternalInvariantError(
                f"need {need} strong extenders, only {len(f_seq)} available"
            )
        base = Spider(root=int(r), legs=base_legs)
        spider = greedy_extend(work, r, base, f_seq[:need])

    if checked:
        report = verify_spider(g, spider, ell)
        if report is not None:
            raise InternalInvariantError(
                f"constructed spider failed verification: {report}"
            )

    trace = SolveTrace(
        d=d,
        root=int(r),
        a=a,
        c=c,
        s=s,
        q_size=q_size,
        vb_r=root_score.vb_x,
        a_r_size=root_score.a_x,
        checks=tuple(checks),
        truncated=ht.truncated,
    )
    return SolveOutcome(spider=spider, trace=trace)


def explain_trace(t: SolveTrace) -> str:
    """Human-readable rendering of the trace and its inequality checks."""
    lines = [
        f"d = {t.d}  root = {t.root}",
        f"a = {t.a}  c = {t.c}  s = {t.s}",
        f"|Q_r| = {t.q_size}  |VB_r| = {t.vb_r}  |A_r| = {t.a_r_size}",
    ]
    if t.truncated:
        lines.append("coloring instance was truncated to the l^2 cap")
    for chk in t.checks:
        op = ">=" if ">=" in chk.name else "<="
        status = "PASS" if chk.passed else "FAIL"
        lines.append(f"{chk.name}: {chk.lhs} {op} {chk.rhs} {status}")
    if t.s >= t.d // 2:
        lines.append("greedy extension skipped (s >= l)")
    else:
        lines.append(f"greedy extension added {t.d // 2 - t.s} legs")
    return "\n".join(lines) + "\n"
