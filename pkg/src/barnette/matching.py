"""Perfect matchings, allowed edges, k-extendability and the brace test.

The solver-independent facts used here: a bipartite graph is matching covered
(1-extendable) iff it is connected and every edge lies in some perfect
matching; allowed edges are found from one perfect matching by strongly
connected components of the alternating digraph; k-extendability for k in
{1, 2} is decided by deleting k vertices from each colour class in all ways
and testing for a perfect matching of the rest; a brace is either a 4-cycle or
a 2-extendable bipartite graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graphs import BipartiteGraph, GraphError, bits, is_connected, with_colouring

DEFAULT_ORACLE_BOUND = 40


class OracleBoundError(GraphError):
    """Raised when an enumeration oracle is asked to exceed its vertex bound."""


def oracle_bound() -> int:
    raw = os.environ.get("BARNETTE_ORACLE_BOUND")
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        return int(raw)
    except ValueError as exc:
        raise GraphError("BARNETTE_ORACLE_BOUND must be an integer") from exc


@dataclass(frozen=True)
class PerfectMatching:
    """A perfect matching as a frozenset of edge ids of its host graph."""

    edge_ids: frozenset[int]

    def validate(self, g: BipartiteGraph) -> None:
        covered = 0
        for eid in self.edge_ids:
            u, v = g.edges[eid]
            if covered >> u & 1 or covered >> v & 1:
                raise GraphError("matching edges share a vertex")
            covered |= (1 << u) | (1 << v)
        if covered != g.full_mask:
            raise GraphError("matching does not cover every vertex")


# ----- matching kernel -----


def _matching(
    g: BipartiteGraph, removed_mask: int = 0, seed: Optional[list[int]] = None
) -> tuple[int, list[int]]:
    """Maximum matching; returns (size, partner array with -1 for unmatched).

    Deterministic: A-vertices in increasing order, neighbours in stored order.
    """
    g._require_colour()
    alive = g.full_mask & ~removed_mask
    partner = list(seed) if seed is not None else [-1] * g.n
    for v in range(g.n):
        if not (alive >> v & 1) and partner[v] != -1:
            w = partner[v]
            partner[v] = -1
            if w >= 0:
                partner[w] = -1
    size = 0
    a_class = [v for v in range(g.n) if g.colour[v] == "A" and alive >> v & 1]
    for a in a_class:
        if partner[a] != -1:
            size += 1
    for a in a_class:
        if partner[a] != -1:
            continue
        if _augment_rec(g, a, partner, alive, set()):
            size += 1
    return size, partner


def _augment_rec(
    g: BipartiteGraph, a: int, partner: list[int], alive: int, visited: set[int]
) -> bool:
    for b in g.neighbours[a]:
        if not (alive >> b & 1) or b in visited:
            continue
        visited.add(b)
        if partner[b] == -1 or _augment_rec(g, partner[b], partner, alive, visited):
            partner[b] = a
            partner[a] = b
            return True
    return False


def has_perfect_matching(g: BipartiteGraph, removed_mask: int = 0) -> bool:
    alive = g.full_mask & ~removed_mask
    count = bin(alive).count("1")
    if count % 2:
        return False
    g2 = with_colouring(g) if g.colour is None else g
    amask = g2.colour_mask("A") & alive
    bmask = g2.colour_mask("B") & alive
    if bin(amask).count("1") != bin(bmask).count("1"):
        return False
    size, _ = _matching(g2, removed_mask)
    return 2 * size == count


def perfect_matching(g: BipartiteGraph) -> Optional[PerfectMatching]:
    """One perfect matching (deterministic), or None."""
    g = with_colouring(g)
    size, partner = _matching(g)
    if 2 * size != g.n:
        return None
    ids = frozenset(
        g.edge_id(a, partner[a]) for a in range(g.n) if g.colour[a] == "A"
    )
    return PerfectMatching(ids)


# ----- allowed edges -----


def allowed_edges(g: BipartiteGraph) -> frozenset[int]:
    """Ids of edges contained in some perfect matching (empty if none exists)."""
    g = with_colouring(g)
    size, partner = _matching(g)
    if 2 * size != g.n:
        return frozenset()
    # Alternating digraph on A-vertices: non-matching edge (a, b) gives an arc
    # a -> partner[b].  An edge not in the matching is allowed iff its arc lies
    # on a directed cycle, i.e. both ends sit in one strongly connected
    # component.  Matching edges are allowed by definition.
    a_class = [v for v in range(g.n) if g.colour[v] == "A"]
    arcs: dict[int, list[int]] = {a: [] for a in a_class}
    for (u, v) in g.edges:
        a, b = (u, v) if g.colour[u] == "A" else (v, u)
        if partner[a] != b:
            arcs[a].append(partner[b])
    comp = _scc(a_class, arcs)
    out = set()
    for eid, (u, v) in enumerate(g.edges):
        a, b = (u, v) if g.colour[u] == "A" else (v, u)
        if partner[a] == b or comp[a] == comp[partner[b]]:
            out.add(eid)
    return frozenset(out)


def _scc(nodes: list[int], arcs: dict[int, list[int]]) -> dict[int, int]:
    """Tarjan strongly connected components, iterative; returns node -> comp id."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    comp: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = [0]
    ncomp = [0]
    for root in nodes:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack.add(v)
            recursed = False
            succ = arcs[v]
            while pi < len(succ):
                w = succ[pi]
                pi += 1
                if w not in index:
                    work.append((v, pi))
                    work.append((w, 0))
                    recursed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recursed:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = ncomp[0]
                    if w == v:
                        break
                ncomp[0] += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def cover_graph(g: BipartiteGraph) -> tuple[BipartiteGraph, dict[int, int]]:
    """Spanning subgraph on the allowed edges, plus old-id -> new-id map."""
    g = with_colouring(g)
    keep = sorted(allowed_edges(g))
    emap = {old: new for new, old in enumerate(keep)}
    sub = BipartiteGraph(g.n, tuple(g.edges[e] for e in keep), g.colour)
    return sub, emap


def is_matching_covered(g: BipartiteGraph) -> bool:
    """Connected, at least one edge, and every edge lies in a perfect matching."""
    if g.n < 2 or g.edge_count == 0:
        return False
    if not is_connected(g):
        return False
    return len(allowed_edges(g)) == g.edge_count


# ----- extendability and braces -----


def is_k_extendable(g: BipartiteGraph, k: int) -> bool:
    """k-extendability for k in {1, 2} via colour-class deletions.

    Deletes every choice of k vertices from each class and tests the rest for
    a perfect matching; also requires connectivity and at least 2k+2 vertices.
    """
    if k not in (1, 2):
        raise GraphError("k must be 1 or 2")
    g = with_colouring(g)
    if g.n < 2 * k + 2 or not is_connected(g):
        return False
    a_class, b_class = g.class_a(), g.class_b()
    if len(a_class) != len(b_class):
        return False
    size, base = _matching(g)
    if 2 * size != g.n:
        return False
    for asub in combinations(a_class, k):
        for bsub in combinations(b_class, k):
            removed = 0
            for v in asub + bsub:
                removed |= 1 << v
            seed = list(base)
            for v in asub + bsub:
                w = seed[v]
                seed[v] = -1
                if w >= 0 and seed[w] == v:
                    seed[w] = -1
            alive_count = g.n - 2 * k
            size2, _ = _matching(g, removed, seed)
            if 2 * size2 != alive_count:
                return False
    return True


def is_brace(g: BipartiteGraph) -> bool:
    """A brace is a 4-cycle or a 2-extendable connected bipartite graph."""
    if g.n == 4 and g.edge_count == 4 and g.is_regular(2) and is_connected(g):
        return two_colourable(g)
    return is_k_extendable(g, 2)


def two_colourable(g: BipartiteGraph) -> bool:
    from .graphs import two_colour

    return g.colour is not None or two_colour(g) is not None


# ----- enumeration oracle -----


def enumerate_perfect_matchings(
    g: BipartiteGraph, bound: Optional[int] = None
) -> list[PerfectMatching]:
    """All perfect matchings, deterministically ordered; oracle-bounded.

    Raises OracleBoundError when the graph has more vertices than the bound
    (BARNETTE_ORACLE_BOUND, default 40).
    """
    limit = bound if bound is not None else oracle_bound()
    if g.n > limit:
        raise OracleBoundError(
            f"graph has {g.n} vertices, enumeration bound is {limit}"
        )
    if g.n % 2:
        return []
    g = with_colouring(g)
    if len(g.class_a()) != len(g.class_b()):
        return []
    order = sorted(g.class_a())
    out: list[PerfectMatching] = []
    chosen: list[int] = []

    def rec(i: int, used: int) -> None:
        if i == len(order):
            out.append(PerfectMatching(frozenset(chosen)))
            return
        a = order[i]
        for eid in g.incident[a]:
            b = g.other_end(eid, a)
            if used >> b & 1:
                continue
            chosen.append(eid)
            rec(i + 1, used | 1 << b)
            chosen.pop()

    rec(0, 0)
    return out
