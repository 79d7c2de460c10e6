"""Tight cuts in matching covered bipartite graphs.

A cut is tight when every perfect matching crosses it exactly once.  The
recognition test here is polynomial: the shore must carry a colour imbalance
of exactly one, and no two vertex-disjoint cut edges may lie in a common
perfect matching.  (With imbalance 1 the crossing count is always odd, so a
second crossing edge forces a third; conversely two disjoint cut edges inside
one matching already witness a crossing count above one.)

For cubic 3-connected bipartite graphs the non-trivial tight cuts are exactly
the non-trivial 3-edge cuts, and those are automatically 3-matchings, so they
can be enumerated combinatorially: fix two disjoint edges, remove them, and
every bridge of the remainder completes a disconnecting triple.

Graphs that are merely 2-connected (hub-and-gadget shapes) need the general
route: a failed 2-extendability witness (a1, a2, b1, b2) yields, via Hall's
condition, a set T on one colour class with |N(T)| = |T| + 1, and
T ∪ N(T) is then the shore of a non-trivial tight cut.

Contracting either shore to a single vertex (parallel edges merged) preserves
matching coveredness, and iterating until no non-trivial tight cut remains
produces the brace decomposition, whose multiset of leaves is independent of
all choices made along the way.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .canon import canonical_form
from .graphs import (
    BipartiteGraph,
    Cut,
    GraphError,
    bits,
    connected_components,
    is_connected,
    shore_colour_balance,
)
from .matching import _matching, has_perfect_matching, is_matching_covered


def is_tight(g: BipartiteGraph, cut: Cut) -> bool:
    """Does every perfect matching cross the cut exactly once?

    Runs in polynomial time via the imbalance-plus-pair test; the graph must
    be coloured and have a perfect matching.
    """
    if g.colour is None:
        raise GraphError("tightness test needs a two-coloured graph")
    if not has_perfect_matching(g):
        raise GraphError("tightness is only meaningful with a perfect matching")
    if abs(shore_colour_balance(g, cut.shore)) != 1:
        return False
    cut_edges = sorted(cut.edge_ids)
    for e, f in itertools.combinations(cut_edges, 2):
        u1, v1 = g.edges[e]
        u2, v2 = g.edges[f]
        if len({u1, v1, u2, v2}) < 4:
            continue
        removed = 1 << u1 | 1 << v1 | 1 << u2 | 1 << v2
        if has_perfect_matching(g, removed):
            return False
    return True


def _bridges(g: BipartiteGraph, skip: frozenset[int]) -> list[int]:
    """Bridge edge ids of g with the edges in `skip` removed."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, peid, idx = stack.pop()
            inc = g.incident[v]
            if idx < len(inc):
                stack.append((v, peid, idx + 1))
                eid = inc[idx]
                if eid == peid or eid in skip:
                    continue
                w = g.other_end(eid, v)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            elif peid != -1:
                # v is finished; fold its low value into its parent
                u = g.other_end(peid, v)
                if low[v] > disc[u]:
                    out.append(peid)
                low[u] = min(low[u], low[v])
    return out


def _edges_adjacent(g: BipartiteGraph, e: int, f: int) -> bool:
    u1, v1 = g.edges[e]
    u2, v2 = g.edges[f]
    return len({u1, v1, u2, v2}) < 4


def cubic_three_connected(g: BipartiteGraph) -> bool:
    """3-connectivity for cubic graphs via edge cuts.

    For simple cubic graphs vertex and edge connectivity coincide, so it
    suffices to rule out bridges and 2-edge cuts; much cheaper than the
    vertex-subset test at this size.
    """
    if not g.is_regular(3):
        raise GraphError("cubic graph expected")
    if g.n < 4 or not is_connected(g):
        return False
    if _bridges(g, frozenset()):
        return False
    for e in range(g.edge_count):
        if _bridges(g, frozenset((e,))):
            return False
    return True


def _disconnecting_triples(
    g: BipartiteGraph,
    rng: Optional[random.Random] = None,
    first_only: bool = False,
) -> list[frozenset[int]]:
    """3-matchings whose removal disconnects g, via the pair-plus-bridge scan.

    Complete for 3-edge-connected graphs: removing two edges leaves the graph
    connected, so the third edge of any disconnecting triple is a bridge of
    the remainder.
    """
    m = g.edge_count
    pairs = [
        (e, f)
        for e in range(m)
        for f in range(e + 1, m)
        if not _edges_adjacent(g, e, f)
    ]
    if rng is not None:
        rng.shuffle(pairs)
    found: set[frozenset[int]] = set()
    order: list[frozenset[int]] = []
    for e, f in pairs:
        for b in _bridges(g, frozenset((e, f))):
            if _edges_adjacent(g, b, e) or _edges_adjacent(g, b, f):
                continue
            triple = frozenset((e, f, b))
            if triple not in found:
                found.add(triple)
                order.append(triple)
                if first_only:
                    return order
    return order


def _cut_from_triple(g: BipartiteGraph, triple: frozenset[int]) -> Cut:
    """Cut object for a disconnecting 3-matching, shore on the A-excess side."""
    comps = connected_components(g, edge_skip=triple)
    if len(comps) != 2:
        raise GraphError("triple does not split the graph in two")
    shore = comps[0]
    if shore_colour_balance(g, shore) < 0:
        shore = comps[1]
    cut = Cut.from_shore(g, shore)
    if cut.edge_ids != triple:
        raise GraphError("component boundary disagrees with the triple")
    return cut


def cut_from_edge_ids(g: BipartiteGraph, edge_ids: Iterable[int]) -> Cut:
    """Rebuild a Cut from a serialized edge-id set by splitting the graph."""
    g._require_colour()
    return _cut_from_triple(g, frozenset(edge_ids))


def find_tight_cuts_cubic(g: BipartiteGraph) -> list[Cut]:
    """All non-trivial tight cuts of a cubic 3-connected bipartite graph.

    These are exactly the non-trivial 3-edge cuts, which in this class are
    3-matchings, so the pair-plus-bridge enumeration is exhaustive.  Results
    are sorted by edge-id triple.
    """
    if g.colour is None or not g.is_regular(3):
        raise GraphError("coloured cubic graph expected")
    if not cubic_three_connected(g):
        raise GraphError("graph is not 3-connected")
    triples = _disconnecting_triples(g)
    cuts = [_cut_from_triple(g, t) for t in triples]
    cuts.sort(key=lambda c: sorted(c.edge_ids))
    return cuts


def _hall_violator_cut(
    g: BipartiteGraph,
    partner: list[int],
    removed: int,
) -> Cut:
    """Tight cut from a maximum matching that misses part of class A.

    `partner` is a maximum matching of g minus `removed` that is not perfect
    there.  Alternating reachability from an unmatched A-vertex yields T with
    all neighbours matched into T; in the full graph |N(T)| = |T| + 1 because
    a matching covered graph cannot contain a set with |N(T)| = |T|.  The
    stored shore is the complement of T ∪ N(T), the A-excess side.
    """
    start = -1
    for a in g.class_a():
        if not removed >> a & 1 and partner[a] == -1:
            start = a
            break
    if start < 0:
        raise GraphError("matching saturates class A")
    t_set = {start}
    n_set: set[int] = set()
    queue = [start]
    while queue:
        a = queue.pop()
        for b in g.neighbours[a]:
            if removed >> b & 1 or b in n_set:
                continue
            n_set.add(b)
            nxt = partner[b]
            if nxt != -1 and nxt not in t_set:
                t_set.add(nxt)
                queue.append(nxt)
    full_n: set[int] = set()
    for a in t_set:
        full_n.update(g.neighbours[a])
    if len(full_n) != len(t_set) + 1:
        raise GraphError("graph is not matching covered")
    x_mask = 0
    for v in t_set | full_n:
        x_mask |= 1 << v
    return Cut.from_shore(g, g.full_mask & ~x_mask)


def _general_tight_cut(
    g: BipartiteGraph, rng: Optional[random.Random] = None
) -> Optional[Cut]:
    """One non-trivial tight cut of a matching covered bipartite graph.

    Scans 2-extendability witnesses; the first quartet whose removal kills
    all perfect matchings produces a Hall-violator cut.  Returns None when
    the graph is 2-extendable (or C4), i.e. a brace.
    """
    a_side = g.class_a()
    b_side = g.class_b()
    _, base = _matching(g)
    if any(base[v] == -1 for v in range(g.n)):
        raise GraphError("graph has no perfect matching")
    a_pairs = list(itertools.combinations(a_side, 2))
    b_pairs = list(itertools.combinations(b_side, 2))
    if rng is not None:
        rng.shuffle(a_pairs)
        rng.shuffle(b_pairs)
    want = (g.n - 4) // 2
    for a1, a2 in a_pairs:
        for b1, b2 in b_pairs:
            removed = 1 << a1 | 1 << a2 | 1 << b1 | 1 << b2
            size, partner = _matching(g, removed_mask=removed, seed=base)
            if size < want:
                cut = _hall_violator_cut(g, partner, removed)
                if not is_tight(g, cut):
                    raise AssertionError("violator cut failed the tightness test")
                return cut
    return None


def find_nontrivial_tight_cut(
    g: BipartiteGraph, rng: Optional[random.Random] = None
) -> Optional[Cut]:
    """Some non-trivial tight cut, or None when g is a brace.

    Cubic 3-connected inputs use the 3-edge-cut scan; everything else goes
    through the 2-extendability route.  A supplied rng only changes which cut
    is returned, never whether one exists.
    """
    if g.colour is None:
        raise GraphError("coloured graph expected")
    if g.n <= 4:
        # shores of a tight cut have odd size, so one of them would be trivial
        return None
    if g.is_regular(3) and cubic_three_connected(g):
        triples = _disconnecting_triples(g, rng=rng, first_only=True)
        return _cut_from_triple(g, triples[0]) if triples else None
    return _general_tight_cut(g, rng)


@dataclass(frozen=True)
class Contraction:
    """One shore collapsed to the vertex `c` (always the highest new id).

    vertex_map sends old ids to new ids (collapsed vertices to c); edge_map
    sends old edge ids to new ones, None for edges inside the collapsed set,
    with parallel copies merged onto one representative.
    """

    graph: BipartiteGraph
    c: int
    vertex_map: tuple[int, ...]
    edge_map: tuple[Optional[int], ...]


def contract(g: BipartiteGraph, cut: Cut, side: str = "shore") -> Contraction:
    """Tight cut contraction: collapse the chosen side of the cut.

    side="shore" collapses the stored shore, side="complement" the rest.  The
    contraction vertex is coloured opposite to the (necessarily common)
    colour of the retained cut-edge endpoints.  The result is verified to be
    matching covered; cubic 3-connected input additionally yields cubic
    3-connected output, which is asserted.
    """
    if side not in ("shore", "complement"):
        raise GraphError(f"unknown side {side!r}")
    if g.colour is None:
        raise GraphError("contraction needs a coloured graph")
    if not is_tight(g, cut):
        raise GraphError("cut is not tight")
    collapsed = cut.shore if side == "shore" else cut.complement_mask()

    retained_colours = {
        g.colour[u if not collapsed >> u & 1 else v]
        for u, v in (g.edges[eid] for eid in cut.edge_ids)
    }
    if len(retained_colours) != 1:
        raise GraphError("retained cut endpoints are not monochromatic")
    c_colour = "B" if retained_colours.pop() == "A" else "A"

    new_id = {}
    for v in range(g.n):
        if not collapsed >> v & 1:
            new_id[v] = len(new_id)
    c = len(new_id)
    vertex_map = tuple(new_id.get(v, c) for v in range(g.n))

    new_edges: list[tuple[int, int]] = []
    pair_to_new: dict[tuple[int, int], int] = {}
    edge_map: list[Optional[int]] = []
    for u, v in g.edges:
        nu, nv = vertex_map[u], vertex_map[v]
        if nu == c and nv == c:
            edge_map.append(None)
            continue
        pair = (min(nu, nv), max(nu, nv))
        if pair in pair_to_new:
            edge_map.append(pair_to_new[pair])
            continue
        pair_to_new[pair] = len(new_edges)
        edge_map.append(len(new_edges))
        new_edges.append(pair)

    colours = [""] * (c + 1)
    for v in range(g.n):
        if vertex_map[v] != c:
            colours[vertex_map[v]] = g.colour[v]
    colours[c] = c_colour
    quotient = BipartiteGraph(c + 1, tuple(new_edges), tuple(colours))

    if not is_matching_covered(quotient):
        raise AssertionError("contraction lost matching coveredness")
    if g.is_regular(3) and cubic_three_connected(g):
        if not quotient.is_regular(3) or not cubic_three_connected(quotient):
            raise AssertionError("contraction left the cubic 3-connected class")
    return Contraction(quotient, c, vertex_map, tuple(edge_map))


@dataclass(frozen=True)
class DecompositionStep:
    """One contraction event: the piece's order and the cut used on it."""

    n: int
    cut_edge_ids: tuple[int, ...]
    shore_size: int
    piece_sizes: tuple[int, int]


@dataclass(frozen=True)
class DecompositionResult:
    braces: Counter  # canonical graph6 form -> multiplicity
    trace: tuple[DecompositionStep, ...]


def tight_cut_decomposition(
    g: BipartiteGraph, rng: Optional[random.Random] = None
) -> DecompositionResult:
    """Brace decomposition of a matching covered bipartite graph.

    Contracts non-trivial tight cuts (both shores) until only braces remain
    and returns their canonical forms with multiplicity.  The multiset does
    not depend on the order of contractions or on which cuts are picked, so a
    supplied rng perturbs only the trace.
    """
    if g.colour is None:
        g = _coloured(g)
    if not is_matching_covered(g):
        raise GraphError("decomposition needs a matching covered graph")
    braces: Counter = Counter()
    trace: list[DecompositionStep] = []
    work = [g]
    while work:
        idx = rng.randrange(len(work)) if rng is not None else len(work) - 1
        h = work.pop(idx)
        cut = find_nontrivial_tight_cut(h, rng)
        if cut is None:
            braces[canonical_form(h)] += 1
            continue
        inner = contract(h, cut, "complement")
        outer = contract(h, cut, "shore")
        trace.append(
            DecompositionStep(
                h.n,
                tuple(sorted(cut.edge_ids)),
                len(cut.shore_vertices()),
                (inner.graph.n, outer.graph.n),
            )
        )
        work.append(inner.graph)
        work.append(outer.graph)
    return DecompositionResult(braces, tuple(trace))


def _coloured(g: BipartiteGraph) -> BipartiteGraph:
    from .graphs import with_colouring

    return with_colouring(g)


def is_cyclically_4_connected(g: BipartiteGraph) -> bool:
    """No edge cut of order < 4 leaves two components that contain cycles.

    For cubic 3-connected graphs this reduces to the absence of non-trivial
    3-edge cuts (a tree side of a 3-cut must be a single vertex, because a
    k-vertex tree side emits k+2 edges).  Smaller connectivity is handled by
    direct enumeration of 1-, 2- and 3-edge cuts.
    """
    if not g.is_regular(3):
        raise GraphError("cubic graph expected")
    if not is_connected(g):
        return False
    if cubic_three_connected(g):
        return not _disconnecting_triples(g, first_only=True)
    for size in (1, 2, 3):
        for combo in itertools.combinations(range(g.edge_count), size):
            skip = frozenset(combo)
            comps = connected_components(g, edge_skip=skip)
            if len(comps) < 2:
                continue
            cyclic = 0
            for comp in comps:
                verts = list(bits(comp))
                internal = sum(
                    1
                    for eid, (u, v) in enumerate(g.edges)
                    if eid not in skip and comp >> u & 1 and comp >> v & 1
                )
                if internal >= len(verts):
                    cyclic += 1
            if cyclic >= 2:
                return False
    return True


# ---------------------------------------------------------------------------
# laminar families


def cuts_compatible(c1: Cut, c2: Cut, full_mask: int) -> bool:
    """Laminar compatibility up to shore complementation."""
    x, y = c1.shore, c2.shore
    for a in (x, full_mask & ~x):
        for b in (y, full_mask & ~y):
            if a & b == 0:
                return True
    return False


def family_is_laminar(cuts: Iterable[Cut], full_mask: int) -> bool:
    cuts = list(cuts)
    return all(
        cuts_compatible(c1, c2, full_mask)
        for c1, c2 in itertools.combinations(cuts, 2)
    )


def maximal_laminar_family(cuts: Iterable[Cut], full_mask: int) -> list[Cut]:
    """Greedy maximal laminar subfamily, in the order given."""
    chosen: list[Cut] = []
    for cut in cuts:
        if all(cuts_compatible(cut, c, full_mask) for c in chosen):
            chosen.append(cut)
    return chosen
