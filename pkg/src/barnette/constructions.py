"""Splices, trisums, conformal subgraph machinery, and Pfaffian recognition.

A splice glues two graphs at deleted vertices of equal degree by joining
their neighbourhoods with a bijection; in the bipartite matching covered
setting the seam is a tight cut.  A trisum glues three graphs along a common
4-cycle and removes a chosen subset of its edges; removing all four keeps
cubic inputs cubic.

Pfaffian recognition here is desk-scale and exact, twice over: an orientation
solver that turns every conformal cycle into a parity constraint over GF(2),
and a search for a conformal bisubdivision of K33, whose absence is
equivalent to being Pfaffian for bipartite graphs with a perfect matching.
The two answers are cross-checked in tests rather than merged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import (
    BipartiteGraph,
    Cut,
    GraphError,
    bits,
    two_colour,
    vertex_mask,
    with_colouring,
)
from .matching import (
    _matching,
    has_perfect_matching,
    is_brace,
    is_matching_covered,
    oracle_bound,
    OracleBoundError,
)
from .tightcut import is_tight


# ---------------------------------------------------------------------------
# splice


@dataclass(frozen=True)
class Splice:
    """Result of gluing g1 - u to g2 - v.

    map1/map2 send old vertex ids to ids in the glued graph (None for the
    deleted vertices); cut is the splicing cut around the image of g1 - u.
    """

    graph: BipartiteGraph
    cut: Cut
    map1: tuple[Optional[int], ...]
    map2: tuple[Optional[int], ...]


def splice(
    g1: BipartiteGraph,
    u: int,
    g2: BipartiteGraph,
    v: int,
    pairing: Optional[dict[int, int]] = None,
) -> Splice:
    """Splice g1 and g2 at u and v.

    The deleted vertices must have equal degree; `pairing` maps N(u) onto
    N(v) and defaults to matching both neighbourhoods in ascending order.
    When the result is bipartite and has a perfect matching, the splicing
    cut is verified tight.
    """
    nu = sorted(g1.neighbours[u])
    nv = sorted(g2.neighbours[v])
    if len(nu) != len(nv):
        raise GraphError("spliced vertices must have equal degree")
    if pairing is None:
        pairing = dict(zip(nu, nv))
    if sorted(pairing) != nu or sorted(pairing.values()) != nv:
        raise GraphError("pairing is not a bijection between the neighbourhoods")

    map1: list[Optional[int]] = [None] * g1.n
    nxt = 0
    for w in range(g1.n):
        if w != u:
            map1[w] = nxt
            nxt += 1
    map2: list[Optional[int]] = [None] * g2.n
    for w in range(g2.n):
        if w != v:
            map2[w] = nxt
            nxt += 1

    edges: list[tuple[int, int]] = []
    for a, b in g1.edges:
        if u not in (a, b):
            x, y = map1[a], map1[b]
            edges.append((min(x, y), max(x, y)))
    for a, b in g2.edges:
        if v not in (a, b):
            x, y = map2[a], map2[b]
            edges.append((min(x, y), max(x, y)))
    for x in nu:
        a, b = map1[x], map2[pairing[x]]
        edges.append((min(a, b), max(a, b)))

    colour = None
    if g1.colour is not None and g2.colour is not None:
        # flip g2's classes if needed so the seam edges join opposite colours
        flip = g1.colour[u] == g2.colour[v]
        tr = {"A": "B", "B": "A"}
        side1 = [g1.colour[w] for w in range(g1.n) if w != u]
        side2 = [
            tr[g2.colour[w]] if flip else g2.colour[w]
            for w in range(g2.n)
            if w != v
        ]
        colour = tuple(side1 + side2)

    glued = BipartiteGraph(g1.n + g2.n - 2, tuple(edges), colour)
    shore = vertex_mask(w for w in map1 if w is not None)
    cut = Cut.from_shore(glued, shore)
    if len(cut.edge_ids) != len(nu):
        raise AssertionError("splicing cut does not match the seam")
    if colour is not None and has_perfect_matching(glued):
        if not is_tight(glued, cut):
            raise AssertionError("splicing cut failed the tightness test")
    return Splice(glued, cut, tuple(map1), tuple(map2))


# ---------------------------------------------------------------------------
# trisum

_C4_PAIRS = ((0, 1), (1, 2), (2, 3), (0, 3))


def _check_c4(g: BipartiteGraph, quad: Sequence[int]) -> None:
    if len(quad) != 4 or len(set(quad)) != 4:
        raise GraphError("4-cycle must list four distinct vertices")
    a, b, c, d = quad
    for x, y in ((a, b), (b, c), (c, d), (d, a)):
        if not g.has_edge(x, y):
            raise GraphError(f"vertices {x},{y} not adjacent: not a 4-cycle")


def trisum(
    graphs: Sequence[BipartiteGraph],
    quads: Sequence[Sequence[int]],
    removed: Iterable[tuple[int, int]] = (),
) -> BipartiteGraph:
    """Glue three graphs along a common 4-cycle and delete `removed` edges.

    `quads` gives the cycle in each graph as four vertices in cyclic order;
    position k of each quad is identified across the three graphs and becomes
    vertex k of the result.  `removed` lists cycle edges as position pairs,
    a subset of ((0,1),(1,2),(2,3),(0,3)).
    """
    if len(graphs) != 3 or len(quads) != 3:
        raise GraphError("trisum needs exactly three graphs and three 4-cycles")
    removed_set = {(min(a, b), max(a, b)) for a, b in removed}
    if not removed_set <= set(_C4_PAIRS):
        raise GraphError("removed edges must lie on the shared 4-cycle")
    for g, quad in zip(graphs, quads):
        _check_c4(g, quad)
        if g.n <= 4:
            raise GraphError("each summand needs vertices outside the 4-cycle")

    maps: list[list[int]] = []
    nxt = 4
    for g, quad in zip(graphs, quads):
        m = [-1] * g.n
        for pos, w in enumerate(quad):
            m[w] = pos
        for w in range(g.n):
            if m[w] < 0:
                m[w] = nxt
                nxt += 1
        maps.append(m)

    pair_seen: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    for gi, (g, m) in enumerate(zip(graphs, maps)):
        for a, b in g.edges:
            x, y = m[a], m[b]
            pair = (min(x, y), max(x, y))
            if pair in removed_set:
                continue
            if pair in pair_seen:
                # only the shared 4-cycle may be common to two summands
                if pair not in _C4_PAIRS:
                    raise GraphError(
                        "summands share an edge outside the 4-cycle"
                    )
                continue
            pair_seen[pair] = len(edges)
            edges.append(pair)

    out = BipartiteGraph(nxt, tuple(edges))
    colour = two_colour(out)
    if colour is None:
        raise GraphError("trisum result is not bipartite")
    return with_colouring(out)


def cubic_trisum(
    graphs: Sequence[BipartiteGraph], quads: Sequence[Sequence[int]]
) -> BipartiteGraph:
    """Trisum deleting all four cycle edges; cubic inputs give a cubic result."""
    out = trisum(graphs, quads, _C4_PAIRS)
    if all(g.is_regular(3) for g in graphs) and not out.is_regular(3):
        raise AssertionError("cubic trisum of cubic graphs must be cubic")
    return out


# ---------------------------------------------------------------------------
# conformal subgraphs


def _subgraph_vertices(g: BipartiteGraph, h) -> int:
    """Vertex mask of a subgraph given as vertices or as edge pairs."""
    items = list(h)
    if not items:
        return 0
    if isinstance(items[0], int):
        mask = vertex_mask(items)
        if mask >= 1 << g.n:
            raise GraphError("subgraph vertex out of range")
        return mask
    mask = 0
    for a, b in items:
        if not g.has_edge(a, b):
            raise GraphError(f"{a}-{b} is not an edge of the host graph")
        mask |= 1 << a | 1 << b
    return mask


def is_conformal_subgraph(g: BipartiteGraph, h) -> bool:
    """Does g minus the subgraph's vertices have a perfect matching?

    `h` may be an iterable of vertex ids or of edge pairs (validated against
    g).  An empty remainder counts as matched.
    """
    return has_perfect_matching(g, _subgraph_vertices(g, h))


def conformal_cross(
    g: BipartiteGraph, c4: Sequence[int]
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Paths L (a to c) and R (b to d) with C + L + R conformal, or None.

    `c4` lists the cycle as a,b,c,d in cyclic order.  The paths avoid the
    cycle internally and each other entirely; the search is exhaustive, so
    None means no cross exists.  The host graph must be a brace.
    """
    if not is_brace(g):
        raise GraphError("conformal crosses are defined over braces")
    _check_c4(g, c4)
    a, b, c, d = c4
    c_mask = vertex_mask(c4)

    def paths(src: int, dst: int, blocked: int):
        # simple paths src -> dst whose internal vertices avoid `blocked`
        path = [src]

        def step(here: int, used: int):
            for w in sorted(g.neighbours[here]):
                if w == dst:
                    yield tuple(path) + (dst,)
                elif not (used >> w & 1 or blocked >> w & 1):
                    path.append(w)
                    yield from step(w, used | 1 << w)
                    path.pop()

        yield from step(src, 1 << src)

    for left in paths(a, c, c_mask | 1 << b | 1 << d):
        left_mask = vertex_mask(left)
        for right in paths(b, d, c_mask | left_mask):
            used = c_mask | left_mask | vertex_mask(right)
            if has_perfect_matching(g, used):
                return left, right
    return None


# ---------------------------------------------------------------------------
# K33 bisubdivisions


@dataclass(frozen=True)
class K33Bisubdivision:
    """Branch vertices (3 per colour class) and the nine connecting paths.

    paths[i][j] runs from branches_a[i] to branches_b[j]; in a bipartite host
    every such path has odd length, as a bisubdivision requires.
    """

    branches_a: tuple[int, int, int]
    branches_b: tuple[int, int, int]
    paths: tuple[tuple[tuple[int, ...], ...], ...]

    def vertices(self) -> frozenset[int]:
        out = set(self.branches_a) | set(self.branches_b)
        for row in self.paths:
            for path in row:
                out.update(path)
        return frozenset(out)

    def validate(self, g: BipartiteGraph) -> None:
        seen: set[int] = set(self.branches_a) | set(self.branches_b)
        if len(seen) != 6:
            raise GraphError("branch vertices are not distinct")
        for i in range(3):
            for j in range(3):
                path = self.paths[i][j]
                if path[0] != self.branches_a[i] or path[-1] != self.branches_b[j]:
                    raise GraphError("path endpoints disagree with branches")
                if len(path) % 2:
                    raise GraphError("bisubdivision path of even length")
                for x, y in zip(path, path[1:]):
                    if not g.has_edge(x, y):
                        raise GraphError(f"path step {x}-{y} is not an edge")
                inner = set(path[1:-1])
                if inner & seen:
                    raise GraphError("paths are not internally disjoint")
                seen |= inner
        if not has_perfect_matching(g, vertex_mask(seen)):
            raise GraphError("bisubdivision is not conformal")


def find_conformal_k33_bisubdivision(
    g: BipartiteGraph, bound: Optional[int] = None
) -> Optional[K33Bisubdivision]:
    """Exact search for a conformal bisubdivision of K33.

    Branch triples are drawn one per colour class in ascending order; the
    nine paths are grown depth-first, pairwise internally disjoint, and the
    completed system is kept only if its complement has a perfect matching.
    Returns None exactly when no witness exists, which for bipartite graphs
    with a perfect matching means the graph is Pfaffian.
    """
    if g.colour is None:
        g = with_colouring(g)
    limit = oracle_bound() if bound is None else bound
    if g.n > limit:
        raise OracleBoundError(
            f"{g.n} vertices exceed the exact-search bound {limit}"
        )
    if not has_perfect_matching(g):
        raise GraphError("host graph needs a perfect matching")
    side_a = g.class_a()
    side_b = g.class_b()
    if len(side_a) < 3 or len(side_b) < 3:
        return None
    _, base = _matching(g)

    pair_order = [(i, j) for i in range(3) for j in range(3)]

    for tri_a in itertools.combinations(side_a, 3):
        for tri_b in itertools.combinations(side_b, 3):
            branch_mask = vertex_mask(tri_a) | vertex_mask(tri_b)
            witness = _grow_paths(
                g, tri_a, tri_b, branch_mask, pair_order, base
            )
            if witness is not None:
                witness.validate(g)
                return witness
    return None


def _free_vertex_alive(g: BipartiteGraph, used: int, branch_mask: int) -> bool:
    """No free vertex may be walled in: it must keep a free neighbour to be
    matched in the complement or traversed by a later path."""
    free = g.full_mask & ~used
    for v in bits(free & ~branch_mask):
        if g.adj[v] & free == 0:
            return False
    return True


def _grow_paths(
    g: BipartiteGraph,
    tri_a: tuple[int, ...],
    tri_b: tuple[int, ...],
    branch_mask: int,
    pair_order: list[tuple[int, int]],
    base: list[int],
) -> Optional[K33Bisubdivision]:
    done: dict[tuple[int, int], tuple[int, ...]] = {}

    def reachable_ok(used: int, from_idx: int) -> bool:
        # every remaining pair must still admit a path over unused vertices
        for i, j in pair_order[from_idx:]:
            src, dst = tri_a[i], tri_b[j]
            seen = 1 << src
            stack = [src]
            hit = False
            while stack and not hit:
                x = stack.pop()
                for y in g.neighbours[x]:
                    if y == dst:
                        hit = True
                        break
                    m = 1 << y
                    if not (seen & m or used & m or branch_mask & m):
                        seen |= m
                        stack.append(y)
            if not hit:
                return False
        return True

    def grow(idx: int, used: int) -> bool:
        if idx == len(pair_order):
            free = g.full_mask & ~used
            size, _ = _matching(g, removed_mask=used, seed=base)
            return 2 * size == bin(free).count("1")
        i, j = pair_order[idx]
        src, dst = tri_a[i], tri_b[j]
        path = [src]

        def step(here: int, interior: int) -> bool:
            for w in sorted(g.neighbours[here]):
                if w == dst:
                    path.append(dst)
                    done[i, j] = tuple(path)
                    nxt = used | interior
                    if (
                        _free_vertex_alive(g, nxt, branch_mask)
                        and reachable_ok(nxt, idx + 1)
                        and grow(idx + 1, nxt)
                    ):
                        return True
                    path.pop()
                elif not (interior >> w & 1 or used >> w & 1 or branch_mask >> w & 1):
                    path.append(w)
                    if step(w, interior | 1 << w):
                        return True
                    path.pop()
            return False

        return step(src, 0)

    if not reachable_ok(branch_mask, 0):
        return None
    if grow(0, branch_mask):
        return K33Bisubdivision(
            tuple(tri_a),
            tuple(tri_b),
            tuple(
                tuple(done[i, j] for j in range(3)) for i in range(3)
            ),
        )
    return None


# ---------------------------------------------------------------------------
# Pfaffian orientations


@dataclass(frozen=True)
class Orientation:
    """One direction bit per edge: 0 keeps the stored (u, v) order u -> v."""

    bits: tuple[int, ...]

    def direction(self, g: BipartiteGraph, eid: int) -> tuple[int, int]:
        u, v = g.edges[eid]
        return (u, v) if self.bits[eid] == 0 else (v, u)


class CycleSaturationError(GraphError):
    """Cycle enumeration hit its cap; results would be incomplete."""


def enumerate_simple_cycles(g: BipartiteGraph, cap: int = 10 ** 6) -> list[tuple[int, ...]]:
    """All simple cycles, each reported once, anchored at its least vertex.

    Raises CycleSaturationError beyond `cap` cycles rather than truncating.
    """
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs(anchor: int, here: int, used: int):
        for w in sorted(g.neighbours[here]):
            if w == anchor:
                # close only in one rotational direction to avoid duplicates
                if len(path) >= 3 and path[1] < path[-1]:
                    if len(out) >= cap:
                        raise CycleSaturationError(
                            f"more than {cap} simple cycles"
                        )
                    out.append(tuple(path))
            elif w > anchor and not used >> w & 1:
                path.append(w)
                dfs(anchor, w, used | 1 << w)
                path.pop()

    for anchor in range(g.n):
        path[:] = [anchor]
        dfs(anchor, anchor, 1 << anchor)
    return out


def conformal_cycles(
    g: BipartiteGraph, cap: int = 10 ** 6
) -> list[tuple[int, ...]]:
    """Simple cycles whose vertex-complement has a perfect matching."""
    if not has_perfect_matching(g):
        return []
    _, base = _matching(g)
    keep = []
    for cyc in enumerate_simple_cycles(g, cap):
        if len(cyc) % 2:
            continue
        mask = vertex_mask(cyc)
        size, _ = _matching(g, removed_mask=mask, seed=base)
        if 2 * size == g.n - len(cyc):
            keep.append(cyc)
    return keep


def _cycle_constraint(
    g: BipartiteGraph, cycle: tuple[int, ...]
) -> tuple[list[int], int]:
    """Edge ids on the cycle and the parity its direction bits must have.

    Oddly oriented means an odd number of edges agree with a traversal; for
    even cycles the requirement is independent of the traversal direction.
    """
    ids = []
    rhs = 1
    for x, y in zip(cycle, cycle[1:] + cycle[:1]):
        eid = g.edge_id(x, y)
        ids.append(eid)
        if g.edges[eid] != (x, y):
            rhs ^= 1
    return ids, rhs


def _solve_gf2(rows: list[list[int]], rhs: list[int], width: int) -> Optional[list[int]]:
    if not rows:
        return [0] * width
    a = np.zeros((len(rows), width + 1), dtype=np.uint8)
    for r, (cols, b) in enumerate(zip(rows, rhs)):
        for c in cols:
            a[r, c] ^= 1
        a[r, width] = b
    pivot_of_row: list[int] = []
    row = 0
    for col in range(width):
        hit = np.nonzero(a[row:, col])[0]
        if hit.size == 0:
            continue
        sel = row + hit[0]
        if sel != row:
            a[[row, sel]] = a[[sel, row]]
        mask = a[:, col].copy()
        mask[row] = 0
        a[mask == 1] ^= a[row]
        pivot_of_row.append(col)
        row += 1
        if row == len(rows):
            break
    if np.any(a[row:, width]):
        return None
    x = [0] * width
    for r, col in enumerate(pivot_of_row):
        x[col] = int(a[r, width])
    return x


def find_pfaffian_orientation(
    g: BipartiteGraph,
    bound: Optional[int] = None,
    cycle_cap: int = 10 ** 6,
) -> Optional[Orientation]:
    """Orientation making every conformal cycle oddly oriented, or None.

    Each conformal cycle contributes one GF(2) parity constraint on the edge
    direction bits; any solution of the system is returned.  None means the
    graph is not Pfaffian.
    """
    limit = oracle_bound() if bound is None else bound
    if g.n > limit:
        raise OracleBoundError(
            f"{g.n} vertices exceed the exact-search bound {limit}"
        )
    if g.colour is None:
        g = with_colouring(g)
    if not is_matching_covered(g):
        raise GraphError("Pfaffian test expects a matching covered graph")
    rows: list[list[int]] = []
    rhs: list[int] = []
    cycles = conformal_cycles(g, cycle_cap)
    for cyc in cycles:
        ids, b = _cycle_constraint(g, cyc)
        rows.append(ids)
        rhs.append(b)
    solution = _solve_gf2(rows, rhs, g.edge_count)
    if solution is None:
        return None
    orientation = Orientation(tuple(solution))
    for cyc, b in zip(cycles, rhs):
        ids, _ = _cycle_constraint(g, cyc)
        if sum(solution[e] for e in ids) % 2 != b:
            raise AssertionError("solver returned an infeasible orientation")
    return orientation


def is_oddly_oriented(
    g: BipartiteGraph, orientation: Orientation, cycle: tuple[int, ...]
) -> bool:
    """Does the cycle have an odd number of co-directed edges for a fixed
    (hence, as the cycle is even, for either) traversal?"""
    agree = 0
    for x, y in zip(cycle, cycle[1:] + cycle[:1]):
        eid = g.edge_id(x, y)
        traversed_reverse = g.edges[eid] != (x, y)
        if int(traversed_reverse) == orientation.bits[eid]:
            agree += 1
    return agree % 2 == 1


def braces_pfaffian_consistency(g: BipartiteGraph, bound: Optional[int] = None) -> dict:
    """Compare the direct Pfaffian verdict with the one through the braces.

    A matching covered graph is Pfaffian exactly when all its braces are, so
    the brace route also covers graphs beyond the direct solver's bound; in
    that case the direct entry is None and no comparison is made.
    """
    from .canon import canonical_form  # local import to keep module load light
    from .io import from_graph6
    from .tightcut import tight_cut_decomposition

    limit = oracle_bound() if bound is None else bound
    decomposition = tight_cut_decomposition(g if g.colour else with_colouring(g))
    pieces = [
        (with_colouring(from_graph6(form)), form) for form in decomposition.braces
    ]
    # smallest braces first: one non-Pfaffian brace settles the verdict, and
    # the expensive cycle enumeration on big braces is then never reached
    pieces.sort(key=lambda pf: (pf[0].n, pf[1]))
    brace_verdicts: dict[str, bool] = {}
    via_braces = True
    for piece, form in pieces:
        verdict = find_pfaffian_orientation(piece, bound=limit) is not None
        brace_verdicts[form] = verdict
        if not verdict:
            via_braces = False
            break
    direct: Optional[bool] = None
    if g.n <= limit:
        direct = find_pfaffian_orientation(g, bound=limit) is not None
    return {
        "pfaffian": via_braces,
        "direct": direct,
        "braces": brace_verdicts,
        "consistent": None if direct is None else direct == via_braces,
    }
