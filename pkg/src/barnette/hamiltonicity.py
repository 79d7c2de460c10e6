"""Exact Hamiltonian cycle search with forced and forbidden edges.

The solver keeps one in/out/undecided status per edge and propagates two local
rules to a fixed point: a vertex with two chosen edges excludes its remaining
edges, and a vertex with only two usable edges must use both.  Chosen edges
form path fragments whose endpoints are linked; an edge closing a fragment is
rejected unless it completes a spanning cycle.  Branching picks an undecided
edge at a vertex with the fewest usable edges (ties by vertex id) and tries
"in" before "out", so the search is deterministic.

Derived predicates: a graph is Pk-Hamiltonian when every path on k vertices
extends to a Hamiltonian cycle; H-minus when every single edge can be avoided;
H-plus-minus when for every ordered pair of distinct edges some Hamiltonian
cycle contains the first and avoids the second.  The engine caches found
cycles and reuses them across queries keyed by (contains, avoids) edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import BipartiteGraph, GraphError
from .matching import PerfectMatching

_UNDECIDED, _IN, _OUT = 0, 1, 2

# trail record kinds
_T_OUT, _T_MERGE, _T_CLOSE = 0, 1, 2


@dataclass(frozen=True)
class HamiltonianCycle:
    """A spanning cycle: vertices in traversal order plus its edge ids."""

    vertices: tuple[int, ...]
    edge_ids: frozenset[int]

    def validate(self, g: BipartiteGraph) -> None:
        if len(self.vertices) != g.n or len(set(self.vertices)) != g.n:
            raise GraphError("cycle does not span the vertex set")
        for i, v in enumerate(self.vertices):
            w = self.vertices[(i + 1) % g.n]
            if not g.has_edge(v, w):
                raise GraphError(f"cycle step {v}-{w} is not an edge")


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of a universally quantified Hamiltonicity predicate.

    ``counterexample`` carries the failing object: a vertex path for the Pk
    properties, an edge id for H-minus, an (edge id, edge id) pair for
    H-plus-minus.  Truthiness follows ``holds``.
    """

    holds: bool
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


class _State:
    """Search state with an undo trail.

    ``link[v]`` is meaningful only while v is a fragment endpoint (fewer than
    two chosen edges): it names the opposite endpoint, itself for an isolated
    vertex.  Interior vertices keep stale links that are never read.
    """

    __slots__ = ("g", "status", "deg_in", "avail", "link", "in_count", "trail")

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self.status = [_UNDECIDED] * g.edge_count
        self.deg_in = [0] * g.n
        self.avail = [g.degree(v) for v in range(g.n)]
        self.link = list(range(g.n))
        self.in_count = 0
        self.trail: list[tuple[int, int, int, int]] = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            kind, eid, eu, ev = self.trail.pop()
            u, v = self.g.edges[eid]
            self.status[eid] = _UNDECIDED
            if kind == _T_OUT:
                self.avail[u] += 1
                self.avail[v] += 1
                continue
            self.in_count -= 1
            self.deg_in[u] -= 1
            self.deg_in[v] -= 1
            if kind == _T_MERGE:
                # before the merge, eu was linked to u and ev to v
                self.link[eu] = u
                self.link[ev] = v

    def set_out(self, eid: int) -> bool:
        if self.status[eid] == _OUT:
            return True
        if self.status[eid] == _IN:
            return False
        u, v = self.g.edges[eid]
        self.status[eid] = _OUT
        self.trail.append((_T_OUT, eid, -1, -1))
        self.avail[u] -= 1
        self.avail[v] -= 1
        return self.avail[u] >= 2 and self.avail[v] >= 2

    def set_in(self, eid: int) -> bool:
        if self.status[eid] == _IN:
            return True
        if self.status[eid] == _OUT:
            return False
        u, v = self.g.edges[eid]
        if self.deg_in[u] >= 2 or self.deg_in[v] >= 2:
            return False
        eu, ev = self.link[u], self.link[v]
        if eu == v:
            # closes the fragment through u and v: legal only as final edge
            if self.in_count + 1 != self.g.n:
                return False
            self.trail.append((_T_CLOSE, eid, -1, -1))
        else:
            self.trail.append((_T_MERGE, eid, eu, ev))
            self.link[eu] = ev
            self.link[ev] = eu
        self.status[eid] = _IN
        self.in_count += 1
        self.deg_in[u] += 1
        self.deg_in[v] += 1
        return True

    def propagate(self) -> bool:
        """Apply the two degree rules until nothing changes."""
        g = self.g
        changed = True
        while changed:
            changed = False
            for v in range(g.n):
                if self.deg_in[v] == 2:
                    for eid in g.incident[v]:
                        if self.status[eid] == _UNDECIDED:
                            if not self.set_out(eid):
                                return False
                            changed = True
                elif self.avail[v] < 2:
                    return False
                elif self.avail[v] == 2:
                    for eid in g.incident[v]:
                        if self.status[eid] == _UNDECIDED:
                            if not self.set_in(eid):
                                return False
                            changed = True
        return True

    def extract_cycle(self) -> HamiltonianCycle:
        g = self.g
        chosen = [eid for eid in range(g.edge_count) if self.status[eid] == _IN]
        order = [0]
        prev = -1
        while len(order) < g.n:
            here = order[-1]
            for eid in g.incident[here]:
                if self.status[eid] == _IN:
                    nxt = g.other_end(eid, here)
                    if nxt != prev:
                        prev = here
                        order.append(nxt)
                        break
        return HamiltonianCycle(tuple(order), frozenset(chosen))


def _forced_edges_are_paths(g: BipartiteGraph, forced: Iterable[int]) -> bool:
    """Disjoint union of paths; a single spanning cycle is also accepted."""
    forced = set(forced)
    deg = [0] * g.n
    for eid in forced:
        u, v = g.edges[eid]
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    closures = 0
    for eid in forced:
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru == rv:
            closures += 1
        else:
            parent[ru] = rv
    if closures == 0:
        return True
    return closures == 1 and len(forced) == g.n


def find_hamiltonian_cycle(
    g: BipartiteGraph,
    forced: Iterable[int] = (),
    forbidden: Iterable[int] = (),
) -> Optional[HamiltonianCycle]:
    """Search for a Hamiltonian cycle using every forced edge and no forbidden one.

    Returns None when no such cycle exists.  Overlapping constraint sets and
    forced sets that are not disjoint unions of paths raise GraphError; an
    unsatisfiable but well-formed query simply returns None.
    """
    forced = frozenset(forced)
    forbidden = frozenset(forbidden)
    if forced & forbidden:
        raise GraphError("an edge is both forced and forbidden")
    for eid in forced | forbidden:
        if not 0 <= eid < g.edge_count:
            raise GraphError(f"edge id {eid} out of range")
    if g.n < 3:
        return None
    if not _forced_edges_are_paths(g, forced):
        raise GraphError("forced edges must form a disjoint union of paths")

    st = _State(g)
    for eid in forbidden:
        if not st.set_out(eid):
            return None
    for eid in sorted(forced):
        if not st.set_in(eid):
            return None
    if not st.propagate():
        return None
    if _solve(st):
        return st.extract_cycle()
    return None


def _branch_edge(st: _State) -> int:
    """Undecided edge at the most constrained vertex; -1 when none remain."""
    g = st.g
    best_v = -1
    best_avail = 10 ** 9
    for v in range(g.n):
        if st.deg_in[v] < 2 and st.avail[v] < best_avail:
            for eid in g.incident[v]:
                if st.status[eid] == _UNDECIDED:
                    best_v = v
                    best_avail = st.avail[v]
                    break
    if best_v < 0:
        return -1
    for eid in g.incident[best_v]:
        if st.status[eid] == _UNDECIDED:
            return eid
    raise AssertionError("unreachable")


def _solve(st: _State) -> bool:
    if st.in_count == st.g.n:
        return True
    eid = _branch_edge(st)
    if eid < 0:
        return False
    mark = st.mark()
    if st.set_in(eid) and st.propagate() and _solve(st):
        return True
    st.undo(mark)
    if st.set_out(eid) and st.propagate() and _solve(st):
        return True
    st.undo(mark)
    return False


def is_hamiltonian(g: BipartiteGraph) -> bool:
    return find_hamiltonian_cycle(g) is not None


def cycle_to_matchings(
    g: BipartiteGraph, cycle: HamiltonianCycle
) -> tuple[PerfectMatching, PerfectMatching]:
    """Split a Hamiltonian cycle into its two alternating perfect matchings."""
    cycle.validate(g)
    if g.n % 2:
        raise GraphError("odd cycle cannot split into matchings")
    halves: tuple[list[int], list[int]] = ([], [])
    for i, v in enumerate(cycle.vertices):
        w = cycle.vertices[(i + 1) % g.n]
        halves[i % 2].append(g.edge_id(v, w))
    m0 = PerfectMatching(frozenset(halves[0]))
    m1 = PerfectMatching(frozenset(halves[1]))
    m0.validate(g)
    m1.validate(g)
    return m0, m1


class HamiltonicityEngine:
    """Cycle-query engine over one graph with positive and negative caching.

    Every found cycle is kept; a query first scans the cache for a cycle
    containing all required edges and avoiding all excluded ones, and only
    then calls the solver.  Exhausted queries are remembered by their exact
    (contains, avoids) key so repeats are free.
    """

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self.cycles: list[HamiltonianCycle] = []
        self._no_cycle: set[tuple[frozenset[int], frozenset[int]]] = set()

    def cycle_with(
        self,
        contains: Iterable[int] = (),
        avoids: Iterable[int] = (),
    ) -> Optional[HamiltonianCycle]:
        contains = frozenset(contains)
        avoids = frozenset(avoids)
        for c in self.cycles:
            if contains <= c.edge_ids and not (avoids & c.edge_ids):
                return c
        key = (contains, avoids)
        if key in self._no_cycle:
            return None
        cycle = find_hamiltonian_cycle(self.g, contains, avoids)
        if cycle is None:
            self._no_cycle.add(key)
        else:
            self.cycles.append(cycle)
        return cycle


def _paths_on_k_vertices(g: BipartiteGraph, k: int) -> Iterable[tuple[int, ...]]:
    """All simple paths with k vertices, one orientation per path."""
    if k == 1:
        yield from ((v,) for v in range(g.n))
        return

    path = [0] * k

    def extend(depth: int, used: int):
        if depth == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        for w in g.neighbours[path[depth - 1]]:
            if not used >> w & 1:
                path[depth] = w
                yield from extend(depth + 1, used | 1 << w)

    for v in range(g.n):
        path[0] = v
        yield from extend(1, 1 << v)


def _path_edge_ids(g: BipartiteGraph, path: tuple[int, ...]) -> list[int]:
    return [g.edge_id(a, b) for a, b in zip(path, path[1:])]


def is_pk_hamiltonian(
    g: BipartiteGraph, k: int, engine: Optional[HamiltonicityEngine] = None
) -> PropertyResult:
    """Does every path on k vertices extend to a Hamiltonian cycle?

    Vacuously false on a non-Hamiltonian graph only if a path exists at all;
    by convention the empty-path edge case requires k >= 2.
    """
    if not 2 <= k <= g.n:
        raise GraphError(f"k={k} out of range for n={g.n}")
    engine = engine or HamiltonicityEngine(g)
    for path in _paths_on_k_vertices(g, k):
        if engine.cycle_with(contains=_path_edge_ids(g, path)) is None:
            return PropertyResult(False, path)
    return PropertyResult(True)


def has_h_minus(
    g: BipartiteGraph, engine: Optional[HamiltonicityEngine] = None
) -> PropertyResult:
    """Does every edge have a Hamiltonian cycle avoiding it?"""
    engine = engine or HamiltonicityEngine(g)
    for eid in range(g.edge_count):
        if engine.cycle_with(avoids=(eid,)) is None:
            return PropertyResult(False, (eid,))
    return PropertyResult(True)


def has_h_plus_minus(
    g: BipartiteGraph, engine: Optional[HamiltonicityEngine] = None
) -> PropertyResult:
    """For every ordered pair (e, f) of distinct edges, is there a
    Hamiltonian cycle through e avoiding f?"""
    engine = engine or HamiltonicityEngine(g)
    for e in range(g.edge_count):
        for f in range(g.edge_count):
            if e == f:
                continue
            if engine.cycle_with(contains=(e,), avoids=(f,)) is None:
                return PropertyResult(False, (e, f))
    return PropertyResult(True)


def property_profile(g: BipartiteGraph) -> dict[str, bool]:
    """All strengthened-Hamiltonicity verdicts for one graph, sharing a cache."""
    engine = HamiltonicityEngine(g)
    profile = {"hamiltonian": engine.cycle_with() is not None}
    for k in (2, 3, 4, 5):
        if g.n >= k:
            profile[f"p{k}"] = bool(is_pk_hamiltonian(g, k, engine))
    profile["h_minus"] = bool(has_h_minus(g, engine))
    profile["h_plus_minus"] = bool(has_h_plus_minus(g, engine))
    return profile
