"""Core graph types: simple graphs with bitset adjacency, stable edge ids, 2-colourings.

Vertices are 0..n-1.  Edges are stored as a tuple of (u, v) pairs with u < v;
the index of an edge in that tuple is its edge id.  Edge ids are dense and
stable: every operation that derives a new graph documents how ids map.
Vertex subsets are passed around as int bitmasks throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Container, Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph data or violated preconditions."""


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable simple graph, optionally carrying a proper 2-colouring.

    The type admits any simple graph; the ``colour`` field, when present, is a
    proper 2-colouring with values 'A' and 'B'.  Operations that need the
    colouring state so in their precondition.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    colour: Optional[tuple[str, ...]] = None
    # Derived structures, computed once at construction.
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    neighbours: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        seen = set()
        adj = [0] * self.n
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(edges):
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"parallel edge ({u}, {v})")
            seen.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbrs[u].append(v)
            nbrs[v].append(u)
            inc[u].append(eid)
            inc[v].append(eid)
        if self.colour is not None:
            if len(self.colour) != self.n:
                raise GraphError("colour tuple length differs from vertex count")
            if any(c not in ("A", "B") for c in self.colour):
                raise GraphError("colours must be 'A' or 'B'")
            for u, v in edges:
                if self.colour[u] == self.colour[v]:
                    raise GraphError(f"edge ({u}, {v}) joins equal colours")
            object.__setattr__(self, "colour", tuple(self.colour))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "neighbours", tuple(tuple(x) for x in nbrs))
        object.__setattr__(self, "incident", tuple(tuple(x) for x in inc))

    # ----- basic accessors -----

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge {u, v}; raises GraphError if absent."""
        key = (min(u, v), max(u, v))
        eid = self._edge_index().get(key)
        if eid is None:
            raise GraphError(f"no edge {key}")
        return eid

    def _edge_index(self) -> dict[tuple[int, int], int]:
        idx = getattr(self, "_edge_index_cache", None)
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_index_cache", idx)
        return idx

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} not on edge {eid}")

    def is_regular(self, d: int) -> bool:
        return all(len(nb) == d for nb in self.neighbours)

    def class_a(self) -> tuple[int, ...]:
        self._require_colour()
        return tuple(v for v in range(self.n) if self.colour[v] == "A")

    def class_b(self) -> tuple[int, ...]:
        self._require_colour()
        return tuple(v for v in range(self.n) if self.colour[v] == "B")

    def _require_colour(self) -> None:
        if self.colour is None:
            raise GraphError("operation requires a coloured graph")

    def colour_mask(self, c: str) -> int:
        self._require_colour()
        m = 0
        for v in range(self.n):
            if self.colour[v] == c:
                m |= 1 << v
        return m

    def relabel(self, perm: Sequence[int]) -> "BipartiteGraph":
        """Graph with vertex v renamed to perm[v]; edge ids follow sorted order of new pairs."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of the vertices")
        new_edges = sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges
        )
        new_colour = None
        if self.colour is not None:
            nc = [""] * self.n
            for v in range(self.n):
                nc[perm[v]] = self.colour[v]
            new_colour = tuple(nc)
        return BipartiteGraph(self.n, tuple(new_edges), new_colour)


@dataclass(frozen=True)
class Cut:
    """An edge cut delta(X) given by its shore X (bitmask) and its edge ids.

    ``edge_ids`` is always exactly the set of edges with one endpoint in the
    shore; ``from_shore`` computes it and the constructor is only used with
    values produced that way.
    """

    shore: int
    edge_ids: frozenset[int]
    n: int

    @classmethod
    def from_shore(cls, g: BipartiteGraph, shore: int | Iterable[int]) -> "Cut":
        mask = shore if isinstance(shore, int) else vertex_mask(shore)
        if mask <= 0 or mask >= g.full_mask:
            raise GraphError("cut shore must be a proper non-empty vertex subset")
        ids = frozenset(
            eid for eid, (u, v) in enumerate(g.edges) if (mask >> u & 1) != (mask >> v & 1)
        )
        return cls(mask, ids, g.n)

    @property
    def order(self) -> int:
        return len(self.edge_ids)

    def shore_vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.shore))

    def complement_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.shore

    @property
    def is_trivial(self) -> bool:
        return _popcount(self.shore) == 1 or _popcount(self.complement_mask()) == 1

    def same_cut(self, other: "Cut") -> bool:
        """True if both objects describe the same cut, up to shore complement."""
        return self.edge_ids == other.edge_ids and (
            self.shore == other.shore or self.shore == other.complement_mask()
        )


def vertex_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ----- connectivity -----


def connected_components(
    g: BipartiteGraph,
    removed_mask: int = 0,
    edge_skip: Container[int] = (),
) -> list[int]:
    """Component bitmasks of g with vertices in ``removed_mask`` and edges in
    ``edge_skip`` deleted."""
    alive = g.full_mask & ~removed_mask
    comps = []
    todo = alive
    while todo:
        start = (todo & -todo).bit_length() - 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            if edge_skip:
                fresh = 0
                for eid in g.incident[v]:
                    if eid not in edge_skip:
                        fresh |= 1 << g.other_end(eid, v)
                fresh &= alive & ~comp
            else:
                fresh = g.adj[v] & alive & ~comp
            comp |= fresh
            frontier.extend(bits(fresh))
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: BipartiteGraph, removed_mask: int = 0) -> bool:
    alive = g.full_mask & ~removed_mask
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    comp = 1 << start
    frontier = [start]
    while frontier:
        v = frontier.pop()
        fresh = g.adj[v] & alive & ~comp
        comp |= fresh
        frontier.extend(bits(fresh))
    return comp == alive


def is_k_connected(g: BipartiteGraph, k: int) -> bool:
    """k-connectivity for k in 1..4.

    Subset enumeration for k <= 3; vertex-disjoint path computations via
    unit-capacity flow for k = 4.
    """
    if k not in (1, 2, 3, 4):
        raise GraphError("k must be between 1 and 4")
    if k > g.n - 1:
        raise GraphError("k must be at most n - 1")
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if any(g.degree(v) < k for v in range(g.n)):
        return False
    if k <= 3:
        for size in range(1, k):
            for sub in combinations(range(g.n), size):
                if not is_connected(g, vertex_mask(sub)):
                    return False
        return True
    # k == 4: Menger via flow over all non-adjacent pairs, plus adjacent pairs
    # handled by removing the shared edge's contribution.
    for s in range(g.n):
        for t in range(s + 1, g.n):
            need = 4 if not g.has_edge(s, t) else 3
            if _disjoint_paths(g, s, t, skip_direct=g.has_edge(s, t)) < need:
                return False
    return True


def _disjoint_paths(g: BipartiteGraph, s: int, t: int, skip_direct: bool = False) -> int:
    """Number of internally vertex-disjoint s-t paths (unit-capacity flow).

    With ``skip_direct`` the edge st itself is ignored, so the result counts
    paths through intermediate vertices only.
    """
    # Split each internal vertex v into v_in / v_out with capacity 1.
    # Node encoding: 2*v = in, 2*v + 1 = out.
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)

    for v in range(g.n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1)
    for u, v in g.edges:
        if {u, v} == {s, t} and skip_direct:
            continue
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    adj: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj.setdefault(a, []).append(b)
    flow = 0
    while flow < 4:
        # BFS augmenting path
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for b in adj.get(a, ()):  # noqa: B905
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


# ----- 2-colouring -----


def two_colour(g: BipartiteGraph) -> Optional[tuple[str, ...]]:
    """Proper 2-colouring with vertex 0 coloured 'A', or None if an odd cycle exists.

    Components are coloured independently, the least vertex of each getting 'A'.
    """
    colour: list[Optional[str]] = [None] * g.n
    for start in range(g.n):
        if colour[start] is not None:
            continue
        colour[start] = "A"
        queue = [start]
        while queue:
            v = queue.pop(0)
            want = "B" if colour[v] == "A" else "A"
            for w in g.neighbours[v]:
                if colour[w] is None:
                    colour[w] = want
                    queue.append(w)
                elif colour[w] != want:
                    return None
    return tuple(c for c in colour)  # type: ignore[misc]


def with_colouring(g: BipartiteGraph) -> BipartiteGraph:
    """Copy of g carrying the canonical 2-colouring; raises if non-bipartite."""
    if g.colour is not None:
        return g
    col = two_colour(g)
    if col is None:
        raise GraphError("graph is not bipartite")
    return BipartiteGraph(g.n, g.edges, col)


def shore_colour_balance(g: BipartiteGraph, mask: int) -> int:
    """|X inter A| - |X inter B| for the vertex set given by ``mask``."""
    g._require_colour()
    return _popcount(mask & g.colour_mask("A")) - _popcount(mask & g.colour_mask("B"))
