"""Combinatorial embeddings as rotation systems, face tracing, expansion sites.

A rotation system stores, for every vertex, the cyclic order of its incident
edge ids.  Faces are orbits of the dart successor rule: after traversing edge
e into vertex w, the walk leaves w along the successor of e in the rotation at
w.  A connected rotation system is planar iff V - E + F = 2; every surgery in
this package re-checks that equality rather than trusting its own bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graphs import BipartiteGraph, GraphError, is_connected

Dart = tuple[int, int]  # (vertex, edge id): leave vertex along edge


@dataclass(frozen=True)
class RotationEmbedding:
    """Cyclic edge-id order around each vertex."""

    rotation: tuple[tuple[int, ...], ...]

    def validate(self, g: BipartiteGraph) -> None:
        if len(self.rotation) != g.n:
            raise GraphError("rotation has wrong number of vertices")
        for v in range(g.n):
            if sorted(self.rotation[v]) != sorted(g.incident[v]):
                raise GraphError(f"rotation at vertex {v} is not its incident edges")

    def successor(self, v: int, eid: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(eid) + 1) % len(rot)]


def next_dart(g: BipartiteGraph, emb: RotationEmbedding, dart: Dart) -> Dart:
    v, eid = dart
    w = g.other_end(eid, v)
    return (w, emb.successor(w, eid))


def faces(g: BipartiteGraph, emb: RotationEmbedding) -> list[tuple[Dart, ...]]:
    """All facial walks, each a tuple of darts, in deterministic order."""
    seen: set[Dart] = set()
    out: list[tuple[Dart, ...]] = []
    for eid, (u, v) in enumerate(g.edges):
        for start in ((u, eid), (v, eid)):
            if start in seen:
                continue
            walk = []
            dart = start
            while True:
                walk.append(dart)
                seen.add(dart)
                dart = next_dart(g, emb, dart)
                if dart == start:
                    break
            out.append(tuple(walk))
    return out


def face_vertices(face: tuple[Dart, ...]) -> tuple[int, ...]:
    return tuple(v for v, _ in face)


def euler_check(g: BipartiteGraph, emb: RotationEmbedding) -> bool:
    """V - E + F = 2 for a connected graph: the embedding is planar."""
    if g.n == 0 or not is_connected(g):
        return False
    emb.validate(g)
    f = len(faces(g, emb))
    return g.n - g.edge_count + f == 2


def embed_planar(g: BipartiteGraph) -> Optional[RotationEmbedding]:
    """A planar rotation system, or None for non-planar input."""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    ok, cert = nx.check_planarity(G)
    if not ok:
        return None
    rotation = []
    for v in range(g.n):
        if g.degree(v) == 0:
            rotation.append(())
            continue
        order = list(cert.neighbors_cw_order(v))
        rotation.append(tuple(g.edge_id(v, w) for w in order))
    emb = RotationEmbedding(tuple(rotation))
    if g.n >= 1 and is_connected(g) and not euler_check(g, emb):
        raise GraphError("planar embedding failed the Euler check")
    return emb


@dataclass(frozen=True)
class C4Site:
    """A valid site for the planar 4-cycle expansion on a facial cycle.

    Roles: u, y in class A; v, x in class B; uv and xy are edges of a common
    facial cycle whose two arcs between them (after removing both edges) have
    odd length.
    """

    u: int
    v: int
    x: int
    y: int
    eid_uv: int
    eid_xy: int
    face_index: int


def facial_c4_expansion_sites(g: BipartiteGraph, emb: RotationEmbedding) -> list[C4Site]:
    """All valid edge pairs for the planar 4-cycle expansion, per face.

    A face of length 2L contributes every pair of edge positions of equal
    parity; for a quadrilateral face these are exactly its two opposite-edge
    pairs.
    """
    g._require_colour()
    sites: list[C4Site] = []
    for fidx, face in enumerate(faces(g, emb)):
        verts = face_vertices(face)
        if len(set(verts)) != len(verts):
            raise GraphError("facial walk is not a simple cycle")
        length = len(face)
        for i in range(length):
            for j in range(i + 2, length):
                if (j - i) % 2 != 0:
                    continue
                if j - i == length:  # cannot happen, kept for clarity
                    continue
                ei = face[i][1]
                ej = face[j][1]
                wi, wi1 = verts[i], verts[(i + 1) % length]
                wj, wj1 = verts[j], verts[(j + 1) % length]
                if g.colour[wi] == "A":
                    u, v = wi, wi1
                    y, x = wj, wj1
                else:
                    u, v = wi1, wi
                    y, x = wj1, wj
                sites.append(C4Site(u=u, v=v, x=x, y=y, eid_uv=ei, eid_xy=ej, face_index=fidx))
    return sites
