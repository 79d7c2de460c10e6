"""Growth operations and tight-cut-family bookkeeping.

Two surgeries generate the whole class from the cube: replacing a vertex by
a seven-vertex cube gadget, and replacing two edges of a common face by a
new quadrilateral.  Both reuse the edge ids of the edges they modify, which
makes most family maintenance a no-op: a stored cut keeps referring to the
right edges without renaming.  The quadrilateral expansion removes exactly
the cuts that separate its two edges; that test is run as the linear-time
path-parity count and cross-checked against the shore membership it stands
for on every call.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .embedding import C4Site, RotationEmbedding, euler_check, faces
from .graphs import BipartiteGraph, Cut, GraphError
from .tightcut import cubic_three_connected, is_tight

TightCutFamily = tuple[Cut, ...]


@dataclass(frozen=True)
class ExpansionSite:
    """Where an expansion was applied: a vertex, or a facial edge pair."""

    kind: str  # "cube" | "c4"
    vertex: Optional[int] = None
    c4: Optional[C4Site] = None

    def describe(self) -> str:
        if self.kind == "cube":
            return f"cube@{self.vertex}"
        s = self.c4
        return f"c4@({s.u},{s.v})+({s.x},{s.y})"


def _opp(colour: str) -> str:
    return "B" if colour == "A" else "A"


def cube_expand(
    g: BipartiteGraph, emb: RotationEmbedding, v: int
) -> tuple[BipartiteGraph, RotationEmbedding, Cut]:
    """Replace v by a hexagon u1..u6 with centre w, attached at u2, u4, u6.

    The attachments follow the rotation at v, keeping the surgery planar;
    the attachment edges keep their ids and form the new tight cut.  w reuses
    v's vertex id, so shores that contained v still contain the gadget core.
    """
    g._require_colour()
    if g.degree(v) != 3:
        raise GraphError("cube expansion needs a degree-3 vertex")
    e1, e2, e3 = emb.rotation[v]
    nbs = tuple(g.other_end(e, v) for e in (e1, e2, e3))
    n0, m0 = g.n, g.edge_count
    # u1..u6 get ids n0..n0+5; w reuses v's id
    u = tuple(n0 + k for k in range(6))
    edges = list(g.edges)
    for eid, nb, uk in zip((e1, e2, e3), nbs, (u[1], u[3], u[5])):
        edges[eid] = (min(nb, uk), max(nb, uk))
    hexagon = [(u[0], u[1]), (u[1], u[2]), (u[2], u[3]), (u[3], u[4]),
               (u[4], u[5]), (u[0], u[5])]
    spokes = [(min(v, u[k]), max(v, u[k])) for k in (0, 2, 4)]
    edges += hexagon + spokes
    h = tuple(range(m0, m0 + 6))  # hexagon edge ids, h[k] joins u[k], u[k+1]
    s1, s3, s5 = m0 + 6, m0 + 7, m0 + 8

    c = g.colour[v]
    colour = g.colour + (_opp(c), c, _opp(c), c, _opp(c), c)

    rot = [list(r) for r in emb.rotation]
    rot[v] = [s1, s3, s5]
    gadget_rot = [
        [h[0], s1, h[5]],        # u1: u2, w, u6
        [h[0], e1, h[1]],        # u2: u1, n1, u3
        [h[2], s3, h[1]],        # u3: u4, w, u2
        [h[2], e2, h[3]],        # u4: u3, n2, u5
        [h[4], s5, h[3]],        # u5: u6, w, u4
        [h[4], e3, h[5]],        # u6: u5, n3, u1
    ]
    rot += gadget_rot

    g2 = BipartiteGraph(n0 + 6, tuple(edges), colour=colour)
    emb2 = RotationEmbedding(tuple(tuple(r) for r in rot))
    if not euler_check(g2, emb2):
        raise GraphError("cube expansion broke the embedding")
    assert g2.is_regular(3)
    assert cubic_three_connected(g2)
    cut = Cut.from_shore(g2, frozenset({v, *u}))
    assert cut.edge_ids == frozenset({e1, e2, e3})
    assert is_tight(g2, cut)
    return g2, emb2, cut


def _face_runs_u_to_v(g: BipartiteGraph, emb: RotationEmbedding, site: C4Site) -> bool:
    walk = faces(g, emb)[site.face_index]
    for vertex, eid in walk:
        if eid == site.eid_uv:
            return vertex == site.u
    raise GraphError("site edge is not on the named face")


def c4_expand(
    g: BipartiteGraph, emb: RotationEmbedding, site: C4Site
) -> tuple[BipartiteGraph, RotationEmbedding]:
    """Insert a quadrilateral across two opposite-parity edges of one face.

    uv keeps its edge id and becomes uu'; xy becomes xx'.  The new 4-cycle
    u'v'y'x' bounds a face inside the old one, oriented by the direction in
    which the facial walk traverses uv.
    """
    g._require_colour()
    u, v, x, y = site.u, site.v, site.x, site.y
    if g.colour[u] != "A" or g.colour[y] != "A" or g.colour[v] != "B" or g.colour[x] != "B":
        raise GraphError("site colour roles are wrong")
    if g.edges[site.eid_uv] != (min(u, v), max(u, v)) or g.edges[site.eid_xy] != (
        min(x, y),
        max(x, y),
    ):
        raise GraphError("site edge ids do not match its vertices")
    forward = _face_runs_u_to_v(g, emb, site)

    n0, m0 = g.n, g.edge_count
    nu, nv, nx, ny = n0, n0 + 1, n0 + 2, n0 + 3  # u', v', x', y'
    edges = list(g.edges)
    edges[site.eid_uv] = (min(u, nu), max(u, nu))
    edges[site.eid_xy] = (min(x, nx), max(x, nx))
    e_vv = m0
    e_yy = m0 + 1
    e_uv_new = m0 + 2  # u'v'
    e_xy_new = m0 + 3  # x'y'
    e_ux = m0 + 4  # u'x'
    e_vy = m0 + 5  # v'y'
    edges += [
        (min(v, nv), max(v, nv)),
        (min(y, ny), max(y, ny)),
        (nu, nv),
        (nx, ny),
        (nu, nx),
        (nv, ny),
    ]
    colour = g.colour + ("B", "A", "A", "B")

    rot = [list(r) for r in emb.rotation]
    rot[v][rot[v].index(site.eid_uv)] = e_vv
    rot[y][rot[y].index(site.eid_xy)] = e_yy
    new_rot = {
        nu: [site.eid_uv, e_uv_new, e_ux],  # u, v', x'
        nv: [e_vv, e_vy, e_uv_new],         # v, y', u'
        ny: [e_yy, e_xy_new, e_vy],         # y, x', v'
        nx: [site.eid_xy, e_ux, e_xy_new],  # x, u', y'
    }
    if forward:
        for r in new_rot.values():
            r.reverse()
    rot += [new_rot[k] for k in (nu, nv, nx, ny)]

    g2 = BipartiteGraph(n0 + 4, tuple(edges), colour=colour)
    emb2 = RotationEmbedding(tuple(tuple(r) for r in rot))
    if not euler_check(g2, emb2):
        raise GraphError("quadrilateral expansion broke the embedding")
    assert g2.is_regular(3)
    assert cubic_three_connected(g2)
    return g2, emb2


def general_c4_expand(g: BipartiteGraph, eid_uv: int, eid_xy: int) -> BipartiteGraph:
    """The same edge surgery without any planarity or facial requirement.

    Roles are read off the colouring: u and y are the A-ends of the two
    edges.  Keeps the input matching covered, and 2-extendable inputs stay
    2-extendable; both are asserted by tests, not here.
    """
    g._require_colour()
    if eid_uv == eid_xy:
        raise GraphError("the two expansion edges must differ")
    a1, b1 = g.edges[eid_uv]
    a2, b2 = g.edges[eid_xy]
    if g.colour[a1] != "A":
        a1, b1 = b1, a1
    if g.colour[a2] != "A":
        a2, b2 = b2, a2
    u, v, y, x = a1, b1, a2, b2
    if len({u, v, x, y}) != 4:
        raise GraphError("expansion edges must not share a vertex")

    n0, m0 = g.n, g.edge_count
    nu, nv, nx, ny = n0, n0 + 1, n0 + 2, n0 + 3
    edges = list(g.edges)
    edges[eid_uv] = (min(u, nu), max(u, nu))
    edges[eid_xy] = (min(x, nx), max(x, nx))
    edges += [
        (min(v, nv), max(v, nv)),
        (min(y, ny), max(y, ny)),
        (nu, nv),
        (nx, ny),
        (nu, nx),
        (nv, ny),
    ]
    colour = g.colour + ("B", "A", "A", "B")
    return BipartiteGraph(n0 + 4, tuple(edges), colour=colour)


def update_family_cube(fam: TightCutFamily, v: int, new_cut: Cut) -> TightCutFamily:
    """Carry a family through a cube expansion at v and append its new cut.

    Edge ids of old cuts survive the surgery unchanged; a shore that held v
    absorbs the six new gadget vertices (v's id stays on it, as the centre).
    """
    n_new = new_cut.n
    n_old = n_new - 6
    gadget = ((1 << 6) - 1) << n_old
    out = []
    for cut in fam:
        shore = cut.shore | (gadget if (cut.shore >> v) & 1 else 0)
        out.append(Cut(shore=shore, edge_ids=cut.edge_ids, n=n_new))
    out.append(new_cut)
    return tuple(out)


def _bfs_path_edges(g: BipartiteGraph, src: int, dst: int) -> list[int]:
    if src == dst:
        return []
    parent_edge = [-1] * g.n
    parent = [-1] * g.n
    parent[src] = src
    queue = deque([src])
    while queue:
        a = queue.popleft()
        if a == dst:
            break
        for eid in g.incident[a]:
            b = g.other_end(eid, a)
            if parent[b] < 0:
                parent[b] = a
                parent_edge[b] = eid
                queue.append(b)
    if parent[dst] < 0:
        raise GraphError("graph is not connected")
    path = []
    a = dst
    while a != src:
        path.append(parent_edge[a])
        a = parent[a]
    return path


def update_family_c4(
    fam: TightCutFamily, g: BipartiteGraph, site: C4Site
) -> TightCutFamily:
    """Carry a family through the quadrilateral expansion at a site of g.

    A cut is removable exactly when it separates {u,v} from {x,y}; that is
    detected by an odd number of cut edges on one u-x path, guarded by the
    cut containing neither expansion edge (a cut through uv or xy isolates a
    single site vertex and survives).  Each verdict is cross-checked against
    the shore membership count it encodes.  Surviving cuts through uv or xy
    have that edge renamed to the new pendant edge on the lone vertex's
    side; thanks to id reuse this is only material when the lone vertex is
    v or y.
    """
    if not fam:
        return ()
    u, v, x, y = site.u, site.v, site.x, site.y
    e_uv, e_xy = site.eid_uv, site.eid_xy
    n0, m0 = g.n, g.edge_count
    e_vv, e_yy = m0, m0 + 1
    path = set(_bfs_path_edges(g, u, x))
    out = []
    for cut in fam:
        crossings = len(path & cut.edge_ids)
        removable = (
            crossings % 2 == 1 and e_uv not in cut.edge_ids and e_xy not in cut.edge_ids
        )
        on_shore = [(cut.shore >> w) & 1 for w in (u, v, x, y)]
        count = sum(on_shore)
        assert removable == (count == 2), "path parity disagrees with the shores"
        if removable:
            continue
        edge_ids = set(cut.edge_ids)
        if count in (1, 3):
            lone_idx = on_shore.index(1) if count == 1 else on_shore.index(0)
            lone = (u, v, x, y)[lone_idx]
            if e_uv in edge_ids:
                assert lone in (u, v)
                if lone == v:
                    edge_ids.remove(e_uv)
                    edge_ids.add(e_vv)
            if e_xy in edge_ids:
                assert lone in (x, y)
                if lone == y:
                    edge_ids.remove(e_xy)
                    edge_ids.add(e_yy)
        assert not (e_uv in edge_ids and e_xy in edge_ids)
        shore = cut.shore
        if count >= 3:
            shore |= ((1 << 4) - 1) << n0
        out.append(Cut(shore=shore, edge_ids=frozenset(edge_ids), n=n0 + 4))
    return tuple(out)
