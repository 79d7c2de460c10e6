"""Graph serialization: the bgf/1 text format and the graph6 codec.

bgf/1 layout::

    n m
    <colour string: n characters from {A, B, ?}>
    u v            (m lines, 0-based endpoints; line order = edge id)
    rot v: e1 e2 e3      (optional, one line per vertex, edge ids)
    cut label: e1 e2 e3  (optional, labelled cut triples; generator output)

Multiple records in one file are separated by single blank lines.  The
serializer is deterministic, so serialize(parse(text)) == text for files it
produced itself.

graph6 follows the published byte-level definition: N(n) followed by the
upper-triangle adjacency bits in column order, 6 bits per byte, each byte
offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .graphs import BipartiteGraph, GraphError


# ----- graph6 -----


def _n_encode(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    raise GraphError("graph too large for this graph6 writer")


def graph6_from_bitstring(n: int, packed: bytes) -> str:
    """graph6 string from n and upper-triangle bits packed MSB-first in bytes.

    Bit b of the column-order triangle sequence is bit (7 - b % 8) of
    packed[b // 8]; the caller supplies exactly the n(n-1)/2 bits.
    """
    nbits = n * (n - 1) // 2
    out = bytearray(_n_encode(n))
    for start in range(0, nbits, 6):
        group = 0
        for k in range(6):
            b = start + k
            bit = 0
            if b < nbits:
                bit = (packed[b >> 3] >> (7 - (b & 7))) & 1
            group = (group << 1) | bit
        out.append(group + 63)
    return out.decode("ascii")


def to_graph6(g: BipartiteGraph) -> str:
    n = g.n
    buf = bytearray((n * (n - 1) // 2 + 7) // 8)
    for u, v in g.edges:
        i, j = (u, v) if u < v else (v, u)
        b = j * (j - 1) // 2 + i
        buf[b >> 3] |= 0x80 >> (b & 7)
    return graph6_from_bitstring(n, bytes(buf))


def from_graph6(line: str) -> BipartiteGraph:
    """Decode one graph6 line to an uncoloured graph."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise GraphError("invalid graph6 bytes")
    if not data:
        raise GraphError("empty graph6 line")
    if data[0] == 63:  # leading byte 126
        if len(data) < 4:
            raise GraphError("truncated graph6 size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError("graph6 length does not match vertex count")
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[b // 6]
            bit = (byte >> (5 - b % 6)) & 1
            if bit:
                edges.append((i, j))
            b += 1
    return BipartiteGraph(n, tuple(edges))


# ----- bgf/1 -----


def to_bgf(
    g: BipartiteGraph,
    rotation: Optional[Sequence[Sequence[int]]] = None,
    cuts: Optional[Sequence[tuple[int, Sequence[int]]]] = None,
) -> str:
    """Serialize one bgf/1 record (without trailing blank line)."""
    lines = [f"{g.n} {g.edge_count}"]
    if g.colour is None:
        lines.append("?" * g.n)
    else:
        lines.append("".join(g.colour))
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    if rotation is not None:
        for v in range(g.n):
            ids = " ".join(str(e) for e in rotation[v])
            lines.append(f"rot {v}: {ids}")
    if cuts is not None:
        for label, edge_ids in cuts:
            ids = " ".join(str(e) for e in sorted(edge_ids))
            lines.append(f"cut {label}: {ids}")
    return "\n".join(lines) + "\n"


def from_bgf(
    text: str,
) -> tuple[BipartiteGraph, Optional[tuple[tuple[int, ...], ...]], list[tuple[int, tuple[int, ...]]]]:
    """Parse one bgf/1 record; returns (graph, rotation or None, cut triples)."""
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if len(lines) < 2:
        raise GraphError("truncated bgf record")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("bgf header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    colour_s = lines[1].strip()
    if len(colour_s) != n or any(c not in "AB?" for c in colour_s):
        raise GraphError("bad colour string")
    colour: Optional[tuple[str, ...]]
    if "?" in colour_s:
        if colour_s != "?" * n:
            raise GraphError("colour string mixes '?' with colours")
        colour = None
    else:
        colour = tuple(colour_s)
    if len(lines) < 2 + m:
        raise GraphError("bgf record missing edge lines")
    edges = []
    for ln in lines[2 : 2 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    g = BipartiteGraph(n, tuple(edges), colour)
    rot: dict[int, tuple[int, ...]] = {}
    cuts: list[tuple[int, tuple[int, ...]]] = []
    for ln in lines[2 + m :]:
        parts = ln.split()
        if parts[0] == "rot":
            v = int(parts[1].rstrip(":"))
            rot[v] = tuple(int(x) for x in parts[2:])
        elif parts[0] == "cut":
            label = int(parts[1].rstrip(":"))
            cuts.append((label, tuple(int(x) for x in parts[2:])))
        else:
            raise GraphError(f"unrecognized bgf line: {ln!r}")
    rotation: Optional[tuple[tuple[int, ...], ...]] = None
    if rot:
        if sorted(rot) != list(range(n)):
            raise GraphError("rot lines must cover every vertex exactly once")
        rotation = tuple(rot[v] for v in range(n))
    return g, rotation, cuts


def split_records(text: str) -> list[str]:
    """Split a multi-record bgf file on blank lines."""
    blocks = []
    current: list[str] = []
    for ln in text.splitlines():
        if ln.strip() == "":
            if current:
                blocks.append("\n".join(current) + "\n")
                current = []
        else:
            current.append(ln)
    if current:
        blocks.append("\n".join(current) + "\n")
    return blocks


def detect_format(text: str) -> str:
    """'bgf' if the first non-blank line looks like an 'n m' header, else 'graph6'."""
    for ln in text.splitlines():
        if ln.strip():
            parts = ln.split()
            if len(parts) == 2 and all(p.isdigit() for p in parts):
                return "bgf"
            return "graph6"
    raise GraphError("empty input")
