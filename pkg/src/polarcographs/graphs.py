"""Finite simple graphs on bitset adjacency rows.

Vertices are 0..n-1.  Each row is a Python int used as a bit vector, so
intersection, union and popcount are single machine operations for the
orders this library ever touches (hard cap 64, enumeration stays <= 15).
Graphs are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from itertools import permutations

MAX_ORDER = 64


class GraphError(ValueError):
    pass


def _bit(v):
    return 1 << v


def bits(mask):
    """Iterate set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph: order ``n`` plus one adjacency bitmask per vertex."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        if n < 0 or n > MAX_ORDER:
            raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError("row count does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"adjacency bits beyond order in row {v}")
            if row & _bit(v):
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] & _bit(v):
                    raise GraphError(f"asymmetric adjacency {v},{u}")
        self.n = n
        self.rows = rows

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("self-loop")
            rows[u] |= _bit(v)
            rows[v] |= _bit(u)
        return cls(n, rows)

    @classmethod
    def empty(cls, n):
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full ^ _bit(v) for v in range(n)])

    @classmethod
    def path(cls, n):
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return cls.from_edges(n, edges)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u, v):
        return bool(self.rows[u] & _bit(v))

    def degree(self, v):
        return self.rows[v].bit_count()

    def edges(self):
        out = []
        for v in range(self.n):
            for u in bits(self.rows[v] >> (v + 1)):
                out.append((v, u + v + 1))
        return out

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def full_mask(self):
        return (1 << self.n) - 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- operations ------------------------------------------------------------


def complement(g):
    full = g.full_mask()
    return Graph(g.n, [(~row & full) ^ _bit(v) for v, row in enumerate(g.rows)])


def induced_subgraph(g, vertex_mask):
    """Subgraph induced by the set bits of ``vertex_mask``, relabeled in order."""
    verts = list(bits(vertex_mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        for u in bits(g.rows[v] & vertex_mask):
            rows[index[v]] |= _bit(index[u])
    return Graph(len(verts), rows)


def delete_vertex(g, v):
    return induced_subgraph(g, g.full_mask() ^ _bit(v))


def disjoint_union(g, h):
    """G + H: g's vertices first, h's shifted by g.n."""
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, rows)


def join(g, h):
    """G joined with H: disjoint union plus all cross edges."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.rows]
    rows += [(row << g.n) | gmask for row in h.rows]
    return Graph(g.n + h.n, rows)


def components_in(g, vertex_mask):
    """Connected components restricted to ``vertex_mask``, as masks ordered by least vertex."""
    out = []
    remaining = vertex_mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            grow &= vertex_mask & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def components(g):
    return components_in(g, g.full_mask())


def co_components_in(g, vertex_mask):
    """Components of the complement, restricted to ``vertex_mask``."""
    out = []
    remaining = vertex_mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= ~g.rows[v] & ~_bit(v)
            grow &= vertex_mask & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g):
    return g.n <= 1 or len(components(g)) == 1


def cluster_parts_in(g, vertex_mask):
    """Component count if G[mask] is a cluster (disjoint union of cliques), else None."""
    comps = components_in(g, vertex_mask)
    for comp in comps:
        for v in bits(comp):
            if (g.rows[v] & comp) != comp ^ _bit(v):
                return None
    return len(comps)


def multipartite_parts_in(g, vertex_mask):
    """Part count if G[mask] is complete multipartite, else None."""
    comps = co_components_in(g, vertex_mask)
    for comp in comps:
        rest = vertex_mask & ~comp
        for v in bits(comp):
            row = g.rows[v] & vertex_mask
            if row & comp or (row & rest) != rest:
                return None
    return len(comps)


def is_cluster(g):
    """(is-cluster, component count).  A cluster is a P3-free graph."""
    k = cluster_parts_in(g, g.full_mask())
    return (k is not None), (k if k is not None else len(components(g)))


def is_complete_multipartite(g):
    """(is-complete-multipartite, part count); dual of :func:`is_cluster`."""
    s = multipartite_parts_in(g, g.full_mask())
    return (s is not None), (s if s is not None else 0)


def contains_induced(g, h):
    """A vertex mask of g inducing a graph isomorphic to h, or None.

    Backtracking over candidate images with degree pruning; intended for
    h of order <= 12.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return 0
    # Map h vertices in descending degree order; high-degree vertices fail fastest.
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [0] * h.n  # h vertex -> g vertex
    used = 0

    def backtrack(depth):
        nonlocal used
        if depth == h.n:
            return True
        hv = order[depth]
        hrow = h.rows[hv]
        for gv in range(g.n):
            b = _bit(gv)
            if used & b or gdeg[gv] < h.degree(hv):
                continue
            ok = True
            for prev in range(depth):
                hu = order[prev]
                if bool(hrow & _bit(hu)) != bool(g.rows[gv] & _bit(image[hu])):
                    ok = False
                    break
            if not ok:
                continue
            image[hv] = gv
            used |= b
            if backtrack(depth + 1):
                return True
            used ^= b
        return False

    if backtrack(0):
        return mask_of(image)
    return None


def brute_force_isomorphic(g, h):
    """Permutation-backtracking isomorphism test; the slow reference path."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    for perm in permutations(range(g.n)):
        if all(g.rows[v].bit_count() == h.rows[perm[v]].bit_count() for v in range(g.n)):
            if all(
                bool(g.rows[u] & _bit(v)) == bool(h.rows[perm[u]] & _bit(perm[v]))
                for u in range(g.n)
                for v in range(u + 1, g.n)
            ):
                return True
    return False


# -- graph6 / DOT ------------------------------------------------------------


def graph6_encode(g):
    """Header-less graph6 string per the standard format."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    acc = 0
    nbits = 0
    body = []
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.rows[u] & _bit(v) else 0)
            nbits += 1
            if nbits == 6:
                body.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        body.append((acc << (6 - nbits)) + 63)
    return bytes(head + body).decode("ascii")


def graph6_decode(text):
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = [ord(ch) - 63 for ch in data]
    if any(x < 0 or x > 63 for x in raw):
        raise GraphError("invalid graph6 character")
    if raw and raw[0] == 63:
        if len(raw) < 4:
            raise GraphError("truncated graph6 order")
        n = (raw[1] << 12) | (raw[2] << 6) | raw[3]
        raw = raw[4:]
    else:
        if not raw:
            raise GraphError("empty graph6 input")
        n = raw[0]
        raw = raw[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(raw) != need:
        raise GraphError("graph6 body length mismatch")
    bitstream = []
    for x in raw:
        for shift in range(5, -1, -1):
            bitstream.append((x >> shift) & 1)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                rows[u] |= _bit(v)
                rows[v] |= _bit(u)
            idx += 1
    return Graph(n, rows)


def to_dot(g, name="G"):
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
