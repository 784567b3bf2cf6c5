"""Cotrees: cograph recognition, canonical codes, and isomorphism.

A cotree is a rooted tree whose internal nodes are labeled UNION or JOIN,
labels alternating along every root-leaf path, every internal node with at
least two children.  Recognition either returns the normalized cotree of a
graph or a four-vertex induced-path certificate proving it is not a cograph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .graphs import Graph, bits

LEAF = "leaf"
UNION = "U"
JOIN = "J"

_LEAF_CODE = b"L"


class MalformedCotreeError(ValueError):
    pass


class NotCographError(ValueError):
    """Raised when a cograph-only operation receives a graph with an induced P4."""

    def __init__(self, certificate):
        super().__init__(f"graph contains an induced P4 on vertices {certificate.vertices}")
        self.certificate = certificate


@dataclass(frozen=True)
class P4Certificate:
    """Four vertex ids (a, b, c, d) inducing the path a-b-c-d."""

    vertices: tuple

    def validates_against(self, g):
        a, b, c, d = self.vertices
        if len({a, b, c, d}) != 4:
            return False
        edges = [(a, b), (b, c), (c, d)]
        non_edges = [(a, c), (a, d), (b, d)]
        return all(g.has_edge(u, v) for u, v in edges) and not any(
            g.has_edge(u, v) for u, v in non_edges
        )


class Cotree:
    """Immutable cotree node.  Leaves may carry the vertex id they represent."""

    __slots__ = ("op", "children", "vertex", "_code", "_order", "_profile")

    def __init__(self, op, children=(), vertex=None):
        self.op = op
        self.children = tuple(children)
        self.vertex = vertex
        self._code = None
        self._order = None
        self._profile = None

    @property
    def order(self):
        if self._order is None:
            if self.op == LEAF:
                self._order = 1
            else:
                self._order = sum(c.order for c in self.children)
        return self._order

    def __repr__(self):
        return f"Cotree({render(self)})"


def leaf(vertex=None):
    return Cotree(LEAF, vertex=vertex)


def node(op, children):
    """Build an internal node; children must already be normalized and label-alternating."""
    children = tuple(sorted(children, key=canonical_code))
    if len(children) < 2:
        raise MalformedCotreeError("internal node needs at least two children")
    for c in children:
        if c.op == op:
            raise MalformedCotreeError("non-alternating labels")
    return Cotree(op, children)


def validate(t):
    """Check well-formedness; raises MalformedCotreeError."""
    if t.op == LEAF:
        return
    if len(t.children) < 2:
        raise MalformedCotreeError("internal node with fewer than two children")
    for c in t.children:
        if c.op == t.op:
            raise MalformedCotreeError("labels do not alternate")
        validate(c)


def normalize(t):
    """Flatten same-label nesting, contract unary nodes, sort children by code."""
    if t.op == LEAF:
        return t
    flat = []
    for c in t.children:
        c = normalize(c)
        if c.op == t.op:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    return Cotree(t.op, tuple(sorted(flat, key=canonical_code)))


# -- recognition -------------------------------------------------------------


def _find_p4(g, mask):
    for quad in combinations(list(bits(mask)), 4):
        sub = [(g.rows[v] & graphs.mask_of(quad)).bit_count() for v in quad]
        if sorted(sub) == [1, 1, 2, 2] and sum(sub) == 6:
            # degree sequence (1,1,2,2) with 3 edges forces P4; order as a path
            ends = [v for v, d in zip(quad, sub) if d == 1]
            mids = [v for v, d in zip(quad, sub) if d == 2]
            a = ends[0]
            b = mids[0] if g.has_edge(ends[0], mids[0]) else mids[1]
            c = mids[1] if b == mids[0] else mids[0]
            d = ends[1]
            cert = P4Certificate((a, b, c, d))
            if cert.validates_against(g):
                return cert
    return None


def recognize(g):
    """Cotree of g (leaves carry g's vertex ids) or a P4 certificate.

    Recursive modular split: recurse on components under a UNION root, on
    co-components under a JOIN root, and extract a P4 when neither splits.
    """
    if g.n == 0:
        raise graphs.GraphError("the empty graph has no cotree")

    result = _recognize_mask(g, g.full_mask())
    return result


def _recognize_mask(g, mask):
    count = mask.bit_count()
    if count == 1:
        return leaf(mask.bit_length() - 1)
    comps = graphs.components_in(g, mask)
    if len(comps) > 1:
        kids = []
        for comp in comps:
            sub = _recognize_mask(g, comp)
            if isinstance(sub, P4Certificate):
                return sub
            kids.append(sub)
        return node(UNION, kids)
    cocomps = graphs.co_components_in(g, mask)
    if len(cocomps) > 1:
        kids = []
        for comp in cocomps:
            sub = _recognize_mask(g, comp)
            if isinstance(sub, P4Certificate):
                return sub
            kids.append(sub)
        return node(JOIN, kids)
    cert = _find_p4(g, mask)
    if cert is None:  # pragma: no cover - both G and co-G connected implies a P4
        raise AssertionError("connected, co-connected graph without P4")
    return cert


def is_cograph(g):
    return g.n == 0 or not isinstance(recognize(g), P4Certificate)


def cotree_of(g):
    """Cotree of g; raises NotCographError with the certificate otherwise."""
    t = recognize(g)
    if isinstance(t, P4Certificate):
        raise NotCographError(t)
    return t


# -- realization -------------------------------------------------------------


def leaf_vertices(t):
    """Vertex id for each leaf in preorder; ids fall back to preorder position."""
    out = []

    def walk(nd):
        if nd.op == LEAF:
            out.append(nd.vertex)
            return
        for c in nd.children:
            walk(c)

    walk(t)
    if any(v is None for v in out) or sorted(v for v in out) != list(range(len(out))):
        out = list(range(len(out)))
    return out


def realize(t):
    """Graph represented by a cotree: u,v adjacent iff their LCA is a JOIN node."""
    validate(t)
    ids = leaf_vertices(t)
    n = len(ids)
    rows = [0] * n
    counter = [0]

    def walk(nd):
        """Return the vertex-id mask of the subtree, wiring JOIN cross edges."""
        if nd.op == LEAF:
            v = ids[counter[0]]
            counter[0] += 1
            return 1 << v
        masks = [walk(c) for c in nd.children]
        if nd.op == JOIN:
            total = 0
            for m in masks:
                total |= m
            for m in masks:
                others = total & ~m
                for v in bits(m):
                    rows[v] |= others
        out = 0
        for m in masks:
            out |= m
        return out

    walk(t)
    return Graph(n, rows)


def _strip_ids(t):
    if t.op == LEAF:
        return Cotree(LEAF)
    return Cotree(t.op, tuple(_strip_ids(c) for c in t.children))


def canonical_relabel(g):
    """Isomorphic copy with the canonical labeling: preorder of the sorted cotree.

    Isomorphic cographs map to the identical Graph (and graph6 string).
    """
    return realize(_strip_ids(cotree_of(g)))


# -- canonical codes ----------------------------------------------------------


def canonical_code(t):
    """Deterministic byte string; equal iff the realized cographs are isomorphic.

    A node's code is its label, its child count, then the sorted child codes;
    every leaf shares one fixed code.  Codes are self-delimiting, so byte
    equality is structural equality of the normalized tree.
    """
    if t._code is not None:
        return t._code
    if t.op == LEAF:
        code = _LEAF_CODE
    else:
        kid_codes = sorted(canonical_code(c) for c in t.children)
        head = (UNION if t.op == UNION else JOIN).encode("ascii")
        code = head + bytes([len(kid_codes)]) + b"".join(kid_codes)
    t._code = code
    return code


def code_hex(t):
    return canonical_code(t).hex()


def flip_labels(t, _memo=None):
    """Swap UNION and JOIN everywhere: the cotree of the complement graph."""
    if _memo is None:
        _memo = {}
    key = id(t)
    if key in _memo:
        return _memo[key]
    if t.op == LEAF:
        out = t
    else:
        out = Cotree(
            UNION if t.op == JOIN else JOIN,
            tuple(sorted((flip_labels(c, _memo) for c in t.children), key=canonical_code)),
        )
    _memo[key] = out
    return out


def is_isomorphic(g, h):
    """Cographs via canonical codes; anything else via permutation backtracking."""
    if g.n != h.n:
        return False
    if g.n == 0:
        return True
    tg = recognize(g)
    th = recognize(h)
    g_is = not isinstance(tg, P4Certificate)
    h_is = not isinstance(th, P4Certificate)
    if g_is != h_is:
        return False
    if g_is:
        return canonical_code(tg) == canonical_code(th)
    return graphs.brute_force_isomorphic(g, h)


# -- rendering ----------------------------------------------------------------


def render(t):
    """Nested U(...)/J(...) debugging notation."""
    if t.op == LEAF:
        return "*" if t.vertex is None else str(t.vertex)
    inner = ",".join(render(c) for c in t.children)
    return f"{t.op}({inner})"
