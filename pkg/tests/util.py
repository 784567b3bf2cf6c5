"""Shared test helpers: independent oracles and random generators.

Everything here deliberately avoids the library's own canonical-code and
DP machinery so it can serve as a cross-check.
"""

from __future__ import annotations

import itertools
import random

from polarcographs import cotrees, graphs
from polarcographs.cotrees import JOIN, UNION, Cotree


def random_cotree(rng: random.Random, n, op=None):
    """A uniform-ish random normalized cotree with n leaves."""
    if n == 1:
        return cotrees.leaf()
    if op is None:
        op = rng.choice([UNION, JOIN])
    m = rng.randint(2, n)
    cuts = sorted(rng.sample(range(1, n), m - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    flipped = UNION if op == JOIN else JOIN
    kids = [random_cotree(rng, size, flipped) for size in sizes]
    return cotrees.normalize(Cotree(op, kids))


def random_graph(rng: random.Random, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graphs.Graph.from_edges(n, edges)


def permute_graph(g, perm):
    """Relabeled copy: new vertex i plays the role of old vertex perm[i]."""
    edges = []
    inv = [0] * g.n
    for i, v in enumerate(perm):
        inv[v] = i
    for u, v in g.edges():
        edges.append((inv[u], inv[v]))
    return graphs.Graph.from_edges(g.n, edges)


def perm_canonical(g):
    """Minimum adjacency encoding over all vertex permutations.

    Equal outputs are exactly the isomorphic graphs; independent of cotrees.
    """
    vs = list(range(g.n))
    best = None
    for perm in itertools.permutations(vs):
        key = tuple(
            g.has_edge(perm[u], perm[v]) for u in vs for v in range(u + 1, g.n)
        )
        if best is None or key < best:
            best = key
    return (g.n, best)


def nx_p4_free_census(n_max=7):
    """Unlabeled P4-free counts for orders 1..n_max from the networkx atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    counts = [0] * n_max
    for G in graph_atlas_g()[1:]:  # entry 0 is the empty placeholder
        n = G.number_of_nodes()
        if n < 1 or n > n_max:
            continue
        if not _nx_has_induced_p4(G):
            counts[n - 1] += 1
    return counts


def _nx_has_induced_p4(G):
    import networkx as nx

    for quad in itertools.combinations(G.nodes(), 4):
        H = G.subgraph(quad)
        if H.number_of_edges() != 3:
            continue
        degs = sorted(d for _, d in H.degree())
        if degs == [1, 1, 2, 2] and nx.is_connected(H):
            return True
    return False
