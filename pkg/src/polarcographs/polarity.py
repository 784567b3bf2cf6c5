"""(s,k)-polarity profiles via dynamic programming on cotrees.

An (s,k)-polar partition splits the vertices into A inducing a complete
multipartite graph with at most s parts and B inducing a cluster with at
most k cliques.  The DP computes, per cotree node, the antichain of *exact*
signatures (parts-of-A, cliques-of-B) achievable by some partition of the
subtree; every query then reduces to a dominance check.  ``INF`` stands for
an unbounded side and is mapped to the graph order at query time.

The recurrences are checked against :func:`profile_bruteforce`, which
enumerates all bipartitions and is the authoritative oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import cotrees, graphs
from .cotrees import JOIN, LEAF, UNION, Cotree, cotree_of
from .graphs import Graph, bits

INF = math.inf

_LEAF_SIGS = frozenset({(1, 0), (0, 1)})

BRUTE_FORCE_MAX_ORDER = 20


def _reduce(sigs):
    """Dominance-minimal antichain of a signature set.

    Dropping a dominated signature is sound: lowering either count never
    shrinks the set of feasible union/join combinations, and the combined
    signature is monotone in both inputs.
    """
    ordered = sorted(sigs)
    kept = []
    for s, k in ordered:
        if not any(s0 <= s and k0 <= k for s0, k0 in kept):
            kept.append((s, k))
    return frozenset(kept)


def _merge_union(p1, p2):
    """Exact signatures of a disjoint union from exact child signatures.

    Cluster components add.  The A side survives only if one part is empty,
    or both are single independent parts that merge into one.
    """
    out = set()
    for s1, k1 in p1:
        for s2, k2 in p2:
            k = k1 + k2
            if s1 == 0:
                out.add((s2, k))
            elif s2 == 0:
                out.add((s1, k))
            elif s1 == 1 and s2 == 1:
                out.add((1, k))
    return out


def _merge_join(p1, p2):
    """Dual rule: parts add; B sides must be empty or single cliques that merge."""
    out = set()
    for s1, k1 in p1:
        for s2, k2 in p2:
            s = s1 + s2
            if k1 == 0:
                out.add((s, k2))
            elif k2 == 0:
                out.add((s, k1))
            elif k1 == 1 and k2 == 1:
                out.add((s, 1))
    return out


def _node_profile(t):
    if t._profile is not None:
        return t._profile
    if t.op == LEAF:
        prof = _LEAF_SIGS
    else:
        merge = _merge_union if t.op == UNION else _merge_join
        prof = _node_profile(t.children[0])
        for child in t.children[1:]:
            prof = _reduce(merge(prof, _node_profile(child)))
    t._profile = prof
    return prof


@dataclass(frozen=True)
class PolarProfile:
    """Antichain of exact achievable signatures for a graph of order n."""

    n: int
    signatures: frozenset

    def admits(self, s, k):
        """True iff some stored signature is dominated by (s, k)."""
        s = self.n if s == INF else s
        k = self.n if k == INF else k
        return any(s0 <= s and k0 <= k for s0, k0 in self.signatures)

    def closure(self):
        """All (s,k) pairs in [0..n]^2 the graph is polar for; oracle-comparison form."""
        out = set()
        for s0, k0 in self.signatures:
            for s in range(int(s0), self.n + 1):
                for k in range(int(k0), self.n + 1):
                    out.add((s, k))
        return out

    def sorted_signatures(self):
        return sorted(self.signatures)


def profile_dp(t):
    """Profile of the cograph realized by a normalized cotree."""
    cotrees.validate(t)
    return PolarProfile(t.order, _node_profile(t))


def profile_of_graph(g):
    """Profile of a cograph given as a Graph; raises NotCographError otherwise."""
    if g.n == 0:
        return PolarProfile(0, frozenset({(0, 0)}))
    return profile_dp(cotree_of(g))


def profile_bruteforce(g):
    """Independent oracle: scan all 2^n bipartitions.  Order capped at 20."""
    if g.n > BRUTE_FORCE_MAX_ORDER:
        raise graphs.GraphError(
            f"brute-force profile limited to order {BRUTE_FORCE_MAX_ORDER}"
        )
    if g.n == 0:
        return PolarProfile(0, frozenset({(0, 0)}))
    full = g.full_mask()
    sigs = set()
    for a_mask in range(full + 1):
        s = graphs.multipartite_parts_in(g, a_mask)
        if s is None:
            continue
        k = graphs.cluster_parts_in(g, full ^ a_mask)
        if k is None:
            continue
        sigs.add((s, k))
    return PolarProfile(g.n, _reduce(sigs))


# -- witnesses -----------------------------------------------------------------


@dataclass(frozen=True)
class PartitionWitness:
    """An explicit (A, B) bipartition with its exact claimed signature."""

    a_mask: int
    b_mask: int
    signature: tuple


def validate_witness(g, w):
    """Check every witness invariant directly on the graph, in O(n^2).

    Deliberately independent of the DP code paths.
    """
    full = g.full_mask()
    if w.a_mask & w.b_mask or (w.a_mask | w.b_mask) != full:
        return False
    s, k = w.signature
    parts = graphs.multipartite_parts_in(g, w.a_mask)
    if parts is None or parts != s:
        return False
    cliques = graphs.cluster_parts_in(g, w.b_mask)
    return cliques is not None and cliques == k


def _assign(t, sig, ids, next_leaf, a_list, b_list):
    """Walk the DP backwards, assigning leaves to A or B for a stored signature."""
    if t.op == LEAF:
        v = ids[next_leaf]
        if sig == (1, 0):
            a_list.append(v)
        else:
            b_list.append(v)
        return next_leaf + 1
    merge = _merge_union if t.op == UNION else _merge_join
    # Rebuild the left-to-right fold prefixes, then peel children off the right.
    prefixes = [_node_profile(t.children[0])]
    for child in t.children[1:]:
        prefixes.append(_reduce(merge(prefixes[-1], _node_profile(child))))
    targets = [None] * len(t.children)
    want = sig
    for i in range(len(t.children) - 1, 0, -1):
        child_prof = _node_profile(t.children[i])
        found = None
        for left in sorted(prefixes[i - 1]):
            for right in sorted(child_prof):
                if want in merge({left}, {right}):
                    found = (left, right)
                    break
            if found:
                break
        if found is None:  # pragma: no cover - sig always comes from the same fold
            raise AssertionError("signature not reachable in DP reconstruction")
        targets[i] = found[1]
        want = found[0]
    targets[0] = want
    for child, child_sig in zip(t.children, targets):
        next_leaf = _assign(child, child_sig, ids, next_leaf, a_list, b_list)
    return next_leaf


def witness_for(t, sig):
    """A PartitionWitness realizing a signature stored in the cotree's profile."""
    if sig not in _node_profile(t):
        raise ValueError(f"signature {sig} not in profile")
    ids = cotrees.leaf_vertices(t)
    a_list, b_list = [], []
    _assign(t, sig, ids, 0, a_list, b_list)
    return PartitionWitness(graphs.mask_of(a_list), graphs.mask_of(b_list), sig)


def is_polar(g_or_t, s, k, want_witness=True):
    """(verdict, witness) for the (s,k)-polarity of a cograph.

    Accepts a Graph or a cotree; INF lifts the corresponding bound.  When the
    verdict is positive and a witness is requested, the witness is rebuilt
    from DP choice points and re-validated against the graph.
    """
    if isinstance(g_or_t, Cotree):
        t = g_or_t
        g = None
    else:
        g = g_or_t
        if g.n == 0:
            return True, PartitionWitness(0, 0, (0, 0))
        t = cotree_of(g)
    prof = profile_dp(t)
    s_bound = prof.n if s == INF else s
    k_bound = prof.n if k == INF else k
    candidates = sorted(
        sig for sig in prof.signatures if sig[0] <= s_bound and sig[1] <= k_bound
    )
    if not candidates:
        return False, None
    if not want_witness:
        return True, None
    witness = witness_for(t, candidates[0])
    if g is None:
        g = cotrees.realize(t)
    if not validate_witness(g, witness):  # pragma: no cover - defense against memo bugs
        raise AssertionError("reconstructed witness failed validation")
    return True, witness
