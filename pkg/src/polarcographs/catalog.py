"""Published obstruction lists and structural claims as machine-checkable data.

Each claim is stored as concrete expressions (instantiated per k where the
statement is parameterized) and verified against exhaustive mining by
canonical-code set equality.  Recursive constructions are checked in both
directions: everything the recursion builds must be mined, and everything
mined in the claim's scope must arise from the recursion.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from . import cotrees, expressions, graphs, obstructions, polarity
from .cotrees import canonical_code, cotree_of
from .obstructions import mine_obstructions
from .polarity import INF


class UnknownClaimError(KeyError):
    pass


class ClaimParameterError(ValueError):
    pass


# -- expression builders ---------------------------------------------------------


def _rep(count, text):
    if count == 0:
        return None
    if count == 1:
        return text
    if any(ch in text for ch in "+*~ ("):
        return f"{count}({text})"
    return f"{count}{text}"


def _u(*parts):
    kept = [p for p in parts if p]
    return " + ".join(kept)


FIG1 = (
    "K1 * C4",
    "K2 * 2K2",
    "~(2P3)",
    "K1 * (K2 + P3)",
)

THM21_LIST = (
    # connected
    "~(P3 + K1 * C4)",
    "~(P3 + K2 * 2K2)",
    "~(P3 + ~(2P3))",
    "~(P3 + K1 * (K2 + P3))",
    # disconnected, no isolated vertices
    "P3 + C4",
    "P3 + K1 * 2K2",
    "2P3 + K2",
    # four components
    "3K1 + K1 * C4",
    "K1 + 2K2 + K{1,1}",
    "2K1 + K2 + K{2,2}",
    "3K1 + K{3,3}",
    # three components, at least one isolated vertex
    "2K1 + ~(2P3)",
    "2K1 + K1 * (P3 + K2)",
    "2K1 + K2 * 2K2",
    "2K1 + K1 * (C4 + K1)",
    "2K1 + K1 * ~(P3 + K2)",
    "2K1 + ~K2 * (P3 + K1)",
    "K1 + K2 + 2K1 * (K2 + K1)",
    "2K1 + 2K1 * (K2 + 2K1)",
    # two components, one isolated vertex
    "K1 + K1 * (K1 + 2K2)",
    "K1 + K1 * (2K1 + C4)",
    "K1 + K1 * 2P3",
    "K1 + K1 * (K1 + ~(K2 + P3))",
)

THM22_LIST = (
    # connected
    "~(P3 + K1 * C4)",
    "~(P3 + K2 * 2K2)",
    "~(P3 + ~(2P3))",
    "~(P3 + K1 * (K2 + P3))",
    # no isolated vertices, no P3 component
    "2C4",
    "2(K1 * 2K2)",
    "C4 + K1 * 2K2",
    # with a P3 component
    "P3 + P3 + 2K2",
    "P3 + K2 + K1 * 2K2",
    "P3 + K2 + C4",
    "P3 + K{3,3}",
    "P3 + 2K1 * (K2 + 2K1)",
    "P3 + K1 * (K1 + 2K2)",
    "P3 + K1 * C4",
    "P3 + ~(2P3)",
    "P3 + K2 * 2K2",
    "P3 + K1 * (K2 + P3)",
    # five components
    "4K1 + K1 * C4",
    "K1 + 3K2 + K{1,1}",
    "2K1 + 2K2 + K{2,2}",
    "3K1 + K2 + K{3,3}",
    "4K1 + K{4,4}",
    # four components, at least one isolated vertex
    "3K1 + ~(2P3)",
    "3K1 + K1 * (P3 + K2)",
    "3K1 + K2 * 2K2",
    "3K1 + K1 * (C4 + K1)",
    "3K1 + K1 * ~(P3 + K2)",
    "3K1 + ~K2 * (P3 + K1)",
    "K1 + 2K2 + ~K2 * (K2 + K1)",
    "2K1 + K2 + ~K2 * (K2 + 2K1)",
    "3K1 + ~K2 * (K2 + 3K1)",
    # three components, at least one isolated vertex
    "2K1 + K1 * (C4 + 2K1)",
    "2K1 + K1 * 2P3",
    "2K1 + K1 * (K1 + ~(P3 + K2))",
    "2K1 + K1 * (K2 + ~(P3 + K1))",
    "2K1 + K2 * (K1 + 2K2)",
    "2K1 + K1 * (K1 + K2 + P3)",
    "2K1 + K1 * (K1 + K1 * 2K2)",
    "K1 + K2 + K1 * (2K2 + K1)",
    "2K1 + K1 * (2K2 + 2K1)",
    # two components, one isolated vertex
    "K1 + K1 * (P3 + C4)",
    "K1 + K1 * (P3 + K1 * 2K2)",
    "K1 + K1 * (2P3 + K2)",
    "K1 + K1 * (K1 + 3K2)",
    "K1 + K1 * (2K1 + K2 + C4)",
    "K1 + K1 * (3K1 + K{3,3})",
    "K1 + K1 * (K1 + K2 + 2K1 * (K2 + K1))",
    "K1 + K1 * (2K1 + 2K1 * (K2 + 2K1))",
    "K1 + K1 * (K1 + K1 * (K1 + 2K2))",
)

TYPE_KP1_K_CORES = (
    "~(2P3)",
    "(P3 + K2) * K1",
    "2K2 * K2",
    "K1 * (C4 + K1)",
    "K1 * ~(P3 + K2)",
    "~K2 * (P3 + K1)",
)  # plus ~K2 * (K2 + kK1), which depends on k


def _type_k_km1_cores(k):
    return (
        "K1 * (C4 + 2K1)",
        "K1 * 2P3",
        "K1 * (K1 + ~(P3 + K2))",
        "K1 * (K2 + ~(P3 + K1))",
        "K2 * (K1 + 2K2)",
        "K1 * (K1 + K2 + P3)",
        "K1 * (K1 + K1 * 2K2)",
        f"K1 * ({_u(_rep(k - 1, 'K1'), '2K2')})",
    )


def _connected_one_s_obstructions(s):
    """Connected minimal (1,s)-polar obstructions that are not (1,inf)-obstructions."""
    if s < 1:
        raise ClaimParameterError("s must be positive")
    if s == 1:
        return ["C4"]
    return [
        f"K{{{s + 1},{s + 1}}}",
        f"~K2 * ({_u('K2', _rep(s, 'K1'))})",
        f"K1 * ({_u('2K2', _rep(s - 1, 'K1'))})",
    ]


# -- claim instantiation -----------------------------------------------------------


def _exprs(texts):
    return [expressions.parse(t) for t in texts]


def instantiate(claim_id, k=None):
    """Concrete expression list for a list-shaped claim at parameter k."""
    if claim_id == "fig1":
        return _exprs(FIG1)
    if claim_id == "thm2":
        out = [f"P3 + ({h})" for h in FIG1]
        out += [f"~(P3 + ({h}))" for h in FIG1]
        return _exprs(out)
    if claim_id == "remark4":
        _need_k(claim_id, k, 0)
        return _exprs([_u("K1", _rep(k + 1, "K2"))])
    if claim_id == "thm6":
        _need_k(claim_id, k, 2)
        return _exprs([f"~(P3 + ({h}))" for h in FIG1])
    if claim_id == "thm15":
        _need_k(claim_id, k, 2)
        cores = [_u("P3", _rep(k - 1, "K2")), _u(_rep(k - 2, "K2"), "K1 * 2K2")]
        for j in range(1, k):
            for h in _connected_one_s_obstructions(j):
                cores.append(_u(_rep(k - j - 1, "K2"), h))
        if k >= 3:
            cores.extend(FIG1)
        return _exprs([f"P3 + ({core})" for core in cores])
    if claim_id == "thm18":
        _need_k(claim_id, k, 2)
        return _exprs(
            [
                _u(_rep(k + 1, "K1"), f"K{{{k + 1},{k + 1}}}"),
                _u(_rep(k + 1, "K1"), "K1 * C4"),
            ]
        )
    if claim_id == "cor-type-k+1-k":
        _need_k(claim_id, k, 2)
        cores = list(TYPE_KP1_K_CORES) + [f"~K2 * ({_u('K2', _rep(k, 'K1'))})"]
        return _exprs([_u(_rep(k, "K1"), core) for core in cores])
    if claim_id == "cor-type-k-k-1":
        _need_k(claim_id, k, 3)
        return _exprs([_u(_rep(k - 1, "K1"), core) for core in _type_k_km1_cores(k)])
    if claim_id == "cor20-item1":
        _need_k(claim_id, k, 1)
        return _exprs(
            [
                _u(_rep(p, "K1"), _rep(k - p + 1, "K2"), f"K{{{p},{p}}}")
                for p in range(1, k + 2)
            ]
        )
    if claim_id == "cor20-item2":
        _need_k(claim_id, k, 1)
        return _exprs(
            [
                _u(_rep(p, "K1"), _rep(k - p, "K2"), f"~K2 * ({_u('K2', _rep(p, 'K1'))})")
                for p in range(1, k + 1)
            ]
        )
    if claim_id == "cor20-item3":
        _need_k(claim_id, k, 2)
        return _exprs(
            [
                _u(_rep(p, "K1"), _rep(k - p - 1, "K2"), f"K1 * ({_u('2K2', _rep(p, 'K1'))})")
                for p in range(1, k)
            ]
        )
    if claim_id == "thm21":
        if k is not None and k != 2:
            raise ClaimParameterError("thm21 is the k=2 list")
        return _exprs(THM21_LIST)
    if claim_id == "thm22":
        if k is not None and k != 3:
            raise ClaimParameterError("thm22 is the k=3 list")
        return _exprs(THM22_LIST)
    raise UnknownClaimError(claim_id)


def _need_k(claim_id, k, minimum):
    if k is None or k < minimum:
        raise ClaimParameterError(f"claim {claim_id} needs k >= {minimum}, got {k}")


# -- mining cache ------------------------------------------------------------------


class MiningCache:
    """Memoized mining keyed by (s, k, bound); shared across claim verifiers."""

    def __init__(self, workers=1):
        self.workers = workers
        self._mined = {}

    def mine(self, s, k, n_max):
        key = (s, k, n_max)
        if key not in self._mined:
            self._mined[key] = mine_obstructions(s, k, n_max, workers=self.workers)
        return self._mined[key]

    def mine_inf(self, k, n_max=None):
        if n_max is None:
            n_max = obstructions.default_mining_bound(k)
        return self.mine(INF, k, n_max)


def _codes_of_exprs(exprs):
    out = {}
    for e in exprs:
        g = expressions.evaluate(e)
        out[canonical_code(cotree_of(g))] = expressions.unparse(e)
    return out


def _graph_of_record(record):
    return graphs.graph6_decode(record.graph6)


# -- verdicts ----------------------------------------------------------------------


@dataclass
class VerdictReport:
    claim: str
    k: object
    bound: object
    status: str
    expected: int = 0
    actual: int = 0
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    notes: str = ""

    @property
    def passed(self):
        return self.status in ("PASS", "INFO")

    def to_json(self):
        return json.dumps(
            {
                "claim": self.claim,
                "k": obstructions.encode_param(self.k) if self.k is not None else None,
                "bound": self.bound,
                "status": self.status,
                "expected": self.expected,
                "actual": self.actual,
                "missing": self.missing,
                "extra": self.extra,
                "notes": self.notes,
            },
            sort_keys=True,
        )


def _set_compare(claim, k, bound, expected_codes, actual_records, notes=""):
    actual = {r.code: r for r in actual_records}
    missing = sorted(expr for code, expr in expected_codes.items() if code not in actual)
    extra = sorted(r.graph6 for code, r in actual.items() if code not in expected_codes)
    status = "PASS" if not missing and not extra else "FAIL"
    return VerdictReport(
        claim=claim,
        k=k,
        bound=bound,
        status=status,
        expected=len(expected_codes),
        actual=len(actual),
        missing=missing,
        extra=extra,
        notes=notes,
    )


# -- list claims --------------------------------------------------------------------


def _scope_filter(claim_id, k, records):
    if claim_id in ("fig1", "thm2", "thm21", "thm22"):
        return records
    if claim_id == "remark4":
        return [r for r in records if graphs.is_cluster(_graph_of_record(r))[0]]
    if claim_id == "thm6":
        return [r for r in records if r.c == 1]
    if claim_id == "thm15":
        return [r for r in records if _has_p3_component(_graph_of_record(r))]
    if claim_id == "thm18":
        return [r for r in records if (r.c, r.i) == (k + 2, k + 1)]
    if claim_id == "cor-type-k+1-k":
        return [r for r in records if (r.c, r.i) == (k + 1, k)]
    if claim_id == "cor-type-k-k-1":
        return [r for r in records if (r.c, r.i) == (k, k - 1)]
    raise UnknownClaimError(claim_id)


def _has_p3_component(g):
    p3 = graphs.Graph.path(3)
    for comp in graphs.components(g):
        sub = graphs.induced_subgraph(g, comp)
        if sub.n == 3 and cotrees.is_isomorphic(sub, p3):
            return True
    return False


_MINING_PARAMS = {
    # claim id -> (s, k-of-mining or None meaning the claim's k)
    "fig1": (1, INF),
    "thm2": (INF, INF),
}


def verify_list(claim_id, k=None, cache=None, n_max=None, expected_exprs=None):
    """Set-equality check between a claim's list and the mined obstructions."""
    cache = cache or MiningCache()
    if claim_id in _MINING_PARAMS:
        s_param, k_param = _MINING_PARAMS[claim_id]
    else:
        s_param, k_param = INF, k
    if n_max is None:
        n_max = obstructions.default_mining_bound(k_param)
        if claim_id == "thm2":
            n_max = 10
    records = cache.mine(s_param, k_param, n_max)
    exprs = expected_exprs if expected_exprs is not None else instantiate(claim_id, k)
    expected = _codes_of_exprs(exprs)
    if claim_id.startswith("cor20-"):
        return _verify_cor20(claim_id, k, n_max, exprs, records)
    scoped = _scope_filter(claim_id, k, records)
    notes = ""
    if claim_id == "thm2":
        notes = _complement_closure_note(records)
    return _set_compare(claim_id, k, n_max, expected, scoped, notes=notes)


def _verify_cor20(claim_id, k, bound, exprs, records):
    """Membership for the full p range, uniqueness for the restricted one.

    Item m (1-3) covers type (k+3-m, p): the listed graph is a record for
    1 <= p <= k+2-m, and the only record of its type when p <= k+1-m.
    """
    item = int(claim_id[-1])
    c = k + 3 - item
    p_max = k + 2 - item
    uniq_max = k + 1 - item
    mined = {r.code: r for r in records}
    missing, extra = [], []
    for p, e in zip(range(1, p_max + 1), exprs):
        code = canonical_code(cotree_of(expressions.evaluate(e)))
        text = expressions.unparse(e)
        r = mined.get(code)
        if r is None or (r.c, r.i) != (c, p):
            missing.append(text)
            continue
        if p <= uniq_max:
            extra.extend(
                x.graph6 for x in records if (x.c, x.i) == (c, p) and x.code != code
            )
    status = "PASS" if not missing and not extra else "FAIL"
    return VerdictReport(
        claim=claim_id,
        k=k,
        bound=bound,
        status=status,
        expected=p_max,
        actual=p_max - len(missing),
        missing=missing,
        extra=sorted(set(extra)),
        notes=f"membership p<={p_max}, uniqueness within type ({c},p) for p<={uniq_max}",
    )


def _complement_closure_note(records):
    codes = {r.code for r in records}
    for r in records:
        comp = graphs.complement(_graph_of_record(r))
        if canonical_code(cotree_of(comp)) not in codes:
            return f"not closed under complement: {r.graph6}"
    return "closed under complement"


# -- recursion claims -----------------------------------------------------------------


def _one_k_bound(m):
    # (1,m)-obstructions: K_{m+1,m+1} has order 2m+2; leave headroom of 2
    return min(2 * m + 4, obstructions.ENUMERATION_MAX_ORDER)


def verify_recursion(claim_id, k, cache=None, n_max=None, prev_n_max=None):
    cache = cache or MiningCache()
    if claim_id == "thm17":
        return _verify_thm17(k, cache, n_max, prev_n_max)
    if claim_id == "thm19":
        return _verify_thm19(k, cache, n_max, prev_n_max)
    if claim_id == "thm11":
        return _verify_thm11(k, cache, n_max)
    raise UnknownClaimError(claim_id)


def _verify_thm17(k, cache, n_max, prev_n_max):
    """Type (2,1) records are exactly K1 + (K1 join H') over disconnected
    (inf,k-1)-obstructions H' that are (1,k)-polar."""
    _need_k("thm17", k, 2)
    n_max = n_max or obstructions.default_mining_bound(k)
    prev_n_max = prev_n_max or obstructions.default_mining_bound(k - 1)
    current = cache.mine(INF, k, n_max)
    previous = cache.mine(INF, k - 1, prev_n_max)
    expected = {}
    for r in previous:
        if r.c < 2:
            continue
        h = _graph_of_record(r)
        if not polarity.is_polar(h, 1, k, want_witness=False)[0]:
            continue
        lifted = graphs.disjoint_union(
            graphs.Graph.empty(1), graphs.join(graphs.Graph.empty(1), h)
        )
        expected[canonical_code(cotree_of(lifted))] = f"K1 + K1 * ({r.expression})"
    actual = [r for r in current if (r.c, r.i) == (2, 1)]
    return _set_compare("thm17", k, n_max, expected, actual)


def _verify_thm19(k, cache, n_max, prev_n_max):
    """Every type (c,p) record with 1 <= p <= c-2 is K2 + (a type (c-1,p)
    record at level k-1 that is (1,k)-polar), and conversely."""
    _need_k("thm19", k, 1)
    n_max = n_max or obstructions.default_mining_bound(k)
    prev_n_max = prev_n_max or obstructions.default_mining_bound(k - 1)
    current = cache.mine(INF, k, n_max)
    previous = cache.mine(INF, k - 1, prev_n_max)
    expected = {}
    scoped = []
    for c in range(3, k + 3):
        for p in range(1, c - 1):
            scoped.extend(r for r in current if (r.c, r.i) == (c, p))
            for r in previous:
                if (r.c, r.i) != (c - 1, p):
                    continue
                h = _graph_of_record(r)
                if not polarity.is_polar(h, 1, k, want_witness=False)[0]:
                    continue
                lifted = graphs.disjoint_union(graphs.Graph.complete(2), h)
                expected[canonical_code(cotree_of(lifted))] = f"K2 + {r.expression}"
    return _set_compare("thm19", k, n_max, expected, scoped)


def _min_one_k(g):
    """Smallest m with g (1,m)-polar, or None."""
    prof = polarity.profile_of_graph(g)
    ks = [sig[1] for sig in prof.signatures if sig[0] <= 1]
    return min(ks) if ks else None


def _components_graphs(g):
    return [graphs.induced_subgraph(g, comp) for comp in graphs.components(g)]


def _exactly_one_non_k2_component(g):
    k2 = graphs.Graph.complete(2)
    non = sum(1 for sub in _components_graphs(g) if not cotrees.is_isomorphic(sub, k2))
    return non == 1


def _aitch_conditions(h, kv):
    """Conditions 1-3 on a side H with its (1,kv) split level."""
    if graphs.is_cluster(h)[0]:
        return False
    for v in range(h.n):
        sub = graphs.delete_vertex(h, v)
        if graphs.is_cluster(sub)[0]:
            continue
        if not polarity.is_polar(sub, 1, kv - 1, want_witness=False)[0]:
            return False
    return True


def _verify_thm11(k, cache, n_max):
    """Records without isolated vertices or P3 components decompose as
    H1 + H2 with k = k1 + k2 - 1, and every such sum is a record."""
    _need_k("thm11", k, 2)
    n_max = n_max or obstructions.default_mining_bound(k)
    current = cache.mine(INF, k, n_max)
    scoped = [
        r
        for r in current
        if r.c >= 2 and r.i == 0 and not _has_p3_component(_graph_of_record(r))
    ]

    # forward: each scoped record admits a qualifying component split
    bad_forward = []
    for r in scoped:
        g = _graph_of_record(r)
        if not _admits_thm11_split(g, k):
            bad_forward.append(r.graph6)

    # backward: the recursion built from (1, k_i - 1)-obstruction mining
    expected = {}
    fig1_codes = set(_codes_of_exprs(instantiate("fig1")))
    for k1 in range(2, k):
        k2 = k + 1 - k1
        if k2 < 2 or k2 < k1:
            continue
        for h1, e1 in _thm11_sides(k1, cache, fig1_codes):
            for h2, e2 in _thm11_sides(k2, cache, fig1_codes):
                if not _thm11_condition4(h1, e1, h2, e2, k1, k2, cache, fig1_codes):
                    continue
                g = graphs.disjoint_union(h1, h2)
                if _has_p3_component(g):
                    continue
                expected[canonical_code(cotree_of(g))] = f"({e1}) + ({e2})"

    report = _set_compare("thm11", k, n_max, expected, scoped)
    if bad_forward:
        report.status = "FAIL"
        report.notes = f"no qualifying split for: {bad_forward}"
    elif report.status == "PASS":
        report.notes = "both directions verified"
    return report


def _thm11_sides(ki, cache, fig1_codes):
    """Candidate sides H with split level ki: filtered (1,ki-1)-obstructions
    plus (ki-2)K2 + (K1 join 2K2)."""
    sides = []
    for r in cache.mine(1, ki - 1, _one_k_bound(ki - 1)):
        if r.code in fig1_codes:
            continue
        h = _graph_of_record(r)
        if _is_m_k2(h, ki):
            continue
        sides.append((h, r.expression))
    special = expressions.evaluate(
        expressions.parse(_u(_rep(ki - 2, "K2"), "K1 * 2K2"))
    )
    sides.append((special, _u(_rep(ki - 2, "K2"), "K1 * 2K2")))
    return sides


def _is_m_k2(g, m):
    return g.n == 2 * m and all(
        sub.n == 2 and sub.edge_count() == 1 for sub in _components_graphs(g)
    )


def _is_one_k_minimal_obstruction(h, m, cache):
    codes = {r.code for r in cache.mine(1, m, _one_k_bound(m))}
    return canonical_code(cotree_of(h)) in codes


def _thm11_condition4(h1, e1, h2, e2, k1, k2, cache, fig1_codes):
    special1 = _is_special_side(h1, k1)
    special2 = _is_special_side(h2, k2)
    if special1 and _is_one_k_minimal_obstruction(h2, k2 - 1, cache):
        if not _exactly_one_non_k2_component(h2):
            return False
    if special2 and _is_one_k_minimal_obstruction(h1, k1 - 1, cache):
        if not _exactly_one_non_k2_component(h1):
            return False
    return True


def _is_special_side(h, ki):
    template = expressions.evaluate(expressions.parse(_u(_rep(ki - 2, "K2"), "K1 * 2K2")))
    return cotrees.is_isomorphic(h, template)


def _admits_thm11_split(g, k):
    comps = graphs.components(g)
    m = len(comps)
    if m < 2:
        return False
    for pick in range(1, 1 << (m - 1)):  # fix comps[m-1] on side 2
        mask1 = 0
        for idx in range(m - 1):
            if pick & (1 << idx):
                mask1 |= comps[idx]
        mask2 = g.full_mask() ^ mask1
        h1 = graphs.induced_subgraph(g, mask1)
        h2 = graphs.induced_subgraph(g, mask2)
        k1 = _min_one_k(h1)
        k2 = _min_one_k(h2)
        if k1 is None or k2 is None or k1 + k2 - 1 != k:
            continue
        if k1 < 1 or k2 < 1:
            continue
        if not (_aitch_conditions(h1, k1) and _aitch_conditions(h2, k2)):
            continue
        return True
    return False


# -- conjectures ------------------------------------------------------------------


def check_conjectures(k, n_max, cache=None):
    """Verdicts for the uniqueness-per-type and order-bound conjectures."""
    cache = cache or MiningCache()
    records = cache.mine(INF, k, n_max)
    reports = []

    cells = {}
    for r in records:
        cells.setdefault((r.c, r.i), []).append(r)
    bad = []
    checked = 0
    for c in range(3, k + 3):
        for i in range(1, c - 1):
            checked += 1
            found = len(cells.get((c, i), []))
            if found != 1:
                bad.append(f"type ({c},{i}): {found} records")
    reports.append(
        VerdictReport(
            claim="conj1",
            k=k,
            bound=n_max,
            status="PASS" if not bad else "FAIL",
            expected=checked,
            actual=checked - len(bad),
            missing=bad,
            notes="exactly one record per type (c,i), 1 <= i <= c-2 <= k",
        )
    )

    limit = 3 * (k + 1)
    max_order = max((r.order for r in records), default=0)
    over = [r.graph6 for r in records if r.order > limit]
    status = "PASS" if not over else "FAIL"
    notes = f"max mined order {max_order} vs conjectured bound {limit}"
    if n_max <= limit:
        notes += f"; bound {n_max} does not probe beyond the conjecture"
    reports.append(
        VerdictReport(
            claim="conj2",
            k=k,
            bound=n_max,
            status=status,
            expected=0,
            actual=len(over),
            extra=over,
            notes=notes,
        )
    )
    return reports


# -- structural lemma suites ---------------------------------------------------------


def check_lemma5(records, k):
    """The five component-structure constraints on every (inf,k) record."""
    failures = []
    for r in records:
        g = _graph_of_record(r)
        comps = _components_graphs(g)
        trivial = sum(1 for s in comps if s.n == 1)
        non_trivial = len(comps) - trivial
        complete = [s for s in comps if s.edge_count() == s.n * (s.n - 1) // 2]
        non_complete = len(comps) - len(complete)
        if len(comps) > k + 2:
            failures.append(f"{r.graph6}: more than k+2 components")
        if non_trivial < 1:
            failures.append(f"{r.graph6}: no non-trivial component")
        if trivial > k + 1:
            failures.append(f"{r.graph6}: more than k+1 trivial components")
        if trivial >= 1 and non_complete > 1:
            failures.append(f"{r.graph6}: trivial component with >1 non-complete")
        if any(s.n > 2 for s in complete):
            failures.append(f"{r.graph6}: complete component of order > 2")
        if not (0 <= r.i <= r.c - 1 <= k + 1):
            failures.append(f"{r.graph6}: type bound violated")
    return VerdictReport(
        claim="lemma5",
        k=k,
        bound=max((r.bound for r in records), default=0),
        status="PASS" if not failures else "FAIL",
        expected=len(records),
        actual=len(records) - len(failures),
        missing=failures,
        notes="component-structure constraints incl. 0 <= i <= c-1 <= k+1",
    )


def check_lemma7(records, k):
    """Disconnected records without isolated vertices have >= 2 non-complete
    components."""
    failures = []
    for r in records:
        if r.c < 2 or r.i != 0:
            continue
        g = _graph_of_record(r)
        non_complete = sum(
            1
            for s in _components_graphs(g)
            if s.edge_count() != s.n * (s.n - 1) // 2
        )
        if non_complete < 2:
            failures.append(r.graph6)
    return VerdictReport(
        claim="lemma7",
        k=k,
        bound=max((r.bound for r in records), default=0),
        status="PASS" if not failures else "FAIL",
        expected=len(records),
        actual=len(records) - len(failures),
        missing=failures,
    )


# -- claim registry / verify-all ------------------------------------------------------

LIST_CLAIMS = (
    "fig1",
    "thm2",
    "remark4",
    "thm6",
    "thm15",
    "thm18",
    "cor-type-k+1-k",
    "cor-type-k-k-1",
    "cor20-item1",
    "cor20-item2",
    "cor20-item3",
    "thm21",
    "thm22",
)

RECURSION_CLAIMS = ("thm11", "thm17", "thm19")

CONJECTURE_CLAIMS = ("conj1", "conj2")

INFO_CLAIMS = ("sixteen-note",)

ALL_CLAIMS = LIST_CLAIMS + RECURSION_CLAIMS + CONJECTURE_CLAIMS + INFO_CLAIMS


def _claim_applicable(claim_id, k):
    minima = {
        "fig1": None,
        "thm2": None,
        "remark4": 0,
        "thm6": 2,
        "thm15": 2,
        "thm17": 2,
        "thm18": 2,
        "thm19": 1,
        "thm11": 2,
        "cor-type-k+1-k": 2,
        "cor-type-k-k-1": 3,
        "cor20-item1": 1,
        "cor20-item2": 1,
        "cor20-item3": 2,
        "conj1": 2,
        "conj2": 1,
        "sixteen-note": None,
    }
    if claim_id == "thm21":
        return k == 2
    if claim_id == "thm22":
        return k == 3
    minimum = minima[claim_id]
    return minimum is None or (k is not None and k >= minimum)


def verify_claim(claim_id, k=None, cache=None, n_max=None, catalog_dir=None):
    cache = cache or MiningCache()
    if claim_id == "sixteen-note":
        return VerdictReport(
            claim="sixteen-note",
            k=k,
            bound=None,
            status="INFO",
            notes="the aggregate count for min(s,k)=1 is informational only",
        )
    if claim_id in CONJECTURE_CLAIMS:
        n = n_max or (3 * (k + 1) + 1 if k is not None else None)
        n = min(n, obstructions.ENUMERATION_MAX_ORDER)
        reports = check_conjectures(k, n, cache=cache)
        return next(r for r in reports if r.claim == claim_id)
    if claim_id in RECURSION_CLAIMS:
        return verify_recursion(claim_id, k, cache=cache, n_max=n_max)
    if claim_id in LIST_CLAIMS:
        expected = _load_catalog_exprs(catalog_dir, claim_id, k)
        return verify_list(claim_id, k, cache=cache, n_max=n_max, expected_exprs=expected)
    raise UnknownClaimError(claim_id)


def verify_all(k, cache=None, catalog_dir=None):
    cache = cache or MiningCache()
    reports = []
    for claim_id in ALL_CLAIMS:
        if _claim_applicable(claim_id, k):
            reports.append(
                verify_claim(claim_id, k, cache=cache, catalog_dir=catalog_dir)
            )
    return reports


# -- catalog files ---------------------------------------------------------------------


def _claim_filename(claim_id, k):
    safe = claim_id.replace("+", "p")
    return f"{safe}.k{k}.txt" if k is not None else f"{safe}.txt"


def write_claim_files(directory, k):
    """Expand every applicable list claim into a plain-text expression file."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for claim_id in LIST_CLAIMS:
        if not _claim_applicable(claim_id, k):
            continue
        exprs = instantiate(claim_id, None if claim_id in ("fig1", "thm2") else k)
        path = os.path.join(directory, _claim_filename(claim_id, k))
        with open(path, "w") as fh:
            fh.write(f"# {claim_id} at k={k}\n")
            for e in exprs:
                fh.write(expressions.unparse(e) + "\n")
        written.append(path)
    return written


def _load_catalog_exprs(catalog_dir, claim_id, k):
    if catalog_dir is None:
        return None
    path = os.path.join(catalog_dir, _claim_filename(claim_id, k))
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return expressions.load_expression_lines(fh.read())
