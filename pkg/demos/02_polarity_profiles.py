"""Polarity profiles: every (s,k) question about a cograph, answered at once.

A graph is (s,k)-polar if its vertices split into A (complete multipartite,
at most s parts) and B (disjoint cliques, at most k of them).  The dynamic
program on the cotree computes the antichain of exactly achievable
signatures; any (s,k) query is then a dominance check.

Run:  python3 demos/02_polarity_profiles.py
"""

from polarcographs import expressions, graphs, polarity
from polarcographs.polarity import INF


def show(text):
    g = expressions.evaluate(expressions.parse(text))
    prof = polarity.profile_of_graph(g)
    print(f"{text:12s} signatures={prof.sorted_signatures()}")
    return g


show("P3")              # (1,1): one part + one clique; (2,0): all of it in A
show("K1 + 3K2")        # the unique minimal cluster obstruction for k=2
show("C4")

# Queries, including the unbounded variants.
g = expressions.evaluate(expressions.parse("K1 + 3K2"))
for s, k in ((INF, 2), (INF, 3), (1, INF)):
    verdict, witness = polarity.is_polar(g, s, k)
    tag = f"({'inf' if s == INF else s},{'inf' if k == INF else k})"
    if verdict:
        print(f"{tag}-polar: yes, A={sorted(graphs.bits(witness.a_mask))} "
              f"B={sorted(graphs.bits(witness.b_mask))}")
    else:
        print(f"{tag}-polar: no")

# Witnesses are re-validated against the graph, independently of the DP.
verdict, witness = polarity.is_polar(g, INF, 3)
print("witness validates:", polarity.validate_witness(g, witness))

# The brute-force oracle (all bipartitions) agrees with the DP.
oracle = polarity.profile_bruteforce(g)
print("oracle agrees:", oracle.closure() == polarity.profile_of_graph(g).closure())
