"""Build cographs from expressions and recognize them back.

Run:  python3 demos/01_expressions_and_recognition.py
"""

from polarcographs import cotrees, expressions, graphs

# The expression language: '+' disjoint union, '*' join, '~' complement,
# a leading integer repeats, and K/P/C/K{a,b} are the atoms.
for text in ("P3 + C4", "K1 * (K2 + P3)", "~(2P3)", "3K1 + K{3,3}"):
    g = expressions.evaluate(expressions.parse(text))
    t = cotrees.cotree_of(g)
    print(f"{text:18s} order={g.n:2d} edges={g.edge_count():2d} "
          f"graph6={graphs.graph6_encode(g):10s} cotree={cotrees.render(t)}")

# Recognition is certifying: a non-cograph yields an induced P4.
p4 = graphs.Graph.path(4)
cert = cotrees.recognize(p4)
print(f"\nP4 is not a cograph; certificate vertices: {cert.vertices} "
      f"(validates: {cert.validates_against(p4)})")

# Isomorphism on cographs is a byte comparison of canonical codes.
a = expressions.evaluate(expressions.parse("K{2,2}"))
b = graphs.Graph.cycle(4)
print(f"\nK{{2,2}} and C4 isomorphic: {cotrees.is_isomorphic(a, b)}")
