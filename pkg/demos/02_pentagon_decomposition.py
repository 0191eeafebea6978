"""Why k-power graphs need not be perfect: P(Z_31, 2).

Squaring on Z_31 has multiplicative order 5 modulo 31, so the 30 nonzero
residues split into six 5-cycles, with 0 isolated.  An odd chordless cycle
of length 5 forces chromatic number 3 while the clique number stays 2 -
the graph is not perfect.
"""

from kpower import analyze, build_group, build_undirected, components, multiplicative_order

g = build_group("cyclic:31")
gr = build_undirected(g, 2)

print("ord_31(2) =", multiplicative_order(2, 31))
for p in components(gr):
    print(f"  component {p.shape_tag}: vertices {p.vertices}")

report = analyze(g, 2)
print()
print("chromatic number:", report.chromatic_number)
print("clique number:   ", report.clique_number)
print("perfect:         ", report.is_perfect)
print("forest:          ", report.is_forest)
print("discrepancies:   ", report.discrepancies or "none")
