"""Gallery: the k-power graphs of S_3 for k = 2..5, and of Z_4 at k = 2.

Two distinct vertices x, y are joined exactly when x^k = y or y^k = x.
Watching one small group across several exponents shows how much the
graph changes with k: stars, matchings and isolated vertices all appear.
"""

from kpower import build_group, build_undirected, components


def show(group, k):
    gr = build_undirected(group, k)
    names = group.element_names()
    edges = ", ".join(f"{names[u]}--{names[v]}" for u, v in gr.edges()) or "(none)"
    shapes = ", ".join(p.shape_tag for p in components(gr))
    print(f"  k={k}: edges {edges}")
    print(f"       components: {shapes}")


s3 = build_group("sym:3")
print("S_3 (order 6): identity e, two 3-cycles, three transpositions")
for k in range(2, 6):
    show(s3, k)

print()
z4 = build_group("cyclic:4")
print("Z_4 at k=2: squaring folds 1 and 3 onto 2, and 2 onto 0,")
print("so the graph is the star K_{1,3} centred at the vertex 2:")
show(z4, 2)
