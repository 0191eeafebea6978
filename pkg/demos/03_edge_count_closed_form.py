"""The closed-form edge count, checked live against brute force.

|E(P(G,k))| = n - sum_{d | k1} t_d - (1/2) sum_{d | k2, d !| k1} t_d,
with k1 = gcd(k-1, n), k2 = gcd(k^2-1, n) and t_d the number of elements
of order d.  The first sum removes fixed points (x^k = x), the halved sum
merges mutually-paired arcs (x^k = y and y^k = x) into single edges.
"""

from kpower import build_group, build_undirected, edge_count_formula

for spec in ("sym:3", "dihedral:6", "quaternion:3", "cyclic:24", "product:3x5"):
    group = build_group(spec)
    print(f"{spec} (order {group.order}), census {group.order_census()}")
    print("    k: formula = graph")
    for k in range(2, min(group.order + 2, 10)):
        formula = edge_count_formula(group, k)
        brute = build_undirected(group, k).edge_count
        marker = "ok" if formula == brute else "MISMATCH"
        print(f"   {k:2d}: {formula:3d} = {brute:<3d} {marker}")
    print()
