"""When is P(G, k) connected, and how wide can it be?

P(G, k) is connected exactly when every element order divides some power
of k (for Z_n: every prime of n divides k).  Connected k-power graphs are
automatically trees, and the diameter is bounded by twice the largest
"covering exponent" n_x = min{m : o(x) | k^m}.
"""

from kpower import (
    build_group,
    build_undirected,
    components,
    diameter,
    is_connected_criterion,
    is_connected_cyclic_pi,
    prime_set,
)

print("n, k, primes(n) in primes(k)?, connected?, tree?, diameter <= bound")
for n, k in ((4, 2), (8, 2), (16, 2), (12, 6), (36, 6), (31, 2), (15, 6), (27, 3)):
    g = build_group(f"cyclic:{n}")
    gr = build_undirected(g, k)
    connected = len(components(gr)) == 1
    criterion, bound = is_connected_criterion(g, k)
    pi = is_connected_cyclic_pi(n, k)
    assert criterion == connected == pi
    if connected:
        d = diameter(gr)
        tree = gr.edge_count == n - 1
        print(f"  n={n:3d} k={k}: pi(n)={prime_set(n)} pi(k)={prime_set(k)}  "
              f"connected, tree={tree}, diameter {d} <= {bound}")
    else:
        print(f"  n={n:3d} k={k}: pi(n)={prime_set(n)} pi(k)={prime_set(k)}  "
              f"disconnected ({len(components(gr))} components)")
