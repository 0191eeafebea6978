"""The shifting-chair riddle, solved on the directed k-power graph of Z_n.

n people sit ascending on n chairs in a circle; at each whistle after the
first, person i advances i seats clockwise.  After the k-th whistle the
seating is the map i -> k*i (mod n), so every chair is occupied exactly
once iff that map is a bijection iff gcd(n, k) = 1.  The solver simulates
whistle by whistle and cross-asserts the coprimality answer.
"""

from kpower import solve_chairs
from kpower.chair import render_trace

print("Full trace for n = 6 (whistles 2..4 collide, 5 seats everyone):")
print(render_trace(solve_chairs(6)))

print("minimal whistle count for small n:")
print("  n : k  (rejected whistles, with a colliding chair each)")
for n in range(1, 16):
    sol = solve_chairs(n)
    rejected = {k: f"chair {c} held by {occ}" for k, (c, occ) in sol.collision_trace.items()}
    print(f" {n:2d} : {sol.minimal_k}  {rejected or ''}")
