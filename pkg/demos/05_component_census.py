"""Counting components of P(Z_n, k) for gcd(n, k) = 1.

Edges preserve element order when gcd(n, k) = 1, so each divisor d of n
contributes at least one component and the count is at least tau(n).
Equality holds exactly when k is a primitive root modulo every divisor of
n: then the phi(d) elements of order d form a single cycle.
"""

from kpower import component_count_cyclic, divisors, is_primitive_root

print("  n  k   components  tau(n)  k primitive root mod every d | n?")
for n, k in ((7, 3), (7, 2), (31, 2), (31, 3), (9, 2), (25, 2), (11, 8), (22, 7)):
    count, tau, criterion = component_count_cyclic(n, k)
    verdicts = {d: is_primitive_root(k, d) for d in divisors(n)}
    print(f"{n:3d} {k:3d} {count:6d} {tau:9d}       {criterion}  {verdicts}")

print()
print("The bound is sharp: equality cases above are exactly the primitive-root rows.")
