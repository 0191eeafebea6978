"""Shared brute-force oracles for the test suite.

These deliberately avoid the library's own fast paths: powers are taken by
iterated multiplication, edges by the O(n^2) pairwise definition, and so
on, so that each library result is checked against an independent route.
"""

from __future__ import annotations

from kpower.groups import FiniteGroup


def iterated_power(group: FiniteGroup, x: int, k: int) -> int:
    """x**k by plain left-to-right multiplication (no squaring, no order trick)."""
    result = group.identity
    for _ in range(k):
        result = group.op(result, x)
    return result


def pairwise_edges(group: FiniteGroup, k: int) -> set[tuple[int, int]]:
    """The defining edge set: {x, y} with x != y and x^k = y or y^k = x."""
    powers = [iterated_power(group, x, k) for x in range(group.order)]
    edges = set()
    for x in range(group.order):
        for y in range(x + 1, group.order):
            if powers[x] == y or powers[y] == x:
                edges.add((x, y))
    return edges


def brute_degrees(group: FiniteGroup, k: int) -> list[int]:
    """Vertex degrees read off the pairwise edge set."""
    degrees = [0] * group.order
    for u, v in pairwise_edges(group, k):
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def naive_multiplicative_order(k: int, m: int) -> int:
    """Order of k mod m by stepping through successive powers."""
    if m == 1:
        return 1
    r = k % m
    t = 1
    while r != 1:
        r = r * k % m
        t += 1
        assert t <= m, "order search overran the modulus"
    return t
