"""Exact integer utilities: gcd, totients, divisors, multiplicative orders.

Everything here is deterministic, stateless and exact (plain Python ints,
no floating point).  The factorisation routines use trial division, which
is entirely adequate for the scales this package supports: group orders
are capped at 2**16, so the largest value that ever needs factoring is an
element order (<= 2**16), and the largest gcd operand is k**2 - 1 with
k <= 2**16 + 1.
"""

from __future__ import annotations

import math
from typing import Iterable


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers.

    gcd(0, 0) is undefined and rejected.
    """
    if a < 0 or b < 0:
        raise ValueError("gcd expects non-negative integers")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of n >= 1 as (prime, exponent) pairs, primes ascending.

    factorize(1) == [].
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    pairs: list[tuple[int, int]] = []
    m = n
    for p in _trial_candidates(m):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    if m > 1:
        pairs.append((m, 1))
    return pairs


def _trial_candidates(n: int) -> Iterable[int]:
    # 2, 3, then the 6k+-1 wheel.
    yield 2
    yield 3
    c = 5
    while c * c <= n:
        yield c
        yield c + 2
        c += 6


def euler_phi(n: int) -> int:
    """Euler totient: the count of integers in [1, n] coprime to n; phi(1) = 1."""
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order, 1 and n included."""
    if n < 1:
        raise ValueError("divisors expects n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    return divs


def tau(n: int) -> int:
    """Number of positive divisors of n."""
    count = 1
    for _, e in factorize(n):
        count *= e + 1
    return count


def prime_set(n: int) -> tuple[int, ...]:
    """The set of prime divisors of n as a strictly increasing tuple; empty for n = 1."""
    return tuple(p for p, _ in factorize(n))


def multiplicative_order(k: int, m: int) -> int:
    """Least t >= 1 with k**t == 1 (mod m); requires gcd(k, m) = 1.

    Returns 1 for m = 1 (every integer is congruent to 0 == 1 mod 1).
    Computed by starting from phi(m) and dividing out prime factors while
    the power still lands on 1, rather than by naive iteration.
    """
    if m < 1:
        raise ValueError("multiplicative_order expects m >= 1")
    if m == 1:
        return 1
    k %= m
    if math.gcd(k, m) != 1:
        raise ValueError(f"multiplicative order undefined: gcd({k}, {m}) != 1")
    order = euler_phi(m)
    for p, _ in factorize(order):
        while order % p == 0 and pow(k, order // p, m) == 1:
            order //= p
    return order


def is_primitive_root(k: int, m: int) -> bool:
    """True iff k generates the units mod m, i.e. ord_m(k) = phi(m).

    Vacuously true for m = 1; false (not an error) when gcd(k, m) != 1.
    """
    if m < 1:
        raise ValueError("is_primitive_root expects m >= 1")
    if m == 1:
        return True
    if math.gcd(k % m, m) != 1:
        return False
    return multiplicative_order(k, m) == euler_phi(m)


def solve_linear_congruence(k: int, a: int, n: int) -> list[int]:
    """All x in [0, n) with k*x == a (mod n), ascending.

    There are exactly gcd(k, n) solutions when gcd(k, n) divides a,
    and none otherwise.
    """
    if n < 1:
        raise ValueError("solve_linear_congruence expects n >= 1")
    k %= n
    a %= n
    g = math.gcd(k, n) if k else n
    if a % g != 0:
        return []
    n_red = n // g
    # x0 solves (k/g) x == a/g (mod n/g); the k/g inverse exists there.
    if n_red == 1:
        x0 = 0
    else:
        x0 = (a // g) * pow(k // g, -1, n_red) % n_red
    return [x0 + t * n_red for t in range(g)]
