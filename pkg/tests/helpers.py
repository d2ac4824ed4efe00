"""Naive reference computations for tests.

Nothing here calls into arithmos: divisors are found by trial, roots by
counting up, witnesses by double loops.
"""


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_gcd(a, b):
    return max(set(divisors(a)) & set(divisors(b)))


def powers_upto(limit, e):
    """{k**e: k} for every k with k**e <= limit."""
    table, k = {}, 1
    while k**e <= limit:
        table[k**e] = k
        k += 1
    return table


def naive_root(n, e):
    k = 1
    while k**e < n:
        k += 1
    return k if k**e == n else None


def pair_witness(a, b, bound):
    """First (p, q) in (q, p) order with a*q*q == b*p*p, by double loop."""
    for q in range(1, bound + 1):
        lhs = a * q * q
        for p in range(1, bound + 1):
            rhs = b * p * p
            if rhs == lhs:
                return p, q
            if rhs > lhs:
                break
    return None


def root_witness_scan(n, e, q_bound):
    """All (p, q) with p**e == n * q**e, q <= q_bound, by a two-pointer walk.

    p only ever increases, so the cost is O(q_bound + final p).
    """
    found, p = [], 1
    for q in range(1, q_bound + 1):
        target = n * q**e
        while p**e < target:
            p += 1
        if p**e == target:
            found.append((p, q))
    return found
