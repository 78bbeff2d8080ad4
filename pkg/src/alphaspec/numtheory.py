"""Totient, divisors and the proper-divisor graph."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .graph import Graph, from_edges

MAX_INPUT = 10**9


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime-exponent pairs of ``n`` in increasing prime order (trial division)."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    if n > MAX_INPUT:
        raise ValueError(f"{n} exceeds the supported bound {MAX_INPUT}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs a positive integer, got {n}")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def proper_divisors(n: int) -> list[int]:
    if n < 2:
        raise ValueError(f"proper divisors need n >= 2, got {n}")
    return [d for d in divisors(n) if 1 < d < n]


@dataclass(frozen=True)
class DivisorGraph:
    graph: Graph
    divisors: tuple[int, ...]


def divisor_graph(n: int, require_nonempty: bool = False) -> DivisorGraph:
    """Graph on the proper divisors of ``n``, adjacent when one divides the other.

    Vertices are in increasing divisor order.
    """
    divs = proper_divisors(n)
    if require_nonempty and not divs:
        raise ValueError(f"{n} has no proper divisors")
    edges = [(i, j) for i in range(len(divs)) for j in range(i + 1, len(divs))
             if divs[j] % divs[i] == 0]
    return DivisorGraph(from_edges(len(divs), edges, labels=[str(d) for d in divs]),
                        tuple(divs))


def divisor_graph_order(n: int) -> int:
    """Number of proper divisors from the factorization alone."""
    return prod(k + 1 for _, k in factorize(n)) - 2
