"""Finite groups as Cayley tables, and their power graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graph import Graph, complete, join, union_all
from .numtheory import is_prime

EXHAUSTIVE_ASSOC_ORDER = 64


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity: int
    names: tuple[str, ...]

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64, copy=True)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(self.names))
        check_group(self)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])


def check_group(g: FiniteGroup, samples: int = 20000, seed: int = 0) -> None:
    t = g.table
    n = t.shape[0]
    if t.shape != (n, n) or len(g.names) != n:
        raise GroupError("table and names disagree on the group order")
    ident = np.arange(n)
    if not (np.array_equal(t[g.identity], ident) and np.array_equal(t[:, g.identity], ident)):
        raise GroupError("identity row/column is not the identity permutation")
    if not (np.array_equal(np.sort(t, axis=1), np.broadcast_to(ident, (n, n)))
            and np.array_equal(np.sort(t, axis=0), np.broadcast_to(ident[:, None], (n, n)))):
        raise GroupError("table is not a Latin square")
    if n <= EXHAUSTIVE_ASSOC_ORDER:
        left = t[t, :]            # (xy)z indexed [x, y, z]
        right = t[:, t]           # x(yz) indexed [x, y, z]
        ok = np.array_equal(left, right)
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, samples))
        ok = np.array_equal(t[t[x, y], z], t[x, t[y, z]])
    if not ok:
        raise GroupError("table is not associative")


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, 0, [str(i) for i in range(n)])


def _rotation_reflection_names(n: int, b_name: str) -> list[str]:
    return [f"a^{i}" for i in range(n)] + [f"a^{i}{b_name}" for i in range(n)]


def dihedral(order: int) -> FiniteGroup:
    """D_{2n} = <a, b | a^n = b^2 = e, bab = a^-1>; element a^i b^j has index i + n*j."""
    if order < 2 or order % 2:
        raise GroupError(f"dihedral order must be a positive even number, got {order}")
    n = order // 2
    table = np.empty((order, order), dtype=np.int64)
    for x, y in itertools.product(range(order), repeat=2):
        i, j = x % n, x // n
        k, l = y % n, y // n
        table[x, y] = (i + (-1) ** j * k) % n + n * ((j + l) % 2)
    return FiniteGroup(table, 0, _rotation_reflection_names(n, "b"))


def dicyclic(order: int) -> FiniteGroup:
    """Q_n = <a, b | a^{2n} = e, b^2 = a^n, ab = ba^-1> of order 4n.

    Normal form a^i b^j with j in {0, 1}; index i + 2n*j.
    """
    if order < 4 or order % 4:
        raise GroupError(f"dicyclic order must be a positive multiple of 4, got {order}")
    n = order // 4
    m = 2 * n
    table = np.empty((order, order), dtype=np.int64)
    for x, y in itertools.product(range(order), repeat=2):
        i, j = x % m, x // m
        k, l = y % m, y // m
        e = i + (-1) ** j * k
        if j + l == 2:
            table[x, y] = (e + n) % m
        else:
            table[x, y] = e % m + m * (j + l)
    return FiniteGroup(table, 0, _rotation_reflection_names(m, "b"))


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """(Z_p)^k with elements indexed by their base-p digit vectors."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if k < 1:
        raise GroupError(f"rank must be positive, got {k}")
    vecs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64)
    weights = p ** np.arange(k - 1, -1, -1)
    summed = (vecs[:, None, :] + vecs[None, :, :]) % p
    return FiniteGroup(summed @ weights, 0, ["(" + ",".join(map(str, v)) + ")" for v in vecs])


def build_group(kind: str, *params: int) -> FiniteGroup:
    """Construct a group by kind.

    ``dihedral`` and ``dicyclic`` take the group order (so ``dihedral, 6`` is S_3
    and ``dicyclic, 8`` is Q_8); ``elementary_abelian`` takes ``p, k``.
    """
    if any(p < 1 for p in params):
        raise GroupError(f"group parameters must be positive, got {params}")
    builders = {"cyclic": (cyclic, 1), "dihedral": (dihedral, 1),
                "dicyclic": (dicyclic, 1), "elementary_abelian": (elementary_abelian, 2)}
    if kind not in builders:
        raise GroupError(f"unknown group kind {kind!r}")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise GroupError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse strings like ``cyclic:6``, ``dihedral:12``, ``elemabelian:3,2``."""
    name, _, args = spec.partition(":")
    aliases = {"elemabelian": "elementary_abelian", "elementary_abelian": "elementary_abelian",
               "cyclic": "cyclic", "dihedral": "dihedral", "dicyclic": "dicyclic"}
    if name not in aliases or not args:
        raise GroupError(f"malformed group spec {spec!r}")
    try:
        params = [int(a) for a in args.split(",")]
    except ValueError:
        raise GroupError(f"malformed group parameters in {spec!r}") from None
    return build_group(aliases[name], *params)


def cyclic_subgroup(g: FiniteGroup, x: int) -> list[int]:
    out = [x]
    while out[-1] != g.identity:
        out.append(g.mul(out[-1], x))
    return out


def element_order(g: FiniteGroup, x: int) -> int:
    if not 0 <= x < g.order:
        raise IndexError(f"element {x} out of range for group of order {g.order}")
    return len(cyclic_subgroup(g, x))


@dataclass(frozen=True)
class PowerGraphResult:
    graph: Graph
    universal: frozenset[int]

    @property
    def b(self) -> int:
        return len(self.universal)


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(np.flatnonzero(g.degrees == g.n - 1).tolist())


def power_graph(g: FiniteGroup) -> PowerGraphResult:
    """x ~ y iff one lies in the cyclic subgroup generated by the other."""
    if g.order < 2:
        raise GroupError("power graph needs a group of order >= 2")
    member = np.zeros((g.order, g.order), dtype=bool)
    for x in range(g.order):
        member[x, cyclic_subgroup(g, x)] = True
    adj = member | member.T
    np.fill_diagonal(adj, False)
    graph = Graph(adj, g.names)
    return PowerGraphResult(graph, universal_vertices(graph))


def nonabelian_pq_power_graph(p: int, q: int) -> Graph:
    """K_1 join (q copies of K_{p-1} union K_{q-1}), the power graph of a
    non-abelian group of order pq (p < q, p | q - 1).

    Vertex order: identity, the q Sylow-p blocks, then the Sylow-q block.
    """
    if not (is_prime(p) and is_prime(q)) or p >= q or (q - 1) % p:
        raise GroupError(f"no non-abelian group of order {p}*{q} with p < q")
    rest = union_all([complete(p - 1)] * q + [complete(q - 1)])
    return join(complete(1), rest)
