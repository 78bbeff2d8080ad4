"""Simple undirected graphs and the union / join / joined-union operators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 4096


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Dense simple graph.

    ``adj`` is stored as a read-only boolean array; ``labels`` is an optional
    tuple of display strings, one per vertex.
    """

    adj: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        adj = np.array(self.adj, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] > MAX_ORDER:
            raise GraphError(f"graph order {adj.shape[0]} exceeds cap {MAX_ORDER}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency is not symmetric")
        if adj.diagonal().any():
            raise GraphError("adjacency has loops")
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != adj.shape[0]:
                raise GraphError(f"expected {adj.shape[0]} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(int)

    @property
    def m(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        u, v = np.nonzero(np.triu(self.adj, 1))
        return list(zip(u.tolist(), v.tolist()))

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adj[v]).tolist()

    def permute(self, order: Sequence[int]) -> "Graph":
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        order = list(order)
        if sorted(order) != list(range(self.n)):
            raise GraphError("order is not a permutation of the vertex set")
        labels = None if self.labels is None else [self.labels[i] for i in order]
        return Graph(self.adj[np.ix_(order, order)], labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if adj[u, v]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u, v] = adj[v, u] = True
    return Graph(adj, labels)


def build_basic(kind: str, n: int) -> Graph:
    """Complete, empty, cycle, path or star graph on ``n`` vertices.

    ``star`` is K_{1,n-1} with the center at vertex 0.
    """
    if n < 1:
        raise GraphError(f"graph order must be positive, got {n}")
    if kind == "complete":
        adj = ~np.eye(n, dtype=bool)
        return Graph(adj)
    if kind == "empty":
        return Graph(np.zeros((n, n), dtype=bool))
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        return from_edges(n, [(0, i) for i in range(1, n)])
    raise GraphError(f"unknown graph kind {kind!r}")


def complete(n: int) -> Graph:
    return build_basic("complete", n)


def empty(n: int) -> Graph:
    return build_basic("empty", n)


def cycle(n: int) -> Graph:
    return build_basic("cycle", n)


def path(n: int) -> Graph:
    return build_basic("path", n)


def star(n: int) -> Graph:
    return build_basic("star", n)


def _concat_labels(graphs: Sequence[Graph]):
    if all(g.labels is None for g in graphs):
        return None
    out = []
    for g in graphs:
        out.extend(g.labels if g.labels is not None else [str(i) for i in range(g.n)])
    return out


def _block_diag(graphs: Sequence[Graph]) -> np.ndarray:
    total = sum(g.n for g in graphs)
    adj = np.zeros((total, total), dtype=bool)
    at = 0
    for g in graphs:
        adj[at:at + g.n, at:at + g.n] = g.adj
        at += g.n
    return adj


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(_block_diag([g, h]), _concat_labels([g, h]))


def union_all(graphs: Sequence[Graph]) -> Graph:
    return reduce(disjoint_union, graphs)


@dataclass(frozen=True)
class JoinedUnionSpec:
    base: Graph
    parts: tuple[Graph, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) != self.base.n:
            raise GraphError(f"base has {self.base.n} vertices but {len(parts)} parts given")
        if any(p.n < 1 for p in parts):
            raise GraphError("every part needs at least one vertex")

    @property
    def sizes(self) -> list[int]:
        return [p.n for p in self.parts]

    def neighbor_weights(self) -> list[int]:
        """Total part size over base-neighbors of each base vertex."""
        sizes = np.array(self.sizes)
        return [int(sizes[self.base.adj[i]].sum()) for i in range(self.base.n)]


def joined_union(spec: JoinedUnionSpec) -> Graph:
    """G[G_1, ..., G_n]; vertices are laid out part by part in base order."""
    adj = _block_diag(spec.parts)
    offsets = np.concatenate([[0], np.cumsum(spec.sizes)])
    for i, j in spec.base.edges():
        adj[offsets[i]:offsets[i + 1], offsets[j]:offsets[j + 1]] = True
        adj[offsets[j]:offsets[j + 1], offsets[i]:offsets[i + 1]] = True
    return Graph(adj, _concat_labels(spec.parts))


def join(g: Graph, h: Graph) -> Graph:
    return joined_union(JoinedUnionSpec(complete(2), (g, h)))


@dataclass(frozen=True)
class DegreeInfo:
    degrees: list[int]
    regular: int | None
    edges: int
    diameter: float  # math.inf when disconnected


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def degree_info(g: Graph) -> DegreeInfo:
    degrees = g.degrees.tolist()
    regular = degrees[0] if degrees and len(set(degrees)) == 1 else None
    diameter = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            diameter = float("inf")
            break
        diameter = max(diameter, max(dist))
    return DegreeInfo(degrees, regular, g.m, diameter)


def read_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of 0-based ``u v`` pairs."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list header must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("every edge line must hold exactly two indices")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    return from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
