"""Equitable partitions, quotient matrices and the block-symmetric reduction."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, JoinedUnionSpec
from .spectra import Spectrum, a_alpha_matrix, check_alpha, eig_symmetric

EQUITABLE_TOL = 1e-12


class PartitionError(ValueError):
    pass


class NonEquitableWarning(UserWarning):
    pass


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise PartitionError("partition has an empty block")
        flat = [v for b in blocks for v in b]
        if len(set(flat)) != len(flat):
            raise PartitionError("partition blocks overlap")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "VertexPartition":
        """Consecutive blocks, e.g. the natural partition of a joined union."""
        bounds = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
        return cls(tuple(tuple(range(bounds[i], bounds[i + 1])) for i in range(len(sizes))))

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def check_covers(self, n: int) -> None:
        flat = sorted(v for b in self.blocks for v in b)
        if flat != list(range(n)):
            raise PartitionError(f"partition does not cover the vertex set of size {n}")


def natural_partition(spec: JoinedUnionSpec) -> VertexPartition:
    return VertexPartition.from_sizes(spec.sizes)


def block_row_sums(m: np.ndarray, p: VertexPartition) -> list[list[np.ndarray]]:
    return [[m[np.ix_(bi, bj)].sum(axis=1) for bj in p.blocks] for bi in p.blocks]


def _matrix(g: Graph, p: VertexPartition, alpha: float) -> np.ndarray:
    p.check_covers(g.n)
    return a_alpha_matrix(g, check_alpha(alpha))


def is_equitable(g: Graph, p: VertexPartition, alpha: float = 0.0) -> bool:
    """Constant block row sums in A_alpha(g); ``alpha=0`` tests the adjacency matrix."""
    sums = block_row_sums(_matrix(g, p, alpha), p)
    return all(np.ptp(s) <= EQUITABLE_TOL for row in sums for s in row)


def quotient_matrix(g: Graph, p: VertexPartition, alpha: float = 0.0) -> np.ndarray:
    """Block-average row sums of A_alpha(g).

    Defined for any partition; a :class:`NonEquitableWarning` is issued when
    the partition is not equitable.
    """
    m = _matrix(g, p, alpha)
    sums = block_row_sums(m, p)
    if not all(np.ptp(s) <= EQUITABLE_TOL for row in sums for s in row):
        warnings.warn("quotient of a non-equitable partition", NonEquitableWarning, stacklevel=2)
    return np.array([[s.mean() for s in row] for row in sums])


def joined_union_aux_matrix(base: Graph, sizes: Sequence[int], degrees: Sequence[float],
                            alpha: float) -> np.ndarray:
    """Quotient of A_alpha over a joined union of regular parts.

    Diagonal ``alpha * w_i + r_i`` where ``w_i`` sums the part sizes over
    base-neighbors of ``i``; off-diagonal ``(1 - alpha) * n_j`` on base edges.
    """
    alpha = check_alpha(alpha)
    sizes = np.asarray(sizes, dtype=float)
    if len(sizes) != base.n or len(degrees) != base.n:
        raise PartitionError("sizes and degrees must match the base order")
    adj = base.adj.astype(float)
    weights = adj @ sizes
    m = (1.0 - alpha) * adj * sizes[None, :]
    m[np.diag_indices(base.n)] = alpha * weights + np.asarray(degrees, dtype=float)
    return m


def part_regularity(spec: JoinedUnionSpec) -> list[int]:
    degrees = []
    for i, part in enumerate(spec.parts):
        d = part.degrees
        if len(set(d.tolist())) != 1:
            raise PartitionError(f"part {i} is not regular")
        degrees.append(int(d[0]))
    return degrees


def aux_matrix_for(spec: JoinedUnionSpec, alpha: float) -> np.ndarray:
    return joined_union_aux_matrix(spec.base, spec.sizes, part_regularity(spec), alpha)


@dataclass(frozen=True, eq=False)
class BlockSymmetricSpec:
    """Matrix [[X, beta, ..., beta], [beta^T, B, C, ...], ..., [beta^T, C, ..., B]]
    with ``c`` diagonal copies of ``B``."""

    X: np.ndarray
    beta: np.ndarray
    B: np.ndarray
    C: np.ndarray
    c: int

    def __post_init__(self):
        X = np.atleast_2d(np.asarray(self.X, dtype=float)) if np.size(self.X) else np.zeros((0, 0))
        B = np.atleast_2d(np.asarray(self.B, dtype=float))
        C = np.atleast_2d(np.asarray(self.C, dtype=float))
        t, s = X.shape[0], B.shape[0]
        beta = np.asarray(self.beta, dtype=float)
        if beta.size != t * s:
            raise PartitionError(f"beta has {beta.size} entries, expected {t}x{s}")
        beta = beta.reshape(t, s)
        if X.shape != (t, t) or B.shape != (s, s) or C.shape != (s, s):
            raise PartitionError("block dimensions are inconsistent")
        if self.c < 1:
            raise PartitionError("need at least one copy of B")
        for name, val in (("X", X), ("beta", beta), ("B", B), ("C", C)):
            object.__setattr__(self, name, val)

    @property
    def t(self) -> int:
        return self.X.shape[0]

    @property
    def s(self) -> int:
        return self.B.shape[0]

    def assemble(self) -> np.ndarray:
        t, s, c = self.t, self.s, self.c
        m = np.zeros((t + c * s, t + c * s))
        m[:t, :t] = self.X
        for i in range(c):
            ri = slice(t + i * s, t + (i + 1) * s)
            m[:t, ri] = self.beta
            m[ri, :t] = self.beta.T
            for j in range(c):
                m[ri, t + j * s:t + (j + 1) * s] = self.B if i == j else self.C
        return m


@dataclass(frozen=True, eq=False)
class Reduction:
    repeated: Spectrum      # sigma(B - C), to be taken c - 1 times
    multiplicity: int
    reduced: np.ndarray     # [[X, sqrt(c) beta], [sqrt(c) beta^T, B + (c-1) C]]

    def full_values(self) -> np.ndarray:
        rest = eig_symmetric(self.reduced).values
        return np.concatenate([np.repeat(self.repeated.values, self.multiplicity), rest])


def block_symmetric_reduce(spec: BlockSymmetricSpec) -> Reduction:
    t, c = spec.t, spec.c
    root = np.sqrt(c)
    reduced = np.block([[spec.X, root * spec.beta],
                        [root * spec.beta.T, spec.B + (c - 1) * spec.C]]) if t else \
        spec.B + (c - 1) * spec.C
    return Reduction(eig_symmetric(spec.B - spec.C), c - 1, reduced)
