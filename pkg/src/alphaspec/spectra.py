"""A_alpha matrices, a Jacobi eigensolver, and tolerance-aware spectrum comparison."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-8
SYMMETRY_TOL = 1e-12
QUOTIENT_SYMMETRY_TOL = 1e-9
MAX_SWEEPS = 100


class SpectrumError(ValueError):
    pass


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise SpectrumError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def adjacency_matrix(g: Graph) -> np.ndarray:
    return g.adj.astype(float)


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees.astype(float))


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency_matrix(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency_matrix(g)


def a_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """alpha * D + (1 - alpha) * A."""
    alpha = check_alpha(alpha)
    m = (1.0 - alpha) * adjacency_matrix(g)
    m[np.diag_indices(g.n)] = alpha * g.degrees
    return m


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order; multiplicity by repetition."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float).ravel())[::-1].copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def dim(self) -> int:
        return len(self.values)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    @property
    def radius(self) -> float:
        return float(np.abs(self.values).max()) if self.dim else 0.0

    def __repr__(self):
        return f"Spectrum({np.array2string(self.values, precision=6)})"


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """Disjoint pair rounds covering every pair once (circle method)."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    k = len(players)
    rounds = []
    for _ in range(k - 1):
        pairs = []
        for i in range(k // 2):
            a, b = players[i], players[k - 1 - i]
            if a >= 0 and b >= 0:
                pairs.append((min(a, b), max(a, b)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(m: np.ndarray, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once in a fixed round-robin order;
    the rotations of one round act on disjoint index pairs and are applied
    together.  Iterates until the off-diagonal Frobenius norm drops below
    ``tol * (1 + ||m||_F)``.
    """
    a = np.array(m, dtype=float, copy=True)
    d = a.shape[0]
    if d <= 1:
        return np.diag(a).copy()
    target = tol * (1.0 + np.linalg.norm(a))
    rounds = [(np.array([p for p, _ in r]), np.array([q for _, q in r])) for r in _round_robin(d)]
    for _ in range(max_sweeps):
        if _off_norm(a) < target:
            return np.diag(a).copy()
        for p, q in rounds:
            apq = a[p, q]
            app, aqq = a[p, p], a[q, q]
            # rotations whose angle underflows are skipped
            active = np.abs(apq) > 1e-300 * np.maximum(1.0, np.abs(aqq - app))
            theta = np.where(active, (aqq - app) / (2.0 * np.where(active, apq, 1.0)), 0.0)
            big = np.abs(theta) > 1e150
            t = np.where(big, 0.5 / np.where(big, theta, 1.0),
                         np.sign(theta) / (np.abs(theta) + np.sqrt(np.where(big, 0.0, theta) ** 2 + 1.0)))
            t = np.where(active, np.where(theta == 0.0, 1.0, t), 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = a[q, p] = 0.0
    if _off_norm(a) < target:
        return np.diag(a).copy()
    raise SpectrumError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eig_symmetric(m: np.ndarray) -> Spectrum:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectrumError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise SpectrumError("matrix has non-finite entries")
    if m.size and np.abs(m - m.T).max() > SYMMETRY_TOL:
        raise SpectrumError("matrix is not symmetric")
    return Spectrum(jacobi_eigenvalues((m + m.T) / 2.0))


def symmetrize_quotient(m: np.ndarray, sizes: Sequence[float]) -> np.ndarray:
    """Delta^{1/2} m Delta^{-1/2} with Delta = diag(sizes)."""
    m = np.asarray(m, dtype=float)
    root = np.sqrt(np.asarray(sizes, dtype=float))
    if root.shape != (m.shape[0],) or (root <= 0).any():
        raise SpectrumError("sizes must be positive and match the matrix dimension")
    return root[:, None] * m / root[None, :]


def eig_quotient(m: np.ndarray, sizes: Sequence[float]) -> Spectrum:
    """Eigenvalues of an auxiliary matrix whose off-diagonal (i, j) entry is a
    shared scalar times ``sizes[j]``, via its diagonal similarity to a
    symmetric matrix."""
    s = symmetrize_quotient(m, sizes)
    if s.size:
        scale = max(1.0, float(np.abs(s).max()))
        if np.abs(s - s.T).max() > QUOTIENT_SYMMETRY_TOL * scale:
            raise SpectrumError("auxiliary matrix is not diagonally similar to a symmetric one")
    return eig_symmetric((s + s.T) / 2.0)


def spectrum_of(g: Graph, alpha: float) -> Spectrum:
    return eig_symmetric(a_alpha_matrix(g, alpha))


@dataclass(frozen=True)
class MatchResult:
    matched: bool
    max_error: float
    worst: tuple[int, float, float] | None  # (index, left value, right value)
    summary: str
    scaled_error: float = 0.0  # max_error / max(1, largest |eigenvalue|)

    def __bool__(self):
        return self.matched


def spectra_match(s1: Spectrum, s2: Spectrum, tol: float = DEFAULT_TOL) -> MatchResult:
    """Multiset equality after descending sort, with absolute tolerance scaled
    by ``max(1, largest |eigenvalue|)``."""
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    a, b = np.asarray(s1.values), np.asarray(s2.values)
    if len(a) != len(b):
        return MatchResult(False, float("inf"), None,
                           f"length mismatch: {len(a)} vs {len(b)}", float("inf"))
    if not len(a):
        return MatchResult(True, 0.0, None, "empty spectra")
    scale = max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
    dev = np.abs(a - b)
    i = int(dev.argmax())
    err = float(dev[i])
    matched = bool(err <= tol * scale)
    summary = "matched" if matched else (
        f"{int((dev > tol * scale).sum())} unmatched; worst at index {i}: "
        f"{a[i]:.17g} vs {b[i]:.17g}")
    return MatchResult(matched, err, (i, float(a[i]), float(b[i])), summary, err / scale)


def multiplicity_of(s: Spectrum, value: float, tol: float = DEFAULT_TOL) -> int:
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    return int((np.abs(np.asarray(s.values) - value) <= tol * max(1.0, abs(value))).sum())
