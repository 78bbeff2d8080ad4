"""Structured spectrum predictions: fixed eigenvalues plus a small auxiliary matrix.

Every predictor returns a :class:`SpectralPrediction` whose assembled spectrum
is meant to equal the A_alpha spectrum of the corresponding graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import cos, pi
from typing import NamedTuple, Sequence

import numpy as np

from . import printed
from .graph import (Graph, JoinedUnionSpec, complete, cycle, empty, join, joined_union, path, star,
                    union_all)
from .numtheory import divisor_graph, is_prime, is_prime_power, totient
from .partitions import BlockSymmetricSpec, block_symmetric_reduce, joined_union_aux_matrix
from .spectra import (Spectrum, adjacency_matrix, check_alpha, eig_quotient, eig_symmetric,
                      multiplicity_of, spectrum_of, symmetrize_quotient, DEFAULT_TOL)
from .groups import universal_vertices

REGULARITY_TOL = 1e-9
GROUP_TOL = 1e-12


class PredictionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SpectralPrediction:
    fixed: tuple[tuple[float, int], ...]
    aux: np.ndarray | None = None
    aux_sizes: tuple[float, ...] | None = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        fixed = tuple((float(v), int(k)) for v, k in self.fixed)
        if any(k < 1 for _, k in fixed):
            raise PredictionError("fixed multiplicities must be positive")
        object.__setattr__(self, "fixed", fixed)
        if self.aux is not None:
            aux = np.atleast_2d(np.asarray(self.aux, dtype=float)).copy()
            aux.setflags(write=False)
            sizes = (tuple(float(s) for s in self.aux_sizes) if self.aux_sizes is not None
                     else (1.0,) * aux.shape[0])
            if len(sizes) != aux.shape[0]:
                raise PredictionError("aux_sizes length differs from aux dimension")
            object.__setattr__(self, "aux", aux)
            object.__setattr__(self, "aux_sizes", sizes)

    @property
    def fixed_dim(self) -> int:
        return sum(k for _, k in self.fixed)

    @property
    def aux_dim(self) -> int:
        return 0 if self.aux is None else self.aux.shape[0]

    @property
    def dim(self) -> int:
        return self.fixed_dim + self.aux_dim

    def fixed_values(self) -> np.ndarray:
        return np.array([v for v, k in self.fixed for _ in range(k)], dtype=float)

    def aux_spectrum(self) -> Spectrum:
        if self.aux is None:
            return Spectrum([])
        return eig_quotient(self.aux, self.aux_sizes)

    def spectrum(self) -> Spectrum:
        return Spectrum(np.concatenate([self.fixed_values(), self.aux_spectrum().values]))

    def multiplicity(self, value: float, tol: float = GROUP_TOL) -> int:
        return sum(k for v, k in self.fixed if abs(v - value) <= tol * max(1.0, abs(value)))

    def to_dict(self) -> dict:
        return {
            "fixed": [{"value": v, "mult": k} for v, k in self.fixed],
            "aux": [] if self.aux is None else self.aux.tolist(),
            "aux_sizes": [] if self.aux_sizes is None else list(self.aux_sizes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def group_values(values: Sequence[float], tol: float = GROUP_TOL) -> list[tuple[float, int]]:
    """Collapse nearly-equal values into (value, multiplicity) pairs, descending."""
    out: list[list] = []
    for v in sorted(values, reverse=True):
        if out and abs(out[-1][0] - v) <= tol * max(1.0, abs(v)):
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return [(v, k) for v, k in out]


def _merge(*groups: Sequence[tuple[float, int]]) -> list[tuple[float, int]]:
    return group_values([v for g in groups for v, k in g for _ in range(k)])


class PartData(NamedTuple):
    """Order, regular degree and adjacency spectrum of one joined-union part."""

    n: int
    r: float
    spectrum: Sequence[float]


def complete_part(t: int) -> PartData:
    return PartData(t, t - 1, [t - 1.0] + [-1.0] * (t - 1))


def empty_part(t: int) -> PartData:
    return PartData(t, 0, [0.0] * t)


def cycle_part(t: int) -> PartData:
    # k = 0 gives the Perron value 2
    return PartData(t, 2, sorted((2 * cos(2 * pi * k / t) for k in range(t)), reverse=True))


def part_data(g: Graph) -> PartData:
    d = g.degrees
    if len(set(d.tolist())) != 1:
        raise PredictionError("part graph is not regular")
    return PartData(g.n, int(d[0]), list(eig_symmetric(adjacency_matrix(g)).values))


def _non_perron(part: PartData, index: int) -> list[float]:
    vals = sorted((float(v) for v in part.spectrum), reverse=True)
    if len(vals) != part.n:
        raise PredictionError(f"part {index}: spectrum has {len(vals)} values, order is {part.n}")
    if abs(vals[0] - part.r) > REGULARITY_TOL:
        raise PredictionError(
            f"part {index}: top adjacency eigenvalue {vals[0]} differs from degree {part.r}")
    return vals[1:]


def predict_joined_union(base: Graph, parts: Sequence[PartData | tuple], alpha: float) -> SpectralPrediction:
    """A_alpha spectrum of G[G_1, ..., G_n] for regular parts.

    Each part contributes ``alpha*(r_i + w_i) + (1-alpha)*lambda_ik`` for its
    non-Perron adjacency eigenvalues, where ``w_i`` is the total size of the
    parts on base-neighbors of ``i``; the auxiliary quotient matrix supplies
    the remaining ``base.n`` eigenvalues.
    """
    alpha = check_alpha(alpha)
    parts = [PartData(*p) for p in parts]
    if len(parts) != base.n:
        raise PredictionError(f"base has {base.n} vertices but {len(parts)} parts given")
    if base.n < 2:
        raise PredictionError("base graph needs at least two vertices")
    sizes = [p.n for p in parts]
    weights = base.adj.astype(int) @ np.array(sizes)
    fixed = []
    for i, part in enumerate(parts):
        shift = alpha * (part.r + weights[i])
        fixed.extend(shift + (1 - alpha) * lam for lam in _non_perron(part, i))
    aux = joined_union_aux_matrix(base, sizes, [p.r for p in parts], alpha)
    return SpectralPrediction(group_values(fixed), aux, sizes)


def predict_joined_union_spec(spec: JoinedUnionSpec, alpha: float) -> SpectralPrediction:
    return predict_joined_union(spec.base, [part_data(p) for p in spec.parts], alpha)


def predict_complete_multipartite(sizes: Sequence[int], alpha: float) -> SpectralPrediction:
    alpha = check_alpha(alpha)
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise PredictionError("complete multipartite graph needs at least two parts")
    if min(sizes) < 1:
        raise PredictionError("empty part")
    N, p = sum(sizes), len(sizes)
    if len(set(sizes)) == 1:
        t = sizes[0]
        fixed = [(alpha * t * (p - 1), t * p - p), (t * (alpha * p - 1), p - 1), (t * (p - 1.0), 1)]
        return SpectralPrediction([(v, k) for v, k in fixed if k > 0])
    fixed = [(alpha * (N - s), s - 1) for s in sizes if s > 1]
    aux = np.tile((1 - alpha) * np.array(sizes, dtype=float), (p, 1))
    aux[np.diag_indices(p)] = [alpha * (N - s) for s in sizes]
    return SpectralPrediction(_merge(fixed), aux, sizes)


def predict_join_two(n1: int, r1: float, spec1, n2: int, r2: float, spec2,
                     alpha: float) -> SpectralPrediction:
    alpha = check_alpha(alpha)
    lam1 = _non_perron(PartData(n1, r1, spec1), 0)
    lam2 = _non_perron(PartData(n2, r2, spec2), 1)
    fixed = ([alpha * (r1 + n2) + (1 - alpha) * x for x in lam1]
             + [alpha * (r2 + n1) + (1 - alpha) * x for x in lam2])
    aux = [[r1 + alpha * n2, (1 - alpha) * n2],
           [(1 - alpha) * n1, r2 + alpha * n1]]
    return SpectralPrediction(group_values(fixed), aux, (n1, n2))


def predict_join_three(parts: Sequence[PartData | tuple], alpha: float) -> SpectralPrediction:
    """G_1 join (G_2 union G_3); aux rows are ordered (G_2, G_1, G_3)."""
    alpha = check_alpha(alpha)
    (n1, r1, s1), (n2, r2, s2), (n3, r3, s3) = [PartData(*p) for p in parts]
    n = n1 + n2 + n3
    fixed = ([alpha * (r1 + n - n1) + (1 - alpha) * x for x in _non_perron(PartData(n1, r1, s1), 0)]
             + [alpha * (n1 + r2) + (1 - alpha) * x for x in _non_perron(PartData(n2, r2, s2), 1)]
             + [alpha * (n1 + r3) + (1 - alpha) * x for x in _non_perron(PartData(n3, r3, s3), 2)])
    aux = [[r2 + alpha * n1, (1 - alpha) * n1, 0.0],
           [(1 - alpha) * n2, r1 + alpha * (n2 + n3), (1 - alpha) * n3],
           [0.0, (1 - alpha) * n1, r3 + alpha * n1]]
    return SpectralPrediction(group_values(fixed), aux, (n2, n1, n3))


def _cosines(shift: float, alpha: float, length: int) -> list[float]:
    return [shift + 2 * (1 - alpha) * cos(2 * pi * k / length) for k in range(1, length)]


def _pm_deviation(printed_values, prediction: SpectralPrediction) -> float:
    return float(np.abs(np.sort(printed_values) - np.sort(prediction.aux_spectrum().values)).max())


def predict_named(family: str, *params: int, alpha: float) -> SpectralPrediction:
    """Closed forms for friendship, firefly, wheel, complete split, cone and
    complete bipartite graphs.

    Parameters: ``friendship n``, ``firefly p n`` (p copies of K_1 among n
    blades), ``wheel n`` (cycle length n), ``complete_split omega n``,
    ``cone a b`` (C_a join empty b), ``complete_bipartite a b``.
    """
    alpha = check_alpha(alpha)
    arity = {"friendship": 1, "firefly": 2, "wheel": 1, "complete_split": 2,
             "cone": 2, "complete_bipartite": 2}
    if family not in arity:
        raise PredictionError(f"unknown family {family!r}")
    if len(params) != arity[family] or any(int(x) < 1 for x in params):
        raise PredictionError(f"{family} takes {arity[family]} positive parameter(s), got {params}")
    a = alpha
    if family == "friendship":
        (n,) = params
        aux = np.zeros((n + 1, n + 1))
        aux[0, 0] = 2 * a * n
        aux[0, 1:] = 2 * (1 - a)
        aux[1:, 0] = 1 - a
        aux[np.arange(1, n + 1), np.arange(1, n + 1)] = 1 + a
        return SpectralPrediction([(3 * a - 1, n)], aux, (1,) + (2,) * n)
    if family == "firefly":
        p, n = params
        if p > n:
            raise PredictionError(f"firefly needs p <= n, got p={p}, n={n}")
        aux = np.zeros((n + 1, n + 1))
        aux[0, 0] = a * (2 * n - p)
        aux[0, 1:] = [(1 - a)] * p + [2 * (1 - a)] * (n - p)
        aux[1:, 0] = 1 - a
        aux[np.arange(1, n + 1), np.arange(1, n + 1)] = [a] * p + [1 + a] * (n - p)
        fixed = [(3 * a - 1, n - p)] if n > p else []
        return SpectralPrediction(fixed, aux, (1,) + (1,) * p + (2,) * (n - p))
    if family == "wheel":
        (n,) = params
        if n < 3:
            raise PredictionError("wheel needs a cycle of length >= 3")
        pred = SpectralPrediction(group_values(_cosines(3 * a, a, n)),
                                  [[2 + a, 1 - a], [(1 - a) * n, a * n]], (n, 1))
        pred.extras["printed_pm"] = printed.wheel_pm(n, a)
        pred.extras["printed_pm_deviation"] = _pm_deviation(pred.extras["printed_pm"], pred)
        return pred
    if family == "complete_bipartite":
        x, y = params
        fixed = [(a * y, x - 1), (a * x, y - 1)]
        pred = SpectralPrediction(_merge([f for f in fixed if f[1] > 0]),
                                  [[a * y, (1 - a) * y], [(1 - a) * x, a * x]], (x, y))
        pred.extras["printed_pm"] = printed.bipartite_pm(x, y, a)
        pred.extras["printed_pm_deviation"] = _pm_deviation(pred.extras["printed_pm"], pred)
        return pred
    if family == "cone":
        x, y = params
        if x < 3:
            raise PredictionError("cone needs a cycle of length >= 3")
        fixed = _merge(group_values(_cosines(a * (y + 2), a, x)),
                       [(a * x, y - 1)] if y > 1 else [])
        pred = SpectralPrediction(fixed, [[2 + a * y, (1 - a) * y], [(1 - a) * x, a * x]], (x, y))
        pred.extras["printed_pm"] = printed.cone_pm(x, y, a)
        pred.extras["printed_pm_deviation"] = _pm_deviation(pred.extras["printed_pm"], pred)
        return pred
    # complete split CS_{omega, n - omega} = K_omega join empty(n - omega)
    w, n = params
    if w > n:
        raise PredictionError(f"complete split needs omega <= n, got {w} > {n}")
    if w == n:
        return SpectralPrediction([(a * n - 1, n - 1)] if n > 1 else [], [[n - 1.0]], (n,))
    fixed = [(a * n - 1, w - 1), (a * w, n - w - 1)]
    pred = SpectralPrediction(_merge([f for f in fixed if f[1] > 0]),
                              [[w - 1 + a * (n - w), (1 - a) * (n - w)], [(1 - a) * w, a * w]],
                              (w, n - w))
    pred.extras["printed_pm"] = printed.complete_split_pm(w, n)
    pred.extras["printed_pm_deviation"] = _pm_deviation(pred.extras["printed_pm"], pred)
    return pred


def named_graph(family: str, *params: int) -> Graph:
    """Construct the graph a :func:`predict_named` family describes."""
    if family == "friendship":
        (n,) = params
        return join(complete(1), union_all([complete(2)] * n))
    if family == "firefly":
        p, n = params
        return join(complete(1), union_all([complete(1)] * p + [complete(2)] * (n - p)))
    if family == "wheel":
        (n,) = params
        return join(cycle(n), complete(1))
    if family == "complete_bipartite":
        x, y = params
        return join(empty(x), empty(y))
    if family == "cone":
        x, y = params
        return join(cycle(x), empty(y))
    if family == "complete_split":
        w, n = params
        return complete(n) if w == n else join(complete(w), empty(n - w))
    raise PredictionError(f"unknown family {family!r}")


def multipartite_graph(sizes: Sequence[int]) -> Graph:
    return joined_union(JoinedUnionSpec(complete(len(sizes)), tuple(empty(s) for s in sizes)))


# -- power graphs -----------------------------------------------------------

def cyclic_decomposition(n: int) -> tuple[Graph, list[int], list[int]]:
    """Base graph K_1 join G_n, clique sizes, and the order class of each part.

    Part 0 holds the identity and the generators; part ``i`` holds the
    elements of order ``d_i`` for the increasing proper divisors ``d_i``.
    """
    dg = divisor_graph(n)
    base = join(complete(1), dg.graph) if dg.divisors else complete(1)
    sizes = [totient(n) + 1] + [totient(d) for d in dg.divisors]
    return base, sizes, [n] + list(dg.divisors)


def predict_power_cyclic(n: int, alpha: float) -> SpectralPrediction:
    alpha = check_alpha(alpha)
    if n < 3:
        raise PredictionError(f"power graph prediction needs n >= 3, got {n}")
    base, sizes, _ = cyclic_decomposition(n)
    if base.n == 1:
        # n prime: the power graph is K_n
        return SpectralPrediction([(alpha * n - 1, n - 1)], [[n - 1.0]], (n,))
    return predict_joined_union(base, [complete_part(s) for s in sizes], alpha)


def extract_block_symmetric(m: np.ndarray, t: int, s: int, c: int, tol: float = 1e-12) -> BlockSymmetricSpec:
    """Read X, beta, B, C off a symmetric matrix laid out in block-symmetric form."""
    X, beta = m[:t, :t], m[:t, t:t + s]
    B = m[t:t + s, t:t + s]
    C = m[t:t + s, t + s:t + 2 * s] if c > 1 else np.zeros((s, s))
    spec = BlockSymmetricSpec(X, beta, B, C, c)
    if np.abs(spec.assemble() - m).max() > tol * max(1.0, np.abs(m).max()):
        raise PredictionError("matrix is not in block-symmetric form")
    return spec


def _reduced(aux: np.ndarray, sizes: Sequence[int], order: Sequence[int], t: int, c: int):
    order = list(order)
    sym = symmetrize_quotient(aux, sizes)[np.ix_(order, order)]
    return block_symmetric_reduce(extract_block_symmetric(sym, t, 1, c))


def predict_power_group(kind: str, *params: int, alpha: float) -> SpectralPrediction:
    """Power-graph spectra for elementary abelian, non-abelian order-pq,
    dihedral prime-power and generalized quaternion groups.

    ``elementary_abelian p k``, ``nonabelian_pq p q``, ``dihedral_prime_power p z``
    (group of order 2p^z), ``dicyclic_two_power n`` (group of order 4n).
    """
    a = check_alpha(alpha)
    if kind == "elementary_abelian":
        p, k = params
        if not is_prime(p) or k < 1:
            raise PredictionError(f"need a prime p and k >= 1, got p={p}, k={k}")
        l = (p**k - 1) // (p - 1)
        base = star(l + 1)
        pred = predict_joined_union(base, [complete_part(1)] + [complete_part(p - 1)] * l, a)
        red = _reduced(pred.aux, pred.aux_sizes, range(l + 1), 1, l)
        fixed = _merge(pred.fixed, [(float(red.repeated[0]), l - 1)] if l > 1 else [])
        out = SpectralPrediction(fixed, red.reduced)
        out.extras.update(quotient=pred.aux, quotient_sizes=pred.aux_sizes,
                          printed_pm=printed.elementary_abelian_pm(p, k, a))
        return out
    if kind == "nonabelian_pq":
        p, q = params
        if not (is_prime(p) and is_prime(q)) or p >= q or (q - 1) % p:
            raise PredictionError(f"no non-abelian group of order {p}*{q}")
        base = star(q + 2)
        parts = [complete_part(1)] + [complete_part(p - 1)] * q + [complete_part(q - 1)]
        pred = predict_joined_union(base, parts, a)
        order = [0, q + 1] + list(range(1, q + 1))
        red = _reduced(pred.aux, pred.aux_sizes, order, 2, q)
        fixed = _merge(pred.fixed, [(float(red.repeated[0]), q - 1)])
        out = SpectralPrediction(fixed, red.reduced)
        out.extras.update(quotient=pred.aux, quotient_sizes=pred.aux_sizes)
        return out
    if kind == "dihedral_prime_power":
        p, z = params
        n = p**z
        if not is_prime(p) or z < 1 or n < 3:
            raise PredictionError(f"need a prime power p^z >= 3, got {p}^{z}")
        pred = predict_joined_union(path(3), [complete_part(n - 1), complete_part(1), empty_part(n)], a)
        coeffs = printed.dihedral_cubic(n, a)
        pred.extras.update(printed_matrix=printed.dihedral_matrix(n, a),
                           printed_cubic=coeffs,
                           printed_cubic_roots=np.sort(np.roots(coeffs).real)[::-1],
                           aux_charpoly=np.poly(pred.aux))
        return pred
    if kind == "dicyclic_two_power":
        (n,) = params
        if n < 2 or not is_prime_power(n) or n & (n - 1):
            raise PredictionError(f"need n a power of 2 with n >= 2, got {n}")
        base = star(n + 2)
        parts = [complete_part(2), complete_part(2 * n - 2)] + [complete_part(2)] * n
        pred = predict_joined_union(base, parts, a)
        red = _reduced(pred.aux, pred.aux_sizes, range(n + 2), 2, n)
        fixed = _merge(pred.fixed, [(float(red.repeated[0]), n - 1)])
        out = SpectralPrediction(fixed, red.reduced)
        out.extras.update(quotient=pred.aux, quotient_sizes=pred.aux_sizes,
                          printed_fixed=printed.dicyclic_fixed(n, a),
                          printed_matrix=printed.dicyclic_reduced_matrix(n, a),
                          printed_sizes=(2, 2 * n - 2, 2 * n))
        return out
    raise PredictionError(f"unknown power-graph kind {kind!r}")


@dataclass(frozen=True)
class MultiplicityBound:
    b: int
    bound: int
    observed: int

    @property
    def holds(self) -> bool:
        return self.observed >= self.bound


def universal_multiplicity_bound(g: Graph, alpha: float, tol: float = DEFAULT_TOL) -> MultiplicityBound:
    """Observed multiplicity of ``alpha*n - 1`` against the b - 1 lower bound."""
    if g.n < 3:
        raise PredictionError("needs a graph of order >= 3")
    b = len(universal_vertices(g))
    observed = multiplicity_of(spectrum_of(g, alpha), alpha * g.n - 1, tol)
    return MultiplicityBound(b, b - 1, observed)
