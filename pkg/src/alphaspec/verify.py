"""Batch verification: predicted spectra against direct eigensolves.

A suite is a named family of cases.  Each case knows how to build its graph
and how to produce a prediction at a given alpha; ``run_sweep`` evaluates
every (case, alpha) pair and returns the reports in case order.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import printed
from .closed_forms import (SpectralPrediction, cyclic_decomposition, multipartite_graph,
                           named_graph, predict_complete_multipartite, predict_joined_union_spec,
                           predict_named, predict_power_cyclic, predict_power_group)
from .graph import Graph, JoinedUnionSpec, complete, cycle, empty, from_edges, joined_union
from .groups import (cyclic, dicyclic, dihedral, elementary_abelian, nonabelian_pq_power_graph,
                     power_graph)
from .numtheory import factorize
from .spectra import DEFAULT_TOL, Spectrum, eig_quotient, eig_symmetric, a_alpha_matrix, spectra_match

ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
REPORT_FIELDS = ("case", "n", "alpha", "matched", "max_error", "fixed_dim", "aux_dim")


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    case: str
    n: int
    alpha: float
    matched: bool
    max_error: float  # scaled by max(1, spectral radius)
    fixed_dim: int
    aux_dim: int
    wall_time: float = 0.0
    detail: str = ""

    def row(self) -> dict:
        return {k: getattr(self, k) for k in REPORT_FIELDS}


def verify_prediction(g: Graph, pred: SpectralPrediction, alpha: float, tol: float = DEFAULT_TOL,
                      case: str = "") -> VerificationReport:
    """Compare ``pred`` with the A_alpha spectrum of ``g``.

    A dimension mismatch is reported as a structural failure: matched is
    false, the error is infinite and no eigensolve is attempted.
    """
    start = time.perf_counter()
    if pred.dim != g.n:
        return VerificationReport(case, g.n, alpha, False, math.inf, pred.fixed_dim, pred.aux_dim,
                                  time.perf_counter() - start,
                                  f"structural: prediction has dimension {pred.dim}, graph order {g.n}")
    direct = eig_symmetric(a_alpha_matrix(g, alpha))
    res = spectra_match(direct, pred.spectrum(), tol)
    return VerificationReport(case, g.n, alpha, res.matched, res.scaled_error, pred.fixed_dim,
                              pred.aux_dim, time.perf_counter() - start, res.summary)


# -- cases and suites ---------------------------------------------------------

@dataclass(frozen=True)
class Case:
    case_id: str
    build: Callable[[], Graph]
    predict: Callable[[float], SpectralPrediction]


@dataclass(frozen=True)
class Suite:
    name: str
    default_params: tuple
    make: Callable[..., Case]


PART_POOL = (("K", 1), ("K", 2), ("K", 3), ("K", 4), ("C", 3), ("C", 4), ("C", 5),
             ("E", 1), ("E", 2), ("E", 3))


def _pool_graph(kind: str, t: int) -> Graph:
    return {"K": complete, "C": cycle, "E": empty}[kind](t)


def random_connected_graph(rng: np.random.Generator, n: int, p_extra: float = 0.4) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    for i, j in itertools.combinations(range(n), 2):
        if (i, j) not in edges and rng.random() < p_extra:
            edges.add((i, j))
    return from_edges(n, sorted(edges))


def random_spec(seed: int, index: int) -> JoinedUnionSpec:
    rng = np.random.default_rng([seed, index])
    base = random_connected_graph(rng, int(rng.integers(3, 7)))
    picks = rng.integers(0, len(PART_POOL), size=base.n)
    return JoinedUnionSpec(base, tuple(_pool_graph(*PART_POOL[i]) for i in picks))


def _random_case(index: int, seed: int = 0) -> Case:
    spec = random_spec(seed, index)
    return Case(f"joined_union_random:seed={seed}:i={index}", lambda: joined_union(spec),
                lambda a: predict_joined_union_spec(spec, a))


def _cyclic_case(prefix: str):
    def make(n: int, seed: int = 0) -> Case:
        return Case(f"{prefix}:n={n}", lambda: power_graph(cyclic(n)).graph,
                    lambda a: predict_power_cyclic(n, a))
    return make


def _dihedral_case(pz: int, seed: int = 0) -> Case:
    (p, z), = factorize(pz)
    return Case(f"dihedral:n={pz}", lambda: power_graph(dihedral(2 * pz)).graph,
                lambda a: predict_power_group("dihedral_prime_power", p, z, alpha=a))


def _dicyclic_case(n: int, seed: int = 0) -> Case:
    return Case(f"dicyclic:n={n}", lambda: power_graph(dicyclic(4 * n)).graph,
                lambda a: predict_power_group("dicyclic_two_power", n, alpha=a))


def _elementary_case(pk: tuple, seed: int = 0) -> Case:
    p, k = pk
    return Case(f"elementary_abelian:p={p},k={k}", lambda: power_graph(elementary_abelian(p, k)).graph,
                lambda a: predict_power_group("elementary_abelian", p, k, alpha=a))


def _nonabelian_case(pq: tuple, seed: int = 0) -> Case:
    p, q = pq
    return Case(f"nonabelian_pq:p={p},q={q}", lambda: nonabelian_pq_power_graph(p, q),
                lambda a: predict_power_group("nonabelian_pq", p, q, alpha=a))


def _named_case(family: str):
    def make(params, seed: int = 0) -> Case:
        params = tuple(params) if isinstance(params, (tuple, list)) else (params,)
        label = ",".join(str(x) for x in params)
        return Case(f"{family}:{label}", lambda: named_graph(family, *params),
                    lambda a: predict_named(family, *params, alpha=a))
    return make


def _multipartite_case(sizes, seed: int = 0) -> Case:
    sizes = tuple(sizes)
    return Case(f"complete_multipartite:{','.join(map(str, sizes))}",
                lambda: multipartite_graph(sizes),
                lambda a: predict_complete_multipartite(sizes, a))


def _pairs(lo: int, hi: int, first_lo: int = 1) -> tuple:
    return tuple((a, b) for b in range(lo, hi + 1) for a in range(first_lo, b + 1))


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("joined_union_random", tuple(range(50)), _random_case),
    Suite("power_cyclic", tuple(range(3, 61)), _cyclic_case("power_cyclic")),
    Suite("pq_pqr", (6, 10, 15, 21, 35, 30, 42), _cyclic_case("pq_pqr")),
    Suite("pq_power", (12, 18, 24, 48, 50), _cyclic_case("pq_power")),
    Suite("dihedral", (3, 4, 5, 7, 8, 9), _dihedral_case),
    Suite("dicyclic", (2, 4, 8), _dicyclic_case),
    Suite("elementary_abelian", ((2, 2), (2, 3), (3, 2), (5, 1), (3, 3)), _elementary_case),
    Suite("nonabelian_pq", ((2, 3), (2, 5), (2, 7), (3, 7), (5, 11)), _nonabelian_case),
    Suite("friendship", tuple(range(1, 11)), _named_case("friendship")),
    Suite("firefly", _pairs(1, 8), _named_case("firefly")),
    Suite("complete_bipartite", tuple(itertools.product(range(1, 9), repeat=2)),
          _named_case("complete_bipartite")),
    Suite("complete_split", _pairs(1, 10), _named_case("complete_split")),
    Suite("cone", tuple(itertools.product(range(3, 9), range(1, 6))), _named_case("cone")),
    Suite("wheel", tuple(range(3, 13)), _named_case("wheel")),
    Suite("complete_multipartite",
          tuple(c for k in (2, 3, 4) for c in itertools.combinations_with_replacement(range(1, 5), k)),
          _multipartite_case),
)}

# The power-graph suites whose instances feed the universal-vertex bound.
POWER_SUITES = ("power_cyclic", "pq_pqr", "pq_power", "dihedral", "dicyclic",
                "elementary_abelian", "nonabelian_pq")
NAMED_SUITES = ("friendship", "firefly", "complete_bipartite", "complete_split", "cone", "wheel",
                "complete_multipartite")


def suite_cases(suite: str, params: Iterable | None = None, seed: int = 0) -> list[Case]:
    if suite not in SUITES:
        raise VerifyError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    s = SUITES[suite]
    return [s.make(p, seed=seed) for p in (s.default_params if params is None else params)]


def run_cases(cases: Sequence[Case], alphas: Iterable[float] = ALPHA_GRID, tol: float = DEFAULT_TOL,
              workers: int = 1) -> list[VerificationReport]:
    alphas = [float(a) for a in alphas]
    if not alphas:
        return []
    graphs = [c.build() for c in cases]
    jobs = [(c, g, a) for c, g in zip(cases, graphs) for a in alphas]

    def one(job):
        c, g, a = job
        return verify_prediction(g, c.predict(a), a, tol, c.case_id)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, jobs))
    return [one(j) for j in jobs]


def run_sweep(suite: str, params: Iterable | None = None, alphas: Iterable[float] = ALPHA_GRID,
              tol: float = DEFAULT_TOL, seed: int = 0, workers: int = 1) -> list[VerificationReport]:
    """One report per (instance, alpha), ordered by instance then alpha."""
    return run_cases(suite_cases(suite, params, seed), alphas, tol, workers)


def summarize(reports: Sequence[VerificationReport]) -> dict:
    passed = sum(r.matched for r in reports)
    return {"total": len(reports), "matched": passed, "failed": len(reports) - passed}


# -- serialization --------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".17g") if math.isfinite(x) else ("inf" if x > 0 else "-inf" if x < 0 else "nan")
    return str(x)


def _json_value(x) -> str:
    if isinstance(x, float) and not math.isfinite(x):
        return "null"
    if isinstance(x, str):
        return json.dumps(x)
    return _fmt(x)


def format_report(reports: Sequence[VerificationReport], fmt: str = "json") -> str:
    if fmt == "json":
        rows = ["{" + ", ".join(f'"{k}": {_json_value(v)}' for k, v in r.row().items()) + "}"
                for r in reports]
        return "[" + ",\n ".join(rows) + "]\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_FIELDS)
        for r in reports:
            w.writerow([_fmt(v) for v in r.row().values()])
        return buf.getvalue()
    raise VerifyError(f"unknown report format {fmt!r}")


def write_report(reports: Sequence[VerificationReport], fmt: str, destination) -> None:
    """Write to a path, or to any object with ``write``."""
    text = format_report(reports, fmt)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {destination}: {exc.strerror or exc}") from exc


# -- published closed forms against the generic construction ---------------------

@dataclass(frozen=True)
class Finding:
    name: str
    case: str
    alpha: float
    deviation: float
    consistent: bool
    note: str = ""


def _entry_dev(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape != b.shape:
        return math.inf
    return float(np.abs(a - b).max())


def _spec_dev(left: Sequence[float], right: Sequence[float]) -> float:
    return spectra_match(Spectrum(left), Spectrum(right), 1.0).scaled_error


def _aux_by_divisor(n: int, alpha: float) -> tuple[np.ndarray, list[int]]:
    """Generic quotient for P(Z_n), rows labelled by order class (n for the hub)."""
    _, _, order = cyclic_decomposition(n)
    return predict_power_cyclic(n, alpha).aux, order


def _pq_findings(n: int, a: float, tol: float) -> list[Finding]:
    (p, _), (q, _) = factorize(n)
    aux, _ = _aux_by_divisor(n, a)
    dev = _entry_dev(printed.pq_matrix(p, q, a), aux[np.ix_([1, 0, 2], [1, 0, 2])])
    return [Finding("pq_matrix", f"n={n}", a, dev, dev <= tol)]


def _pqr_findings(n: int, a: float, tol: float) -> list[Finding]:
    (p, _), (q, _), (r, _) = factorize(n)
    aux, order = _aux_by_divisor(n, a)
    perm = [order.index(d) for d in (n, p, q, r, p * q, p * r, q * r)]
    lit = printed.pqr_matrix(p, q, r, a)
    gen = aux[np.ix_(perm, perm)]
    dev = _entry_dev(lit, gen)
    note = ""
    if dev > tol:
        bad = np.argwhere(np.abs(lit - gen) > tol)
        note = "entries " + " ".join(f"({i},{j})" for i, j in bad)
    return [Finding("pqr_matrix", f"n={n}", a, dev, dev <= tol, note)]


def _pq_power_findings(n: int, a: float, tol: float) -> list[Finding]:
    (p1, e1), (p2, e2) = factorize(n)
    p, q, N = (p1, p2, e2) if e1 == 1 else (p2, p1, e1)
    out = []
    lit = sorted(v for _, v, k in printed.pq_power_fixed(p, q, N, a) for _ in range(k))
    gen = sorted(predict_power_cyclic(n, a).fixed_values())
    dev = math.inf if len(lit) != len(gen) else float(np.abs(np.subtract(lit, gen)).max(initial=0))
    out.append(Finding("pq_power_fixed", f"n={n}", a, dev, dev <= tol))
    if N % 2:
        m = (N - 1) // 2
        phi_n = n - n // p - n // q + n // (p * q)
        right = a * (phi_n + q ** (2 * m) + (p - 1) * q ** (2 * m)) - 1
        dev = abs(printed.pq_power_odd_last_value(p, q, m, a) - right)
        out.append(Finding("pq_power_odd_last", f"n={n}", a, dev, dev <= tol))
    if N == 2:
        aux, order = _aux_by_divisor(n, a)
        keys = {"hub": n, str(p): p, str(q): q, f"{q}^2": q * q, f"{p}*{q}": p * q}
        stated = printed.pq_power_even_diagonal_m1(p, q, a)
        devs = {k: abs(v - aux[order.index(keys[k]), order.index(keys[k])]) for k, v in stated.items()}
        bad = [k for k, v in devs.items() if v > tol]
        out.append(Finding("pq_power_diagonal_m1", f"n={n}", a, float(max(devs.values())), not bad,
                           "rows " + ",".join(bad) if bad else ""))
    return out


def _dihedral_findings(pz: int, a: float, tol: float) -> list[Finding]:
    (p, z), = factorize(pz)
    pred = predict_power_group("dihedral_prime_power", p, z, alpha=a)
    dev_m = _entry_dev(pred.extras["printed_matrix"], pred.aux)
    dev_c = _spec_dev(pred.extras["printed_cubic_roots"], pred.aux_spectrum().values)
    return [Finding("dihedral_matrix", f"n={pz}", a, dev_m, dev_m <= tol),
            Finding("dihedral_cubic", f"n={pz}", a, dev_c, dev_c <= tol)]


def dicyclic_literal_spectrum(n: int, a: float) -> Spectrum:
    """Spectrum assembled from the stated fixed list and stated 3x3 matrix."""
    fixed = [v for v, k in printed.dicyclic_fixed(n, a) for _ in range(k)]
    aux = eig_quotient(printed.dicyclic_reduced_matrix(n, a), (2, 2 * n - 2, 2 * n))
    return Spectrum(np.concatenate([fixed, aux.values]))


def _dicyclic_findings(n: int, a: float, tol: float) -> list[Finding]:
    lit = dicyclic_literal_spectrum(n, a)
    direct = eig_symmetric(a_alpha_matrix(power_graph(dicyclic(4 * n)).graph, a))
    res = spectra_match(direct, lit, tol)
    note = f"stated dimension {lit.dim}, graph order {4 * n}" if lit.dim != 4 * n else ""
    return [Finding("dicyclic_literal", f"n={n}", a, res.scaled_error, res.matched, note)]


def _elementary_findings(pk: tuple, a: float, tol: float) -> list[Finding]:
    p, k = pk
    pred = predict_power_group("elementary_abelian", p, k, alpha=a)
    aux = pred.aux_spectrum().values
    stated = np.array(printed.elementary_abelian_pm(p, k, a))
    return [Finding("elementary_abelian_pm", f"p={p},k={k}", a, _spec_dev(stated, aux),
                    _spec_dev(stated, aux) <= tol),
            Finding("elementary_abelian_pm_halved", f"p={p},k={k}", a, _spec_dev(stated / 2, aux),
                    _spec_dev(stated / 2, aux) <= tol)]


def _nonabelian_findings(pq: tuple, a: float, tol: float) -> list[Finding]:
    p, q = pq
    pred = predict_power_group("nonabelian_pq", p, q, alpha=a)
    dev_m = _entry_dev(printed.nonabelian_pq_matrix(p, q, a), pred.extras["quotient"])
    red = eig_quotient(printed.nonabelian_pq_reduced(p, q, a), (1, q * (p - 1), q - 1))
    dev_r = _spec_dev(red.values, pred.aux_spectrum().values)
    return [Finding("nonabelian_pq_matrix", f"p={p},q={q}", a, dev_m, dev_m <= tol),
            Finding("nonabelian_pq_reduced", f"p={p},q={q}", a, dev_r, dev_r <= tol)]


def _named_findings(family: str, params: tuple, a: float, tol: float) -> list[Finding]:
    label = f"{family}:{','.join(map(str, params))}"
    if family == "friendship":
        (n,) = params
        pred = predict_named("friendship", n, alpha=a)
        lit = eig_quotient(printed.friendship_matrix(n, a), pred.aux_sizes)
        dev = _spec_dev(lit.values, pred.aux_spectrum().values)
        return [Finding("friendship_matrix", label, a, dev, dev <= tol)]
    pred = predict_named(family, *params, alpha=a)
    if "printed_pm" not in pred.extras:
        return []
    dev = pred.extras["printed_pm_deviation"]
    dev = math.inf if math.isnan(dev) else dev
    out = [Finding(f"{family}_pm", label, a, dev, dev <= tol)]
    if family in ("wheel", "cone"):
        length = params[0]
        stated = (printed.wheel_cosines(length, a) if family == "wheel"
                  else printed.cone_cosines(*params, a))
        right = [a * (params[1] + 2 if family == "cone" else 3)
                 + 2 * (1 - a) * math.cos(2 * math.pi * k / length) for k in range(1, length)]
        cdev = math.inf if len(stated) != len(right) else _spec_dev(stated, right)
        out.append(Finding(f"{family}_cosines", label, a, cdev, cdev <= tol,
                           f"{len(stated)} stated values, {len(right)} needed"
                           if len(stated) != len(right) else ""))
    return out


def errata_findings(alphas: Iterable[float] = ALPHA_GRID, tol: float = DEFAULT_TOL) -> list[Finding]:
    """Evaluate every published closed form against the generic construction."""
    out: list[Finding] = []
    for a in [float(x) for x in alphas]:
        for n in (6, 10, 15, 21, 35):
            out += _pq_findings(n, a, tol)
        for n in (30, 42):
            out += _pqr_findings(n, a, tol)
        for n in SUITES["pq_power"].default_params:
            out += _pq_power_findings(n, a, tol)
        for pz in SUITES["dihedral"].default_params:
            out += _dihedral_findings(pz, a, tol)
        for n in SUITES["dicyclic"].default_params:
            out += _dicyclic_findings(n, a, tol)
        for pk in SUITES["elementary_abelian"].default_params:
            out += _elementary_findings(pk, a, tol)
        for pq in SUITES["nonabelian_pq"].default_params:
            out += _nonabelian_findings(pq, a, tol)
        for n in (2, 3, 5):
            out += _named_findings("friendship", (n,), a, tol)
        for params in ((4, 6), (3, 8), (5, 5)):
            out += _named_findings("complete_split", params, a, tol)
        for params in ((4, 2), (5, 3)):
            out += _named_findings("cone", params, a, tol)
        for n in (4, 6):
            out += _named_findings("wheel", (n,), a, tol)
        out += _named_findings("complete_bipartite", (2, 3), a, tol)
    return out
