"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (echoed in the pytest terminal
summary, or printed directly when this file is run as a script).
"""

import time
import warnings
from collections import defaultdict

import numpy as np
import pytest

from alphaspec import printed
from alphaspec.closed_forms import (cyclic_decomposition, predict_power_cyclic, universal_multiplicity_bound)
from alphaspec.graph import Graph, joined_union
from alphaspec.groups import (cyclic, dicyclic, elementary_abelian, power_graph)
from alphaspec.numtheory import factorize, is_prime, is_prime_power, proper_divisors, totient
from alphaspec.partitions import (BlockSymmetricSpec, NonEquitableWarning, VertexPartition,
                                  block_symmetric_reduce, is_equitable, natural_partition, quotient_matrix)
from alphaspec.spectra import (Spectrum, a_alpha_matrix, adjacency_matrix, degree_matrix, eig_quotient,
                               laplacian, multiplicity_of, signless_laplacian, spectra_match, spectrum_of)
from alphaspec.verify import (ALPHA_GRID, NAMED_SUITES, POWER_SUITES, SUITES, dicyclic_literal_spectrum,
                              errata_findings, random_spec, run_sweep, suite_cases)
from conftest import ACCEPTANCE_LINES

TOL = 1e-8
TIME_LIMIT = 60.0


def record(number: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def sweep_line(reports, seconds):
    bad = [f"{r.case}@{r.alpha}" for r in reports if not r.matched]
    worst = max((r.max_error for r in reports), default=0.0)
    return bad, f"{len(reports) - len(bad)}/{len(reports)} matched, worst scaled error {worst:.2e}, {seconds:.1f}s"


def test_criterion_01_joined_union_random():
    reports, secs = timed(lambda: run_sweep("joined_union_random", tol=TOL))
    bad, text = sweep_line(reports, secs)
    record(1, len(reports) == 250 and not bad and secs < TIME_LIMIT, f"random joined unions: {text}")


def test_criterion_02_power_cyclic():
    reports, secs = timed(lambda: run_sweep("power_cyclic", tol=TOL))
    bad, text = sweep_line(reports, secs)
    exact_dev = 0.0
    for n in range(3, 61):
        if not is_prime_power(n):
            continue
        g = power_graph(cyclic(n)).graph
        for a in ALPHA_GRID:
            expected = Spectrum([n - 1] + [a * n - 1] * (n - 1))
            exact_dev = max(exact_dev, spectra_match(spectrum_of(g, a), expected, 1.0).max_error)
    ok = len(reports) == 58 * 5 and not bad and exact_dev <= 1e-10 and secs < TIME_LIMIT
    record(2, ok, f"P(Z_n), 3<=n<=60: {text}; prime powers max deviation {exact_dev:.1e}")


def _pq_literal_dev(n, a):
    (p, _), (q, _) = factorize(n)
    aux = predict_power_cyclic(n, a).aux
    return np.abs(printed.pq_matrix(p, q, a) - aux[np.ix_([1, 0, 2], [1, 0, 2])]).max()


def _pqr_literal_dev(n, a):
    (p, _), (q, _), (r, _) = factorize(n)
    _, _, order = cyclic_decomposition(n)
    perm = [order.index(d) for d in (n, p, q, r, p * q, p * r, q * r)]
    aux = predict_power_cyclic(n, a).aux
    diff = np.abs(printed.pqr_matrix(p, q, r, a) - aux[np.ix_(perm, perm)])
    return diff.max(), [tuple(int(x) for x in ij) for ij in np.argwhere(diff > 1e-12)]


def test_criterion_03_pq_pqr():
    reports, secs = timed(lambda: run_sweep("pq_pqr", tol=TOL))
    bad, text = sweep_line(reports, secs)
    pq_dev = max(_pq_literal_dev(n, a) for n in (6, 10, 15, 21, 35) for a in ALPHA_GRID)
    pqr_bad = {}
    for n in (30, 42):
        for a in ALPHA_GRID:
            dev, cells = _pqr_literal_dev(n, a)
            if dev > 1e-12:
                pqr_bad.setdefault(n, set()).update(cells)
    ok = not bad and pq_dev <= 1e-12 and not pqr_bad
    detail = "; ".join(f"n={n} stated matrix differs at {sorted(c)}" for n, c in pqr_bad.items())
    record(3, ok, f"pq/pqr: spectra {text}; stated pq matrix max deviation {pq_dev:.1e}"
                  + (f"; {detail}" if detail else "; stated pqr matrix agrees"))


def test_criterion_04_pq_power():
    reports, secs = timed(lambda: run_sweep("pq_power", tol=TOL))
    bad, text = sweep_line(reports, secs)
    mismatched = []
    for n in (12, 18, 24, 48, 50):
        (p1, e1), (p2, e2) = factorize(n)
        p, q, N = (p1, p2, e2) if e1 == 1 else (p2, p1, e1)
        for a in ALPHA_GRID:
            stated = sorted(v for _, v, k in printed.pq_power_fixed(p, q, N, a) for _ in range(k))
            generic = sorted(predict_power_cyclic(n, a).fixed_values())
            if len(stated) != len(generic) or np.abs(np.subtract(stated, generic)).max() > 1e-10:
                mismatched.append((n, a))
        # multiplicities by divisor class: phi(d) - 1 for each proper divisor, phi(n) for the hub
        fixed_dim = totient(n) + sum(totient(d) - 1 for d in proper_divisors(n))
        if predict_power_cyclic(n, 0.5).fixed_dim != fixed_dim:
            mismatched.append((n, "dim"))
    record(4, not bad and not mismatched, f"pq^N: {text}; stated fixed lists "
           + ("agree" if not mismatched else f"disagree at {mismatched}"))


def test_criterion_05_dihedral():
    reports, secs = timed(lambda: run_sweep("dihedral", tol=TOL))
    bad, text = sweep_line(reports, secs)
    findings = [f for f in errata_findings(tol=TOL) if f.name == "dihedral_cubic"]
    disagree = sorted({(f.case, f.alpha) for f in findings if not f.consistent})
    reported = len(findings) == 6 * len(ALPHA_GRID)
    note = ("stated cubic roots agree" if not disagree else
            f"erratum reported: stated cubic roots differ from the 3x3 characteristic roots in "
            f"{len(disagree)}/{len(findings)} cases (agree only at alpha=1)")
    record(5, not bad and reported, f"dihedral: {text}; {note}")


def test_criterion_06_dicyclic_stated():
    rows = []
    ok = True
    for n in (2, 4, 8):
        g = power_graph(dicyclic(4 * n)).graph
        for a in ALPHA_GRID:
            res = spectra_match(spectrum_of(g, a), dicyclic_literal_spectrum(n, a), TOL)
            ok &= res.matched
            if not res.matched:
                rows.append(f"n={n},a={a}: {res.summary}")
    corrected = run_sweep("dicyclic", tol=TOL)
    extra = f"; corrected prediction {sum(r.matched for r in corrected)}/{len(corrected)} matched"
    record(6, ok, ("stated list and 3x3 matrix match direct" if ok else
                   f"stated list and 3x3 matrix fail in {len(rows)}/15 cases, e.g. {rows[0]}") + extra)


def test_criterion_07_elementary_abelian():
    reports, secs = timed(lambda: run_sweep("elementary_abelian", tol=TOL))
    bad, text = sweep_line(reports, secs)
    short = []
    for p, k in SUITES["elementary_abelian"].default_params:
        l = (p**k - 1) // (p - 1)
        g = power_graph(elementary_abelian(p, k)).graph
        for a in ALPHA_GRID:
            if multiplicity_of(spectrum_of(g, a), a * p - 1, TOL) < l * (p - 2):
                short.append((p, k, a))
    record(7, not bad and not short, f"elementary abelian: {text}; multiplicity bound l(p-2) "
           + ("holds" if not short else f"fails at {short}"))


def _suite_graphs(name):
    return [(c.case_id, c.build()) for c in suite_cases(name)]


def test_criterion_08_multiplicity_bound():
    failures, checked = [], 0
    for suite in POWER_SUITES:
        for case, g in _suite_graphs(suite):
            for a in ALPHA_GRID:
                mb = universal_multiplicity_bound(g, a, TOL)
                checked += 1
                if not mb.holds:
                    failures.append((case, a))
    unequal = defaultdict(list)
    cases = 0
    for n in range(3, 61):
        f = factorize(n)
        if not (is_prime(n) or (len(f) == 2 and all(k == 1 for _, k in f))):
            continue
        g = power_graph(cyclic(n)).graph
        kind = "prime" if is_prime(n) else "pq"
        for a in ALPHA_GRID:
            cases += 1
            obs = multiplicity_of(spectrum_of(g, a), a * n - 1, TOL)
            if obs != totient(n):
                unequal[(kind, a)].append(n)
    ok = not failures and not unequal
    breakdown = ", ".join(f"{kind} at alpha={a}: {len(ns)} n (e.g. n={ns[0]})"
                          for (kind, a), ns in sorted(unequal.items()))
    record(8, ok, f"bound b-1 holds in {checked - len(failures)}/{checked} cases; multiplicity of "
                  f"alpha*n-1 equals phi(n) in {cases - sum(map(len, unequal.values()))}/{cases} "
                  f"prime/pq cases" + (f"; exceeds phi(n) for {breakdown}" if unequal else ""))


def test_criterion_09_matrix_identities():
    rng = np.random.default_rng(9)
    graphs = [g for s in ("joined_union_random", "power_cyclic") for _, g in _suite_graphs(s)[:20]]
    bad = 0
    for g in graphs:
        A, D = adjacency_matrix(g), degree_matrix(g)
        bad += not np.array_equal(a_alpha_matrix(g, 0.0), A)
        bad += not np.array_equal(a_alpha_matrix(g, 1.0), D)
        bad += not np.array_equal(2 * a_alpha_matrix(g, 0.5), signless_laplacian(g))
        # dyadic alphas are exactly representable, so the identity can be checked bit for bit
        for a, c in rng.integers(0, 2**20 + 1, size=(5, 2)) / 2**20:
            bad += not np.array_equal(a_alpha_matrix(g, a) - a_alpha_matrix(g, c), (a - c) * laplacian(g))
    record(9, bad == 0, f"A_0=A, A_1=D, 2A_1/2=Q and the difference identity on {len(graphs)} graphs, "
                        f"{bad} violations")


def _interlaces(full, quot):
    d, s = len(full), len(quot)
    return all(full[i] + 1e-9 >= quot[i] >= full[i + d - s] - 1e-9 for i in range(s))


def test_criterion_10_equitable():
    contain_bad = 0
    for i in range(50):
        spec = random_spec(0, i)
        g = joined_union(spec)
        p = natural_partition(spec)
        for a in ALPHA_GRID:
            full = spectrum_of(g, a).values
            q = quotient_matrix(g, p, a)
            remaining = list(full)
            for mu in eig_quotient(q, p.sizes):
                j = int(np.argmin(np.abs(np.array(remaining) - mu)))
                if abs(remaining[j] - mu) > TOL * max(1.0, abs(mu)):
                    contain_bad += 1
                remaining.pop(j)
    rng = np.random.default_rng(10)
    inter_bad = tried = 0
    while tried < 20:
        n = int(rng.integers(5, 12))
        upper = np.triu(rng.random((n, n)) < 0.5, 1)
        g = Graph(upper | upper.T)
        labels = rng.integers(0, int(rng.integers(2, n)), size=n)
        p = VertexPartition(tuple(tuple(np.flatnonzero(labels == k)) for k in np.unique(labels)))
        a = float(rng.random())
        if is_equitable(g, p, a):
            continue
        tried += 1
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonEquitableWarning)
            q = quotient_matrix(g, p, a)
        root = np.sqrt(p.sizes)
        sym = root[:, None] * q / root[None, :]
        inter_bad += not _interlaces(spectrum_of(g, a).values, Spectrum(np.linalg.eigvalsh((sym + sym.T) / 2)).values)
    red_bad = 0
    for _ in range(20):
        t, s, c = int(rng.integers(0, 3)), int(rng.integers(1, 4)), int(rng.integers(1, 5))
        sym = lambda k: (lambda m: (m + m.T) / 2)(rng.standard_normal((k, k)))
        spec = BlockSymmetricSpec(sym(t) if t else np.zeros((0, 0)), rng.standard_normal((t, s)),
                                  sym(s), sym(s), c)
        red = block_symmetric_reduce(spec)
        red_bad += not spectra_match(Spectrum(red.full_values()),
                                     Spectrum(np.linalg.eigvalsh(spec.assemble())), TOL).matched
    record(10, not (contain_bad or inter_bad or red_bad),
           f"quotient containment on 250 natural partitions ({contain_bad} misses), interlacing on 20 "
           f"non-equitable partitions ({inter_bad} misses), reassembly on 20 block specs ({red_bad} misses)")


def test_criterion_11_named_families():
    total_bad, total, secs = 0, 0, 0.0
    for suite in NAMED_SUITES:
        reports, t = timed(lambda: run_sweep(suite, tol=TOL))
        bad, _ = sweep_line(reports, t)
        total_bad += len(bad)
        total += len(reports)
        secs = max(secs, t)
    dev = [f for f in errata_findings(tol=TOL) if f.name == "complete_split_pm"]
    worst = max(f.deviation for f in dev)
    record(11, total_bad == 0 and bool(dev) and secs < TIME_LIMIT,
           f"named families {total - total_bad}/{total} matched; stated complete-split +- formula "
           f"deviates from the 2x2 eigenvalues by up to {worst:.3g} over {len(dev)} cases")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
