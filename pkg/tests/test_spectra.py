import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from alphaspec.graph import complete, cycle, join, path
from alphaspec.groups import cyclic, power_graph
from alphaspec.spectra import (Spectrum, SpectrumError, a_alpha_matrix, adjacency_matrix, check_alpha,
                               degree_matrix, eig_quotient, eig_symmetric, jacobi_eigenvalues,
                               laplacian, multiplicity_of, signless_laplacian, spectra_match,
                               spectrum_of, symmetrize_quotient)
from conftest import oracle_spectrum, random_graph


class TestMatrices:
    def test_endpoints(self, rng):
        for _ in range(10):
            g = random_graph(rng, 8)
            assert np.array_equal(a_alpha_matrix(g, 0), adjacency_matrix(g))
            assert np.array_equal(a_alpha_matrix(g, 1), degree_matrix(g))
            assert np.array_equal(2 * a_alpha_matrix(g, 0.5), signless_laplacian(g))

    def test_difference_identity(self, rng):
        g = random_graph(rng, 9)
        for a, c in rng.random((5, 2)):
            lhs = a_alpha_matrix(g, a) - a_alpha_matrix(g, c)
            np.testing.assert_allclose(lhs, (a - c) * laplacian(g), rtol=0, atol=1e-15)

    def test_entries(self):
        m = a_alpha_matrix(path(3), 0.25)
        np.testing.assert_array_equal(np.diag(m), [0.25, 0.5, 0.25])
        assert m[0, 1] == 0.75 and m[0, 2] == 0

    @pytest.mark.parametrize("bad", [-0.1, 1.5, float("nan")])
    def test_alpha_range(self, bad):
        with pytest.raises(SpectrumError):
            check_alpha(bad)


class TestEigensolver:
    def test_k3(self):
        np.testing.assert_allclose(eig_symmetric(adjacency_matrix(complete(3))).values, [2, -1, -1],
                                   atol=1e-12)

    def test_zero(self):
        np.testing.assert_array_equal(eig_symmetric(np.zeros((4, 4))).values, np.zeros(4))

    def test_c4(self):
        np.testing.assert_allclose(eig_symmetric(adjacency_matrix(cycle(4))).values,
                                   oracle_spectrum(adjacency_matrix(cycle(4))), atol=1e-12)

    def test_trivial_sizes(self):
        assert eig_symmetric(np.zeros((0, 0))).dim == 0
        assert eig_symmetric([[3.5]]).values.tolist() == [3.5]

    def test_rejects(self):
        with pytest.raises(SpectrumError):
            eig_symmetric(np.array([[0, 1], [0, 0]]))
        with pytest.raises(SpectrumError):
            eig_symmetric(np.ones((2, 3)))
        with pytest.raises(SpectrumError):
            eig_symmetric(np.array([[np.inf, 0], [0, 1]]))

    def test_deterministic(self, rng):
        m = rng.standard_normal((20, 20))
        m = m + m.T
        assert np.array_equal(jacobi_eigenvalues(m), jacobi_eigenvalues(m))

    def test_hard_power_graph(self):
        # many repeated eigenvalues; once stalled a naive off-norm formula
        m = a_alpha_matrix(power_graph(cyclic(21)).graph, 0.0)
        np.testing.assert_allclose(eig_symmetric(m).values, oracle_spectrum(m), atol=1e-10)

    def test_badly_scaled(self):
        m = np.diag([1e8, 1.0, 1e-8])
        m[0, 1] = m[1, 0] = 1e-3
        np.testing.assert_allclose(eig_symmetric(m).values, oracle_spectrum(m), rtol=1e-12, atol=1e-12)


@settings(max_examples=80, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 12), st.integers(1, 12)),
              elements=st.floats(-100, 100, allow_nan=False)))
def test_eigensolver_against_oracle(a):
    d = min(a.shape)
    m = a[:d, :d]
    m = (m + m.T) / 2
    vals = eig_symmetric(m).values
    scale = max(1.0, np.linalg.norm(m))
    np.testing.assert_allclose(vals, oracle_spectrum(m), atol=1e-10 * scale)
    assert abs(vals.sum() - np.trace(m)) <= 1e-9 * scale
    assert abs((vals**2).sum() - np.linalg.norm(m) ** 2) <= 1e-9 * scale**2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 14), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_graph_spectrum_properties(n, alpha, seed):
    g = random_graph(np.random.default_rng(seed), n)
    s = spectrum_of(g, alpha)
    assert np.all(np.diff(s.values) <= 0)
    assert s.dim == n
    assert abs(s.values.sum() - alpha * g.degrees.sum()) <= 1e-9 * max(1.0, s.radius * n)
    # A_1 spectrum is the degree sequence exactly
    assert spectrum_of(g, 1.0).values.tolist() == sorted(g.degrees.tolist(), reverse=True)
    half = spectra_match(Spectrum(2 * spectrum_of(g, 0.5).values), eig_symmetric(signless_laplacian(g)))
    assert half.matched


def test_perron_simple(rng):
    for _ in range(20):
        n = int(rng.integers(2, 12))
        g = join(random_graph(rng, n - 1), complete(1))  # connected
        for alpha in (0, 0.3, 0.7, 0.99):
            v = spectrum_of(g, alpha).values
            assert v[0] - v[1] > 1e-8


class TestQuotient:
    def test_trivial(self):
        np.testing.assert_allclose(eig_quotient([[0.3, 0.7], [0.7, 0.3]], [1, 1]).values, [1.0, -0.4],
                                   atol=1e-14)

    def test_k23(self):
        np.testing.assert_allclose(eig_quotient([[0, 3], [2, 0]], [2, 3]).values,
                                   [np.sqrt(6), -np.sqrt(6)], atol=1e-14)

    def test_c4(self):
        np.testing.assert_allclose(eig_quotient([[0, 2], [2, 0]], [2, 2]).values, [2, -2], atol=1e-14)

    def test_symmetrize(self):
        s = symmetrize_quotient(np.array([[0, 3], [2, 0]]), [2, 3])
        np.testing.assert_allclose(s, s.T)

    def test_rejects_malformed(self):
        with pytest.raises(SpectrumError):
            eig_quotient([[0, 1], [5, 0]], [1, 1])
        with pytest.raises(SpectrumError):
            eig_quotient([[0, 1], [1, 0]], [1, 0])

    def test_against_charpoly_roots(self, rng):
        for d in range(1, 5):
            for _ in range(25):
                sizes = rng.integers(1, 6, size=d).astype(float)
                c = rng.random((d, d))
                c = (c + c.T) / 2
                m = c * sizes[None, :] + np.diag(rng.standard_normal(d))
                roots = np.sort(np.roots(np.poly(m)).real)[::-1]
                np.testing.assert_allclose(eig_quotient(m, sizes).values, roots, atol=1e-7)


class TestMatch:
    def test_close(self):
        assert spectra_match(Spectrum([1, 0]), Spectrum([1 + 5e-9, 0]), 1e-8).matched

    def test_multiset(self):
        r = spectra_match(Spectrum([1, 1, 0]), Spectrum([1, 0, 0]), 1e-8)
        assert not r.matched and r.worst is not None and "unmatched" in r.summary

    def test_identical(self, rng):
        v = rng.standard_normal(50)
        r = spectra_match(Spectrum(v), Spectrum(v.copy()))
        assert r.matched and r.max_error == 0

    def test_length(self):
        r = spectra_match(Spectrum([1]), Spectrum([1, 2]))
        assert not r and r.max_error == float("inf")

    def test_scaled(self):
        assert spectra_match(Spectrum([1e6, 0]), Spectrum([1e6 + 1e-3, 0]), 1e-8).matched
        assert not spectra_match(Spectrum([1e6, 0]), Spectrum([1e6 + 1e-1, 0]), 1e-8).matched

    def test_rejects_tol(self):
        with pytest.raises(SpectrumError):
            spectra_match(Spectrum([1]), Spectrum([1]), 0)


class TestMultiplicity:
    def test_basic(self):
        assert multiplicity_of(Spectrum([2, -1, -1]), -1) == 2
        assert multiplicity_of(Spectrum([0, 0, 0]), 1) == 0

    def test_pz6(self):
        s = spectrum_of(power_graph(cyclic(6)).graph, 0.25)
        assert multiplicity_of(s, 0.5) >= 2
        assert multiplicity_of(Spectrum(oracle_spectrum(a_alpha_matrix(power_graph(cyclic(6)).graph, 0.25))), 0.5) >= 2
