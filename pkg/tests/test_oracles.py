"""Brute-force oracles versus the closed-form linear algebra they audit."""

import numpy as np
import pytest

import kreinframes as kf
from kreinframes import oracles

ALGEBRAIC_TOL = 1e-10
SAMPLED_TOL = 1e-4
SEED = 7


def _random_spd(rng, n):
    m = rng.standard_normal((n, n))
    return m @ m.T + n * np.eye(n)


def test_rayleigh_extrema_on_diagonal_pencil():
    a = np.diag([1.0, 5.0, 3.0])
    g = np.eye(3)
    lo, hi = oracles.rayleigh_extrema(a, g)
    assert lo == pytest.approx(1.0)
    assert hi == pytest.approx(5.0)


def test_rayleigh_extrema_matches_generalized_eigenvalues():
    rng = np.random.default_rng(SEED)
    a = _random_spd(rng, 4)
    g = _random_spd(rng, 4)
    lo, hi = oracles.rayleigh_extrema(a, g)
    import scipy.linalg
    eigs = scipy.linalg.eigh(a, g, eigvals_only=True)
    assert lo == pytest.approx(eigs[0], rel=ALGEBRAIC_TOL)
    assert hi == pytest.approx(eigs[-1], rel=ALGEBRAIC_TOL)


def test_rayleigh_extrema_requires_positive_definite_denominator():
    a = np.eye(2)
    g = np.diag([1.0, -1.0])
    with pytest.raises(kf.NotPositiveDefinite):
        oracles.rayleigh_extrema(a, g)


def test_sampled_extrema_bracket_exact_values():
    """Random-search extrema agree with the algebraic ones to SAMPLED_TOL."""
    rng = np.random.default_rng(SEED + 1)
    for _ in range(5):
        a = _random_spd(rng, 3)
        g = _random_spd(rng, 3)
        lo, hi = oracles.rayleigh_extrema(a, g)
        slo, shi = oracles.rayleigh_extrema_sampled(a, g, seed=SEED)
        assert abs(slo - lo) <= SAMPLED_TOL * (1 + abs(lo))
        assert abs(shi - hi) <= SAMPLED_TOL * (1 + abs(hi))
        # sampling can never escape the exact range
        assert slo >= lo - 1e-12
        assert shi <= hi + 1e-12


def test_min_max_singular_brute_vs_svd():
    rng = np.random.default_rng(SEED + 2)
    m = rng.standard_normal((4, 3))
    svals = np.linalg.svd(m, compute_uv=False)
    assert oracles.min_singular_brute(m, seed=SEED) == pytest.approx(svals[-1], abs=SAMPLED_TOL)
    assert oracles.max_singular_brute(m, seed=SEED) == pytest.approx(svals[0], abs=SAMPLED_TOL)


def test_gamma_brute_vs_reduced_min_modulus():
    rng = np.random.default_rng(SEED + 3)
    # rank-deficient 4x4 of rank 2
    u = rng.standard_normal((4, 2))
    m = u @ u.T
    exact = kf.reduced_min_modulus(m)
    brute = oracles.gamma_brute(m, seed=SEED)
    assert brute == pytest.approx(exact, abs=SAMPLED_TOL * (1 + exact))


def test_hilbert_frame_bounds_matches_gram_spectrum(minkowski2):
    vectors = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    lo, hi = oracles.hilbert_frame_bounds(vectors, minkowski2)
    s = vectors.T @ vectors
    eigs = np.linalg.eigvalsh(s)
    assert lo == pytest.approx(eigs[0])
    assert hi == pytest.approx(eigs[-1])


def test_hilbert_fusion_bounds_on_eigenline_family(minkowski2):
    subs = [kf.span(np.array([[1.0, 0.0]]), minkowski2),
            kf.span(np.array([[0.0, 1.0]]), minkowski2)]
    lo, hi = oracles.hilbert_fusion_bounds(subs, [1.0, 1.0])
    assert lo == pytest.approx(1.0)
    assert hi == pytest.approx(1.0)


def test_completeness_check(minkowski3):
    full = [kf.span(np.array([[1.0, 0, 0], [0, 1.0, 0]]), minkowski3),
            kf.span(np.array([[0.0, 0, 1.0]]), minkowski3)]
    assert oracles.completeness_check(full, minkowski3)
    assert not oracles.completeness_check(full[:1], minkowski3)
