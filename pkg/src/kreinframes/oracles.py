"""Slow, independent cross-checks for the fast linear-algebra paths.

Every quantity the package computes through a structured eigen-solver can be
re-derived here either by a different algebraic reduction (manual Cholesky
congruence) or by brute force (dense sampling of the unit sphere followed by
a derivative-free shrinking-radius refinement).  The sampling routes share no
code with the fast paths beyond elementary matrix products, which is the
point: agreement between the two is evidence, disagreement is an internal
inconsistency.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla

from ._numeric import as_matrix, orth_columns
from .core import TOL_RANK, KreinSpace
from .errors import DimensionMismatch, NotPositiveDefinite

__all__ = [
    "rayleigh_extrema",
    "rayleigh_extrema_sampled",
    "gamma_brute",
    "min_singular_brute",
    "max_singular_brute",
    "hilbert_frame_bounds",
    "hilbert_fusion_bounds",
    "completeness_check",
]

# Refinement schedule: the search radius shrinks geometrically to ~1e-7; the
# value error of a smooth quadratic ratio at a stationary point scales with
# the square of the radius, so the refined extremum is far inside the 1e-4
# agreement tolerance used by the acceptance checks.
_LEVELS = 42
_ROUNDS_PER_LEVEL = 6
_BATCH = 64


def _unit_rows(m: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(m, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return m / norms


def _refine(evaluate, x0: np.ndarray, rng: np.random.Generator, minimize: bool) -> float:
    """Stochastic local refinement of an extremum on the unit sphere."""
    sign = 1.0 if minimize else -1.0
    best_x = x0 / np.linalg.norm(x0)
    best_v = float(evaluate(best_x[None, :])[0])
    radius = 0.5
    for _ in range(_LEVELS):
        for _ in range(_ROUNDS_PER_LEVEL):
            cand = _unit_rows(best_x + radius * rng.standard_normal((_BATCH, best_x.size)))
            vals = evaluate(cand)
            idx = int(np.argmin(sign * vals))
            if sign * vals[idx] < sign * best_v:
                best_v = float(vals[idx])
                best_x = cand[idx]
        radius *= 0.7
    return best_v


def _check_positive_definite(g: np.ndarray) -> np.ndarray:
    g = 0.5 * (g + g.T)
    try:
        return np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise NotPositiveDefinite("denominator matrix is not positive definite") from None


def rayleigh_extrema(a, g) -> tuple[float, float]:
    """Extrema of x^T a x / x^T g x with g positive definite (algebraic route).

    Reduces by an explicit Cholesky congruence and solves an ordinary
    symmetric eigenproblem; deliberately avoids the generalized LAPACK
    drivers the fast paths use.
    """
    a = as_matrix(a, "numerator")
    g = as_matrix(g, "denominator")
    if a.shape != g.shape or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"incompatible pencil shapes {a.shape} and {g.shape}")
    chol = _check_positive_definite(g)
    half = sla.solve_triangular(chol, 0.5 * (a + a.T), lower=True)
    reduced = sla.solve_triangular(chol, half.T, lower=True)
    vals = np.linalg.eigvalsh(0.5 * (reduced + reduced.T))
    return float(vals[0]), float(vals[-1])


def rayleigh_extrema_sampled(a, g, seed: int = 0, nsamples: int = 10000) -> tuple[float, float]:
    """Extrema of the same ratio by dense sampling plus refinement."""
    a = as_matrix(a, "numerator")
    g = as_matrix(g, "denominator")
    if a.shape != g.shape or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"incompatible pencil shapes {a.shape} and {g.shape}")
    _check_positive_definite(g)
    a = 0.5 * (a + a.T)
    k = a.shape[0]

    def ratio(c: np.ndarray) -> np.ndarray:
        num = np.einsum("ij,jk,ik->i", c, a, c)
        den = np.einsum("ij,jk,ik->i", c, g, c)
        return num / den

    rng = np.random.default_rng(seed)
    samples = _unit_rows(rng.standard_normal((nsamples, k)))
    vals = ratio(samples)
    lo = _refine(ratio, samples[int(np.argmin(vals))], rng, minimize=True)
    hi = _refine(ratio, samples[int(np.argmax(vals))], rng, minimize=False)
    return lo, hi


def gamma_brute(matrix, seed: int = 0, nsamples: int = 10000,
                tol_rank: float = TOL_RANK) -> float:
    """Reduced minimum modulus by brute force.

    Minimizes ``||M x||`` over unit vectors of the row space of M (the
    orthogonal complement of the kernel), found by pivoted QR.  Returns 0.0
    for the zero matrix — callers should treat that value as a flag that the
    notion degenerates rather than as a meaningful modulus.
    """
    m = as_matrix(matrix, "matrix")
    if np.max(np.abs(m)) == 0.0:
        return 0.0
    rowspace = orth_columns(m.T, tol_rank)
    mq = m @ rowspace

    def lengths(c: np.ndarray) -> np.ndarray:
        return np.linalg.norm(c @ mq.T, axis=1)

    rng = np.random.default_rng(seed)
    samples = _unit_rows(rng.standard_normal((nsamples, rowspace.shape[1])))
    vals = lengths(samples)
    return _refine(lengths, samples[int(np.argmin(vals))], rng, minimize=True)


def min_singular_brute(matrix, seed: int = 0, nsamples: int = 10000) -> float:
    """Smallest singular value by brute force over the whole unit sphere."""
    m = as_matrix(matrix, "matrix")

    def lengths(c: np.ndarray) -> np.ndarray:
        return np.linalg.norm(c @ m.T, axis=1)

    rng = np.random.default_rng(seed)
    samples = _unit_rows(rng.standard_normal((nsamples, m.shape[1])))
    vals = lengths(samples)
    return _refine(lengths, samples[int(np.argmin(vals))], rng, minimize=True)


def max_singular_brute(matrix, seed: int = 0, nsamples: int = 10000) -> float:
    """Operator norm by brute force over the whole unit sphere."""
    m = as_matrix(matrix, "matrix")

    def lengths(c: np.ndarray) -> np.ndarray:
        return np.linalg.norm(c @ m.T, axis=1)

    rng = np.random.default_rng(seed)
    samples = _unit_rows(rng.standard_normal((nsamples, m.shape[1])))
    vals = lengths(samples)
    return _refine(lengths, samples[int(np.argmax(vals))], rng, minimize=False)


def hilbert_frame_bounds(vectors, space: KreinSpace) -> tuple[float, float]:
    """Ordinary (sign-free) frame bounds of a vector sequence on R^n.

    Extreme eigenvalues of sum_i f_i f_i^T: the sharp constants in
    A ||f||^2 <= sum_i <f, f_i>^2 <= B ||f||^2.
    """
    v = as_matrix(np.atleast_2d(np.asarray(vectors, dtype=float)), "vectors")
    if v.shape[1] != space.dim:
        raise DimensionMismatch(f"vectors have length {v.shape[1]}, expected {space.dim}")
    vals = np.linalg.eigvalsh(v.T @ v)
    return float(vals[0]), float(vals[-1])


def hilbert_fusion_bounds(subspaces, weights) -> tuple[float, float]:
    """Ordinary weighted fusion bounds: extreme eigenvalues of sum v_i^2 pi_i."""
    subspaces = list(subspaces)
    w = np.asarray(weights, dtype=float)
    if len(subspaces) != w.shape[0]:
        raise DimensionMismatch(f"{len(subspaces)} subspaces but {w.shape[0]} weights")
    if not subspaces:
        raise DimensionMismatch("need at least one subspace")
    n = subspaces[0].space.dim
    acc = np.zeros((n, n))
    for sub, wi in zip(subspaces, w):
        b = sub.basis
        acc += wi**2 * (b @ b.T)
    vals = np.linalg.eigvalsh(0.5 * (acc + acc.T))
    return float(vals[0]), float(vals[-1])


def completeness_check(subspaces, space: KreinSpace, tol_rank: float = TOL_RANK) -> bool:
    """Whether the given subspaces together span the whole space."""
    blocks = [s.basis for s in subspaces]
    if not blocks:
        return space.dim == 0
    stacked = np.hstack(blocks)
    return orth_columns(stacked, tol_rank).shape[1] == space.dim
