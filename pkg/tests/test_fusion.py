"""Weighted subspace families: verification, operators, duals, equivalence."""

import numpy as np
import pytest

import kreinframes as kf
from kreinframes import SubspaceKind

EXACT_TOL = 1e-12
NUM_TOL = 1e-9
SEED = 42

# Frozen reference values for fixtures/fusion_dim6.json (seed-42 generated,
# rotated, entry dims (2,2 | 2,1) in signature (3,3)).
DIM6_BOUNDS = (-2.274643403350449, -0.7052004000478805,
               0.4828486831145198, 1.9938986501068445)

# Frozen reference values for fixtures/skewed_pair.json: one positive and one
# negative line at matching angles in diag(1,-1), unit weights.
SKEWED_BOUNDS = (-1.0, -1.0, 1.0, 1.0)
SKEWED_ESTIMATES = (-5.0 / 3.0, -0.36, 0.36, 5.0 / 3.0)
SKEWED_R = 0.8


def _eigen_family(space=None):
    space = space or kf.make_krein_space(np.diag([1.0, -1.0]))
    return kf.family_from_spans(
        [np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]])], [1.0, 1.0], space)


def _skewed_family():
    from pathlib import Path
    parsed = kf.load_problem(
        Path(__file__).resolve().parent.parent / "fixtures" / "skewed_pair.json")
    return kf.family_from_spans([r for r, _ in parsed.entries],
                                [w for _, w in parsed.entries], parsed.space)


# ---------------------------------------------------------------------------
# construction


def test_make_weighted_family_partitions_by_sign(tilted_family):
    fam = tilted_family
    assert fam.size == 4
    assert sorted(fam.positive_indices) + sorted(fam.negative_indices) == [0, 1, 2, 3]
    for i in fam.positive_indices:
        assert fam.signs[i] == 1
        assert fam.entry_classifications[i].kind is SubspaceKind.UNIFORMLY_POSITIVE
    for i in fam.negative_indices:
        assert fam.signs[i] == -1


def test_family_rejects_nonpositive_weight(minkowski2):
    subs = [kf.span(np.array([[1.0, 0.0]]), minkowski2)]
    with pytest.raises(kf.NonPositiveWeight):
        kf.make_weighted_family(subs, [0.0])


def test_family_rejects_neutral_entry(minkowski2):
    with pytest.raises(kf.IndefiniteOrNeutralSubspace) as excinfo:
        kf.family_from_spans([np.array([[1.0, 1.0]])], [1.0], minkowski2)
    exc = excinfo.value
    assert exc.index == 0
    w = exc.witness
    assert abs(kf.indefinite_product(w, w, minkowski2)) <= EXACT_TOL


def test_family_rejects_indefinite_entry(minkowski3):
    rows = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    with pytest.raises(kf.IndefiniteOrNeutralSubspace):
        kf.family_from_spans([rows], [1.0], minkowski3)


# ---------------------------------------------------------------------------
# frame operator and its factorization


def test_eigen_family_operator_is_identity():
    fam = _eigen_family()
    s = kf.fusion_frame_operator(fam).matrix
    assert np.allclose(s, np.eye(2), atol=EXACT_TOL)


def test_paper_variant_on_eigen_family_is_symmetry():
    """The sign-weighted projector sum gives J, not I, on eigenline entries.

    Kept as a documented contrast with the sign-free default; the two
    variants agree only when every entry is J-invariant and positive.
    """
    fam = _eigen_family()
    s = kf.fusion_frame_operator(fam, "paper").matrix
    assert np.allclose(s, fam.space.symmetry, atol=EXACT_TOL)


def test_operator_equals_synthesis_times_analysis(tilted_family):
    s = kf.fusion_frame_operator(tilted_family).matrix
    t = kf.fusion_synthesis(tilted_family)
    a = kf.fusion_analysis(tilted_family)
    assert np.linalg.norm(s - t @ a) <= 1e-12 * np.linalg.norm(s)


def test_operator_is_j_selfadjoint(tilted_family):
    s = kf.fusion_frame_operator(tilted_family).matrix
    ss = kf.j_adjoint_matrix(s, tilted_family.space)
    assert np.linalg.norm(s - ss) <= 1e-12 * np.linalg.norm(s)


def test_operator_splits_into_definite_parts(tilted_family):
    """S = S+ - S- with both parts positive for the indefinite product."""
    s = kf.fusion_frame_operator(tilted_family).matrix
    plus, minus = kf.fusion_operator_parts(tilted_family)
    assert np.linalg.norm(s - (plus.matrix - minus.matrix)) <= 1e-12 * np.linalg.norm(s)
    space = tilted_family.space
    rng = np.random.default_rng(SEED)
    for _ in range(25):
        f = rng.standard_normal(space.dim)
        assert kf.indefinite_product(plus.matrix @ f, f, space) >= -NUM_TOL
        assert kf.indefinite_product(minus.matrix @ f, f, space) >= -NUM_TOL


def test_analysis_is_exact_adjoint_of_synthesis(tilted_family):
    """[T c, f] = [c, A f] against the block-Gram pairing on the direct sum."""
    residual = kf.adjoint_identity_residual(tilted_family, "qproj", seed=SEED)
    assert residual <= 1e-12


def test_paper_analysis_is_not_the_adjoint(tilted_family):
    residual = kf.adjoint_identity_residual(tilted_family, "paper", seed=SEED)
    assert residual > 1e-2


def test_variant_validation(tilted_family):
    with pytest.raises(kf.InputError):
        kf.fusion_frame_operator(tilted_family, "something-else")


def test_bessel_bound_dominates_hilbert_sum(tilted_family):
    c = kf.bessel_bound(tilted_family)
    lo, hi = kf.oracles.hilbert_fusion_bounds(
        tilted_family.subspaces, tilted_family.weights)
    assert c >= hi - NUM_TOL


# ---------------------------------------------------------------------------
# verification and bounds


def test_verify_tilted_family(tilted_family):
    report = kf.verify_j_fusion_frame(tilted_family)
    assert report.is_j_fusion_frame
    assert report.complete
    assert report.positive.ok and report.negative.ok
    assert np.allclose(report.bounds, DIM6_BOUNDS, rtol=1e-12)
    bm, am, ap, bp = report.bounds
    assert bm <= am < 0 < ap <= bp


def test_bound_sandwich_on_tilted_family(tilted_family):
    bm, am, ap, bp = kf.optimal_fusion_bounds(tilted_family)
    bme, ame, ape, bpe = kf.fusion_bound_estimates(tilted_family)
    assert ape <= ap + NUM_TOL
    assert bp <= bpe + NUM_TOL
    assert ame >= am - NUM_TOL
    assert bm >= bme - NUM_TOL


def test_skewed_pair_frozen_values():
    fam = _skewed_family()
    assert np.allclose(kf.optimal_fusion_bounds(fam), SKEWED_BOUNDS, atol=1e-12)
    assert np.allclose(kf.fusion_bound_estimates(fam), SKEWED_ESTIMATES, atol=1e-12)
    # estimates are strictly non-optimal on this fixture
    bm, am, ap, bp = kf.optimal_fusion_bounds(fam)
    bme, ame, ape, bpe = kf.fusion_bound_estimates(fam)
    assert ape < ap and bp < bpe


def test_part_pencils_reproduce_bounds(tilted_family):
    report = kf.verify_j_fusion_frame(tilted_family)
    pencils = kf.part_pencils(tilted_family)
    lo, hi = kf.oracles.rayleigh_extrema(*pencils["positive"])
    assert lo == pytest.approx(report.bounds[2], rel=1e-10)
    assert hi == pytest.approx(report.bounds[3], rel=1e-10)
    lo, hi = kf.oracles.rayleigh_extrema(*pencils["negative"])
    assert lo == pytest.approx(report.bounds[0], rel=1e-10)
    assert hi == pytest.approx(report.bounds[1], rel=1e-10)


def test_incomplete_family_fails(minkowski3):
    subs = [np.array([[1.0, 0.0, 0.0]]), np.array([[0.0, 0.0, 1.0]])]
    fam = kf.family_from_spans(subs, [1.0, 1.0], minkowski3)
    report = kf.verify_j_fusion_frame(fam)
    assert not report.is_j_fusion_frame
    assert not report.complete or not report.positive.dim_ok
    assert report.reasons


def test_missing_negative_part_fails(minkowski2):
    fam = kf.family_from_spans([np.array([[1.0, 0.0]])], [1.0], minkowski2)
    report = kf.verify_j_fusion_frame(fam)
    assert not report.is_j_fusion_frame


# ---------------------------------------------------------------------------
# canonical dual


def test_dual_span_identities(tilted_family):
    """S^{-1} maps each part span onto the other part's orthocomplement."""
    diag = kf.fusion_dual_diagnostics(tilted_family)
    assert diag.span_identity_residual <= 1e-10


def test_dual_operator_matches_inverse_on_eigen_family():
    fam = _eigen_family()
    diag = kf.fusion_dual_diagnostics(fam)
    assert diag.dual_operator_residual <= 1e-12
    assert diag.max_relative_deviation <= 1e-12


def test_dual_operator_deviates_for_tilted_family(tilted_family):
    """Pins measured behaviour: the dual family's operator is not S^{-1}.

    Transporting subspaces through S^{-1} keeps the original weights, and
    for weights bunched away from 1 or tilted entries the resulting family's
    own operator visibly differs from S^{-1}.  A single-entry family with
    weight v shows the effect exactly: the transported family reproduces
    v^2 Q while the inverse is Q / v^2.
    """
    diag = kf.fusion_dual_diagnostics(tilted_family)
    assert diag.dual_operator_residual > 1e-2

    space = kf.make_krein_space(np.diag([1.0, -1.0]))
    fam = kf.family_from_spans(
        [np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]])], [2.0, 1.0], space)
    diag2 = kf.fusion_dual_diagnostics(fam)
    assert diag2.dual_operator_residual > 1e-2


def test_dual_of_verified_family_is_verified(tilted_family):
    dual, inverse = kf.canonical_dual_fusion(tilted_family)
    assert kf.verify_j_fusion_frame(dual).is_j_fusion_frame
    s = kf.fusion_frame_operator(tilted_family).matrix
    assert np.allclose(inverse.matrix @ s, np.eye(tilted_family.space.dim), atol=1e-9)


# ---------------------------------------------------------------------------
# J-images, projection alignment, flattening


def test_j_image_family_preserves_validity(tilted_family):
    image = kf.j_image_family(tilted_family)
    assert list(image.signs) == list(tilted_family.signs)
    assert kf.verify_j_fusion_frame(image).is_j_fusion_frame


def test_rps_residuals_vanish_for_eigen_family():
    fam = _eigen_family()
    for entry in kf.check_rps_corollary(fam):
        assert entry.r <= EXACT_TOL
        assert entry.r_prime <= EXACT_TOL


def test_rps_residuals_on_skewed_pair():
    """r detects the projector mismatch; r' vanishes for full-part entries."""
    fam = _skewed_family()
    entries = kf.check_rps_corollary(fam)
    assert all(e.r == pytest.approx(SKEWED_R, abs=1e-12) for e in entries)
    assert all(e.r_prime <= EXACT_TOL for e in entries)


def test_rps_q_residual_positive_for_overlapping_entries(tilted_family):
    """Pins measured behaviour: r' > 0 once entries tilt inside their part.

    The indefinite and Euclidean projectors onto an entry do not agree on
    the part span unless the entry is J-invariant or fills the whole part.
    """
    entries = kf.check_rps_corollary(tilted_family)
    assert max(e.r_prime for e in entries) > 1e-3
    assert all(np.isfinite(e.r) for e in entries)


def test_flatten_family_matches_fusion_verdict(tilted_family):
    frame = kf.flatten_family(tilted_family)
    assert kf.is_j_frame(frame) == kf.verify_j_fusion_frame(tilted_family).is_j_fusion_frame
    # the flattening inherits the part spans exactly
    pos_fusion = tilted_family.positive_span
    pos_frame = frame.positive_span
    assert np.allclose(pos_fusion.basis @ pos_fusion.basis.T,
                       pos_frame.basis @ pos_frame.basis.T, atol=1e-10)


def test_equivalence_check_agreement(minkowski3):
    rows_pos = np.array([[1.0, 0.2, 0.0], [0.1, 1.0, 0.1]])
    rows_neg = np.array([[0.1, 0.0, 1.0]])
    report = kf.equivalence_check([rows_pos, rows_neg], [1.3, 0.7], minkowski3)
    assert report.agree
    assert report.fusion_verdict and report.frame_verdict


def test_equivalence_check_planted_failure(minkowski3):
    # positive spans cover only one of the two positive dimensions
    rows_pos = np.array([[1.0, 0.0, 0.0]])
    rows_neg = np.array([[0.0, 0.0, 1.0]])
    report = kf.equivalence_check([rows_pos, rows_neg], [1.0, 1.0], minkowski3)
    assert report.agree
    assert not report.fusion_verdict and not report.frame_verdict


def test_direct_sum_space_pairing(tilted_family):
    dsum = kf.direct_sum_space(tilted_family)
    assert dsum.dim == sum(s.dim for s in tilted_family.subspaces)
    rng = np.random.default_rng(SEED)
    c = rng.standard_normal(dsum.dim)
    d = rng.standard_normal(dsum.dim)
    by_blocks = 0.0
    offset = 0
    for sub in tilted_family.subspaces:
        k = sub.dim
        by_blocks += c[offset:offset + k] @ sub.gram @ d[offset:offset + k]
        offset += k
    assert dsum.indefinite_product(c, d) == pytest.approx(by_blocks, rel=1e-12)
