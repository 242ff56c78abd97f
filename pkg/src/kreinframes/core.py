"""Indefinite inner product spaces on R^n built from a fundamental symmetry.

A space is determined by a symmetric involution J (the fundamental symmetry).
The indefinite product is ``[x, y] = x^T J y``; the associated positive
product obtained by flipping the sign on the negative part is the ordinary
Euclidean dot product, which is why bases throughout the package are kept
orthonormal in the plain Euclidean sense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._numeric import as_matrix, as_vector, operator_norm, orth_columns
from .errors import DimensionMismatch, NotAnInvolution

# Default tolerances, overridable per call (and via KREINFRAME_TOLERANCE in
# the CLI layer).  tol_sym gates symmetry/involution checks, tol_num is the
# general residual tolerance, tol_def decides definiteness from eigenvalues,
# tol_rank is the relative rank cutoff.
TOL_SYM = 1e-10
TOL_NUM = 1e-9
TOL_DEF = 1e-10
TOL_RANK = 1e-10


@dataclass(frozen=True)
class KreinSpace:
    """R^n with the indefinite product ``[x, y] = x^T J y``.

    Attributes
    ----------
    symmetry:
        The fundamental symmetry J (symmetric, J^2 = I).
    dim:
        Ambient dimension n.
    num_positive, num_negative:
        Signature (p, q): dimensions of the canonical positive/negative
        eigenspaces of J.
    """

    symmetry: np.ndarray
    dim: int
    num_positive: int
    num_negative: int

    @cached_property
    def positive_projector(self) -> np.ndarray:
        """Euclidean-orthogonal projector onto the +1 eigenspace of J."""
        p = 0.5 * (np.eye(self.dim) + self.symmetry)
        return 0.5 * (p + p.T)

    @cached_property
    def negative_projector(self) -> np.ndarray:
        m = 0.5 * (np.eye(self.dim) - self.symmetry)
        return 0.5 * (m + m.T)

    @cached_property
    def positive_eigenbasis(self) -> np.ndarray:
        """Orthonormal basis (columns) of the canonical positive eigenspace."""
        return orth_columns(self.positive_projector, TOL_RANK)

    @cached_property
    def negative_eigenbasis(self) -> np.ndarray:
        return orth_columns(self.negative_projector, TOL_RANK)

    def product(self, x, y) -> float:
        """Indefinite product [x, y]."""
        return indefinite_product(x, y, self)

    def __eq__(self, other) -> bool:  # value semantics on J
        if not isinstance(other, KreinSpace):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.symmetry, other.symmetry)

    def __hash__(self) -> int:
        return hash((self.dim, self.symmetry.tobytes()))


def make_krein_space(symmetry, tol_sym: float = TOL_SYM) -> KreinSpace:
    """Validate a fundamental symmetry and build the space around it.

    Rejects matrices that are not symmetric involutions within ``tol_sym``
    (relative to the matrix scale).  The signature is read off the spectrum.
    """
    j = as_matrix(symmetry, "symmetry")
    n = j.shape[0]
    if j.shape[1] != n:
        raise DimensionMismatch(f"symmetry must be square, got {j.shape}")
    if n == 0:
        raise DimensionMismatch("symmetry must be at least 1x1")
    scale = max(1.0, operator_norm(j))
    sym_defect = operator_norm(j - j.T) / scale
    if sym_defect > tol_sym:
        raise NotAnInvolution(
            f"symmetry defect {sym_defect:.3e} exceeds tolerance {tol_sym:.1e}",
            symmetry_defect=sym_defect,
        )
    j = 0.5 * (j + j.T)
    inv_defect = operator_norm(j @ j - np.eye(n)) / scale
    if inv_defect > tol_sym:
        raise NotAnInvolution(
            f"involution defect {inv_defect:.3e} exceeds tolerance {tol_sym:.1e}",
            symmetry_defect=sym_defect,
            involution_defect=inv_defect,
        )
    eigvals = np.linalg.eigvalsh(j)
    p = int(np.sum(eigvals > 0.0))
    q = n - p
    space = KreinSpace(symmetry=j, dim=n, num_positive=p, num_negative=q)
    return space


def indefinite_product(x, y, space: KreinSpace) -> float:
    """[x, y] = x^T J y."""
    xv = as_vector(x, space.dim, "x")
    yv = as_vector(y, space.dim, "y")
    return float(xv @ space.symmetry @ yv)


@dataclass(frozen=True)
class Operator:
    """A linear operator on a space, stored as its matrix."""

    space: KreinSpace
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = as_matrix(self.matrix, "operator matrix")
        if m.shape != (self.space.dim, self.space.dim):
            raise DimensionMismatch(
                f"operator matrix has shape {m.shape}, expected square of size {self.space.dim}"
            )
        object.__setattr__(self, "matrix", m)

    def __call__(self, x) -> np.ndarray:
        return self.matrix @ as_vector(x, self.space.dim, "x")

    @property
    def norm(self) -> float:
        return operator_norm(self.matrix)


def j_adjoint(op: Operator) -> Operator:
    """Adjoint with respect to the indefinite product: T# = J T^T J.

    Characterized by [T x, y] = [x, T# y] for all x, y.
    """
    j = op.space.symmetry
    return Operator(op.space, j @ op.matrix.T @ j)


def j_adjoint_matrix(matrix: np.ndarray, space: KreinSpace) -> np.ndarray:
    """Matrix form of :func:`j_adjoint` for internal use."""
    j = space.symmetry
    return j @ matrix.T @ j
