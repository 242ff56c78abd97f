"""Shared fixtures: canonical spaces and the shipped problem files."""

from pathlib import Path

import numpy as np
import pytest

import kreinframes as kf

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / name


def load_fixture(name: str) -> kf.ParsedProblem:
    return kf.load_problem(fixture_path(name))


@pytest.fixture
def minkowski2() -> kf.KreinSpace:
    """R^2 with J = diag(1, -1)."""
    return kf.make_krein_space(np.diag([1.0, -1.0]))


@pytest.fixture
def minkowski3() -> kf.KreinSpace:
    """R^3 with J = diag(1, 1, -1)."""
    return kf.make_krein_space(np.diag([1.0, 1.0, -1.0]))


@pytest.fixture
def tilted_family() -> kf.WeightedSubspaceFamily:
    """Dim-6 verified fusion family with overlapping, tilted entries."""
    parsed = load_fixture("fusion_dim6.json")
    return kf.family_from_spans(
        [rows for rows, _ in parsed.entries],
        [w for _, w in parsed.entries],
        parsed.space,
    )
