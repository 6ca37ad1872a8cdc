import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laqc.info import (
    InfiniteDivergenceError,
    JointDistribution2x2,
    binary_correlation_entropy,
    mutual_information,
    mutual_information_tables,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)
from laqc.states import BDTriple, InvalidDensityMatrix, bd_eigenvalues, bd_to_density

from conftest import h_oracle, sample_states

SINGLET = np.outer([0, 1, -1, 0], [0, 1, -1, 0]) / 2


def test_mutual_information_examples():
    assert mutual_information(JointDistribution2x2(np.full((2, 2), 0.25))) == 0.0
    assert mutual_information(JointDistribution2x2([[0.5, 0], [0, 0.5]])) == pytest.approx(1, abs=1e-15)
    d = JointDistribution2x2.symmetric((1 + 0.6) / 4)
    expected = 2 * 0.4 * math.log2(0.4 / 0.25) + 2 * 0.1 * math.log2(0.1 / 0.25)
    assert mutual_information(d) == pytest.approx(expected, abs=1e-14)
    assert mutual_information(d) == pytest.approx(0.278072, abs=5e-7)


def test_distribution_validation():
    with pytest.raises(ValueError):
        JointDistribution2x2([[0.5, 0.5], [0.5, 0.5]])
    with pytest.raises(ValueError):
        JointDistribution2x2([[1.2, -0.2], [0, 0]])
    with pytest.raises(ValueError):
        JointDistribution2x2(np.full((2, 2), 0.25), marginal_a=[0.6, 0.4])
    with pytest.raises(ValueError):
        JointDistribution2x2(np.ones(3) / 3)


def test_distribution_is_read_only():
    d = JointDistribution2x2(np.full((2, 2), 0.25))
    with pytest.raises(ValueError):
        d.p[0, 0] = 1.0
    assert np.allclose(d.marginal_a, 0.5) and np.allclose(d.marginal_b, 0.5)


@pytest.mark.parametrize("c", [0.0, 1.0, -1.0, 0.6, -0.6, 0.1, 0.999999, 0.5])
def test_binary_correlation_entropy_examples(c):
    assert binary_correlation_entropy(c) == pytest.approx(h_oracle(c), abs=1e-15)


def test_binary_correlation_entropy_pinned():
    assert binary_correlation_entropy(0) == 0
    assert binary_correlation_entropy(1) == 1
    assert binary_correlation_entropy(0.6) == pytest.approx(0.8 * math.log2(1.6) + 0.2 * math.log2(0.4))
    assert binary_correlation_entropy(0.6) == pytest.approx(0.278072, abs=5e-7)
    with pytest.raises(ValueError):
        binary_correlation_entropy(1.01)


def test_binary_correlation_entropy_shape():
    grid = np.linspace(-1, 1, 2001)
    h = binary_correlation_entropy(grid)
    assert np.allclose(h, h[::-1], atol=1e-15)
    right = h[1000:]
    assert np.all(np.diff(right) > 0)
    # continuity at the pure-state ends
    assert abs(binary_correlation_entropy(1 - 1e-12) - 1) < 1e-9
    assert abs(binary_correlation_entropy(-1 + 1e-12) - 1) < 1e-9


probs = st.floats(0, 1, allow_nan=False)


@given(probs, probs)
@settings(max_examples=200)
def test_product_distributions_have_zero_information(a, b):
    p = np.outer([a, 1 - a], [b, 1 - b])
    assert abs(mutual_information(JointDistribution2x2(p))) < 1e-12


@given(st.lists(st.floats(0, 1, allow_nan=False), min_size=4, max_size=4))
@settings(max_examples=200)
def test_mutual_information_nonnegative(weights):
    w = np.array(weights)
    if w.sum() < 1e-6:
        return
    d = JointDistribution2x2((w / w.sum()).reshape(2, 2))
    assert mutual_information(d) >= -1e-12
    assert mutual_information(d) == pytest.approx(float(mutual_information_tables(d.p)), abs=1e-12)


def test_symmetric_distribution_reduces_to_h():
    rng = np.random.default_rng(11)
    for p00 in rng.uniform(0, 0.5, 100):
        d = JointDistribution2x2.symmetric(p00)
        assert mutual_information(d) == pytest.approx(h_oracle(4 * p00 - 1), abs=1e-12)


def test_von_neumann_examples():
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2, abs=1e-14)
    assert von_neumann_entropy(SINGLET) == pytest.approx(0, abs=1e-14)
    lams = [0.025, 0.425, 0.175, 0.375]
    expected = -sum(x * math.log2(x) for x in lams)
    assert von_neumann_entropy(bd_to_density(BDTriple(0.1, 0.2, 0.6))) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(1.628385, abs=5e-7)


def test_von_neumann_matches_shannon_of_spectrum():
    for state in sample_states(5, 200):
        s = von_neumann_entropy(bd_to_density(state))
        assert s == pytest.approx(shannon_entropy(np.clip(bd_eigenvalues(state), 0, None)), abs=1e-10)


def test_von_neumann_rejects_invalid():
    with pytest.raises(InvalidDensityMatrix):
        von_neumann_entropy(bd_to_density(BDTriple(1, 1, 1)))
    with pytest.raises(InvalidDensityMatrix):
        von_neumann_entropy(np.eye(4) / 2)
    with pytest.raises(InvalidDensityMatrix):
        von_neumann_entropy(np.triu(np.ones((4, 4))) / 4)


def test_relative_entropy_examples():
    for state in sample_states(9, 20):
        rho = bd_to_density(state)
        assert abs(relative_entropy(rho, rho)) < 1e-10
    with pytest.raises(InfiniteDivergenceError):
        relative_entropy(np.eye(4) / 4, SINGLET)
    assert relative_entropy(SINGLET, np.eye(4) / 4) == pytest.approx(2, abs=1e-12)


def test_relative_entropy_commuting_states_is_classical_kl():
    rng = np.random.default_rng(2)
    for _ in range(50):
        p, q = rng.dirichlet(np.ones(4)), rng.dirichlet(np.ones(4))
        kl = float(np.sum(p * np.log2(p / q)))
        assert relative_entropy(np.diag(p), np.diag(q)) == pytest.approx(kl, abs=1e-10)
        assert relative_entropy(np.diag(p), np.diag(q)) >= -1e-10
