from fractions import Fraction

import numpy as np
import pytest

from conftest import M_TABLE, UNIT_MEAN_TABLE
from emd1d.expectation import (
    m_tilde,
    m_value,
    m_value_via_n,
    monte_carlo_mean_emd,
    sample_uniform_simplex,
)
from emd1d.genfun import mean_emd_unit_normalized


def test_m_value_examples():
    assert m_value(1, 1) == 0
    assert m_value(2, 2) == Fraction(1, 3)
    assert m_value(1, 5) == 2
    assert round(float(m_value(4, 5)), 3) == 0.914
    assert m_value(0, 4) == 0


def test_m_table_three_decimals():
    for p in range(1, 6):
        for q in range(1, 6):
            assert round(float(m_value(p, q)), 3) == M_TABLE[p - 1][q - 1]


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 13) for q in range(1, 13)])
def test_two_routes_agree(p, q):
    assert m_value(p, q) == m_value_via_n(p, q)
    assert m_value(p, q) == m_value(q, p)


def test_via_n_examples():
    assert m_value_via_n(2, 2) == Fraction(1, 3)
    assert m_value_via_n(3, 3) == Fraction(8, 15)
    assert m_value_via_n(1, 1) == 0


@pytest.mark.parametrize("q", range(1, 15))
def test_first_row_closed_form(q):
    assert m_value(1, q) == Fraction(q - 1, 2)


def test_m_tilde():
    assert m_tilde(2) == Fraction(1, 3)
    assert round(float(m_tilde(5)), 4) == 0.2032
    assert round(float(m_tilde(12)), 4) == 0.1293
    with pytest.raises(ValueError):
        m_tilde(1)


@pytest.mark.parametrize("col, n", [(0, 2), (1, 3), (2, 4), (3, 5)])
def test_discrete_mean_decreases_toward_limit(col, n):
    ss = [1, 5, 30, 1000, 10000]
    vals = [mean_emd_unit_normalized(n, s) for s in ss]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert all(v > m_tilde(n) for v in vals)
    for s, v in zip(ss, vals):
        assert abs(float(v) - UNIT_MEAN_TABLE[s][col]) <= 5e-5


def test_sampler_basic():
    assert sample_uniform_simplex(1, 0).tolist() == [1.0]
    x = sample_uniform_simplex(6, 123)
    assert (x >= 0).all() and abs(x.sum() - 1) < 1e-12
    assert np.array_equal(x, sample_uniform_simplex(6, 123))


def test_sampler_coordinate_means():
    pts = np.array([sample_uniform_simplex(4, k) for k in range(100_000)])
    assert np.all(np.abs(pts.mean(axis=0) - 0.25) < 0.005)


def test_monte_carlo_deterministic():
    a = monte_carlo_mean_emd(2, 1, seed=11)
    b = monte_carlo_mean_emd(2, 1, seed=11)
    assert a[0] == b[0]
    assert np.isnan(a[1])
    assert monte_carlo_mean_emd(3, 5000, 4, batch_size=700) == monte_carlo_mean_emd(
        3, 5000, 4, batch_size=700
    )


def test_monte_carlo_small_run_near_exact():
    est, se = monte_carlo_mean_emd(4, 200_000, seed=2)
    assert abs(est - float(m_value(4, 4))) < 4 * se
