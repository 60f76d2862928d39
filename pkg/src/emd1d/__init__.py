"""Exact one-dimensional Earth Mover's Distance: closed form, generating functions,
expected values, and EMD threshold graphs."""

__version__ = "0.1.0"

from .emd import (
    compositions,
    emd_continuous,
    emd_discrete,
    emd_oracle,
    emd_unit_normalized,
    chain_repair,
    rsk_phi,
    rsk_phi_inverse,
)
from .genfun import (
    check_palindromic_unimodal,
    h_series,
    histogram,
    mean_emd_discrete,
    mean_emd_unit_normalized,
    n_poly,
    sum_emd,
    w_poly,
)
from .expectation import m_tilde, m_value, m_value_via_n, monte_carlo_mean_emd, sample_uniform_simplex
