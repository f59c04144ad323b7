"""Shared oracles for the test suite."""

import numpy as np

from vpwave.chebyshev import cheb_nodes, eval_p_table


def quad_gram(coeffs_a, coeffs_b, n_quad):
    """Gram matrix of two expansion families (coefficient columns) under the
    Gauss-Chebyshev rule with n_quad nodes; exact when the pairwise product
    degrees stay below 2 n_quad."""
    xs = cheb_nodes(n_quad).nodes
    va = coeffs_a.T @ eval_p_table(np.arange(coeffs_a.shape[0]), xs)
    vb = coeffs_b.T @ eval_p_table(np.arange(coeffs_b.shape[0]), xs)
    return (np.pi / n_quad) * va @ vb.T


def max_dev(actual, expected):
    return float(np.max(np.abs(np.asarray(actual) - np.asarray(expected))))
