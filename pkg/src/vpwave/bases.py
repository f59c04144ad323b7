"""Basis families of the approximation space V and detail space W at level (n, m).

V is spanned equivalently by the interpolating scaling functions (delta
property on the n-point Chebyshev grid), by the orthonormal scaling
functions, or by the modified Chebyshev polynomials of degrees 0..n-1.
W, the orthogonal complement of V inside the level-3n approximation space,
is spanned by interpolating wavelets (delta property on the complement
grid), orthonormal wavelets, or modified Chebyshev polynomials of degrees
n..3n-1.

Every basis element is exported as a ChebExpansion and evaluated through
``eval_expansion``; the closed-form sums appear only in tests as oracles.
The four O(n log n) coefficient transforms (node-indexed <-> degree-indexed,
one pair per space) also live here; the multiresolution algorithms are
built on top of them.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .chebyshev import ChebExpansion, cheb_nodes, dct, eval_p_table, idct
from .filters import (
    VPLevel,
    detail_norms_sq,
    detail_transform,
    lowpass_weights,
    scaling_norms_sq,
    scaling_transform,
    wavelet_interp_weights,
)


@dataclass(frozen=True)
class ScalingCoeffs:
    """Coefficients (length n) in the orthonormal scaling basis at ``level``."""

    level: VPLevel
    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        if self.a.shape != (self.level.n,):
            raise ValueError(
                f"expected {self.level.n} scaling coefficients, got {self.a.shape}")
        self.a.setflags(write=False)


@dataclass(frozen=True)
class DetailCoeffs:
    """Coefficients (length 2n) in the orthonormal wavelet basis at ``level``."""

    level: VPLevel
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "b", np.asarray(self.b, dtype=float))
        if self.b.shape != (2 * self.level.n,):
            raise ValueError(
                f"expected {2 * self.level.n} detail coefficients, got {self.b.shape}")
        self.b.setflags(write=False)


# ---------------------------------------------------------------------------
# fast coefficient transforms
# ---------------------------------------------------------------------------

def scaling_analysis(u, level: VPLevel) -> np.ndarray:
    """Node-indexed to degree-indexed coefficients in the approximation space.

    Fast form of multiplying by the scaling_transform matrix: a DCT with the
    top n-m-1 entries rescaled by the basis norms.
    """
    u = _as_length(u, level.n)
    t = dct(u)
    t[level.n - level.m + 1:] /= np.sqrt(scaling_norms_sq(level)[level.n - level.m + 1:])
    return t


def scaling_synthesis(t, level: VPLevel) -> np.ndarray:
    """Transpose of scaling_analysis (inverse only where the norms are 1)."""
    t = _as_length(t, level.n)
    return idct(t / np.sqrt(scaling_norms_sq(level)))


def detail_analysis(u, level: VPLevel) -> np.ndarray:
    """Apply the orthogonal 2n x 2n detail mixing matrix, output indexed by
    degrees n..3n-1.

    The input is scattered onto the complement positions of the 3n-point
    grid, transformed, and the mirrored bands recombined.
    """
    u = _as_length(u, 2 * level.n)
    n = level.n
    w = np.zeros(3 * n)
    w[0::3] = u[0::2]
    w[2::3] = u[1::2]
    x = dct(w)
    s = np.empty(2 * n)
    s[0] = x[n]
    mid = np.arange(n + 1, 2 * n)
    s[mid - n] = (x[mid] + x[2 * n - mid]) / np.sqrt(2.0)
    s[n] = (x[2 * n] + np.sqrt(2.0) * x[0]) / np.sqrt(3.0)
    hi = np.arange(2 * n + 1, 3 * n)
    s[hi - n] = np.sqrt(1.5) * x[hi]
    return s


def detail_synthesis(s, level: VPLevel) -> np.ndarray:
    """Inverse (= transpose) of detail_analysis."""
    s = _as_length(s, 2 * level.n)
    n = level.n
    w = np.zeros(3 * n)
    w[0] = np.sqrt(2.0 / 3.0) * s[n]
    w[1:n] = s[n - 1:0:-1] / np.sqrt(2.0)
    w[n] = s[0]
    w[n + 1:2 * n] = s[1:n] / np.sqrt(2.0)
    w[2 * n] = s[n] / np.sqrt(3.0)
    w[2 * n + 1:] = np.sqrt(1.5) * s[n + 1:]
    x = idct(w)
    u = np.empty(2 * n)
    u[0::2] = x[0::3]
    u[1::2] = x[2::3]
    return u


def _as_length(u, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (n,):
        raise ValueError(f"expected a length-{n} sequence, got shape {u.shape}")
    return u


# ---------------------------------------------------------------------------
# expansions of the six basis families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def approx_scatter(level: VPLevel) -> np.ndarray:
    """(n+m) x n map from modified-Chebyshev to plain Chebyshev coefficients.

    Column r is the p-expansion of the degree-r basis polynomial of V:
    p_r itself for r <= n-m, and mu_r p_r - mu_{2n-r} p_{2n-r} on the ramp.
    """
    n, m = level.n, level.m
    mu = lowpass_weights(level)
    out = np.zeros((n + m, n))
    for r in range(n):
        if r <= n - m:
            out[r, r] = 1.0
        else:
            out[r, r] = mu[r]
            out[2 * n - r, r] = -mu[2 * n - r]
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def detail_scatter(level: VPLevel) -> np.ndarray:
    """(3n+m) x 2n map from the detail orthogonal basis to Chebyshev coefficients.

    Column r-n is the p-expansion of the degree-r basis polynomial of W.  The
    top band borrows the level-(3n, m) ramp, which is why degrees up to
    3n+m-1 occur.
    """
    n, m = level.n, level.m
    mu = lowpass_weights(level)
    mu3 = lowpass_weights(VPLevel(3 * n, m))
    out = np.zeros((3 * n + m, 2 * n))
    for r in range(n, 3 * n):
        c = r - n
        if r < n + m:
            out[2 * n - r, c] += mu[r]
            out[r, c] += mu[2 * n - r]
        elif r <= 3 * n - m:
            out[r, c] = 1.0
        else:
            out[r, c] += mu3[r]
            out[6 * n - r, c] -= mu3[6 * n - r]
    out.setflags(write=False)
    return out


def approx_basis(level: VPLevel, r: int) -> ChebExpansion:
    """Degree-r modified Chebyshev basis polynomial of V, r in [0, n-1]."""
    if not 0 <= r <= level.n - 1:
        raise ValueError(f"degree {r} outside [0, {level.n - 1}]")
    return ChebExpansion(approx_scatter(level)[:, r].copy())


def detail_basis(level: VPLevel, r: int) -> ChebExpansion:
    """Degree-r modified Chebyshev basis polynomial of W, r in [n, 3n-1]."""
    if not level.n <= r <= 3 * level.n - 1:
        raise ValueError(f"degree {r} outside [{level.n}, {3 * level.n - 1}]")
    return ChebExpansion(detail_scatter(level)[:, r - level.n].copy())


@lru_cache(maxsize=None)
def scaling_interp_matrix(level: VPLevel) -> np.ndarray:
    """(n+m) x n matrix; column k-1 is the expansion of the k-th interpolating
    scaling function (pi/n) sum_r mu_r p_r(x_k) p_r."""
    n = level.n
    table = eval_p_table(np.arange(n + level.m), cheb_nodes(n).nodes)
    out = (np.pi / n) * lowpass_weights(level)[:, None] * table
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def scaling_ortho_matrix(level: VPLevel) -> np.ndarray:
    """(n+m) x n matrix of orthonormal scaling-function expansions."""
    out = approx_scatter(level) @ scaling_transform(level)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def wavelet_interp_matrix(level: VPLevel) -> np.ndarray:
    """(3n+m) x 2n matrix of interpolating wavelet expansions."""
    n = level.n
    out = detail_scatter(level) @ ((np.pi / (3 * n)) * wavelet_interp_weights(level))
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def wavelet_ortho_matrix(level: VPLevel) -> np.ndarray:
    """(3n+m) x 2n matrix of orthonormal wavelet expansions."""
    weights = detail_transform(level) / np.sqrt(detail_norms_sq(level))[:, None]
    out = detail_scatter(level) @ weights
    out.setflags(write=False)
    return out


def _column(matrix: np.ndarray, k: int, count: int, what: str) -> ChebExpansion:
    if not 1 <= k <= count:
        raise ValueError(f"{what} index {k} outside [1, {count}]")
    return ChebExpansion(matrix[:, k - 1].copy())


def scaling_interp(level: VPLevel, k: int) -> ChebExpansion:
    """k-th interpolating scaling function (Kronecker delta on the node grid)."""
    return _column(scaling_interp_matrix(level), k, level.n, "scaling")


def scaling_ortho(level: VPLevel, k: int) -> ChebExpansion:
    """k-th orthonormal scaling function (localized near node k, not interpolating)."""
    return _column(scaling_ortho_matrix(level), k, level.n, "scaling")


def wavelet_interp(level: VPLevel, k: int) -> ChebExpansion:
    """k-th interpolating wavelet (Kronecker delta on the complement grid)."""
    return _column(wavelet_interp_matrix(level), k, 2 * level.n, "wavelet")


def wavelet_ortho(level: VPLevel, k: int) -> ChebExpansion:
    """k-th orthonormal wavelet."""
    return _column(wavelet_ortho_matrix(level), k, 2 * level.n, "wavelet")


# ---------------------------------------------------------------------------
# coefficient vector <-> function conversions
# ---------------------------------------------------------------------------

def scaling_to_cheb(c: ScalingCoeffs) -> ChebExpansion:
    """Chebyshev expansion of sum_k a_k (orthonormal scaling function k)."""
    t = scaling_analysis(c.a, c.level)
    return ChebExpansion(approx_scatter(c.level) @ t)


def detail_to_cheb(d: DetailCoeffs) -> ChebExpansion:
    """Chebyshev expansion of sum_k b_k (orthonormal wavelet k)."""
    level = d.level
    s = detail_analysis(d.b, level) / np.sqrt(detail_norms_sq(level))
    return ChebExpansion(detail_scatter(level) @ s)


def values_to_ortho(samples, level: VPLevel) -> ScalingCoeffs:
    """Orthonormal coefficients of the unique element of V that interpolates
    ``samples`` on the level-n Chebyshev grid (node order)."""
    samples = _as_length(samples, level.n)
    t = dct(samples) * np.sqrt(scaling_norms_sq(level))
    return ScalingCoeffs(level, np.sqrt(np.pi / level.n) * idct(t))


def ortho_to_values(c: ScalingCoeffs) -> np.ndarray:
    """Values on the level-n Chebyshev grid; inverse of values_to_ortho."""
    level = c.level
    t = dct(c.a) / np.sqrt(scaling_norms_sq(level))
    return np.sqrt(level.n / np.pi) * idct(t)
