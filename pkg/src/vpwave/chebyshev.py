"""Chebyshev building blocks on [-1, 1].

Everything downstream is expressed in the orthonormal first-kind family

    p_0(x) = sqrt(1/pi),       p_r(x) = sqrt(2/pi) * cos(r * arccos x),  r >= 1,

which satisfies  int_{-1}^{1} p_r p_s w = delta_{rs}  for the Chebyshev weight
w(x) = 1/sqrt(1 - x^2).  The cosine transforms below are the orthonormal
DCT-II / DCT-III pair written against this normalization: for length N,

    dct(v)[r]  = sqrt(pi/N) * sum_k v[k] p_r(x_k),     x_k in cheb_nodes(N),
    idct(v)[k] = sqrt(pi/N) * sum_r v[r] p_r(x_k),

so idct is simultaneously the transpose and the inverse of dct.  A dense
O(N^2) reference matrix is provided next to the O(N log N) fast path.
"""

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft

SQRT_1_PI = 1.0 / math.sqrt(math.pi)
SQRT_2_PI = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class ChebGrid:
    """Chebyshev zeros x_k = cos((2k-1) pi / (2n)), k = 1..n, in decreasing order."""

    n: int
    nodes: np.ndarray

    def __post_init__(self):
        self.nodes.setflags(write=False)


@dataclass(frozen=True)
class YGrid:
    """The 2n nodes of cheb_nodes(3n) that are not in cheb_nodes(n).

    Ordering interleaves the fine grid: y_{2k-1} = x_{3k-2} and
    y_{2k} = x_{3k} of the 3n-grid, for k = 1..n.
    """

    n: int
    nodes: np.ndarray

    def __post_init__(self):
        self.nodes.setflags(write=False)


def cheb_nodes(n: int) -> ChebGrid:
    """Chebyshev zero grid of size n."""
    if n < 1:
        raise ValueError(f"grid size must be positive, got {n}")
    k = np.arange(1, n + 1)
    # the ratio is formed before multiplying by pi so that the coarse grid
    # reproduces every third fine-grid angle bit-for-bit (x_k^n = x_{3k-1}^{3n})
    return ChebGrid(n, np.cos(((2 * k - 1) / (2 * n)) * np.pi))


def y_nodes(n: int) -> YGrid:
    """Complement grid of cheb_nodes(n) inside cheb_nodes(3n), interleaved."""
    if n < 1:
        raise ValueError(f"grid size must be positive, got {n}")
    fine = cheb_nodes(3 * n).nodes
    keep = np.arange(1, 3 * n + 1) % 3 != 2  # drop positions 3k-1 (1-based)
    return YGrid(n, fine[keep].copy())


def _check_domain(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("evaluation point outside [-1, 1]")
    return x


def eval_p(r: int, x):
    """Orthonormal Chebyshev polynomial p_r at x (scalar or array), |x| <= 1."""
    if r < 0:
        raise ValueError(f"degree must be nonnegative, got {r}")
    x = _check_domain(x)
    scale = SQRT_1_PI if r == 0 else SQRT_2_PI
    out = scale * np.cos(r * np.arccos(x))
    return float(out) if out.ndim == 0 else out


def eval_p_table(degrees, x) -> np.ndarray:
    """Table p_r(x_j) with shape (len(degrees), len(x))."""
    degrees = np.asarray(degrees)
    x = np.atleast_1d(_check_domain(x))
    out = np.cos(np.outer(degrees, np.arccos(x)))
    out *= np.where(degrees == 0, SQRT_1_PI, SQRT_2_PI)[:, None]
    return out


def dct(v) -> np.ndarray:
    """Fast orthonormal DCT-II of a length-N sequence (see module docstring)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("dct expects a nonempty 1-d sequence")
    return scipy.fft.dct(v, type=2, norm="ortho")


def idct(v) -> np.ndarray:
    """Fast orthonormal DCT-III (transpose/inverse of dct)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("idct expects a nonempty 1-d sequence")
    return scipy.fft.idct(v, type=2, norm="ortho")


def dct_matrix(n: int) -> np.ndarray:
    """Dense reference matrix D with dct(v) = D @ v and idct(v) = D.T @ v.

    The angles r (2k-1) pi / (2n) are reduced modulo 2 pi in exact integer
    arithmetic before the cosine, so the reference stays at roundoff level
    even for large n.
    """
    if n < 1:
        raise ValueError(f"transform size must be positive, got {n}")
    k = np.arange(1, n + 1, dtype=np.int64)
    r = np.arange(n, dtype=np.int64)[:, None]
    reduced = (r * (2 * k - 1)) % (4 * n)
    mat = np.cos(reduced * (np.pi / (2 * n)))
    mat *= math.sqrt(2.0 / n)
    mat[0] = math.sqrt(1.0 / n)
    return mat


def gauss_cheb_quad(f, n: int) -> float:
    """Gauss-Chebyshev rule (pi/n) sum f(x_k); exact on P_{2n-1} against w."""
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    xs = cheb_nodes(n).nodes
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise TypeError
    except TypeError:
        vals = np.array([f(x) for x in xs], dtype=float)
    return float(np.pi / n * vals.sum())


@dataclass(frozen=True)
class ChebExpansion:
    """Coefficients c_0..c_d of sum_r c_r p_r(x)."""

    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def expansion(coeffs) -> ChebExpansion:
    coeffs = np.array(coeffs, dtype=float)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise ValueError("expansion needs a nonempty coefficient sequence")
    return ChebExpansion(coeffs)


def eval_series(coeffs: np.ndarray, x) -> np.ndarray:
    """Evaluate sum_r c_r p_r via theta = arccos x and the cosine recurrence."""
    x = np.atleast_1d(_check_domain(x))
    c = np.asarray(coeffs, dtype=float)
    acc = np.full_like(x, c[0] * SQRT_1_PI)
    if len(c) > 1:
        cos1 = np.cos(np.arccos(x))
        prev = np.ones_like(x)
        cur = cos1.copy()
        acc += SQRT_2_PI * c[1] * cur
        for r in range(2, len(c)):
            prev, cur = cur, 2.0 * cos1 * cur - prev
            if c[r] != 0.0:
                acc += SQRT_2_PI * c[r] * cur
    return acc


def eval_expansion(e: ChebExpansion, x):
    """Value of the expansion at x in [-1, 1] (scalar or array)."""
    out = eval_series(e.coeffs, x)
    return float(out[0]) if np.ndim(x) == 0 else out


def probe_grid(grid_size: int) -> np.ndarray:
    """Chebyshev-distributed probe grid cos(j pi / M), j = 0..M, endpoints included."""
    if grid_size < 1:
        raise ValueError(f"grid size must be positive, got {grid_size}")
    return np.cos(np.arange(grid_size + 1) * (np.pi / grid_size))


def sup_error(f, g, grid_size: int = 10000) -> float:
    """max |f - g| over probe_grid(grid_size)."""
    if grid_size < 2:
        raise ValueError(f"grid size must be at least 2, got {grid_size}")
    xs = probe_grid(grid_size)
    return float(np.max(np.abs(np.asarray(f(xs), dtype=float)
                               - np.asarray(g(xs), dtype=float))))
