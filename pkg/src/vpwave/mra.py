"""Factor-3 multiresolution analysis: one-step splits, dense reference
matrices, multilevel pyramids, thresholding and pyramid serialization.

A coefficient vector on the level-3n approximation space splits into a
coarse scaling vector (length n) and a detail vector (length 2n) through an
orthogonal 3n x 3n map, so reconstruction is exact and energy is preserved.
The fast path runs in O(n log n) via the coefficient transforms of
:mod:`vpwave.bases`; ``analysis_matrices`` builds the equivalent dense pair
for reference and testing.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .bases import (
    DetailCoeffs,
    ScalingCoeffs,
    detail_analysis,
    detail_synthesis,
    scaling_analysis,
    scaling_synthesis,
)
from .filters import (
    VPLevel,
    detail_norms_sq,
    detail_transform,
    lowpass_weights,
    scaling_transform,
)
from .operators import discrete_proj


class PyramidError(ValueError):
    """Inconsistent or malformed pyramid data."""


def decompose_step(fine: ScalingCoeffs) -> tuple[ScalingCoeffs, DetailCoeffs]:
    """Split level-(3n, m) scaling coefficients into level-(n, m) scaling and
    detail coefficients.  Requires 3 | 3n and m < n."""
    level3 = fine.level
    if level3.n % 3 != 0:
        raise ValueError(f"input length {level3.n} is not divisible by 3")
    n, m = level3.n // 3, level3.m
    if m >= n:
        raise ValueError(f"m={m} too large to split down to n={n}")
    level = VPLevel(n, m)
    mu = lowpass_weights(level)
    v = detail_norms_sq(level)

    t = scaling_analysis(fine.a, level3)

    w = np.empty(n)
    w[: n - m + 1] = t[: n - m + 1]
    ramp = np.arange(n - m + 1, n)
    w[ramp] = mu[ramp] * t[ramp] - mu[2 * n - ramp] * t[2 * n - ramp]
    a = scaling_synthesis(w, level)

    u = np.empty(2 * n)
    lo = np.arange(n, n + m)
    u[lo - n] = (mu[lo] * t[2 * n - lo] + mu[2 * n - lo] * t[lo]) / np.sqrt(v[lo - n])
    mid = np.arange(n + m, 3 * n - m + 1)
    u[mid - n] = t[mid] / np.sqrt(v[mid - n])
    hi = np.arange(3 * n - m + 1, 3 * n)
    u[hi - n] = t[hi] * np.sqrt(v[hi - n])
    b = detail_synthesis(u, level)

    return ScalingCoeffs(level, a), DetailCoeffs(level, b)


def reconstruct_step(a: ScalingCoeffs, b: DetailCoeffs) -> ScalingCoeffs:
    """Exact inverse of decompose_step."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: scaling {a.level} vs detail {b.level}")
    level = a.level
    n, m = level.n, level.m
    level3 = VPLevel(3 * n, m)
    mu = lowpass_weights(level)
    v = detail_norms_sq(level)

    alpha = scaling_analysis(a.a, level)
    beta = detail_analysis(b.b, level) / np.sqrt(v)

    t = np.empty(3 * n)
    t[: n - m + 1] = alpha[: n - m + 1]
    ramp = np.arange(n - m + 1, n)
    t[ramp] = alpha[ramp] * mu[ramp] + beta[2 * n - ramp - n] * mu[2 * n - ramp]
    t[n] = beta[0]
    lo = np.arange(n + 1, n + m)
    t[lo] = beta[lo - n] * mu[2 * n - lo] - alpha[2 * n - lo] * mu[lo]
    mid = np.arange(n + m, 3 * n - m + 1)
    t[mid] = beta[mid - n]
    hi = np.arange(3 * n - m + 1, 3 * n)
    t[hi] = beta[hi - n] * v[hi - n]

    return ScalingCoeffs(level3, scaling_synthesis(t, level3))


def analysis_matrices(level: VPLevel) -> tuple[np.ndarray, np.ndarray]:
    """Dense (n x 3n, 2n x 3n) matrices of the one-step split at ``level``.

    Stacked on top of each other they form an orthogonal 3n x 3n matrix, so
    the transposes reconstruct.  This is the O(n^2) reference path for
    decompose_step / reconstruct_step.
    """
    n, m = level.n, level.m
    t3 = scaling_transform(VPLevel(3 * n, m))
    tn = scaling_transform(level)
    mu = lowpass_weights(level)
    v = detail_norms_sq(level)

    g = np.empty((n, 3 * n))
    g[: n - m + 1] = t3[: n - m + 1]
    ramp = np.arange(n - m + 1, n)
    g[ramp] = mu[ramp, None] * t3[ramp] - mu[2 * n - ramp, None] * t3[2 * n - ramp]
    a_mat = tn.T @ g

    h = np.empty((2 * n, 3 * n))
    lo = np.arange(n, n + m)
    h[lo - n] = ((mu[lo, None] * t3[2 * n - lo] + mu[2 * n - lo, None] * t3[lo])
                 / np.sqrt(v[lo - n, None]))
    mid = np.arange(n + m, 3 * n - m + 1)
    h[mid - n] = t3[mid] / np.sqrt(v[mid - n, None])
    hi = np.arange(3 * n - m + 1, 3 * n)
    h[hi - n] = t3[hi] * np.sqrt(v[hi - n, None])
    b_mat = detail_transform(level).T @ h

    return a_mat, b_mat


# ---------------------------------------------------------------------------
# multilevel pyramids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiDecomposition:
    """Base scaling coefficients at the coarsest level plus one detail vector
    per level of the factor-3 chain, ordered coarsest first.

    All levels share one ramp parameter, fixed from the coarsest resolution
    as m = floor(theta * n0): a single m keeps every one-step split and the
    whole telescoping sum exact, which a per-level m would break (the same
    coefficient vector would be read against different bases at consecutive
    steps).
    """

    theta: float
    base: ScalingCoeffs
    details: tuple[DetailCoeffs, ...]

    def __post_init__(self):
        object.__setattr__(self, "details", tuple(self.details))
        n = self.base.level.n
        for d in self.details:
            if d.level.n != n:
                raise PyramidError(
                    f"detail at n={d.level.n} breaks the factor-3 chain (expected {n})")
            n *= 3

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def top_n(self) -> int:
        return self.base.level.n * 3 ** len(self.details)


def pyramid_m(n0: int, theta: float) -> int:
    """The shared ramp parameter m = floor(theta * n0) of a pyramid based at n0."""
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")
    if n0 * (1.0 - theta) <= 1.0:
        raise ValueError(f"base resolution n0={n0} too small for theta={theta} "
                         f"(need n0 > 1/(1-theta))")
    m = math.floor(theta * n0)
    if m < 1:
        raise ValueError(f"theta={theta} gives m=0 at base resolution {n0}")
    return m


def decompose_multi(samples, n0: int, levels: int, theta: float) -> MultiDecomposition:
    """Project samples taken on the Chebyshev grid of size n0 * 3**levels and
    run ``levels`` one-step splits down to the base resolution."""
    if levels < 0:
        raise ValueError(f"level count must be nonnegative, got {levels}")
    m = pyramid_m(n0, theta)
    n_top = n0 * 3 ** levels
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (n_top,):
        raise ValueError(f"expected {n_top} samples, got {samples.shape}")
    a = discrete_proj(samples, VPLevel(n_top, m))
    details: list[DetailCoeffs] = []
    for _ in range(levels):
        a, b = decompose_step(a)
        details.append(b)
    details.reverse()
    return MultiDecomposition(theta, a, tuple(details))


def reconstruct_multi(decomp: MultiDecomposition) -> ScalingCoeffs:
    """Top-level scaling coefficients; exact inverse of the pyramid stage of
    decompose_multi (not of the initial sampling projection)."""
    a = decomp.base
    for b in decomp.details:
        a = reconstruct_step(a, b)
    return a


def redecompose(top: ScalingCoeffs, decomp: MultiDecomposition) -> MultiDecomposition:
    """Run the pyramid stage on existing top-level coefficients, mirroring the
    level chain of ``decomp``."""
    if top.level.n != decomp.top_n:
        raise PyramidError(
            f"top coefficients at n={top.level.n}, pyramid expects {decomp.top_n}")
    a = top
    details: list[DetailCoeffs] = []
    for _ in range(decomp.levels):
        a, b = decompose_step(a)
        details.append(b)
    details.reverse()
    return MultiDecomposition(decomp.theta, a, tuple(details))


# ---------------------------------------------------------------------------
# thresholding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThresholdReport:
    kept: int
    total: int
    energy_kept: float
    energy_total: float


def _rebuild(decomp: MultiDecomposition,
             kept_details: list[np.ndarray]) -> tuple[MultiDecomposition, ThresholdReport]:
    total = sum(d.b.size for d in decomp.details)
    kept = sum(int(np.count_nonzero(nb)) for nb in kept_details)
    energy_total = sum(float(d.b @ d.b) for d in decomp.details)
    energy_kept = sum(float(nb @ nb) for nb in kept_details)
    new_details = tuple(DetailCoeffs(d.level, nb)
                        for d, nb in zip(decomp.details, kept_details))
    out = MultiDecomposition(decomp.theta, decomp.base, new_details)
    return out, ThresholdReport(kept, total, energy_kept, energy_total)


def threshold_hard(decomp: MultiDecomposition,
                   cutoff: float) -> tuple[MultiDecomposition, ThresholdReport]:
    """Zero every detail coefficient with |b| strictly below ``cutoff``."""
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    kept = [np.where(np.abs(d.b) < cutoff, 0.0, d.b) for d in decomp.details]
    return _rebuild(decomp, kept)


def threshold_keep_top(decomp: MultiDecomposition,
                       fraction: float) -> tuple[MultiDecomposition, ThresholdReport]:
    """Keep the top ``fraction`` of detail coefficients by magnitude
    (globally across levels, ties broken by position) and zero the rest."""
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must lie in (0, 1], got {fraction}")
    flat = np.concatenate([d.b for d in decomp.details]) if decomp.details else np.empty(0)
    keep_count = math.ceil(fraction * flat.size)
    order = np.argsort(-np.abs(flat), kind="stable")
    mask = np.zeros(flat.size, dtype=bool)
    mask[order[:keep_count]] = True
    kept = []
    offset = 0
    for d in decomp.details:
        block = mask[offset:offset + d.b.size]
        kept.append(np.where(block, d.b, 0.0))
        offset += d.b.size
    return _rebuild(decomp, kept)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def pyramid_to_json(decomp: MultiDecomposition) -> str:
    """JSON document for a pyramid; floats round-trip bit-exactly."""
    doc = {
        "theta": decomp.theta,
        "n0": decomp.base.level.n,
        "L": decomp.levels,
        "base": [float(x) for x in decomp.base.a],
        "details": [
            {"n": d.level.n, "m": d.level.m, "b": [float(x) for x in d.b]}
            for d in decomp.details
        ],
    }
    return json.dumps(doc, indent=1)


def pyramid_from_json(text: str) -> MultiDecomposition:
    """Parse a pyramid document, validating the level chain."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PyramidError(f"malformed pyramid JSON: {exc}") from exc
    try:
        theta = float(doc["theta"])
        n0 = int(doc["n0"])
        levels = int(doc["L"])
        base_vals = np.asarray(doc["base"], dtype=float)
        raw_details = doc["details"]
    except (KeyError, TypeError, ValueError) as exc:
        raise PyramidError(f"pyramid document missing or mistyped fields: {exc}") from exc
    if len(raw_details) != levels:
        raise PyramidError(f"pyramid lists {len(raw_details)} details but L={levels}")
    try:
        m = pyramid_m(n0, theta)
    except ValueError as exc:
        raise PyramidError(str(exc)) from exc
    if base_vals.shape != (n0,):
        raise PyramidError(f"base has {base_vals.size} coefficients, expected {n0}")
    base = ScalingCoeffs(VPLevel(n0, m), base_vals)
    details = []
    n = n0
    for entry in raw_details:
        try:
            dn, dm = int(entry["n"]), int(entry["m"])
            vals = np.asarray(entry["b"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise PyramidError(f"bad detail entry: {exc}") from exc
        if dn != n or dm != m:
            raise PyramidError(
                f"detail level (n={dn}, m={dm}) breaks the chain (expected ({n}, {m}))")
        if vals.shape != (2 * dn,):
            raise PyramidError(f"detail at n={dn} has {vals.size} coefficients, "
                               f"expected {2 * dn}")
        details.append(DetailCoeffs(VPLevel(dn, dm), vals))
        n *= 3
    return MultiDecomposition(theta, base, tuple(details))
