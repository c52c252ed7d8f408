"""Uniform sampling of lattice elements and scaled distance moments.

Samplers draw uniform path representatives (multiset shuffles for
rectangles, fair coin words for staircases) with a PCG64 generator.
Distances are computed exactly in integers; moment numerators accumulate
in Python big integers, so the only rounding happens when the final
scaled values are reported.  Batches use substreams spawned from the
seed, which makes reports bit-identical for a fixed seed regardless of
how batches are scheduled.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from . import formulas
from .paths import rect_paths, stair_words, ud_heights

RNG_NAME = "pcg64"
DEFAULT_BATCH = 2000
THREAD_ENV_VAR = "MINLAT_THREADS"

# finite-size bias allowances on top of 4 standard errors, per moment order
BIAS_TOLERANCE = {1: 0.05, 2: 0.05, 3: 0.08}


def _require_family(family: str) -> None:
    if family not in ("rect", "stair"):
        raise ValueError(f"unknown family {family!r}")


def limit_moments(family: str, r: int, alpha: Fraction | None = None) -> mpmath.mpf:
    """Limit of n^(-3r/2) E[distance^r] as the lattice size grows.

    The limits are the absolute-area moments of a Brownian bridge
    (rectangles) or Brownian motion (staircases), scaled by the step
    variance of the path model.
    """
    _require_family(family)
    if r not in (1, 2, 3):
        raise ValueError("limit moments are tabulated for r in {1, 2, 3}")
    with mpmath.workdps(formulas.PRECISION_DPS):
        if family == "rect":
            if alpha is None:
                raise ValueError("rect limits need the aspect ratio alpha")
            alpha = Fraction(alpha)
            bridge = {
                1: mpmath.sqrt(mpmath.pi / 2) / 4,
                2: mpmath.mpf(7) / 60,
                3: mpmath.sqrt(mpmath.pi / 2) * mpmath.mpf(21) / 512,
            }[r]
            scale = 2 * mpmath.mpf(alpha.numerator) / alpha.denominator
            scale *= 1 + mpmath.mpf(alpha.numerator) / alpha.denominator
            return mpmath.power(scale, mpmath.mpf(r) / 2) * bridge
        motion = {
            1: mpmath.sqrt(2 / mpmath.pi) * mpmath.mpf(2) / 3,
            2: mpmath.mpf(3) / 8,
            3: mpmath.sqrt(2 / mpmath.pi) * mpmath.mpf(263) / 630,
        }[r]
        return motion / mpmath.power(2, mpmath.mpf(r) / 2)


def _steps_to_word(steps) -> str:
    return "".join("U" if s > 0 else "D" for s in steps)


def sample_stair_pair(n: int, rng: np.random.Generator) -> tuple[str, str]:
    """Two independent uniform length-n U/D words."""
    if n < 1:
        raise ValueError("n must be positive")
    bits = rng.integers(0, 2, size=(2, n))
    return _steps_to_word(2 * bits[0] - 1), _steps_to_word(2 * bits[1] - 1)


def sample_rect_pair(m: int, k: int, rng: np.random.Generator) -> tuple[str, str]:
    """Two independent uniform paths with m U steps and k D steps.

    Uniformity comes from a Fisher-Yates shuffle of the step multiset.
    """
    if m < 1 or k < 1:
        raise ValueError("rectangle dimensions must be positive")
    base = np.array([1] * m + [-1] * k, dtype=np.int8)
    p = rng.permuted(base)
    q = rng.permuted(base)
    return _steps_to_word(p), _steps_to_word(q)


def _batch_distances_stair(n: int, batch: int, rng: np.random.Generator) -> np.ndarray:
    steps = rng.integers(0, 2, size=(2, batch, n), dtype=np.int8) * 2 - 1
    heights = np.cumsum(steps, axis=2, dtype=np.int32)
    gaps = np.abs(heights[0] - heights[1])
    return gaps.sum(axis=1, dtype=np.int64) // 2


def _batch_distances_rect(m: int, k: int, batch: int, rng: np.random.Generator) -> np.ndarray:
    base = np.tile(np.array([1] * m + [-1] * k, dtype=np.int8), (2, batch, 1))
    steps = rng.permuted(base, axis=2)
    heights = np.cumsum(steps, axis=2, dtype=np.int32)
    gaps = np.abs(heights[0] - heights[1])
    return gaps.sum(axis=1, dtype=np.int64) // 2


@dataclass(frozen=True)
class SampleReport:
    """Outcome of a sampling run, serializable to canonical JSON."""

    family: str
    n: int
    alpha: Fraction | None
    num_samples: int
    seed: int
    r_max: int
    rng: str
    batch_size: int
    threads: int
    raw_moment_sums: tuple[int, ...]  # sum of distance^r, r = 1..r_max
    scaled_moments: tuple[tuple[int, float, float], ...]  # (r, value, std error)
    limit_targets: tuple[tuple[int, float], ...]
    bias_tolerance: tuple[tuple[int, float], ...]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "alpha": None if self.alpha is None else str(self.alpha),
            "num_samples": self.num_samples,
            "seed": self.seed,
            "r_max": self.r_max,
            "rng": self.rng,
            "batch_size": self.batch_size,
            "threads": self.threads,
            "raw_moment_sums": [str(v) for v in self.raw_moment_sums],
            "scaled_moments": [
                {"r": r, "value": value, "std_error": se}
                for r, value, se in self.scaled_moments
            ],
            "limit_targets": [{"r": r, "value": v} for r, v in self.limit_targets],
            "bias_tolerance": [{"r": r, "value": v} for r, v in self.bias_tolerance],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _thread_count() -> int:
    raw = os.environ.get(THREAD_ENV_VAR, "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREAD_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{THREAD_ENV_VAR} must be >= 1")
    return value


def run_experiment(
    family: str,
    n: int,
    alpha: Fraction | None = None,
    r_max: int = 3,
    num_samples: int = 100_000,
    seed: int = 0,
    batch_size: int = DEFAULT_BATCH,
) -> SampleReport:
    """Sample pairs, reduce exact moment sums, and report scaled moments.

    Per-batch generators are spawned from the seed, and batch results are
    exact integer sums, so the report depends only on (seed, batch_size,
    parameters) -- not on thread scheduling.
    """
    _require_family(family)
    if not 1 <= r_max <= 3:
        raise ValueError("r_max must be between 1 and 3")
    if num_samples < 1:
        raise ValueError("num_samples must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    if family == "rect":
        alpha = Fraction(alpha if alpha is not None else 1)
        m_frac = alpha * n
        if m_frac.denominator != 1 or m_frac < 1:
            raise ValueError(f"alpha*n must be a positive integer, got {m_frac}")
        m = int(m_frac)
    else:
        alpha = None

    sizes = [batch_size] * (num_samples // batch_size)
    if num_samples % batch_size:
        sizes.append(num_samples % batch_size)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))

    def one_batch(idx: int) -> list[int]:
        rng = np.random.Generator(np.random.PCG64(streams[idx]))
        if family == "stair":
            dists = _batch_distances_stair(n, sizes[idx], rng)
        else:
            dists = _batch_distances_rect(m, n, sizes[idx], rng)
        powers = [0] * 7  # index p holds sum of d^p for p in 1..6
        for d in dists.tolist():
            d2 = d * d
            d3 = d2 * d
            powers[1] += d
            powers[2] += d2
            powers[3] += d3
            powers[4] += d2 * d2
            powers[6] += d3 * d3
        return powers

    threads = _thread_count()
    if threads == 1:
        partials = [one_batch(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(one_batch, range(len(sizes))))

    sums = [0] * 7
    for part in partials:
        for p in range(7):
            sums[p] += part[p]

    scaled = []
    targets = []
    for r in range(1, r_max + 1):
        mean = Fraction(sums[r], num_samples)
        var = (
            Fraction(sums[2 * r], num_samples) - mean * mean
            if num_samples > 1
            else Fraction(0)
        )
        # unbiased sample variance, then the standard error of the mean
        if num_samples > 1:
            var = var * num_samples / (num_samples - 1)
        scale = float(n) ** (1.5 * r)
        se = (float(var) / num_samples) ** 0.5 / scale
        scaled.append((r, float(mean) / scale, se))
        targets.append((r, float(limit_moments(family, r, alpha))))

    return SampleReport(
        family=family,
        n=n,
        alpha=alpha,
        num_samples=num_samples,
        seed=seed,
        r_max=r_max,
        rng=RNG_NAME,
        batch_size=batch_size,
        threads=threads,
        raw_moment_sums=tuple(sums[1 : r_max + 1]),
        scaled_moments=tuple(scaled),
        limit_targets=tuple(targets),
        bias_tolerance=tuple((r, BIAS_TOLERANCE[r]) for r in range(1, r_max + 1)),
    )


# --- exhaustive references for small instances --------------------------------


def _pairwise_moment(heights: np.ndarray, r: int) -> int:
    """Sum of (pair distance)^r over all ordered row pairs, exact."""
    total = 0
    count = heights.shape[0]
    chunk = max(1, (1 << 22) // max(1, count * heights.shape[1]))
    for lo in range(0, count, chunk):
        block = heights[lo : lo + chunk]
        gaps = np.abs(block[:, None, :] - heights[None, :, :]).sum(
            axis=2, dtype=np.int64
        )
        dists = (gaps // 2).ravel().tolist()
        total += sum(d**r for d in dists)
    return total


def exhaustive_stair_moment(n: int, r: int = 1) -> int:
    """Sum of distance^r over all ordered pairs of length-n words."""
    words = list(stair_words(n))
    heights = np.array([ud_heights(w) for w in words], dtype=np.int32)
    return _pairwise_moment(heights, r)


def exhaustive_rect_moment(m: int, k: int, r: int = 1) -> int:
    """Sum of distance^r over all ordered path pairs of the rectangle model."""
    words = list(rect_paths(m, k))
    heights = np.array([ud_heights(w) for w in words], dtype=np.int32)
    return _pairwise_moment(heights, r)
