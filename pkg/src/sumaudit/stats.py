"""Distributional statistics and manual-inspection sampling strategies.

The length/compression summaries are the data behind violin-style plots:
mean, linearly interpolated quartiles, extrema and a fixed 50-bin
histogram. The inspection helpers implement the three review strategies
for eyeballing corpora: in order along some axis, at random, and
outliers/representative samples around the median.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .base import SumauditError
from .corpus import Sample, SampleInput, as_sample_list
from .text import normalize, split_sentences, tokenize

HISTOGRAM_BINS = 50

FIELDS = ("reference", "summary")
UNITS = ("chars", "tokens", "sentences")
INSPECT_KEYS = ("position", "ref_length", "summary_length", "cr")
OUTLIER_METRICS = ("ref_length", "summary_length", "cr")


@dataclass(frozen=True)
class LengthStats:
    """Summary statistics over one per-sample value distribution."""

    field: str
    unit: str
    count: int
    mean: float
    q1: float
    median: float
    q3: float
    min: float
    max: float
    histogram: tuple[tuple[float, int], ...]

    def to_violin_dict(self) -> dict:
        """Plot-ready export: exactly the keys needed to redraw a violin."""
        return {
            "field": self.field,
            "unit": self.unit,
            "count": self.count,
            "mean": self.mean,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "min": self.min,
            "max": self.max,
            "histogram": [[edge, count] for edge, count in self.histogram],
        }


def _text_length(text: str, unit: str) -> int:
    if unit == "chars":
        return len(normalize(text))
    if unit == "tokens":
        return len(tokenize(text, "whitespace"))
    if unit == "sentences":
        return len(split_sentences(text))
    raise ValueError(f"unknown unit {unit!r}")


def _summarize(values: list[float], field: str, unit: str) -> LengthStats:
    arr = np.asarray(values, dtype=float)
    q1, median, q3 = np.percentile(arr, [25.0, 50.0, 75.0])
    lo = float(arr.min())
    hi = float(arr.max())
    # np.histogram rejects a zero-width range; widen it for constant data.
    hist_range = (lo, hi) if lo < hi else (lo - 0.5, hi + 0.5)
    counts, edges = np.histogram(arr, bins=HISTOGRAM_BINS, range=hist_range)
    histogram = tuple(
        (float(edge), int(count)) for edge, count in zip(edges[:-1], counts)
    )
    return LengthStats(
        field=field,
        unit=unit,
        count=len(values),
        mean=float(arr.mean()),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        min=lo,
        max=hi,
        histogram=histogram,
    )


def length_distribution(
    X: SampleInput, field: str = "summary", unit: str = "tokens"
) -> LengthStats:
    """Distribution of reference or summary lengths in the chosen unit."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    samples = as_sample_list(X)
    if not samples:
        raise SumauditError("length_distribution: empty corpus")
    values = [float(_text_length(getattr(s, field), unit)) for s in samples]
    return _summarize(values, field, unit)


def cr_distribution(X: SampleInput) -> LengthStats:
    """Distribution of per-sample compression ratios (token-based)."""
    samples = as_sample_list(X)
    if not samples:
        raise SumauditError("cr_distribution: empty corpus")
    values = []
    for sample in samples:
        summary_tokens = len(tokenize(sample.summary, "whitespace"))
        if summary_tokens == 0:
            raise SumauditError(
                f"sample {sample.id!r}: compression ratio undefined, "
                "summary has no tokens"
            )
        ref_tokens = len(tokenize(sample.reference, "whitespace"))
        values.append(ref_tokens / summary_tokens)
    return _summarize(values, "cr", "ratio")


def _cr_or_inf(sample: Sample) -> float:
    # Inspection must stay total on dirty corpora: a token-less summary
    # sorts as an extreme value instead of raising.
    summary_tokens = len(tokenize(sample.summary, "whitespace"))
    if summary_tokens == 0:
        return math.inf
    return len(tokenize(sample.reference, "whitespace")) / summary_tokens


_KEY_FUNCS = {
    "ref_length": lambda s: float(len(tokenize(s.reference, "whitespace"))),
    "summary_length": lambda s: float(len(tokenize(s.summary, "whitespace"))),
    "cr": _cr_or_inf,
}


def inspect_ordered(
    X: SampleInput, key: str = "position", n: int = 10
) -> list[Sample]:
    """First ``n`` samples under an ascending sort along the given axis.

    ``position`` keeps the original order; the sort is stable, so ties
    keep their original relative order. ``n`` beyond the corpus size
    returns everything.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if key not in INSPECT_KEYS:
        raise ValueError(f"key must be one of {INSPECT_KEYS}, got {key!r}")
    samples = as_sample_list(X)
    if key == "position":
        return samples[:n]
    return sorted(samples, key=_KEY_FUNCS[key])[:n]


def inspect_random(X: SampleInput, n: int = 10, seed: int = 0) -> list[Sample]:
    """``n`` samples drawn without replacement with a seeded generator.

    Deterministic for a fixed (corpus, n, seed); n is capped at the
    corpus size.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    samples = as_sample_list(X)
    rng = random.Random(seed)
    return rng.sample(samples, min(n, len(samples)))


def inspect_outliers(
    X: SampleInput,
    metric: str = "cr",
    n: int = 10,
    mode: str = "extreme",
) -> list[Sample]:
    """Samples farthest from (``extreme``) or closest to (``representative``)
    the median of the chosen metric; ties broken by original position."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if metric not in OUTLIER_METRICS:
        raise ValueError(
            f"metric must be one of {OUTLIER_METRICS}, got {metric!r}"
        )
    if mode not in ("extreme", "representative"):
        raise ValueError(f"mode must be 'extreme' or 'representative', got {mode!r}")
    samples = as_sample_list(X)
    if not samples:
        raise SumauditError("inspect_outliers: empty corpus")
    key_func = _KEY_FUNCS[metric]
    values = [key_func(s) for s in samples]
    finite = [v for v in values if math.isfinite(v)]
    median = float(np.median(finite)) if finite else 0.0
    distances = [
        abs(v - median) if math.isfinite(v) else math.inf for v in values
    ]
    order = sorted(
        range(len(samples)),
        key=lambda i: (-distances[i], i) if mode == "extreme" else (distances[i], i),
    )
    return [samples[i] for i in order[:n]]
