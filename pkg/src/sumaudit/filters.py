"""Per-sample sanity checks, additive deduplication and corpus auditing.

Each sample receives exactly one outcome, the first failing check in a
fixed precedence order:

    minlen_ref -> minlen_summary -> identity -> min_cr -> (max_cr)
    -> fully_extractive -> dedup (dup_exact / dup_reference / dup_summary)

so that corpus-level counts are disjoint and sum to the total. Samples
that survive every per-sample check go through a single additive
deduplication pass in corpus order: a sample is kept if and only if
neither its normalized reference nor its normalized summary has been seen
before, and kept samples register both keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .base import ParamsMixin, SumauditError
from .corpus import Corpus, Sample, SampleInput, as_sample_list
from .text import normalize, tokenize

VALID = "valid"
MINLEN_REF = "minlen_ref"
MINLEN_SUMMARY = "minlen_summary"
IDENTITY = "identity"
MIN_CR = "min_cr"
MAX_CR = "max_cr"
FULLY_EXTRACTIVE = "fully_extractive"
DUP_EXACT = "dup_exact"
DUP_REFERENCE = "dup_reference"
DUP_SUMMARY = "dup_summary"

#: Failure buckets in report column order. ``max_cr`` only occurs when the
#: optional maximum compression-ratio threshold is enabled.
FAILURE_OUTCOMES = (
    MINLEN_REF,
    MINLEN_SUMMARY,
    IDENTITY,
    MIN_CR,
    MAX_CR,
    FULLY_EXTRACTIVE,
    DUP_EXACT,
    DUP_REFERENCE,
    DUP_SUMMARY,
)

#: Threshold presets. ``default`` matches general news-style corpora;
#: ``wikilingua`` relaxes the length minima for short instruction texts
#: (reference >= 20 chars, summary >= 8 chars).
PRESETS = {
    "default": {
        "min_ref_chars": 50,
        "min_summary_chars": 20,
        "min_cr": 1.25,
        "max_cr": None,
    },
    "wikilingua": {
        "min_ref_chars": 20,
        "min_summary_chars": 8,
        "min_cr": 1.25,
        "max_cr": None,
    },
}

_CONFIG_KEYS = ("min_ref_chars", "min_summary_chars", "min_cr", "max_cr")


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of the audit for one sample."""

    sample_id: str
    outcome: str


@dataclass(frozen=True)
class AuditReport:
    """Corpus-level breakdown of audit outcomes (disjoint buckets)."""

    split_label: str | None
    total: int
    counts: dict[str, int]
    valid: int

    @property
    def valid_fraction(self) -> float:
        return self.valid / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        return {
            "split_label": self.split_label,
            "total": self.total,
            "counts": dict(self.counts),
            "valid": self.valid,
            "valid_fraction": self.valid_fraction,
        }


def check_min_length(
    sample: Sample, min_ref_chars: int = 50, min_summary_chars: int = 20
) -> str | None:
    """Minimum-length check on normalized character counts.

    Thresholds are inclusive lower bounds: a text of exactly the minimum
    length passes. Whitespace-only texts normalize to "" and count zero
    characters, which also covers the various flavours of empty samples.
    The reference is checked first.
    """
    if len(normalize(sample.reference)) < min_ref_chars:
        return MINLEN_REF
    if len(normalize(sample.summary)) < min_summary_chars:
        return MINLEN_SUMMARY
    return None


def check_identity(sample: Sample) -> str | None:
    """Reference and summary are the same text (whitespace-normalized,
    case-sensitive)."""
    if normalize(sample.reference) == normalize(sample.summary):
        return IDENTITY
    return None


def compression_ratio(sample: Sample) -> float:
    """Whitespace-token length of the reference divided by the summary's."""
    ref_tokens = len(tokenize(sample.reference, "whitespace"))
    summary_tokens = len(tokenize(sample.summary, "whitespace"))
    if summary_tokens == 0:
        raise SumauditError(
            f"sample {sample.id!r}: compression ratio undefined, "
            "summary has no tokens"
        )
    return ref_tokens / summary_tokens


def check_min_cr(sample: Sample, min_cr: float = 1.25) -> str | None:
    """Compression ratio below the threshold (strict comparison, so a
    sample at exactly the threshold passes).

    A summary with no tokens cannot satisfy any positive ratio floor and
    is attributed to this bucket as well; that case is only reachable when
    the length minima are configured to zero.
    """
    summary_tokens = len(tokenize(sample.summary, "whitespace"))
    if summary_tokens == 0:
        return MIN_CR
    ref_tokens = len(tokenize(sample.reference, "whitespace"))
    if ref_tokens / summary_tokens < min_cr:
        return MIN_CR
    return None


def check_fully_extractive(sample: Sample) -> str | None:
    """Summary occurs as a contiguous substring of the reference.

    Both texts are whitespace-normalized and casefolded first; the match
    may occur anywhere, not only at the beginning.
    """
    summary = normalize(sample.summary).casefold()
    reference = normalize(sample.reference).casefold()
    if summary in reference:
        return FULLY_EXTRACTIVE
    return None


def dedup_additive(samples: SampleInput) -> tuple[list[Sample], list[str]]:
    """Single additive deduplication pass in input order.

    Returns the kept samples plus one outcome per input sample: ``valid``
    for kept ones, otherwise ``dup_exact`` (both keys seen before),
    ``dup_reference`` or ``dup_summary``. Keys are the normalized,
    case-sensitive texts; reference keys and summary keys live in separate
    sets, so a sample whose reference matches one earlier sample and whose
    summary matches a different one still counts as ``dup_exact``.
    """
    samples = as_sample_list(samples)
    seen_refs: set[str] = set()
    seen_summaries: set[str] = set()
    kept: list[Sample] = []
    outcomes: list[str] = []
    for sample in samples:
        ref_key = normalize(sample.reference)
        summary_key = normalize(sample.summary)
        ref_seen = ref_key in seen_refs
        summary_seen = summary_key in seen_summaries
        if not ref_seen and not summary_seen:
            seen_refs.add(ref_key)
            seen_summaries.add(summary_key)
            kept.append(sample)
            outcomes.append(VALID)
        elif ref_seen and summary_seen:
            outcomes.append(DUP_EXACT)
        elif ref_seen:
            outcomes.append(DUP_REFERENCE)
        else:
            outcomes.append(DUP_SUMMARY)
    return kept, outcomes


def _per_sample_outcome(
    sample: Sample,
    min_ref_chars: int,
    min_summary_chars: int,
    min_cr: float,
    max_cr: float | None,
) -> str | None:
    outcome = check_min_length(sample, min_ref_chars, min_summary_chars)
    if outcome:
        return outcome
    if check_identity(sample):
        return IDENTITY
    summary_tokens = len(tokenize(sample.summary, "whitespace"))
    if summary_tokens == 0:
        return MIN_CR
    cr = len(tokenize(sample.reference, "whitespace")) / summary_tokens
    if cr < min_cr:
        return MIN_CR
    if max_cr is not None and cr > max_cr:
        return MAX_CR
    if check_fully_extractive(sample):
        return FULLY_EXTRACTIVE
    return None


def audit(
    X: SampleInput,
    *,
    min_ref_chars: int = 50,
    min_summary_chars: int = 20,
    min_cr: float = 1.25,
    max_cr: float | None = None,
    split_label: str | None = None,
) -> tuple[AuditReport, list[FilterVerdict]]:
    """Run the full check battery and return (report, per-sample verdicts).

    Verdicts are in corpus order; every sample gets exactly one outcome
    and the report's bucket counts plus the valid count equal the total.
    """
    if split_label is None and isinstance(X, Corpus):
        split_label = X.split_label
    samples = as_sample_list(X)
    outcomes: list[str | None] = []
    survivors: list[tuple[int, Sample]] = []
    for index, sample in enumerate(samples):
        outcome = _per_sample_outcome(
            sample, min_ref_chars, min_summary_chars, min_cr, max_cr
        )
        outcomes.append(outcome)
        if outcome is None:
            survivors.append((index, sample))
    _, dedup_outcomes = dedup_additive([s for _, s in survivors])
    for (index, _), outcome in zip(survivors, dedup_outcomes):
        outcomes[index] = outcome

    counts = {name: 0 for name in FAILURE_OUTCOMES}
    valid = 0
    verdicts: list[FilterVerdict] = []
    for sample, outcome in zip(samples, outcomes):
        assert outcome is not None
        if outcome == VALID:
            valid += 1
        else:
            counts[outcome] += 1
        verdicts.append(FilterVerdict(sample_id=sample.id, outcome=outcome))
    report = AuditReport(
        split_label=split_label, total=len(samples), counts=counts, valid=valid
    )
    return report, verdicts


def filter_corpus(
    X: SampleInput,
    *,
    min_ref_chars: int = 50,
    min_summary_chars: int = 20,
    min_cr: float = 1.25,
    max_cr: float | None = None,
):
    """Keep exactly the samples whose audit outcome is valid, in order.

    Returns a Corpus when given one (preserving the split label), else a
    list of samples. Idempotent.
    """
    samples = as_sample_list(X)
    _, verdicts = audit(
        samples,
        min_ref_chars=min_ref_chars,
        min_summary_chars=min_summary_chars,
        min_cr=min_cr,
        max_cr=max_cr,
    )
    kept = [s for s, v in zip(samples, verdicts) if v.outcome == VALID]
    if isinstance(X, Corpus):
        return Corpus(samples=tuple(kept), split_label=X.split_label)
    return kept


def load_filter_config(path) -> dict:
    """Load thresholds from a JSON file.

    Recognized keys: min_ref_chars, min_summary_chars, min_cr, max_cr.
    Unknown keys are rejected; omitted keys fall back to the defaults.
    """
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise SumauditError(f"filter config {path}: expected a JSON object")
    unknown = sorted(set(raw) - set(_CONFIG_KEYS))
    if unknown:
        raise SumauditError(f"filter config {path}: unknown keys {unknown}")
    config = dict(PRESETS["default"])
    config.update(raw)
    if config["min_cr"] <= 0:
        raise SumauditError(f"filter config {path}: min_cr must be positive")
    return config


class QualityFilter(ParamsMixin):
    """Estimator-style wrapper around :func:`audit` and :func:`filter_corpus`.

    Stateless: ``fit`` is a no-op kept for pipeline compatibility, and
    ``transform`` returns the valid samples in their original order.
    """

    def __init__(
        self,
        min_ref_chars: int = 50,
        min_summary_chars: int = 20,
        min_cr: float = 1.25,
        max_cr: float | None = None,
    ):
        self.min_ref_chars = min_ref_chars
        self.min_summary_chars = min_summary_chars
        self.min_cr = min_cr
        self.max_cr = max_cr

    @classmethod
    def from_preset(cls, name: str) -> "QualityFilter":
        if name not in PRESETS:
            raise SumauditError(
                f"unknown preset {name!r}; available: {sorted(PRESETS)}"
            )
        return cls(**PRESETS[name])

    @classmethod
    def from_json(cls, path) -> "QualityFilter":
        return cls(**load_filter_config(path))

    def fit(self, X=None, y=None) -> "QualityFilter":
        return self

    def audit(
        self, X: SampleInput, split_label: str | None = None
    ) -> tuple[AuditReport, list[FilterVerdict]]:
        return audit(X, split_label=split_label, **self.get_params(deep=False))

    def transform(self, X: SampleInput):
        return filter_corpus(X, **self.get_params(deep=False))

    def fit_transform(self, X: SampleInput, y=None):
        return self.fit(X, y).transform(X)
