"""Self-contained ROUGE-1/2/L scoring with Cistem stemming and bootstrap
confidence intervals.

Texts are tokenized with the ``rouge`` tokenizer (lowercase, alphanumeric
runs) and optionally stemmed. ROUGE-N counts clipped n-gram overlap;
ROUGE-L uses the longest common subsequence over the full token
sequences. Degenerate inputs (empty candidate or reference) score zero
instead of raising, so corpus-level runs are total. Corpus aggregates are
plain means with percentile bootstrap intervals over seeded resamples.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .base import SumauditError
from .cistem import cistem_stem
from .corpus import SampleInput, as_sample_list
from .text import ngrams, tokenize

ROUGE1 = "rouge1"
ROUGE2 = "rouge2"
ROUGEL = "rougeL"
VARIANTS = (ROUGE1, ROUGE2, ROUGEL)

DEFAULT_RESAMPLES = 2000


@dataclass(frozen=True)
class RougeScore:
    variant: str
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class AggregateScore:
    """Corpus mean with a 95% percentile bootstrap interval on F1."""

    variant: str
    mean_precision: float
    mean_recall: float
    mean_f1: float
    ci_low: float
    ci_high: float
    n_samples: int
    n_resamples: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "mean_f1": self.mean_f1,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "mean_precision": self.mean_precision,
            "mean_recall": self.mean_recall,
            "n_samples": self.n_samples,
            "n_resamples": self.n_resamples,
            "seed": self.seed,
        }


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _prepare(text: str, stem: bool) -> list[str]:
    tokens = tokenize(text, "rouge")
    if stem:
        tokens = [cistem_stem(token) for token in tokens]
    return tokens


def _rouge_n_from_tokens(
    cand_tokens: list[str], ref_tokens: list[str], n: int
) -> RougeScore:
    cand_counts = ngrams(cand_tokens, n)
    ref_counts = ngrams(ref_tokens, n)
    cand_total = sum(cand_counts.values())
    ref_total = sum(ref_counts.values())
    overlap = sum((cand_counts & ref_counts).values())
    precision = overlap / cand_total if cand_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    return RougeScore(
        variant=f"rouge{n}",
        precision=precision,
        recall=recall,
        f1=_f1(precision, recall),
    )


def rouge_n(
    candidate: str, reference: str, n: int = 1, stem: bool = False
) -> RougeScore:
    """Clipped n-gram overlap: precision over candidate n-grams, recall
    over reference n-grams."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _rouge_n_from_tokens(_prepare(candidate, stem), _prepare(reference, stem), n)


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    # Two-row dynamic program; O(len(a) * len(b)) time, O(len(b)) space.
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for token_a in a:
        current = [0]
        for j, token_b in enumerate(b):
            if token_a == token_b:
                current.append(previous[j] + 1)
            else:
                current.append(max(previous[j + 1], current[j]))
        previous = current
    return previous[-1]


def _rouge_l_from_tokens(cand_tokens: list[str], ref_tokens: list[str]) -> RougeScore:
    lcs = _lcs_length(cand_tokens, ref_tokens)
    precision = lcs / len(cand_tokens) if cand_tokens else 0.0
    recall = lcs / len(ref_tokens) if ref_tokens else 0.0
    return RougeScore(
        variant=ROUGEL,
        precision=precision,
        recall=recall,
        f1=_f1(precision, recall),
    )


def rouge_l(candidate: str, reference: str, stem: bool = False) -> RougeScore:
    """Longest common subsequence over the full token sequences."""
    return _rouge_l_from_tokens(_prepare(candidate, stem), _prepare(reference, stem))


def _score_tokens(
    cand_tokens: list[str], ref_tokens: list[str], variant: str
) -> RougeScore:
    if variant == ROUGE1:
        return _rouge_n_from_tokens(cand_tokens, ref_tokens, 1)
    if variant == ROUGE2:
        return _rouge_n_from_tokens(cand_tokens, ref_tokens, 2)
    if variant == ROUGEL:
        return _rouge_l_from_tokens(cand_tokens, ref_tokens)
    raise ValueError(f"unknown variant {variant!r}; use one of {VARIANTS}")


@dataclass(frozen=True)
class CorpusScores:
    """Per-sample scores for every requested variant, joined on id."""

    ids: tuple[str, ...]
    scores: dict[str, list[RougeScore]]
    coverage: float
    n_gold: int


def score_corpus(
    system: Iterable[tuple[str, str]],
    gold: SampleInput,
    variants: Sequence[str] = VARIANTS,
    stem: bool = True,
) -> CorpusScores:
    """Score system summaries against the gold summaries, joined on id.

    Every system id must exist in the gold corpus. Gold samples without a
    system output are skipped with a warning, and the returned coverage
    reports the scored fraction.
    """
    for variant in variants:
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}; use one of {VARIANTS}")
    gold_samples = as_sample_list(gold)
    system_map: dict[str, str] = {}
    for sample_id, summary in system:
        if sample_id in system_map:
            raise SumauditError(f"duplicate system id {sample_id!r}")
        system_map[sample_id] = summary
    gold_ids = {s.id for s in gold_samples}
    unknown = sorted(set(system_map) - gold_ids)
    if unknown:
        raise SumauditError(
            f"{len(unknown)} system ids not present in the gold corpus, "
            f"first: {unknown[0]!r}"
        )
    matched = [s for s in gold_samples if s.id in system_map]
    if not matched:
        raise SumauditError("no system id matches the gold corpus")
    coverage = len(matched) / len(gold_samples)
    if len(matched) < len(gold_samples):
        warnings.warn(
            f"{len(gold_samples) - len(matched)} gold samples have no "
            f"system output; coverage {coverage:.4f}",
            stacklevel=2,
        )
    scores: dict[str, list[RougeScore]] = {v: [] for v in variants}
    for sample in matched:
        # tokenize and stem once per sample, shared across variants
        cand_tokens = _prepare(system_map[sample.id], stem)
        ref_tokens = _prepare(sample.summary, stem)
        for variant in variants:
            scores[variant].append(_score_tokens(cand_tokens, ref_tokens, variant))
    return CorpusScores(
        ids=tuple(s.id for s in matched),
        scores=scores,
        coverage=coverage,
        n_gold=len(gold_samples),
    )


def bootstrap_aggregate(
    per_sample: Sequence[RougeScore],
    n_resamples: int = DEFAULT_RESAMPLES,
    seed: int = 0,
) -> AggregateScore:
    """Mean score with a 95% percentile bootstrap interval on F1.

    Resamples draw len(per_sample) indices with replacement from a seeded
    generator; the interval is the 2.5th/97.5th percentile (linear
    interpolation) of the resample means. Deterministic for fixed inputs.
    """
    if not per_sample:
        raise SumauditError("bootstrap_aggregate: no per-sample scores")
    if n_resamples < 1:
        raise ValueError(f"n_resamples must be >= 1, got {n_resamples}")
    variants = {score.variant for score in per_sample}
    if len(variants) != 1:
        raise ValueError(f"mixed variants in one aggregate: {sorted(variants)}")
    f1s = np.array([score.f1 for score in per_sample])
    n = len(f1s)
    rng = np.random.default_rng(seed)
    means = np.empty(n_resamples)
    for i in range(n_resamples):
        means[i] = f1s[rng.integers(0, n, size=n)].mean()
    ci_low, ci_high = np.percentile(means, [2.5, 97.5])
    return AggregateScore(
        variant=variants.pop(),
        mean_precision=float(np.mean([s.precision for s in per_sample])),
        mean_recall=float(np.mean([s.recall for s in per_sample])),
        mean_f1=float(f1s.mean()),
        ci_low=float(ci_low),
        ci_high=float(ci_high),
        n_samples=n,
        n_resamples=n_resamples,
        seed=seed,
    )
