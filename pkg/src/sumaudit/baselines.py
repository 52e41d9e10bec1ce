"""Extractive baseline summarizers: lead-3, adaptive lead-k and LexRank.

Lead-k returns the first k sentences. When k is not fixed, it is
estimated per document as

    k_hat = max(1, ceil(reference_sentence_count / cr_avg))

where ``cr_avg`` is the mean reference/summary sentence-count ratio over a
training split. The LexRank variant scores sentences by damped
power-iteration centrality (continuous LexRank, Erkan & Radev 2004) over a
cosine-similarity graph built from sentence vectors; the vector source is
pluggable so precomputed dense embeddings can be swapped in for the
self-contained TF-IDF default.
"""

from __future__ import annotations

import json
import math
import warnings
from typing import Callable, Protocol, Sequence

import numpy as np

from .base import NotFitted, ParamsMixin, SumauditError
from .cistem import cistem_stem
from .corpus import Corpus, Sample, SampleInput, as_sample_list
from .text import split_sentences, tokenize

Splitter = Callable[[str], list[str]]


class SimilarityBackend(Protocol):
    """Produces one finite real-valued vector per sentence.

    ``embed`` must return an array of shape (len(sentences), dim), be
    deterministic for a fixed input, and be safe for concurrent calls on
    distinct documents.
    """

    def embed(self, sentences: Sequence[str]) -> np.ndarray: ...


class TfidfBackend:
    """Self-contained default backend: document-local TF-IDF vectors.

    Terms are the Cistem stems of the ROUGE-tokenized sentence; weights
    are term frequency times ln(N/df) with N the sentence count and df the
    number of sentences containing the term. Terms occurring in every
    sentence get zero weight, so a single-sentence document (and any
    sentence made only of document-wide terms) yields a zero vector, which
    the similarity graph handles via its uniform-row fallback.
    """

    def embed(self, sentences: Sequence[str]) -> np.ndarray:
        stem_lists = [
            [cistem_stem(tok) for tok in tokenize(sentence, "rouge")]
            for sentence in sentences
        ]
        vocabulary = sorted({term for stems in stem_lists for term in stems})
        index = {term: i for i, term in enumerate(vocabulary)}
        n_sentences = len(sentences)
        df = np.zeros(len(vocabulary))
        for stems in stem_lists:
            for term in set(stems):
                df[index[term]] += 1
        with np.errstate(divide="ignore"):
            idf = np.where(df > 0, np.log(n_sentences / np.maximum(df, 1)), 0.0)
        matrix = np.zeros((n_sentences, max(len(vocabulary), 1)))
        if vocabulary:
            for row, stems in enumerate(stem_lists):
                for term in stems:
                    matrix[row, index[term]] += 1.0
            matrix *= idf
        return matrix


class FileEmbeddingBackend:
    """Sentence vectors precomputed for one document, loaded from JSONL.

    Each line is ``{"index": i, "vector": [...]}``; indices must cover
    0..n-1 exactly and all vectors must share one dimension and be finite.
    ``embed`` checks that the sentence count matches the file.
    """

    def __init__(self, path):
        self.path = path
        vectors: dict[int, list[float]] = {}
        with open(path, encoding="utf-8") as fh:
            for line_number, line in enumerate(fh, start=1):
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise SumauditError(
                        f"{path}: line {line_number}: invalid JSON: {exc}"
                    ) from exc
                if not isinstance(obj, dict) or "index" not in obj or "vector" not in obj:
                    raise SumauditError(
                        f"{path}: line {line_number}: expected keys 'index' and 'vector'"
                    )
                if obj["index"] in vectors:
                    raise SumauditError(
                        f"{path}: duplicate index {obj['index']}"
                    )
                vectors[obj["index"]] = obj["vector"]
        if not vectors:
            raise SumauditError(f"{path}: no vectors found")
        dim = None
        rows = []
        for i in range(len(vectors)):
            if i not in vectors:
                raise SumauditError(f"{path}: missing index {i}")
            row = vectors[i]
            if dim is None:
                dim = len(row)
            elif len(row) != dim:
                raise SumauditError(
                    f"{path}: index {i}: dimension {len(row)} != {dim}"
                )
            rows.append(row)
        self._matrix = np.asarray(rows, dtype=float)
        if not np.all(np.isfinite(self._matrix)):
            raise SumauditError(f"{path}: non-finite vector values")

    def embed(self, sentences: Sequence[str]) -> np.ndarray:
        if len(sentences) != len(self._matrix):
            raise SumauditError(
                f"{self.path}: has {len(self._matrix)} vectors but the "
                f"document has {len(sentences)} sentences"
            )
        return self._matrix


def embed_from_file(path) -> FileEmbeddingBackend:
    return FileEmbeddingBackend(path)


def avg_compression_ratio_sentences(
    X: SampleInput, splitter: Splitter | None = None
) -> float:
    """Mean reference/summary sentence-count ratio over a training split."""
    samples = as_sample_list(X)
    if not samples:
        raise SumauditError("avg_compression_ratio_sentences: empty corpus")
    split = splitter or split_sentences
    total = 0.0
    for sample in samples:
        ref_sentences = len(split(sample.reference))
        summary_sentences = len(split(sample.summary))
        if summary_sentences == 0:
            raise SumauditError(
                f"sample {sample.id!r}: summary has no sentences"
            )
        if ref_sentences == 0:
            raise SumauditError(
                f"sample {sample.id!r}: reference has no sentences"
            )
        total += ref_sentences / summary_sentences
    return total / len(samples)


def estimate_k_hat(reference_sentences: Sequence[str], cr_avg: float) -> int:
    """Per-document summary length estimate, at least one sentence."""
    if cr_avg <= 0:
        raise ValueError(f"cr_avg must be positive, got {cr_avg}")
    return max(1, math.ceil(len(reference_sentences) / cr_avg))


def lead_k(reference_sentences: Sequence[str], k: int) -> str:
    """First min(k, sentence count) sentences joined by single spaces."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return " ".join(reference_sentences[:k])


def cosine_similarity_matrix(vectors: np.ndarray) -> np.ndarray:
    """Pairwise cosine similarity with negatives clamped to zero.

    Rows for zero vectors are set to all ones (uniform similarity) so the
    graph stays connected and row-normalizable.
    """
    v = np.asarray(vectors, dtype=float)
    if v.ndim != 2:
        raise ValueError("expected a 2-d array of sentence vectors")
    if not np.all(np.isfinite(v)):
        raise SumauditError("non-finite embedding values")
    n = v.shape[0]
    norms = np.linalg.norm(v, axis=1)
    sim = np.zeros((n, n))
    nonzero = norms > 0
    if nonzero.any():
        unit = v[nonzero] / norms[nonzero, None]
        sim[np.ix_(nonzero, nonzero)] = unit @ unit.T
    np.clip(sim, 0.0, None, out=sim)
    sim[~nonzero, :] = 1.0
    return sim


def lexrank_centrality(
    similarity: np.ndarray,
    damping: float = 0.85,
    tolerance: float = 1e-6,
    max_iterations: int = 100,
) -> tuple[np.ndarray, bool]:
    """Damped power iteration over the row-normalized similarity graph.

    Starts uniform and iterates c <- (1-d)/N + d * M^T c until the
    max-norm change drops below ``tolerance``. Returns the centrality
    vector (non-negative, summing to 1) and whether it converged; on
    non-convergence the iterate at ``max_iterations`` is returned.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0, 1), got {damping}")
    sim = np.asarray(similarity, dtype=float)
    n = sim.shape[0]
    row_sums = sim.sum(axis=1, keepdims=True)
    if np.any(row_sums <= 0):
        raise ValueError("similarity matrix has a non-positive row sum")
    stochastic = sim / row_sums
    centrality = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    for _ in range(max_iterations):
        updated = teleport + damping * (stochastic.T @ centrality)
        if np.abs(updated - centrality).max() < tolerance:
            return updated, True
        centrality = updated
    return centrality, False


def lexrank_select(
    sentences: Sequence[str],
    backend: SimilarityBackend,
    k: int,
    damping: float = 0.85,
    tolerance: float = 1e-6,
    max_iterations: int = 100,
) -> tuple[list[int], np.ndarray, bool]:
    """Indices of the k most central sentences, in document order.

    Ties in centrality go to the earlier sentence.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not sentences:
        return [], np.zeros(0), True
    vectors = np.asarray(backend.embed(sentences), dtype=float)
    if vectors.shape[0] != len(sentences):
        raise SumauditError(
            f"backend returned {vectors.shape[0]} vectors for "
            f"{len(sentences)} sentences"
        )
    sim = cosine_similarity_matrix(vectors)
    centrality, converged = lexrank_centrality(
        sim, damping=damping, tolerance=tolerance, max_iterations=max_iterations
    )
    ranking = np.argsort(-centrality, kind="stable")
    chosen = sorted(ranking[: min(k, len(sentences))].tolist())
    return chosen, centrality, converged


def lexrank_st(
    sentences: Sequence[str],
    backend: SimilarityBackend,
    k: int,
    damping: float = 0.85,
    tolerance: float = 1e-6,
    max_iterations: int = 100,
) -> str:
    """LexRank summary string; warns when power iteration did not converge."""
    if not sentences:
        return ""
    chosen, _, converged = lexrank_select(
        sentences, backend, k, damping, tolerance, max_iterations
    )
    if not converged:
        warnings.warn(
            f"LexRank power iteration did not converge within "
            f"{max_iterations} iterations",
            RuntimeWarning,
            stacklevel=2,
        )
    return " ".join(sentences[i] for i in chosen)


class _SentenceSummarizer(ParamsMixin):
    """Shared fit/predict scaffolding for the extractive baselines."""

    k: int | None
    cr_avg: float | None
    splitter: Splitter | None

    def _split(self, text: str) -> list[str]:
        return (self.splitter or split_sentences)(text)

    def fit(self, X: SampleInput, y=None):
        """Estimate the training compression ratio when k is adaptive."""
        if self.k is None and self.cr_avg is None:
            self.cr_avg_ = avg_compression_ratio_sentences(
                X, splitter=self.splitter
            )
        return self

    def _resolve_k(self, sentences: Sequence[str]) -> int:
        if self.k is not None:
            return self.k
        cr_avg = self.cr_avg if self.cr_avg is not None else getattr(
            self, "cr_avg_", None
        )
        if cr_avg is None:
            raise NotFitted(
                f"{type(self).__name__}: set k or cr_avg, or fit on a "
                "training corpus first"
            )
        return estimate_k_hat(sentences, cr_avg)

    def _summarize(self, sentences: Sequence[str]) -> str:
        raise NotImplementedError

    def predict(self, X) -> list[str]:
        """One summary per input document.

        Accepts a Corpus, Sample instances (their reference is summarized)
        or plain strings. Errors are tagged with the offending sample id.
        """
        if isinstance(X, str):
            items = [X]
        elif isinstance(X, Corpus):
            items = list(X.samples)
        else:
            items = list(X)
        summaries = []
        for position, item in enumerate(items):
            if isinstance(item, Sample):
                sample_id, text = item.id, item.reference
            elif isinstance(item, str):
                sample_id, text = str(position), item
            else:
                raise TypeError(
                    f"expected Sample or str instances, got {type(item).__name__}"
                )
            try:
                summaries.append(self._summarize(self._split(text)))
            except NotFitted:
                raise  # configuration problem, not a per-sample one
            except SumauditError as exc:
                raise SumauditError(f"sample {sample_id!r}: {exc}") from exc
        return summaries


class LeadSummarizer(_SentenceSummarizer):
    """Lead baseline: the first k sentences of the reference.

    The default k=3 is the classic lead-3. With ``k=None`` the length is
    estimated per document from the training compression ratio (pass
    ``cr_avg`` or call ``fit`` on a training corpus).
    """

    def __init__(
        self,
        k: int | None = 3,
        cr_avg: float | None = None,
        splitter: Splitter | None = None,
    ):
        self.k = k
        self.cr_avg = cr_avg
        self.splitter = splitter

    def _summarize(self, sentences: Sequence[str]) -> str:
        if not sentences:
            return ""
        return lead_k(sentences, self._resolve_k(sentences))


class LexRankSummarizer(_SentenceSummarizer):
    """Centrality-based extractive baseline with pluggable embeddings.

    Sentence-length policy matches the lead baseline: fixed ``k`` or the
    per-document estimate from ``cr_avg``. After ``predict``, the
    ``converged_`` attribute holds one flag per document.
    """

    def __init__(
        self,
        k: int | None = None,
        cr_avg: float | None = None,
        backend: SimilarityBackend | None = None,
        damping: float = 0.85,
        tolerance: float = 1e-6,
        max_iterations: int = 100,
        splitter: Splitter | None = None,
    ):
        self.k = k
        self.cr_avg = cr_avg
        self.backend = backend
        self.damping = damping
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.splitter = splitter

    def predict(self, X) -> list[str]:
        self.converged_: list[bool] = []
        return super().predict(X)

    def _summarize(self, sentences: Sequence[str]) -> str:
        if not sentences:
            self.converged_.append(True)
            return ""
        backend = self.backend if self.backend is not None else TfidfBackend()
        chosen, _, converged = lexrank_select(
            sentences,
            backend,
            self._resolve_k(sentences),
            damping=self.damping,
            tolerance=self.tolerance,
            max_iterations=self.max_iterations,
        )
        self.converged_.append(converged)
        if not converged:
            warnings.warn(
                f"LexRank power iteration did not converge within "
                f"{self.max_iterations} iterations",
                RuntimeWarning,
                stacklevel=2,
            )
        return " ".join(sentences[i] for i in chosen)


METHODS = ("lead3", "leadk", "lexrank_st")


def make_summarizer(
    method: str,
    k: int | None = None,
    cr_avg: float | None = None,
    backend: SimilarityBackend | None = None,
    splitter: Splitter | None = None,
    damping: float = 0.85,
    tolerance: float = 1e-6,
    max_iterations: int = 100,
):
    """Build the summarizer for a method name ('-' and '_' both accepted)."""
    name = method.replace("-", "_")
    if name == "lead3":
        return LeadSummarizer(k=3, splitter=splitter)
    if name == "leadk":
        return LeadSummarizer(k=k, cr_avg=cr_avg, splitter=splitter)
    if name == "lexrank_st":
        return LexRankSummarizer(
            k=k,
            cr_avg=cr_avg,
            backend=backend,
            damping=damping,
            tolerance=tolerance,
            max_iterations=max_iterations,
            splitter=splitter,
        )
    raise SumauditError(f"unknown baseline method {method!r}; use one of {METHODS}")


def run_baseline(
    X: SampleInput,
    method: str,
    k: int | None = None,
    cr_avg: float | None = None,
    train: SampleInput | None = None,
    backend: SimilarityBackend | None = None,
    splitter: Splitter | None = None,
    damping: float = 0.85,
    tolerance: float = 1e-6,
    max_iterations: int = 100,
) -> list[tuple[str, str]]:
    """Generate (sample_id, summary) pairs for a whole corpus.

    ``lead3`` always uses k=3. The adaptive methods use ``k`` when given,
    else ``cr_avg``, else the ratio estimated from the ``train`` corpus.
    """
    summarizer = make_summarizer(
        method,
        k=k,
        cr_avg=cr_avg,
        backend=backend,
        splitter=splitter,
        damping=damping,
        tolerance=tolerance,
        max_iterations=max_iterations,
    )
    if train is not None:
        summarizer.fit(train)
    samples = as_sample_list(X)
    summaries = summarizer.predict(samples)
    return [(s.id, summary) for s, summary in zip(samples, summaries)]
