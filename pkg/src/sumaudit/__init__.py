"""sumaudit: quality auditing and evaluation for summarization corpora.

Audit reference/summary corpora for empty and under-length samples,
identity pairs, insufficient compression, fully extractive summaries and
(partial) duplicates; filter them; inspect samples; generate extractive
baselines (lead-3, adaptive lead-k, LexRank); and score summaries with
ROUGE-1/2/L, German Cistem stemming and bootstrap confidence intervals.
"""

__version__ = "0.1.0"

from .base import NotFitted, ParamsMixin, SumauditError
from .baselines import (
    FileEmbeddingBackend,
    LeadSummarizer,
    LexRankSummarizer,
    SimilarityBackend,
    TfidfBackend,
    avg_compression_ratio_sentences,
    cosine_similarity_matrix,
    embed_from_file,
    estimate_k_hat,
    lead_k,
    lexrank_centrality,
    lexrank_select,
    lexrank_st,
    make_summarizer,
    run_baseline,
)
from .cistem import cistem_stem
from .corpus import (
    Corpus,
    JsonlParseError,
    Sample,
    as_reference_texts,
    as_sample_list,
    load_jsonl,
    load_system_jsonl,
    write_jsonl,
)
from .filters import (
    AuditReport,
    FilterVerdict,
    QualityFilter,
    audit,
    check_fully_extractive,
    check_identity,
    check_min_cr,
    check_min_length,
    compression_ratio,
    dedup_additive,
    filter_corpus,
    load_filter_config,
)
from .rouge import (
    AggregateScore,
    CorpusScores,
    RougeScore,
    bootstrap_aggregate,
    rouge_l,
    rouge_n,
    score_corpus,
)
from .stats import (
    LengthStats,
    cr_distribution,
    inspect_ordered,
    inspect_outliers,
    inspect_random,
    length_distribution,
)
from .text import (
    DEFAULT_ABBREVIATIONS,
    load_abbreviations,
    ngrams,
    normalize,
    split_sentences,
    tokenize,
)

__all__ = [
    "__version__",
    "AggregateScore",
    "AuditReport",
    "Corpus",
    "CorpusScores",
    "DEFAULT_ABBREVIATIONS",
    "FileEmbeddingBackend",
    "FilterVerdict",
    "JsonlParseError",
    "LeadSummarizer",
    "LengthStats",
    "LexRankSummarizer",
    "NotFitted",
    "ParamsMixin",
    "QualityFilter",
    "RougeScore",
    "Sample",
    "SimilarityBackend",
    "SumauditError",
    "TfidfBackend",
    "as_reference_texts",
    "as_sample_list",
    "audit",
    "avg_compression_ratio_sentences",
    "bootstrap_aggregate",
    "check_fully_extractive",
    "check_identity",
    "check_min_cr",
    "check_min_length",
    "cistem_stem",
    "compression_ratio",
    "cosine_similarity_matrix",
    "cr_distribution",
    "dedup_additive",
    "embed_from_file",
    "estimate_k_hat",
    "filter_corpus",
    "inspect_ordered",
    "inspect_outliers",
    "inspect_random",
    "lead_k",
    "length_distribution",
    "lexrank_centrality",
    "lexrank_select",
    "lexrank_st",
    "load_abbreviations",
    "load_filter_config",
    "load_jsonl",
    "load_system_jsonl",
    "make_summarizer",
    "ngrams",
    "normalize",
    "rouge_l",
    "rouge_n",
    "run_baseline",
    "score_corpus",
    "split_sentences",
    "tokenize",
    "write_jsonl",
]
