"""Corpus data model and JSONL input/output.

The exchange format is JSON Lines, one sample per line, UTF-8:

    {"id": "a1", "reference": "...", "summary": "...", "split": "train", ...}

``reference`` and ``summary`` are required strings. ``id`` and ``split``
are optional; any further keys are preserved verbatim in ``Sample.extra``.
Parsing is strict: the first malformed line aborts the load with its line
number, because silently dropping records is exactly the kind of data
defect this toolkit exists to surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .base import SumauditError

SPLITS = ("train", "validation", "test")
_KNOWN_KEYS = frozenset({"id", "reference", "summary", "split"})


class JsonlParseError(SumauditError):
    """A JSONL line could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int, key: str | None = None):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
        self.key = key


@dataclass(frozen=True)
class Sample:
    """One reference/summary pair, the atomic unit of every audit."""

    id: str
    reference: str
    summary: str
    split: str | None = None
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Corpus:
    """Ordered, immutable sequence of samples with an optional split label."""

    samples: tuple[Sample, ...]
    split_label: str | None = None

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)

    def __getitem__(self, index):
        return self.samples[index]


SampleInput = Union[Corpus, Sequence[Sample], Iterable[Sample]]


def as_sample_list(X: SampleInput) -> list[Sample]:
    """Normalize estimator input (Corpus or iterable of Sample) to a list."""
    if isinstance(X, Corpus):
        return list(X.samples)
    samples = list(X)
    for item in samples:
        if not isinstance(item, Sample):
            raise TypeError(
                f"expected Sample instances, got {type(item).__name__}"
            )
    return samples


def as_reference_texts(X) -> list[str]:
    """Accept Samples, a Corpus, or raw strings; return reference texts."""
    if isinstance(X, Corpus):
        X = X.samples
    texts = []
    for item in X:
        if isinstance(item, Sample):
            texts.append(item.reference)
        elif isinstance(item, str):
            texts.append(item)
        else:
            raise TypeError(
                f"expected Sample or str instances, got {type(item).__name__}"
            )
    return texts


def _parse_line(obj, line_number: int, default_id: str) -> Sample:
    if not isinstance(obj, dict):
        raise JsonlParseError("expected a JSON object", line_number)
    for key in ("reference", "summary"):
        if key not in obj:
            raise JsonlParseError(f"missing key {key!r}", line_number, key=key)
        if not isinstance(obj[key], str):
            raise JsonlParseError(
                f"key {key!r} must be a string", line_number, key=key
            )
    sample_id = obj.get("id", default_id)
    if not isinstance(sample_id, str) or not sample_id:
        raise JsonlParseError(
            "key 'id' must be a non-empty string", line_number, key="id"
        )
    split = obj.get("split")
    if split is not None and split not in SPLITS:
        raise JsonlParseError(
            f"key 'split' must be one of {SPLITS}, got {split!r}",
            line_number,
            key="split",
        )
    extra = {k: v for k, v in obj.items() if k not in _KNOWN_KEYS}
    return Sample(
        id=sample_id,
        reference=obj["reference"],
        summary=obj["summary"],
        split=split,
        extra=extra,
    )


def load_jsonl(path, split_label: str | None = None) -> Corpus:
    """Load a corpus from a JSONL file.

    A missing ``id`` defaults to the 0-based line index rendered as a
    decimal string. Ids must be unique within the file. Loading is
    sequential and order-preserving.
    """
    samples: list[Sample] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8-sig") as fh:
        for index, line in enumerate(fh):
            line_number = index + 1
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise JsonlParseError(f"invalid JSON: {exc}", line_number) from exc
            sample = _parse_line(obj, line_number, default_id=str(index))
            if sample.id in seen_ids:
                raise JsonlParseError(
                    f"duplicate id {sample.id!r}", line_number, key="id"
                )
            seen_ids.add(sample.id)
            samples.append(sample)
    return Corpus(samples=tuple(samples), split_label=split_label)


def sample_to_dict(sample: Sample) -> dict:
    obj: dict = {
        "id": sample.id,
        "reference": sample.reference,
        "summary": sample.summary,
    }
    if sample.split is not None:
        obj["split"] = sample.split
    obj.update(sample.extra)
    return obj


def write_jsonl(corpus: SampleInput, path) -> None:
    """Write a corpus as JSONL; round-trips with :func:`load_jsonl`."""
    samples = as_sample_list(corpus)
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for sample in samples:
            fh.write(json.dumps(sample_to_dict(sample), ensure_ascii=False))
            fh.write("\n")


def load_system_jsonl(path) -> list[tuple[str, str]]:
    """Load system outputs: one ``{"id": ..., "summary": ...}`` per line.

    Keys other than id/summary are ignored, so a full corpus file can be
    scored as a system (useful for sanity checks). A missing id defaults
    to the 0-based line index, mirroring :func:`load_jsonl`; ids must be
    unique.
    """
    outputs: list[tuple[str, str]] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8-sig") as fh:
        for index, line in enumerate(fh):
            line_number = index + 1
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise JsonlParseError(f"invalid JSON: {exc}", line_number) from exc
            if not isinstance(obj, dict):
                raise JsonlParseError("expected a JSON object", line_number)
            if "summary" not in obj:
                raise JsonlParseError(
                    "missing key 'summary'", line_number, key="summary"
                )
            if not isinstance(obj["summary"], str):
                raise JsonlParseError(
                    "key 'summary' must be a string", line_number, key="summary"
                )
            sample_id = obj.get("id", str(index))
            if not isinstance(sample_id, str) or not sample_id:
                raise JsonlParseError(
                    "key 'id' must be a non-empty string", line_number, key="id"
                )
            if sample_id in seen:
                raise JsonlParseError(
                    f"duplicate id {sample_id!r}", line_number, key="id"
                )
            seen.add(sample_id)
            outputs.append((sample_id, obj["summary"]))
    return outputs
