"""Command-line interface.

Subcommands: audit, filter, stats, inspect, baseline, score. Every
command is deterministic given its inputs, flags and seeds; all
randomness is seed-flagged with a fixed default of 0. Reports embed a run
manifest (command, inputs, parameters, seeds, tool version) and a sidecar
``<out>.manifest.json`` additionally records the timestamp, which is kept
out of report bodies so identical runs produce byte-identical reports.

Exit codes: 0 success, 1 usage or data error, 2 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import traceback
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .base import SumauditError
from .baselines import (
    FileEmbeddingBackend,
    avg_compression_ratio_sentences,
    run_baseline,
)
from .corpus import load_jsonl, load_system_jsonl, write_jsonl
from .filters import (
    MAX_CR,
    PRESETS,
    AuditReport,
    audit,
    filter_corpus,
    load_filter_config,
)
from .rouge import bootstrap_aggregate, score_corpus
from .stats import (
    INSPECT_KEYS,
    OUTLIER_METRICS,
    cr_distribution,
    inspect_ordered,
    inspect_outliers,
    inspect_random,
    length_distribution,
)
from .text import tokenize

_VARIANT_ALIASES = {
    "r1": "rouge1",
    "r2": "rouge2",
    "rl": "rougeL",
    "rouge1": "rouge1",
    "rouge2": "rouge2",
    "rougel": "rougeL",
}

_AUDIT_COLUMNS = (
    ("minlen_ref", "Min Length Ref"),
    ("minlen_summary", "Min Length Summ"),
    ("identity", "Id"),
    ("min_cr", "Min CR"),
    ("max_cr", "Max CR"),
    ("fully_extractive", "Fully Extr"),
    ("dup_exact", "Dup Exact"),
    ("dup_reference", "Dup Ref"),
    ("dup_summary", "Dup Summ"),
)


class CliUsageError(SumauditError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the exit-code contract
    # reserves 2 for internal errors, so remap to a usage error.
    def error(self, message):
        raise CliUsageError(message)


@dataclass
class RunManifest:
    command: str
    inputs: dict
    params: dict
    seeds: dict
    version: str
    timestamp: str

    def embedded(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "params": self.params,
            "seeds": self.seeds,
            "version": self.version,
        }

    def full(self) -> dict:
        out = self.embedded()
        out["timestamp"] = self.timestamp
        return out


def _manifest(command: str, inputs: dict, params: dict, seeds: dict | None = None) -> RunManifest:
    return RunManifest(
        command=command,
        inputs=inputs,
        params=params,
        seeds=seeds or {},
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def _write_sidecar(out_path: Path, manifest: RunManifest) -> None:
    sidecar = Path(f"{out_path}.manifest.json")
    sidecar.write_text(
        json.dumps(manifest.full(), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )


def _manifest_block(manifest: RunManifest) -> str:
    body = json.dumps(manifest.embedded(), sort_keys=True, indent=2)
    return f"## Manifest\n\n```json\n{body}\n```\n"


def _resolve_thresholds(args) -> dict:
    if getattr(args, "config", None) and getattr(args, "preset", None):
        raise CliUsageError("--config and --preset are mutually exclusive")
    if getattr(args, "config", None):
        return load_filter_config(args.config)
    preset = getattr(args, "preset", None) or "default"
    return dict(PRESETS[preset])


def _render_audit_md(report: AuditReport, manifest: RunManifest, show_max_cr: bool) -> str:
    columns = [
        (key, header)
        for key, header in _AUDIT_COLUMNS
        if key != MAX_CR or show_max_cr
    ]
    headers = ["Split", "Samples"] + [h for _, h in columns] + ["Valid Samples"]
    row = [report.split_label or "-", str(report.total)]
    row += [str(report.counts[key]) for key, _ in columns]
    row.append(f"{report.valid} ({report.valid_fraction * 100:.2f}%)")
    lines = [
        "# Corpus audit",
        "",
        "| " + " | ".join(headers) + " |",
        "|" + "|".join(["---"] * len(headers)) + "|",
        "| " + " | ".join(row) + " |",
        "",
        _manifest_block(manifest),
    ]
    return "\n".join(lines)


def _render_audit_csv(report: AuditReport, manifest: RunManifest, show_max_cr: bool) -> str:
    columns = [
        (key, header)
        for key, header in _AUDIT_COLUMNS
        if key != MAX_CR or show_max_cr
    ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["split", "samples"] + [key for key, _ in columns] + ["valid", "valid_pct"]
    )
    writer.writerow(
        [report.split_label or "", report.total]
        + [report.counts[key] for key, _ in columns]
        + [report.valid, f"{report.valid_fraction * 100:.2f}"]
    )
    buf.write("# manifest: " + json.dumps(manifest.embedded(), sort_keys=True) + "\n")
    return buf.getvalue()


def _render_audit_json(report: AuditReport, manifest: RunManifest) -> str:
    payload = {"report": report.to_dict(), "manifest": manifest.embedded()}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_audit(args) -> int:
    thresholds = _resolve_thresholds(args)
    split_label = args.split_label or Path(args.input).stem
    corpus = load_jsonl(args.input, split_label=split_label)
    report, verdicts = audit(corpus, **thresholds)
    manifest = _manifest(
        "audit",
        inputs={"input": args.input},
        params={**thresholds, "split_label": split_label},
    )
    formats = args.format or ["md"]
    show_max_cr = thresholds.get("max_cr") is not None
    renderers = {
        "md": lambda: _render_audit_md(report, manifest, show_max_cr),
        "csv": lambda: _render_audit_csv(report, manifest, show_max_cr),
        "json": lambda: _render_audit_json(report, manifest),
    }
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for fmt in formats:
            path = out_dir / f"audit.{fmt}"
            path.write_text(renderers[fmt](), encoding="utf-8")
        verdict_path = out_dir / "verdicts.jsonl"
        with open(verdict_path, "w", encoding="utf-8") as fh:
            for verdict in verdicts:
                fh.write(
                    json.dumps(
                        {"id": verdict.sample_id, "outcome": verdict.outcome},
                        ensure_ascii=False,
                    )
                    + "\n"
                )
        _write_sidecar(out_dir / "audit", manifest)
    else:
        if len(formats) > 1:
            raise CliUsageError("multiple --format values require --out")
        sys.stdout.write(renderers[formats[0]]())
    return 0


def _cmd_filter(args) -> int:
    thresholds = _resolve_thresholds(args)
    corpus = load_jsonl(args.input, split_label=Path(args.input).stem)
    kept = filter_corpus(corpus, **thresholds)
    write_jsonl(kept, args.out)
    manifest = _manifest(
        "filter", inputs={"input": args.input, "out": args.out}, params=thresholds
    )
    _write_sidecar(Path(args.out), manifest)
    sys.stderr.write(
        f"kept {len(kept)} of {len(corpus)} samples "
        f"({len(kept) / len(corpus) * 100:.2f}%)\n"
        if len(corpus)
        else "kept 0 of 0 samples\n"
    )
    return 0


def _format_number(value: float) -> str:
    return f"{value:.6g}"


def _cmd_stats(args) -> int:
    corpus = load_jsonl(args.input)
    if args.cr:
        stats = cr_distribution(corpus)
    else:
        stats = length_distribution(corpus, field=args.field, unit=args.unit)
    rows = [
        ("field", stats.field),
        ("unit", stats.unit),
        ("count", str(stats.count)),
        ("mean", _format_number(stats.mean)),
        ("q1", _format_number(stats.q1)),
        ("median", _format_number(stats.median)),
        ("q3", _format_number(stats.q3)),
        ("min", _format_number(stats.min)),
        ("max", _format_number(stats.max)),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        sys.stdout.write(f"{name.ljust(width)}  {value}\n")
    if args.violin_out:
        payload = json.dumps(stats.to_violin_dict(), sort_keys=True, indent=2)
        Path(args.violin_out).write_text(payload + "\n", encoding="utf-8")
        manifest = _manifest(
            "stats",
            inputs={"input": args.input, "violin_out": args.violin_out},
            params={"field": stats.field, "unit": stats.unit, "cr": bool(args.cr)},
        )
        _write_sidecar(Path(args.violin_out), manifest)
    return 0


def _truncate(text: str, limit: int = 160) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _cmd_inspect(args) -> int:
    corpus = load_jsonl(args.input)
    if args.mode == "ordered":
        key = args.key or "position"
        selected = inspect_ordered(corpus, key=key, n=args.n)
    elif args.mode == "random":
        selected = inspect_random(corpus, n=args.n, seed=args.seed)
    elif args.mode in ("outliers", "representative"):
        metric = args.key or "cr"
        if metric not in OUTLIER_METRICS:
            raise CliUsageError(
                f"--key for {args.mode} must be one of {OUTLIER_METRICS}"
            )
        mode = "extreme" if args.mode == "outliers" else "representative"
        selected = inspect_outliers(corpus, metric=metric, n=args.n, mode=mode)
    else:  # pragma: no cover - argparse restricts choices
        raise CliUsageError(f"unknown mode {args.mode!r}")
    for position, sample in enumerate(selected, start=1):
        ref_tokens = len(tokenize(sample.reference, "whitespace"))
        summary_tokens = len(tokenize(sample.summary, "whitespace"))
        cr = ref_tokens / summary_tokens if summary_tokens else float("inf")
        sys.stdout.write(
            f"--- {position}/{len(selected)} id={sample.id}"
            + (f" split={sample.split}" if sample.split else "")
            + "\n"
        )
        sys.stdout.write(
            f"    ref_tokens={ref_tokens} summary_tokens={summary_tokens} "
            f"cr={cr:.2f}\n"
        )
        sys.stdout.write(f"    reference: {_truncate(sample.reference)}\n")
        sys.stdout.write(f"    summary:   {_truncate(sample.summary)}\n")
    return 0


def _cmd_baseline(args) -> int:
    method = args.method.replace("-", "_")
    corpus = load_jsonl(args.input)
    if method == "lead3":
        if args.k is not None or args.cr_avg is not None or args.train:
            raise CliUsageError("lead3 takes none of --k/--cr-avg/--train")
        k, cr_avg = 3, None
    else:
        if args.k is None and args.cr_avg is None and not args.train:
            raise CliUsageError(
                f"{args.method} needs a summary length: pass --k N, "
                "--cr-avg X, or --train PATH to estimate it"
            )
        k, cr_avg = args.k, args.cr_avg
        if k is None and cr_avg is None:
            train = load_jsonl(args.train)
            cr_avg = avg_compression_ratio_sentences(train)
    if args.embeddings and method != "lexrank_st":
        raise CliUsageError("--embeddings only applies to lexrank-st")

    if args.embeddings:
        emb_path = Path(args.embeddings)
        if emb_path.is_file() and len(corpus) > 1:
            raise CliUsageError(
                "--embeddings points at a single file but the corpus has "
                "several samples; pass a directory of <id>.jsonl files"
            )
        pairs = []
        for sample in corpus:
            vector_file = emb_path / f"{sample.id}.jsonl" if emb_path.is_dir() else emb_path
            backend = FileEmbeddingBackend(vector_file)
            pairs.extend(
                run_baseline([sample], method, k=k, cr_avg=cr_avg, backend=backend)
            )
    else:
        pairs = run_baseline(corpus, method, k=k, cr_avg=cr_avg)

    with open(args.out, "w", encoding="utf-8") as fh:
        for sample_id, summary in pairs:
            fh.write(
                json.dumps({"id": sample_id, "summary": summary}, ensure_ascii=False)
                + "\n"
            )
    manifest = _manifest(
        "baseline",
        inputs={
            "input": args.input,
            "out": args.out,
            "train": args.train,
            "embeddings": args.embeddings,
        },
        params={"method": args.method, "k": k, "cr_avg": cr_avg},
    )
    _write_sidecar(Path(args.out), manifest)
    return 0


def _parse_variants(raw: str) -> list[str]:
    variants = []
    for item in raw.split(","):
        name = item.strip().lower()
        if name not in _VARIANT_ALIASES:
            raise CliUsageError(
                f"unknown variant {item.strip()!r}; use r1, r2, rl"
            )
        variant = _VARIANT_ALIASES[name]
        if variant not in variants:
            variants.append(variant)
    return variants


def _render_score_md(rows: list[dict], variants: list[str], manifest: RunManifest) -> str:
    headers = ["System", "n"]
    for variant in variants:
        label = {"rouge1": "R-1", "rouge2": "R-2", "rougeL": "R-L"}[variant]
        headers += [f"{label} F1", f"{label} 95% CI"]
    lines = ["# ROUGE scores", ""]
    lines.append("| " + " | ".join(headers) + " |")
    lines.append("|" + "|".join(["---"] * len(headers)) + "|")
    for row in rows:
        cells = [row["system"], str(row["n_samples"])]
        for variant in variants:
            agg = row["scores"][variant]
            cells.append(f"{agg.mean_f1 * 100:.2f}")
            cells.append(f"[{agg.ci_low * 100:.2f}, {agg.ci_high * 100:.2f}]")
        lines.append("| " + " | ".join(cells) + " |")
    if any(row["coverage"] < 1.0 for row in rows):
        lines.append("")
        for row in rows:
            lines.append(f"- coverage {row['system']}: {row['coverage']:.4f}")
    lines += ["", _manifest_block(manifest)]
    return "\n".join(lines)


def _render_score_csv(rows: list[dict], variants: list[str], manifest: RunManifest) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "system", "variant", "mean_f1", "ci_low", "ci_high",
            "mean_precision", "mean_recall", "n_samples", "n_resamples",
            "seed", "coverage",
        ]
    )
    for row in rows:
        for variant in variants:
            agg = row["scores"][variant]
            writer.writerow(
                [
                    row["system"], variant,
                    f"{agg.mean_f1:.6f}", f"{agg.ci_low:.6f}", f"{agg.ci_high:.6f}",
                    f"{agg.mean_precision:.6f}", f"{agg.mean_recall:.6f}",
                    agg.n_samples, agg.n_resamples, agg.seed,
                    f"{row['coverage']:.6f}",
                ]
            )
    buf.write("# manifest: " + json.dumps(manifest.embedded(), sort_keys=True) + "\n")
    return buf.getvalue()


def _render_score_json(rows: list[dict], variants: list[str], manifest: RunManifest) -> str:
    systems = {}
    for row in rows:
        systems[row["system"]] = {
            "coverage": row["coverage"],
            "n_samples": row["n_samples"],
            "scores": {v: row["scores"][v].to_dict() for v in variants},
        }
    payload = {"systems": systems, "manifest": manifest.embedded()}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_score(args) -> int:
    variants = _parse_variants(args.variants)
    gold = load_jsonl(args.gold)
    labels = [Path(p).stem for p in args.system]
    if len(set(labels)) != len(labels):
        raise CliUsageError("system files must have distinct names")
    if args.per_sample and len(args.system) > 1:
        raise CliUsageError("--per-sample supports a single --system file")
    rows = []
    per_sample_rows = []
    for label, path in zip(labels, args.system):
        system = load_system_jsonl(path)
        corpus_scores = score_corpus(system, gold, variants=variants, stem=args.stem)
        aggregates = {
            variant: bootstrap_aggregate(
                corpus_scores.scores[variant],
                n_resamples=args.resamples,
                seed=args.seed,
            )
            for variant in variants
        }
        rows.append(
            {
                "system": label,
                "coverage": corpus_scores.coverage,
                "n_samples": len(corpus_scores.ids),
                "scores": aggregates,
            }
        )
        if args.per_sample:
            for variant in variants:
                for sample_id, score in zip(
                    corpus_scores.ids, corpus_scores.scores[variant]
                ):
                    per_sample_rows.append(
                        (sample_id, variant, score.precision, score.recall, score.f1)
                    )
    manifest = _manifest(
        "score",
        inputs={"system": list(args.system), "gold": args.gold},
        params={
            "variants": variants,
            "stem": args.stem,
            "resamples": args.resamples,
        },
        seeds={"bootstrap": args.seed},
    )
    renderers = {
        "md": lambda: _render_score_md(rows, variants, manifest),
        "csv": lambda: _render_score_csv(rows, variants, manifest),
        "json": lambda: _render_score_json(rows, variants, manifest),
    }
    rendered = renderers[args.format]()
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
        _write_sidecar(Path(args.out), manifest)
    else:
        sys.stdout.write(rendered)
    if args.per_sample:
        with open(args.per_sample, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["id", "variant", "p", "r", "f1"])
            for sample_id, variant, p, r, f1 in per_sample_rows:
                writer.writerow([sample_id, variant, f"{p:.6f}", f"{r:.6f}", f"{f1:.6f}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="sumaudit",
        description=(
            "Quality auditing, filtering, extractive baselines and ROUGE "
            "evaluation for summarization corpora (JSONL in, reports out)."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_threshold_flags(p):
        p.add_argument("--config", help="JSON file with filter thresholds")
        p.add_argument(
            "--preset", choices=sorted(PRESETS), help="named threshold preset"
        )

    p_audit = sub.add_parser("audit", help="per-sample checks and breakdown report")
    p_audit.add_argument("--input", required=True, help="corpus JSONL")
    add_threshold_flags(p_audit)
    p_audit.add_argument("--out", help="output directory for report + verdicts")
    p_audit.add_argument(
        "--format", action="append", choices=["md", "csv", "json"],
        help="report format (repeatable with --out; default md)",
    )
    p_audit.add_argument("--split-label", help="row label (default: input file stem)")
    p_audit.set_defaults(func=_cmd_audit)

    p_filter = sub.add_parser("filter", help="write the valid samples")
    p_filter.add_argument("--input", required=True)
    add_threshold_flags(p_filter)
    p_filter.add_argument("--out", required=True, help="filtered corpus JSONL")
    p_filter.set_defaults(func=_cmd_filter)

    p_stats = sub.add_parser("stats", help="length / compression distributions")
    p_stats.add_argument("--input", required=True)
    p_stats.add_argument("--field", choices=["reference", "summary"], default="summary")
    p_stats.add_argument("--unit", choices=["chars", "tokens", "sentences"], default="tokens")
    p_stats.add_argument("--cr", action="store_true", help="compression ratios instead of lengths")
    p_stats.add_argument("--violin-out", help="write plot-ready JSON here")
    p_stats.set_defaults(func=_cmd_stats)

    p_inspect = sub.add_parser("inspect", help="print samples for manual review")
    p_inspect.add_argument("--input", required=True)
    p_inspect.add_argument(
        "--mode", required=True,
        choices=["ordered", "random", "outliers", "representative"],
    )
    p_inspect.add_argument(
        "--key", choices=sorted(set(INSPECT_KEYS)),
        help="sort axis (ordered) or metric (outliers/representative)",
    )
    p_inspect.add_argument("--n", type=int, default=10)
    p_inspect.add_argument("--seed", type=int, default=0)
    p_inspect.set_defaults(func=_cmd_inspect)

    p_baseline = sub.add_parser("baseline", help="generate extractive summaries")
    p_baseline.add_argument("--input", required=True)
    p_baseline.add_argument(
        "--method", required=True, choices=["lead3", "leadk", "lexrank-st"]
    )
    p_baseline.add_argument("--k", type=int, help="fixed summary sentence count")
    p_baseline.add_argument("--cr-avg", type=float, help="average training compression ratio")
    p_baseline.add_argument("--train", help="training JSONL to estimate --cr-avg from")
    p_baseline.add_argument(
        "--embeddings",
        help="precomputed sentence vectors: JSONL file (single document) "
        "or directory of <id>.jsonl files",
    )
    p_baseline.add_argument("--out", required=True, help="system-output JSONL")
    p_baseline.set_defaults(func=_cmd_baseline)

    p_score = sub.add_parser("score", help="ROUGE with bootstrap intervals")
    p_score.add_argument(
        "--system", required=True, nargs="+",
        help="system-output JSONL file(s): {\"id\", \"summary\"} per line",
    )
    p_score.add_argument("--gold", required=True, help="gold corpus JSONL")
    p_score.add_argument("--variants", default="r1,r2,rl")
    p_score.add_argument(
        "--stem", action=argparse.BooleanOptionalAction, default=True,
        help="Cistem-stem tokens before matching (default on)",
    )
    p_score.add_argument("--resamples", type=int, default=2000)
    p_score.add_argument("--seed", type=int, default=0)
    p_score.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p_score.add_argument("--out", help="write the report here instead of stdout")
    p_score.add_argument("--per-sample", help="write per-sample scores CSV here")
    p_score.set_defaults(func=_cmd_score)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliUsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (SumauditError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help / --version
        code = exc.code
        return code if isinstance(code, int) else 0
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
