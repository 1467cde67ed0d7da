"""Command line front end.

Thin wrappers over the library: generate corpora from a config file,
report label statistics, export training files, score prediction files,
and serve the annotation API.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import pipeline
from .metrics import EvalInputError, PredictionSet, aggregate, load_predictions, score
from .taxonomy import TaskLevel


def _print_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=2))


def cmd_generate(args: argparse.Namespace) -> int:
    cfg = pipeline.load_config(args.config)
    records, report = pipeline.build_corpus(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    pipeline.export_jsonl(records, out / "corpus.jsonl")
    (out / "report.json").write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {len(records)} records to {out / 'corpus.jsonl'}")
    for w in report.warnings:
        print(
            f"warning: {w.finer.value}: achieved {w.achieved} of {w.wanted}",
            file=sys.stderr,
        )
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    path = Path(args.infile)
    if path.suffix == ".jsonl":
        stats = pipeline.corpus_stats(pipeline.import_jsonl(path))
    else:
        stats = pipeline.stats_from_counts(pipeline.load_survey_counts(path))
    _print_json(stats.to_dict())
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    records = pipeline.import_jsonl(args.infile)
    if args.format == "jsonl":
        pipeline.export_jsonl(records, args.out)
    elif args.format == "alpaca-detect":
        pipeline.export_alpaca(records, "detection", args.out)
    else:
        pipeline.export_alpaca(records, "correction", args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    gold = pipeline.import_jsonl(args.gold)
    level = TaskLevel(args.level)
    pred_paths = (
        sorted(Path(args.aggregate).glob("*.tsv"))
        if args.aggregate
        else [Path(args.pred)]
    )
    if not pred_paths:
        print(f"no .tsv prediction files in {args.aggregate}", file=sys.stderr)
        return 2
    reports = []
    try:
        for path in pred_paths:
            preds = PredictionSet(load_predictions(path), level, run_tag=path.stem)
            reports.append(score(gold, preds))
    except EvalInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.aggregate:
        agg = aggregate(reports)
        _print_json(
            {
                "level": level.value,
                "runs": [
                    {"run_tag": r.run_tag, "macro_f1": float(r.macro_f1)}
                    for r in reports
                ],
                "mean": agg.mean,
                "std": agg.std,
                "n_runs": agg.n_runs,
            }
        )
    else:
        _print_json(reports[0].to_dict())
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .annotation import AnnotationStore
    from .annotation.app import create_app

    store = AnnotationStore.open_corpus(args.data, args.corpus, quorum=args.quorum)
    app = create_app(store)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forge",
        description="Synthesize and evaluate grammatically erroneous Bangla sentences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a corpus from a config file")
    p.add_argument("--config", required=True, help="TOML generation config")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("stats", help="label distribution of a corpus or count table")
    p.add_argument(
        "--in", dest="infile", required=True,
        help="corpus .jsonl or label<TAB>count table",
    )
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="re-export a corpus in another format")
    p.add_argument("--in", dest="infile", required=True, help="corpus .jsonl")
    p.add_argument(
        "--format", required=True,
        choices=["jsonl", "alpaca-detect", "alpaca-correct"],
    )
    p.add_argument("--out", required=True, help="output file")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("eval", help="score prediction files against gold labels")
    p.add_argument("--gold", required=True, help="gold corpus .jsonl")
    p.add_argument("--level", required=True, choices=["binary", "broad", "finer"])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pred", help="id<TAB>label prediction file")
    group.add_argument(
        "--aggregate", help="directory of prediction .tsv files to score together"
    )
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the annotation HTTP service")
    p.add_argument("--corpus", required=True, help="corpus .jsonl to annotate")
    p.add_argument("--data", required=True, help="directory for the event log")
    p.add_argument("--quorum", type=int, default=3)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
