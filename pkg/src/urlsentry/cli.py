"""urlsentry command line.

One binary, seven subcommands: featurize, train, evaluate, compare,
zeroday, predict, serve. Exit codes are a stable contract: 0 success,
2 usage or input error, 1 internal error. Every run writes a manifest next
to its primary output.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import evaluation, model_store
from .corpus import CSV_LABELED_URLS, CSV_PREFEATURIZED, SplitConfig, load_corpus, split
from .errors import UrlSentryError
from .features import CANONICAL_SCHEMA, extract_features
from .learners import ALGORITHMS, LearnerConfig, train_learner
from .manifest import RunManifest

DEFAULT_ADDR = "127.0.0.1:8080"
ENV_ADDR = "URLSENTRY_ADDR"
ENV_PORT = "URLSENTRY_PORT"


def _print_report(report: evaluation.MetricsReport) -> None:
    cm = report.matrix
    print(f"algorithm:  {report.algorithm}")
    print(f"corpus:     {report.corpus}")
    print(f"accuracy:   {report.accuracy:.6f}")
    print(f"precision:  {report.precision:.6f}")
    print(f"recall:     {report.recall:.6f}")
    print(f"f1:         {report.f1:.6f}")
    print(f"confusion:  tp={cm.tp} tn={cm.tn} fp={cm.fp} fn={cm.fn}")
    if report.notes:
        print(f"notes:      {report.notes}")


def _manifest_path(primary_output: str) -> str:
    base, _ext = os.path.splitext(primary_output)
    return base + ".manifest.json"


def cmd_featurize(args) -> int:
    corpus = load_corpus(args.corpus, format=args.format, dedupe=args.dedupe)
    manifest = RunManifest(
        "featurize",
        {"corpus": args.corpus, "format": args.format, "dedupe": args.dedupe,
         "out": args.out},
    )
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["url", *CANONICAL_SCHEMA.names, "label"])
        for rec in corpus.records:
            writer.writerow([
                rec.raw_url,
                *[repr(v) for v in rec.features.values.tolist()],
                rec.label,
            ])
    print(f"featurized {len(corpus)} records -> {args.out} "
          f"({len(corpus.skipped)} rows skipped)")
    manifest.outputs.append(args.out)
    manifest.finish()
    manifest.write(_manifest_path(args.out))
    return 0


def cmd_train(args) -> int:
    corpus = load_corpus(args.corpus, format=args.format, dedupe=args.dedupe)
    cfg = SplitConfig(test_fraction=args.test_fraction, seed=args.seed)
    manifest = RunManifest(
        "train",
        {"corpus": args.corpus, "format": args.format, "algorithm": args.algorithm,
         "test_fraction": args.test_fraction, "out": args.out,
         "dedupe": args.dedupe},
        seed=args.seed,
    )
    train_set, test_set = split(corpus, cfg)
    config = LearnerConfig(algorithm=args.algorithm, seed=args.seed)
    model = train_learner(config, train_set)
    model_store.save_model(model, args.out)
    report = evaluation.metrics(
        evaluation.confusion(model, test_set),
        algorithm=args.algorithm,
        corpus=corpus.source_name,
    )
    _print_report(report)
    metrics_path = os.path.splitext(args.out)[0] + ".metrics.json"
    evaluation.write_metrics_json([report], metrics_path)
    print(f"model -> {args.out}")
    print(f"metrics -> {metrics_path}")
    manifest.outputs += [args.out, metrics_path]
    manifest.finish()
    manifest.write(_manifest_path(args.out))
    return 0


def cmd_evaluate(args) -> int:
    model = model_store.load_model(args.model)
    corpus = load_corpus(args.corpus, format=args.format, dedupe=args.dedupe)
    report = evaluation.metrics(
        evaluation.confusion(model, corpus),
        algorithm=model.algorithm,
        corpus=corpus.source_name,
    )
    _print_report(report)
    evaluation.write_metrics_json([report], args.out)
    print(f"metrics -> {args.out}")
    manifest = RunManifest(
        "evaluate",
        {"model": args.model, "corpus": args.corpus, "format": args.format,
         "out": args.out, "dedupe": args.dedupe},
    )
    manifest.outputs.append(args.out)
    manifest.finish()
    manifest.write(_manifest_path(args.out))
    return 0


def cmd_compare(args) -> int:
    corpus = load_corpus(args.corpus, format=args.format, dedupe=args.dedupe)
    cfg = SplitConfig(test_fraction=args.test_fraction, seed=args.seed)
    manifest = RunManifest(
        "compare",
        {"corpus": args.corpus, "format": args.format,
         "test_fraction": args.test_fraction, "out": args.out,
         "dedupe": args.dedupe},
        seed=args.seed,
    )
    reports = evaluation.compare_algorithms(
        corpus, cfg, evaluation.default_comparison_configs(args.seed)
    )
    print(f"{'algorithm':<12} {'accuracy':>9} {'precision':>10} {'recall':>8} {'f1':>8}")
    for r in reports:
        print(f"{r.algorithm:<12} {r.accuracy:>9.4f} {r.precision:>10.4f} "
              f"{r.recall:>8.4f} {r.f1:>8.4f}")
    evaluation.write_comparison_csv(reports, args.out)
    metrics_path = os.path.splitext(args.out)[0] + ".metrics.json"
    evaluation.write_metrics_json(reports, metrics_path)
    print(f"comparison -> {args.out}")
    manifest.outputs += [args.out, metrics_path]
    manifest.finish()
    manifest.write(_manifest_path(args.out))
    return 0


def cmd_zeroday(args) -> int:
    model = model_store.load_model(args.model)
    batches = evaluation.ingest_feed(args.feed, live=args.live)
    run = evaluation.run_zero_day(model, batches)
    daily_path = os.path.join(args.out_dir, "zeroday_daily.csv")
    summary_path = os.path.join(args.out_dir, "zeroday_summary.json")
    os.makedirs(args.out_dir, exist_ok=True)
    evaluation.write_zero_day_csv(run, daily_path)
    evaluation.write_zero_day_summary(run, summary_path)
    summary = run.as_summary()
    print(f"days:              {summary['days']}")
    print(f"urls evaluated:    {summary['urls_evaluated']}")
    print(f"correct:           {summary['correct']}")
    print(f"incorrect:         {summary['incorrect']}")
    print(f"skipped:           {summary['skipped_unparsable']}")
    print(f"overall accuracy:  {summary['overall_accuracy_percent']:.2f}%")
    manifest = RunManifest(
        "zeroday",
        {"model": args.model, "feed": args.feed, "live": args.live,
         "out_dir": args.out_dir},
    )
    manifest.outputs += [daily_path, summary_path]
    manifest.finish()
    manifest.write(os.path.join(args.out_dir, "zeroday.manifest.json"))
    return 0


def cmd_predict(args) -> int:
    manifest = RunManifest(
        "predict", {"model": args.model, "url": args.url, "manifest": args.manifest}
    )
    model = model_store.load_model(args.model)
    features = extract_features(args.url)
    label, probability = model.predict_one(features.values)
    verdict = "Phishing" if label == 1 else "Legitimate"
    print(f"{verdict} p={probability:.4f}")
    manifest.finish()
    manifest.write(args.manifest)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    addr = args.addr or os.environ.get(ENV_ADDR, DEFAULT_ADDR)
    host, _, port_s = addr.partition(":")
    port = int(os.environ.get(ENV_PORT, port_s or "8080"))
    app = create_app(model_path=args.model, blocklist_path=args.blocklist)
    manifest = RunManifest(
        "serve",
        {"model": args.model, "addr": f"{host}:{port}", "blocklist": args.blocklist},
    )
    manifest.write(os.path.join(os.path.dirname(os.path.abspath(args.blocklist)),
                                "serve.manifest.json"))
    uvicorn.run(app, host=host or "127.0.0.1", port=port, log_level="info")
    return 0


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="labeled CSV path")
    p.add_argument("--format", default=CSV_LABELED_URLS,
                   choices=[CSV_LABELED_URLS, CSV_PREFEATURIZED])
    p.add_argument("--dedupe", action="store_true",
                   help="drop duplicate URLs (kept by default)")


def _apply_config_file(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    """Seed parser defaults from --config <json> (flags still win)."""
    if "--config" not in argv:
        return
    path = argv[argv.index("--config") + 1]
    with open(path, encoding="utf-8") as fh:
        overrides = json.load(fh)
    if not isinstance(overrides, dict):
        raise UrlSentryError(f"{path}: config file must hold a JSON object")
    for sub in getattr(parser, "_urlsentry_subparsers", []):
        known = {a.dest for a in sub._actions}
        sub.set_defaults(**{k: v for k, v in overrides.items() if k in known})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urlsentry",
        description="Phishing-URL detection: featurize, train, evaluate, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers: list[argparse.ArgumentParser] = []
    parser._urlsentry_subparsers = subparsers  # noqa: SLF001 - own attribute
    original_add_parser = sub.add_parser

    def add_parser(*args, **kwargs):
        p = original_add_parser(*args, **kwargs)
        p.add_argument("--config", default=None,
                       help="JSON file of flag defaults (flags override)")
        subparsers.append(p)
        return p

    sub.add_parser = add_parser

    p = sub.add_parser("featurize", help="extract features to a prefeaturized CSV")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_featurize)

    p = sub.add_parser("train", help="train a model, report holdout metrics")
    _add_corpus_args(p)
    p.add_argument("--algorithm", default="forest", choices=ALGORITHMS)
    p.add_argument("--out", required=True, help="model file path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.3)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="metrics for a saved model on a corpus")
    _add_corpus_args(p)
    p.add_argument("--model", required=True)
    p.add_argument("--out", default="metrics.json")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="train and rank all five algorithms")
    _add_corpus_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.3)
    p.add_argument("--out", default="comparison.csv")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("zeroday", help="replay a dated phishing feed")
    p.add_argument("--model", required=True)
    p.add_argument("--feed", required=True, help="file of 'ISO-date,URL' lines")
    p.add_argument("--live", action="store_true",
                   help="allow fetching the feed over HTTP")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_zeroday)

    p = sub.add_parser("predict", help="one-line verdict for a URL")
    p.add_argument("--model", required=True)
    p.add_argument("--url", required=True)
    p.add_argument("--manifest", default="predict.manifest.json",
                   help="where to write the run manifest")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("serve", help="run the HTTP verdict service")
    p.add_argument("--model", required=True)
    p.add_argument("--addr", default=None,
                   help=f"host:port (default {DEFAULT_ADDR}; env {ENV_ADDR})")
    p.add_argument("--blocklist", default="blocklist.jsonl")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config_file(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args)
    except UrlSentryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
