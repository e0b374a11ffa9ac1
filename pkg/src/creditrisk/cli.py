"""Command-line entry point: ``creditrisk <subcommand> ...``.

Exit status is 0 on success, 1 on a data or runtime error (reported on
stderr as ``error: <CODE>: <message>``) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys

from .classifiers import ModelKind, ModelSpec, TrainedModel
from .data import FEATURES, filter_debt_ratio, load_dataset, save_dataset
from .errors import CreditRiskError
from .evaluate import EvaluationReport, ExperimentConfig, emit_report, run_grid
from .pipeline import fit_model, leading_subset, score_records
from .preprocess import apply_preprocessor, fit_preprocessor
from .synth import GeneratorConfig, generate_synthetic

_TRUE = {"1", "true", "yes", "y", "on"}
_FALSE = {"0", "false", "no", "n", "off"}


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _int_list(text: str):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _model_list(text: str):
    names = tuple(t.strip().lower() for t in text.split(",") if t.strip())
    valid = {k.value for k in ModelKind}
    bad = [n for n in names if n not in valid]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown model(s) {bad}; choose from {sorted(valid)}")
    return names


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_generate(args):
    cfg = GeneratorConfig(n=args.n, bad_prior=args.bad_prior, separation=args.separation,
                          missing_rate=args.missing_rate, seed=args.seed)
    _write_text(args.out, save_dataset(generate_synthetic(cfg)))


def cmd_preprocess(args):
    d = load_dataset(_read_text(args.data))
    params = fit_preprocessor(d, clip_outliers=args.clip)
    z = apply_preprocessor(params, d)
    buf = io.StringIO()
    header = [f.column for f in FEATURES] + (["Outcome"] if d.labeled else [])
    buf.write(",".join(header) + "\n")
    for i, row in enumerate(z):
        fields = [repr(float(v)) for v in row]
        if d.labeled:
            fields.append(str(int(d.outcomes[i])))
        buf.write(",".join(fields) + "\n")
    _write_text(args.out, buf.getvalue())
    _write_text(args.params, params.to_json() + "\n")


def cmd_train(args):
    d = filter_debt_ratio(load_dataset(_read_text(args.data)))
    spec = ModelSpec(ModelKind(args.model), {}, args.seed)
    model = fit_model(d, spec, leading_subset(args.attrs), args.lda, clip_outliers=args.clip)
    _write_text(args.out, model.to_json() + "\n")


def cmd_evaluate(args):
    d = filter_debt_ratio(load_dataset(_read_text(args.data)))
    cfg = ExperimentConfig(
        attribute_counts=args.attrs,
        models=args.models,
        train_fraction=args.train_fraction,
        seed=args.seed,
        use_fixed_ranking=not args.computed_ranking,
        clip_outliers=args.clip,
    )
    report = run_grid(cfg, d, workers=args.workers)
    _write_text(args.out, report.to_json() + "\n")


def _score_input(text_or_path: str):
    if os.path.exists(text_or_path):
        return load_dataset(_read_text(text_or_path))
    if "\n" in text_or_path.strip():
        return load_dataset(text_or_path)
    # a bare data row in P1..P10 order
    header = ",".join(f.column for f in FEATURES)
    return load_dataset(header + "\n" + text_or_path.strip() + "\n")


def cmd_score(args):
    model = TrainedModel.from_json(_read_text(args.model))
    d = _score_input(args.input)
    labels, scores = score_records(model, d)
    out = sys.stdout
    for label, score in zip(labels, scores):
        out.write(f"label={int(label)} score={float(score)!r}\n")


def cmd_report(args):
    report = EvaluationReport.from_json(_read_text(getattr(args, "in")))
    sys.stdout.write(emit_report(report, args.format))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="creditrisk", description="Credit-risk pipeline with LDA reduction.")
    sub = parser.add_subparsers(dest="command", required=True)

    defaults = GeneratorConfig()
    p = sub.add_parser("generate", help="write a synthetic labeled dataset as CSV")
    p.add_argument("--n", type=int, default=defaults.n)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--bad-prior", type=float, default=defaults.bad_prior)
    p.add_argument("--separation", type=float, default=defaults.separation)
    p.add_argument("--missing-rate", type=float, default=defaults.missing_rate)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("preprocess", help="fit the preprocessor and write the standardized matrix")
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--clip", action="store_true", help="winsorize at the IQR fences")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("train", help="train one model on all (debt-ratio filtered) records")
    p.add_argument("--data", required=True)
    p.add_argument("--model", required=True, choices=[k.value for k in ModelKind])
    p.add_argument("--attrs", type=int, default=4, choices=range(2, 11), metavar="{2..10}")
    p.add_argument("--lda", type=_bool, default=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clip", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="run the before/after-LDA accuracy grid")
    p.add_argument("--data", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attrs", type=_int_list, default=(2, 3, 4))
    p.add_argument("--models", type=_model_list, default=tuple(k.value for k in ModelKind))
    p.add_argument("--train-fraction", type=float, default=0.75)
    p.add_argument("--computed-ranking", action="store_true",
                   help="pick attributes by correlation on the training split instead of P1..Pk")
    p.add_argument("--clip", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("score", help="score raw records with a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True, help="CSV file, or one data row in P1..P10 order")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("report", help="format a saved evaluation report")
    p.add_argument("--in", required=True)
    p.add_argument("--format", choices=["markdown", "csv"], default="markdown")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except CreditRiskError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except OSError as exc:
        print(f"error: E_IO: {exc}", file=sys.stderr)
        return 1
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: E_FORMAT: malformed document: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: E_VALUE: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
