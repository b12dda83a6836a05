"""Command-line interface.

Subcommands: ``build`` (corpus -> dataset + splits + stats), ``label`` (one
SMILES -> all 7 outcomes), ``baseline`` (dataset -> reference attributions),
``eval`` (dataset + attributions -> report), ``compare`` (reports ->
ranking with significance flags). Every stochastic command takes --seed and
is byte-deterministic for fixed inputs.

Exit codes: 0 success, 2 usage, 3 I/O or configuration, 4 parse error,
5 schema violation, 6 data mismatch, 7 empty result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .baselines import BASELINE_METHODS, generate_baseline
from .chem.sanitize import prepare_molecule
from .chem.smiles import SmilesParseError
from .dataset import (
    compute_stats,
    compute_weights,
    filter_corpus,
    split_dataset,
    stats_to_document,
    weighted_sample,
)
from .evaluation import (
    EDGE_LEVEL,
    NODE_LEVEL,
    AttributionShapeError,
    MissingAttributionError,
    build_report_document,
    evaluate_explainer,
    f1_per_task,
)
from .metrics import QUARTILE_METHODS, NEConfig
from .records import (
    ATTRIBUTIONS_KIND,
    COMPARISON_KIND,
    DATASET_KIND,
    REPORT_KIND,
    STATS_KIND,
    SchemaError,
    attribution_to_json,
    read_attributions,
    read_dataset,
    read_document,
    read_predictions,
    write_document,
    write_id_list,
    write_jsonl,
)
from .significance import compare_explainers
from .smarts import PatternError
from .tasks import TASK_IDS, label_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4
EXIT_SCHEMA = 5
EXIT_DATA = 6
EXIT_EMPTY = 7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_ratio(text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) != 3 or not all(p.isdigit() and int(p) >= 0 for p in parts):
        raise CliError(f"bad --split ratio {text!r}, expected like 8:1:1", EXIT_USAGE)
    return (int(parts[0]), int(parts[1]), int(parts[2]))


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.readlines()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc


def _load_dataset(path: str):
    try:
        dataset = read_dataset(path, TASK_IDS)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    if not dataset:
        raise CliError(f"{path}: dataset has no records", EXIT_EMPTY)
    return dataset


def _outcome_json(outcome) -> dict:
    payload = {
        "label": outcome.label,
        "atom_mask": list(outcome.atom_mask),
        "explanation": outcome.explanation_kind,
    }
    if outcome.bond_mask is not None:
        payload["bond_mask"] = list(outcome.bond_mask)
    return payload


def cmd_build(args) -> int:
    lines = _read_lines(args.input)
    result = filter_corpus(lines)
    for rejected in result.rejects:
        print(f"skipped line {rejected.line_no}: {rejected.reason}", file=sys.stderr)
    if not result.molecules:
        raise CliError("no molecules survived filtering", EXIT_EMPTY)

    molecules = result.molecules
    if args.size is not None:
        if args.size > len(molecules):
            raise CliError(
                f"requested {args.size} molecules but only {len(molecules)} survived",
                EXIT_DATA,
            )
        weights = compute_weights(molecules)
        chosen = set(weighted_sample([m.id for m in molecules], weights.weights,
                                     args.size, args.seed))
        molecules = [m for m in molecules if m.id in chosen]
    if len(molecules) < 10:
        raise CliError(
            f"{len(molecules)} molecules is too few for an 8-1-1 split (need 10)",
            EXIT_DATA,
        )

    split = split_dataset([m.id for m in molecules], args.seed, _parse_ratio(args.split))
    stats = compute_stats(molecules, args.seed, tanimoto_pairs=args.tanimoto_pairs)

    os.makedirs(args.out, exist_ok=True)
    write_jsonl(
        os.path.join(args.out, "dataset.jsonl"),
        DATASET_KIND,
        (
            {
                "id": mol.id,
                "smiles": mol.smiles,
                "atoms": mol.n_atoms,
                "bonds": [list(pair) for pair in mol.bond_pairs],
                "tasks": {task: _outcome_json(mol.outcomes[task]) for task in TASK_IDS},
            }
            for mol in molecules
        ),
    )
    write_id_list(os.path.join(args.out, "train.ids"), split.train)
    write_id_list(os.path.join(args.out, "valid.ids"), split.valid)
    write_id_list(os.path.join(args.out, "test.ids"), split.test)
    write_document(os.path.join(args.out, "stats.json"), STATS_KIND, stats_to_document(stats))
    print(
        f"wrote {len(molecules)} molecules "
        f"({len(split.train)}/{len(split.valid)}/{len(split.test)} split), "
        f"{len(result.rejects)} lines rejected -> {args.out}"
    )
    return EXIT_OK


def cmd_label(args) -> int:
    try:
        molecule = prepare_molecule(args.smiles)
    except SmilesParseError as exc:
        raise CliError(f"cannot parse {args.smiles!r}: {exc}", EXIT_PARSE) from exc
    labeled = label_all(molecule, molecule_id="cli")
    if args.json:
        payload = {
            "smiles": args.smiles,
            "atoms": labeled.n_atoms,
            "bonds": [list(pair) for pair in labeled.bond_pairs],
            "tasks": {task: _outcome_json(labeled.outcomes[task]) for task in TASK_IDS},
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
        return EXIT_OK
    print(f"{args.smiles}: {labeled.n_atoms} atoms, {len(labeled.bond_pairs)} bonds")
    for task in TASK_IDS:
        outcome = labeled.outcomes[task]
        atoms = [i for i, bit in enumerate(outcome.atom_mask) if bit]
        bonds = (
            [i for i, bit in enumerate(outcome.bond_mask) if bit]
            if outcome.bond_mask is not None
            else None
        )
        parts = [f"label={'+' if outcome.label else '-'}",
                 f"explanation={outcome.explanation_kind}"]
        if atoms:
            parts.append(f"atoms={atoms}")
        if bonds:
            parts.append(f"bonds={bonds}")
        print(f"  {task:<12} {' '.join(parts)}")
    return EXIT_OK


def cmd_baseline(args) -> int:
    dataset = _load_dataset(args.dataset)
    try:
        records = generate_baseline(dataset, args.method, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    write_jsonl(args.out, ATTRIBUTIONS_KIND,
                (attribution_to_json(rec) for rec in records))
    print(f"wrote {len(records)} attribution records -> {args.out}")
    return EXIT_OK


def cmd_eval(args) -> int:
    dataset = _load_dataset(args.dataset)
    attributions = read_attributions(args.attributions, TASK_IDS)
    ne_config = NEConfig(fence_multiplier=args.fence_multiplier,
                         quartile_method=args.quartile_rule)
    levels = {}
    wanted = (NODE_LEVEL, EDGE_LEVEL) if args.level == "both" else (args.level,)
    try:
        for level in wanted:
            levels[level] = evaluate_explainer(
                dataset, attributions, level, ne_config, use_abs=args.abs
            )
        f1 = None
        if args.predictions:
            predictions = read_predictions(args.predictions, TASK_IDS)
            f1 = f1_per_task(dataset, predictions, args.threshold)
    except (MissingAttributionError, AttributionShapeError) as exc:
        raise CliError(str(exc), EXIT_DATA) from exc
    document = build_report_document(
        levels, ne_config, args.abs, args.dataset, args.attributions,
        f1=f1, threshold=args.threshold if args.predictions else None,
        emit_per_graph=args.emit_per_graph,
    )
    write_document(args.out, REPORT_KIND, document)
    print(document["table"])
    print(f"report -> {args.out}")
    return EXIT_OK


def cmd_compare(args) -> int:
    tables: dict[str, dict] = {}
    for path in args.reports:
        report = read_document(path, REPORT_KIND)
        name = os.path.splitext(os.path.basename(path))[0]
        if name in tables:
            name = path
        if "per_graph" not in report:
            raise CliError(
                f"{path}: report has no per-graph scores; re-run eval with --emit-per-graph",
                EXIT_DATA,
            )
        tables[name] = {
            (row["id"], row["task"], row["level"], row["kind"]): row["score"]
            for row in report["per_graph"]
        }
    try:
        matrix = compare_explainers(tables, alpha=args.alpha)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DATA) from exc
    ranking = sorted(matrix.explainers, key=lambda name: -matrix.means[name])
    document = {
        "alpha": matrix.alpha,
        "best": matrix.best,
        "ranking": [
            {
                "explainer": name,
                "mean_score": matrix.means[name],
                "not_significantly_lower_than_best": matrix.not_significantly_lower[name],
                "p_vs_best": matrix.p_values[matrix.best][name],
            }
            for name in ranking
        ],
        "p_values": matrix.p_values,
        "n_nonzero": matrix.n_nonzero,
    }
    write_document(args.out, COMPARISON_KIND, document)
    for row in document["ranking"]:
        flag = "*" if row["not_significantly_lower_than_best"] else " "
        print(f"{flag} {row['explainer']:<24} {row['mean_score']:.4f} "
              f"(p vs best: {row['p_vs_best']:.4g})")
    print(f"comparison -> {args.out}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bxaic",
        description="Build the substructure-explanation benchmark and score attributions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="corpus -> dataset + splits + stats")
    p_build.add_argument("--input", required=True, help="SMILES corpus, one per line")
    p_build.add_argument("--out", required=True, help="output directory")
    p_build.add_argument("--size", type=int, default=None,
                         help="weighted-sample this many molecules (default: keep all)")
    p_build.add_argument("--seed", type=int, required=True)
    p_build.add_argument("--split", default="8:1:1", help="train:valid:test ratio")
    p_build.add_argument("--tanimoto-pairs", type=int, default=10_000)
    p_build.set_defaults(func=cmd_build)

    p_label = sub.add_parser("label", help="print the 7 task outcomes for one SMILES")
    p_label.add_argument("--smiles", required=True)
    p_label.add_argument("--json", action="store_true", help="machine-readable output")
    p_label.set_defaults(func=cmd_label)

    p_baseline = sub.add_parser("baseline", help="generate reference attributions")
    p_baseline.add_argument("--dataset", required=True)
    p_baseline.add_argument("--method", required=True, choices=BASELINE_METHODS)
    p_baseline.add_argument("--seed", type=int, required=True)
    p_baseline.add_argument("--out", required=True)
    p_baseline.set_defaults(func=cmd_baseline)

    p_eval = sub.add_parser("eval", help="score attributions against a dataset")
    p_eval.add_argument("--dataset", required=True)
    p_eval.add_argument("--attributions", required=True)
    p_eval.add_argument("--level", choices=("node", "edge", "both"), default="both")
    p_eval.add_argument("--quartile-rule", choices=QUARTILE_METHODS, default="linear")
    p_eval.add_argument("--fence-multiplier", type=float, default=1.5)
    p_eval.add_argument("--alpha", type=float, default=0.05)
    p_eval.add_argument("--abs", action="store_true",
                        help="score absolute attribution values")
    p_eval.add_argument("--emit-per-graph", action="store_true",
                        help="include per-graph scores (required by compare)")
    p_eval.add_argument("--predictions", default=None,
                        help="optional prediction file for per-task F1")
    p_eval.add_argument("--threshold", type=float, default=0.5)
    p_eval.add_argument("--out", required=True)
    p_eval.set_defaults(func=cmd_eval)

    p_compare = sub.add_parser("compare", help="rank eval reports with significance flags")
    p_compare.add_argument("--reports", nargs="+", required=True)
    p_compare.add_argument("--alpha", type=float, default=0.05)
    p_compare.add_argument("--out", required=True)
    p_compare.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (SmilesParseError, PatternError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
