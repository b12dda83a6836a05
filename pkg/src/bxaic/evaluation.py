"""Scoring an explainer's attribution file against a benchmark dataset.

Graphs whose ground truth is a null explanation are scored with the IQR rule;
graphs with a subgraph explanation are ranked with AUROC (plus average
precision as a secondary number). Edge-level evaluation covers only the four
tasks that carry bond masks. Subgraph graphs whose mask covers every element
have no AUROC and are counted separately, as are graphs with no bonds at the
edge level.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .metrics import DegenerateMaskError, NEConfig, auroc, average_precision, f1_score, ne_score
from .records import AttributionRecord, DatasetRecord
from .tasks import EDGE_TASKS, TASK_IDS

NODE_LEVEL = "node"
EDGE_LEVEL = "edge"


class MissingAttributionError(ValueError):
    def __init__(self, missing: list[tuple[str, str]]):
        shown = ", ".join(f"{i}/{t}" for i, t in missing[:10])
        suffix = "" if len(missing) <= 10 else f" (+{len(missing) - 10} more)"
        super().__init__(f"attributions missing for: {shown}{suffix}")
        self.missing = missing


class AttributionShapeError(ValueError):
    pass


@dataclass
class TaskScore:
    task: str
    level: str
    ne_mean: float | None
    se_mean: float | None
    avg: float | None
    n_ne: int
    n_se: int
    n_degenerate: int = 0
    n_skipped: int = 0
    se_ap_mean: float | None = None
    partial: bool = False  # avg covers only one defined component

    def as_dict(self) -> dict:
        return {
            "task": self.task,
            "level": self.level,
            "ne_mean": self.ne_mean,
            "se_mean": self.se_mean,
            "avg": self.avg,
            "n_ne": self.n_ne,
            "n_se": self.n_se,
            "n_degenerate": self.n_degenerate,
            "n_skipped": self.n_skipped,
            "se_ap_mean": self.se_ap_mean,
            "partial": self.partial,
        }


@dataclass
class PerGraphScore:
    id: str
    task: str
    level: str
    kind: str  # "ne" or "se"
    score: float

    def as_dict(self) -> dict:
        return {"id": self.id, "task": self.task, "level": self.level,
                "kind": self.kind, "score": self.score}


@dataclass
class LevelEvaluation:
    level: str
    tasks: dict[str, TaskScore]
    per_graph: list[PerGraphScore] = field(default_factory=list)

    def overall(self) -> dict:
        ne_values = [ts.ne_mean for ts in self.tasks.values() if ts.ne_mean is not None]
        se_values = [ts.se_mean for ts in self.tasks.values() if ts.se_mean is not None]
        avg_values = [ts.avg for ts in self.tasks.values() if ts.avg is not None]

        def _summary(values: list[float]) -> dict:
            if not values:
                return {"mean": None, "std_over_tasks": None, "n_tasks": 0}
            arr = np.asarray(values)
            return {"mean": float(arr.mean()), "std_over_tasks": float(arr.std()),
                    "n_tasks": len(values)}

        return {"ne": _summary(ne_values), "se": _summary(se_values),
                "avg": _summary(avg_values)}


def _applicable_tasks(level: str) -> tuple[str, ...]:
    if level == NODE_LEVEL:
        return TASK_IDS
    if level == EDGE_LEVEL:
        return EDGE_TASKS
    raise ValueError(f"unknown level {level!r}")


def evaluate_explainer(
    dataset: list[DatasetRecord],
    attributions: dict[tuple[str, str], AttributionRecord],
    level: str,
    ne_config: NEConfig = NEConfig(),
    use_abs: bool = False,
) -> LevelEvaluation:
    tasks = _applicable_tasks(level)
    missing = [
        (rec.id, task)
        for rec in dataset
        for task in tasks
        if (rec.id, task) not in attributions
    ]
    if missing:
        raise MissingAttributionError(missing)

    scores: dict[str, dict[str, list]] = {
        task: {"ne": [], "se": [], "ap": [], "degenerate": 0, "skipped": 0}
        for task in tasks
    }
    per_graph: list[PerGraphScore] = []

    for rec in dataset:
        for task in tasks:
            attribution = attributions[(rec.id, task)]
            outcome = rec.outcome(task)
            if len(attribution.node_scores) != rec.n_atoms:
                raise AttributionShapeError(
                    f"id={rec.id} task={task}: node_scores has "
                    f"{len(attribution.node_scores)} entries, molecule has {rec.n_atoms} atoms"
                )
            if level == NODE_LEVEL:
                values = attribution.node_scores
                mask = outcome["atom_mask"]
            else:
                if attribution.edge_scores is None:
                    raise AttributionShapeError(
                        f"id={rec.id} task={task}: edge-level evaluation needs edge_scores"
                    )
                if len(attribution.edge_scores) != len(rec.bonds):
                    raise AttributionShapeError(
                        f"id={rec.id} task={task}: edge_scores has "
                        f"{len(attribution.edge_scores)} entries, molecule has "
                        f"{len(rec.bonds)} bonds"
                    )
                values = attribution.edge_scores
                mask = outcome.get("bond_mask")
            if use_abs:
                values = [abs(v) for v in values]

            bucket = scores[task]
            if len(values) == 0:
                bucket["skipped"] += 1  # no bonds to judge at the edge level
                continue
            if outcome["explanation"] == "null":
                value = float(ne_score(values, ne_config))
                bucket["ne"].append(value)
                per_graph.append(PerGraphScore(rec.id, task, level, "ne", value))
            else:
                if mask is None:
                    raise AttributionShapeError(
                        f"id={rec.id} task={task}: subgraph outcome without a bond mask"
                    )
                try:
                    value = auroc(values, mask)
                except DegenerateMaskError:
                    bucket["degenerate"] += 1
                    continue
                bucket["se"].append(value)
                bucket["ap"].append(average_precision(values, mask))
                per_graph.append(PerGraphScore(rec.id, task, level, "se", value))

    task_scores = {}
    for task in tasks:
        bucket = scores[task]
        ne_mean = float(np.mean(bucket["ne"])) if bucket["ne"] else None
        se_mean = float(np.mean(bucket["se"])) if bucket["se"] else None
        ap_mean = float(np.mean(bucket["ap"])) if bucket["ap"] else None
        if ne_mean is not None and se_mean is not None:
            avg, partial = (ne_mean + se_mean) / 2.0, False
        elif ne_mean is not None or se_mean is not None:
            avg, partial = (ne_mean if ne_mean is not None else se_mean), True
        else:
            avg, partial = None, False
        task_scores[task] = TaskScore(
            task=task, level=level, ne_mean=ne_mean, se_mean=se_mean, avg=avg,
            n_ne=len(bucket["ne"]), n_se=len(bucket["se"]),
            n_degenerate=bucket["degenerate"], n_skipped=bucket["skipped"],
            se_ap_mean=ap_mean, partial=partial,
        )
    return LevelEvaluation(level=level, tasks=task_scores, per_graph=per_graph)


def f1_per_task(
    dataset: list[DatasetRecord],
    predictions: dict[tuple[str, str], float],
    threshold: float = 0.5,
) -> dict[str, float]:
    missing = [
        (rec.id, task)
        for rec in dataset
        for task in TASK_IDS
        if (rec.id, task) not in predictions
    ]
    if missing:
        raise MissingAttributionError(missing)
    result = {}
    for task in TASK_IDS:
        labels = [rec.outcome(task)["label"] for rec in dataset]
        preds = [predictions[(rec.id, task)] >= threshold for rec in dataset]
        result[task] = f1_score(labels, preds)
    return result


def _format_cell(value: float | None) -> str:
    return "  --  " if value is None else f"{value:6.3f}"


def format_report_table(levels: dict[str, LevelEvaluation],
                        f1: dict[str, float] | None = None) -> str:
    """Flat text table (task rows, NE/SE/avg columns per level) for human diffing."""
    level_names = [name for name in (NODE_LEVEL, EDGE_LEVEL) if name in levels]
    header = ["task".ljust(12)]
    for name in level_names:
        header += [f"{name}:NE".rjust(9), f"{name}:SE".rjust(9), f"{name}:avg".rjust(9)]
    if f1:
        header.append("F1".rjust(9))
    lines = ["  ".join(header)]
    for task in TASK_IDS:
        row = [task.ljust(12)]
        for name in level_names:
            ts = levels[name].tasks.get(task)
            if ts is None:
                row += ["  --  ".rjust(9)] * 3
            else:
                row += [_format_cell(v).rjust(9) for v in (ts.ne_mean, ts.se_mean, ts.avg)]
        if f1:
            row.append(_format_cell(f1.get(task)).rjust(9))
        lines.append("  ".join(row))
    overall_row = ["overall".ljust(12)]
    for name in level_names:
        summary = levels[name].overall()
        overall_row += [
            _format_cell(summary[key]["mean"]).rjust(9) for key in ("ne", "se", "avg")
        ]
    lines.append("  ".join(overall_row))
    return "\n".join(lines)


def build_report_document(
    levels: dict[str, LevelEvaluation],
    ne_config: NEConfig,
    use_abs: bool,
    dataset_path: str,
    attribution_path: str,
    f1: dict[str, float] | None = None,
    threshold: float | None = None,
    emit_per_graph: bool = False,
) -> dict:
    document = {
        "config": {
            "quartile_method": ne_config.quartile_method,
            "fence_multiplier": ne_config.fence_multiplier,
            "abs_scores": use_abs,
            "dataset": dataset_path,
            "attributions": attribution_path,
            "levels": sorted(levels),
            "prediction_threshold": threshold,
        },
        "levels": {
            name: {
                "tasks": {task: ts.as_dict() for task, ts in ev.tasks.items()},
                "overall": ev.overall(),
            }
            for name, ev in levels.items()
        },
        "table": format_report_table(levels, f1),
    }
    if f1 is not None:
        document["f1"] = f1
    if emit_per_graph:
        document["per_graph"] = [
            row.as_dict() for ev in levels.values() for row in ev.per_graph
        ]
    return document
