"""Reference attribution generators.

These make the evaluation protocol testable without any trained model: the
oracle scores are the ground-truth masks themselves (a perfect explainer),
random scores give the AUROC-0.5 floor, and degree is a deterministic
structure-only heuristic.
"""

from __future__ import annotations

from .records import AttributionRecord, DatasetRecord
from .rng import derive_rng
from .tasks import TASK_IDS

BASELINE_METHODS = ("oracle", "random", "degree")


def _degrees(rec: DatasetRecord) -> list[int]:
    degree = [0] * rec.n_atoms
    for a1, a2 in rec.bonds:
        degree[a1] += 1
        degree[a2] += 1
    return degree


def generate_baseline(dataset: list[DatasetRecord], method: str,
                      seed: int) -> list[AttributionRecord]:
    if method not in BASELINE_METHODS:
        raise ValueError(
            f"unknown baseline method {method!r}; choose one of {BASELINE_METHODS}"
        )
    records = []
    for rec in dataset:
        for task in TASK_IDS:
            outcome = rec.outcome(task)
            if method == "oracle":
                node = [float(bit) for bit in outcome["atom_mask"]]
                bond_mask = outcome.get("bond_mask")
                edge = None if bond_mask is None else [float(bit) for bit in bond_mask]
            elif method == "degree":
                degree = _degrees(rec)
                node = [float(d) for d in degree]
                edge = [float(degree[a1] + degree[a2]) for a1, a2 in rec.bonds]
            else:
                # Per-record stream: output is independent of record order.
                rng = derive_rng(seed, f"baseline-random|{rec.id}|{task}")
                node = [float(v) for v in rng.random(rec.n_atoms)]
                edge = [float(v) for v in rng.random(len(rec.bonds))]
            records.append(
                AttributionRecord(id=rec.id, task=task, node_scores=node, edge_scores=edge)
            )
    return records
