"""On-disk formats: line-delimited JSON with a typed header line.

Every structured file starts with ``{"format_version": 1, "kind": "..."}``
followed by one record per line. Split files are plain id lists with a
``# format_version=1`` comment. Writers are atomic (temp file + rename) and
byte-deterministic: keys sorted, compact separators, ``\\n`` line endings.
Readers raise :class:`SchemaError` naming the offending line.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

FORMAT_VERSION = 1

DATASET_KIND = "bxaic-dataset"
ATTRIBUTIONS_KIND = "bxaic-attributions"
PREDICTIONS_KIND = "bxaic-predictions"
STATS_KIND = "bxaic-stats"
REPORT_KIND = "bxaic-report"
COMPARISON_KIND = "bxaic-comparison"


class SchemaError(ValueError):
    def __init__(self, path: str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_jsonl(path: str, kind: str, records: Iterable[dict]) -> None:
    lines = [_dump({"format_version": FORMAT_VERSION, "kind": kind})]
    lines.extend(_dump(record) for record in records)
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_document(path: str, kind: str, document: dict) -> None:
    payload = {"format_version": FORMAT_VERSION, "kind": kind, **document}
    atomic_write_text(path, json.dumps(payload, sort_keys=True, indent=2,
                                       allow_nan=False) + "\n")


def read_document(path: str, kind: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(path, exc.lineno, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(payload, dict):
        raise SchemaError(path, 1, "expected a JSON object")
    if payload.get("kind") != kind:
        raise SchemaError(path, 1, f"expected kind {kind!r}, got {payload.get('kind')!r}")
    if payload.get("format_version") != FORMAT_VERSION:
        raise SchemaError(path, 1, f"unsupported format_version {payload.get('format_version')!r}")
    return payload


def iter_jsonl(path: str, kind: str) -> Iterator[tuple[int, dict]]:
    """Yield (line_no, record) pairs after validating the header line."""
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(path, line_no, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise SchemaError(path, line_no, "expected a JSON object")
            if line_no == 1:
                if record.get("kind") != kind:
                    raise SchemaError(path, 1, f"expected kind {kind!r}, got {record.get('kind')!r}")
                if record.get("format_version") != FORMAT_VERSION:
                    raise SchemaError(
                        path, 1, f"unsupported format_version {record.get('format_version')!r}"
                    )
                continue
            yield line_no, record


def _require(condition: bool, path: str, line_no: int, message: str) -> None:
    if not condition:
        raise SchemaError(path, line_no, message)


def _is_mask(value: Any) -> bool:
    return isinstance(value, list) and all(bit in (0, 1) for bit in value)


# ----------------------------------------------------------------------
# Dataset records
# ----------------------------------------------------------------------

@dataclass
class DatasetRecord:
    id: str
    smiles: str
    n_atoms: int
    bonds: list[tuple[int, int]]
    tasks: dict[str, dict]  # task -> {label, atom_mask, bond_mask?, explanation}

    def outcome(self, task: str) -> dict:
        return self.tasks[task]


def dataset_record_to_json(rec: DatasetRecord) -> dict:
    return {
        "id": rec.id,
        "smiles": rec.smiles,
        "atoms": rec.n_atoms,
        "bonds": [list(pair) for pair in rec.bonds],
        "tasks": rec.tasks,
    }


def parse_dataset_record(path: str, line_no: int, record: dict,
                         task_ids: tuple[str, ...]) -> DatasetRecord:
    for key in ("id", "smiles", "atoms", "bonds", "tasks"):
        _require(key in record, path, line_no, f"missing field {key!r}")
    _require(isinstance(record["id"], str), path, line_no, "'id' must be a string")
    _require(isinstance(record["atoms"], int) and record["atoms"] > 0,
             path, line_no, "'atoms' must be a positive integer")
    n_atoms = record["atoms"]
    bonds = []
    _require(isinstance(record["bonds"], list), path, line_no, "'bonds' must be a list")
    for pair in record["bonds"]:
        _require(
            isinstance(pair, list) and len(pair) == 2
            and all(isinstance(v, int) and 0 <= v < n_atoms for v in pair)
            and pair[0] != pair[1],
            path, line_no, f"bad bond pair {pair!r}",
        )
        bonds.append((pair[0], pair[1]))
    tasks = record["tasks"]
    _require(isinstance(tasks, dict) and set(tasks) == set(task_ids),
             path, line_no, f"'tasks' must cover exactly {sorted(task_ids)}")
    for task, outcome in tasks.items():
        _require(isinstance(outcome, dict), path, line_no, f"task {task!r} must be an object")
        _require(isinstance(outcome.get("label"), bool), path, line_no,
                 f"task {task!r}: 'label' must be boolean")
        _require(_is_mask(outcome.get("atom_mask")) and len(outcome["atom_mask"]) == n_atoms,
                 path, line_no, f"task {task!r}: 'atom_mask' must be a 0/1 list of length {n_atoms}")
        if "bond_mask" in outcome and outcome["bond_mask"] is not None:
            _require(_is_mask(outcome["bond_mask"]) and len(outcome["bond_mask"]) == len(bonds),
                     path, line_no,
                     f"task {task!r}: 'bond_mask' must be a 0/1 list of length {len(bonds)}")
        kind = outcome.get("explanation")
        _require(kind in ("null", "subgraph"), path, line_no,
                 f"task {task!r}: 'explanation' must be 'null' or 'subgraph'")
        empty = not any(outcome["atom_mask"]) and not (
            outcome.get("bond_mask") and any(outcome["bond_mask"])
        )
        _require((kind == "null") == empty, path, line_no,
                 f"task {task!r}: explanation kind contradicts the masks")
    return DatasetRecord(id=record["id"], smiles=record["smiles"],
                         n_atoms=n_atoms, bonds=bonds, tasks=tasks)


def read_dataset(path: str, task_ids: tuple[str, ...]) -> list[DatasetRecord]:
    records = []
    ids = set()
    for line_no, record in iter_jsonl(path, DATASET_KIND):
        rec = parse_dataset_record(path, line_no, record, task_ids)
        _require(rec.id not in ids, path, line_no, f"duplicate id {rec.id!r}")
        ids.add(rec.id)
        records.append(rec)
    return records


# ----------------------------------------------------------------------
# Attribution and prediction records
# ----------------------------------------------------------------------

@dataclass
class AttributionRecord:
    id: str
    task: str
    node_scores: list[float]
    edge_scores: list[float] | None


def attribution_to_json(rec: AttributionRecord) -> dict:
    return {
        "id": rec.id,
        "task": rec.task,
        "node_scores": rec.node_scores,
        "edge_scores": rec.edge_scores,
    }


def _finite_numbers(value: Any) -> bool:
    return (
        isinstance(value, list)
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
        and all(abs(v) != float("inf") and v == v for v in value)
    )


def read_attributions(path: str, task_ids: tuple[str, ...]) -> dict[tuple[str, str], AttributionRecord]:
    records: dict[tuple[str, str], AttributionRecord] = {}
    for line_no, record in iter_jsonl(path, ATTRIBUTIONS_KIND):
        for key in ("id", "task", "node_scores"):
            _require(key in record, path, line_no, f"missing field {key!r}")
        _require(record["task"] in task_ids, path, line_no,
                 f"unknown task {record['task']!r}")
        _require(_finite_numbers(record["node_scores"]) and record["node_scores"],
                 path, line_no, "'node_scores' must be a nonempty list of finite numbers")
        edge_scores = record.get("edge_scores")
        if edge_scores is not None:
            _require(_finite_numbers(edge_scores), path, line_no,
                     "'edge_scores' must be null or a list of finite numbers")
        key = (record["id"], record["task"])
        _require(key not in records, path, line_no,
                 f"duplicate record for id={record['id']!r} task={record['task']!r}")
        records[key] = AttributionRecord(
            id=record["id"], task=record["task"],
            node_scores=[float(v) for v in record["node_scores"]],
            edge_scores=None if edge_scores is None else [float(v) for v in edge_scores],
        )
    return records


def read_predictions(path: str, task_ids: tuple[str, ...]) -> dict[tuple[str, str], float]:
    records: dict[tuple[str, str], float] = {}
    for line_no, record in iter_jsonl(path, PREDICTIONS_KIND):
        for key in ("id", "task", "prob"):
            _require(key in record, path, line_no, f"missing field {key!r}")
        _require(record["task"] in task_ids, path, line_no,
                 f"unknown task {record['task']!r}")
        prob = record["prob"]
        _require(isinstance(prob, (int, float)) and not isinstance(prob, bool)
                 and 0.0 <= float(prob) <= 1.0,
                 path, line_no, "'prob' must be a number in [0,1]")
        key = (record["id"], record["task"])
        _require(key not in records, path, line_no,
                 f"duplicate record for id={record['id']!r} task={record['task']!r}")
        records[key] = float(prob)
    return records


# ----------------------------------------------------------------------
# Split files
# ----------------------------------------------------------------------

def write_id_list(path: str, ids: Iterable[str]) -> None:
    lines = [f"# format_version={FORMAT_VERSION}"]
    lines.extend(ids)
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_id_list(path: str) -> list[str]:
    ids = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                ids.append(line)
    return ids
