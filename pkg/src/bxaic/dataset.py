"""Corpus to benchmark dataset: filter, deduplicate, weight-sample, split, summarize."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .chem.canon import canonical_hash, is_isomorphic
from .chem.fingerprint import morgan_fingerprint, tanimoto
from .chem.graph import MoleculeGraph
from .chem.sanitize import prepare_molecule
from .chem.smiles import SmilesParseError, write_smiles
from .rng import derive_rng
from .tasks import TASK_IDS, LabeledMolecule, label_all

log = logging.getLogger(__name__)

ISOMORPHISM_CHECK_MAX_ATOMS = 64


@dataclass
class RejectedLine:
    line_no: int
    text: str
    reason: str


@dataclass
class FilterResult:
    molecules: list[LabeledMolecule]
    rejects: list[RejectedLine]


def _parse_corpus_line(line: str, line_no: int) -> tuple[str, str]:
    smiles, sep, rest = line.partition("\t")
    molecule_id = rest.strip() if sep and rest.strip() else f"mol-{line_no:06d}"
    return smiles.strip(), molecule_id


def filter_corpus(lines, ring_count_threshold: int = 4,
                  ring_size_threshold: int = 6) -> FilterResult:
    """Parse, sanitize, deduplicate and label a corpus.

    Structural duplicates (equal canonical hash, confirmed isomorphic) keep
    the first occurrence. Every rejected line is returned with its line
    number and reason, and logged.

    The stored SMILES is the sanitized molecule re-serialized, so parsing it
    left-to-right reproduces exactly the atom and bond order that the masks
    index.
    """
    molecules: list[LabeledMolecule] = []
    rejects: list[RejectedLine] = []
    by_hash: dict[str, list[MoleculeGraph]] = {}
    seen_ids: set[str] = set()

    def reject(line_no: int, text: str, reason: str) -> None:
        rejects.append(RejectedLine(line_no=line_no, text=text, reason=reason))
        log.info("line %d skipped: %s (%r)", line_no, reason, text)

    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            reject(line_no, line, "empty line")
            continue
        smiles, molecule_id = _parse_corpus_line(line, line_no)
        if molecule_id in seen_ids:
            reject(line_no, line, f"duplicate id {molecule_id!r}")
            continue
        try:
            prepared = prepare_molecule(smiles)
            # Round-trip once so the stored text's parse order IS the mask order.
            canonical_text = write_smiles(prepared)
            final = prepare_molecule(canonical_text)
        except SmilesParseError as exc:
            reject(line_no, line, f"parse error: {exc}")
            continue

        digest = canonical_hash(final)
        bucket = by_hash.setdefault(digest, [])
        # Hash equality is confirmed by an isomorphism post-check up to the
        # size bound; beyond it the hash alone decides.
        if any(
            final.n_atoms > ISOMORPHISM_CHECK_MAX_ATOMS or is_isomorphic(final, kept)
            for kept in bucket
        ):
            reject(line_no, line, "structural duplicate")
            continue
        bucket.append(final)
        seen_ids.add(molecule_id)
        labeled = label_all(final, molecule_id,
                            ring_count_threshold=ring_count_threshold,
                            ring_size_threshold=ring_size_threshold)
        labeled.smiles = canonical_text
        molecules.append(labeled)

    return FilterResult(molecules=molecules, rejects=rejects)


# ----------------------------------------------------------------------
# Weighted sampling and splitting
# ----------------------------------------------------------------------

@dataclass
class SamplingWeights:
    """Per-task majority/minority ratios and the per-molecule weight product.

    A molecule's weight is the product of r_t over every task where it
    carries the minority label; molecules with only majority labels weigh 1.
    """

    ratios: dict[str, float]
    minority_label: dict[str, bool | None]
    weights: dict[str, float]


def compute_weights(molecules: list[LabeledMolecule]) -> SamplingWeights:
    if not molecules:
        raise ValueError("empty population")
    ratios: dict[str, float] = {}
    minority: dict[str, bool | None] = {}
    for task in TASK_IDS:
        positives = sum(1 for mol in molecules if mol.outcomes[task].label)
        negatives = len(molecules) - positives
        if positives == 0 or negatives == 0 or positives == negatives:
            ratios[task] = 1.0
            minority[task] = None
        elif positives < negatives:
            ratios[task] = negatives / positives
            minority[task] = True
        else:
            ratios[task] = positives / negatives
            minority[task] = False
    weights = {}
    for mol in molecules:
        w = 1.0
        for task in TASK_IDS:
            if minority[task] is not None and mol.outcomes[task].label == minority[task]:
                w *= ratios[task]
        weights[mol.id] = w
    return SamplingWeights(ratios=ratios, minority_label=minority, weights=weights)


def weighted_sample(ids: list[str], weights: dict[str, float], n: int, seed: int) -> list[str]:
    """Sample n ids without replacement, proportional to weight.

    Exponential sort keys (one uniform per item, key = -ln(u)/w, take the n
    smallest) draw from the same distribution as successive renormalized
    draws, in one vectorized pass. Returned in draw order.
    """
    if n > len(ids):
        raise ValueError(f"cannot sample {n} from a population of {len(ids)}")
    if n < 0:
        raise ValueError("sample size must be nonnegative")
    w = np.array([weights[i] for i in ids], dtype=float)
    if not np.all(w > 0):
        raise ValueError("weights must be positive")
    rng = derive_rng(seed, "sample")
    u = rng.random(len(ids))
    keys = -np.log1p(-u) / w
    chosen = np.argsort(keys, kind="stable")[:n]
    return [ids[i] for i in chosen]


@dataclass
class DatasetSplit:
    train: list[str]
    valid: list[str]
    test: list[str]
    seed: int


def split_dataset(ids: list[str], seed: int,
                  ratio: tuple[int, int, int] = (8, 1, 1)) -> DatasetSplit:
    """Uniform shuffle, then contiguous train/valid/test slices by ratio."""
    if len(ids) < 10:
        raise ValueError(f"need at least 10 ids to split, got {len(ids)}")
    total = sum(ratio)
    if total <= 0 or any(r < 0 for r in ratio):
        raise ValueError(f"bad split ratio {ratio}")
    rng = derive_rng(seed, "split")
    perm = rng.permutation(len(ids))
    shuffled = [ids[i] for i in perm]
    n = len(ids)
    n_train = int(round(n * ratio[0] / total))
    n_valid = int(round(n * ratio[1] / total))
    n_valid = min(n_valid, n - n_train)
    return DatasetSplit(
        train=shuffled[:n_train],
        valid=shuffled[n_train : n_train + n_valid],
        test=shuffled[n_train + n_valid :],
        seed=seed,
    )


# ----------------------------------------------------------------------
# Summary statistics
# ----------------------------------------------------------------------

@dataclass
class TaskStats:
    task: str
    pct_positive: float
    pct_null_explanation: float
    pct_subgraph_explanation: float
    node_share_mean: float | None
    node_share_std: float | None
    edge_share_mean: float | None
    edge_share_std: float | None


@dataclass
class DatasetStats:
    n_molecules: int
    mean_graph_size: float
    per_task: dict[str, TaskStats]
    tanimoto_bin_edges: list[float]
    tanimoto_counts: list[int]
    tanimoto_pairs: int
    seed: int


def _mean_std(values: list[float]) -> tuple[float | None, float | None]:
    if not values:
        return None, None
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std())


def compute_stats(molecules: list[LabeledMolecule], seed: int,
                  tanimoto_pairs: int = 10_000, n_bins: int = 20,
                  fp_radius: int = 2, fp_width: int = 2048) -> DatasetStats:
    """Per-task label/explanation shares plus global size and diversity numbers."""
    if not molecules:
        raise ValueError("empty dataset")
    n = len(molecules)
    per_task: dict[str, TaskStats] = {}
    for task in TASK_IDS:
        outcomes = [mol.outcomes[task] for mol in molecules]
        n_pos = sum(1 for o in outcomes if o.label)
        n_null = sum(1 for o in outcomes if o.explanation_kind == "null")
        node_shares = []
        edge_shares = []
        for mol, outcome in zip(molecules, outcomes):
            if outcome.explanation_kind != "subgraph":
                continue
            node_shares.append(100.0 * sum(outcome.atom_mask) / len(outcome.atom_mask))
            if outcome.bond_mask is not None and len(outcome.bond_mask) > 0:
                edge_shares.append(100.0 * sum(outcome.bond_mask) / len(outcome.bond_mask))
        node_mean, node_std = _mean_std(node_shares)
        edge_mean, edge_std = _mean_std(edge_shares)
        per_task[task] = TaskStats(
            task=task,
            pct_positive=100.0 * n_pos / n,
            pct_null_explanation=100.0 * n_null / n,
            pct_subgraph_explanation=100.0 * (n - n_null) / n,
            node_share_mean=node_mean,
            node_share_std=node_std,
            edge_share_mean=edge_mean,
            edge_share_std=edge_std,
        )

    graphs = [_graph_of(mol) for mol in molecules]
    mean_size = float(np.mean([g.n_atoms for g in graphs]))

    rng = derive_rng(seed, "tanimoto-pairs")
    fingerprints = [morgan_fingerprint(g, radius=fp_radius, width=fp_width) for g in graphs]
    similarities = []
    if n >= 2:
        for _ in range(tanimoto_pairs):
            i = int(rng.integers(n))
            j = int(rng.integers(n - 1))
            if j >= i:
                j += 1
            similarities.append(tanimoto(fingerprints[i], fingerprints[j]))
    counts, edges = np.histogram(similarities, bins=n_bins, range=(0.0, 1.0))
    return DatasetStats(
        n_molecules=n,
        mean_graph_size=mean_size,
        per_task=per_task,
        tanimoto_bin_edges=[float(e) for e in edges],
        tanimoto_counts=[int(c) for c in counts],
        tanimoto_pairs=len(similarities),
        seed=seed,
    )


def _graph_of(mol: LabeledMolecule) -> MoleculeGraph:
    if mol.graph is not None:
        return mol.graph
    mol.graph = prepare_molecule(mol.smiles)
    return mol.graph


def stats_to_document(stats: DatasetStats) -> dict:
    return {
        "n_molecules": stats.n_molecules,
        "mean_graph_size": stats.mean_graph_size,
        "per_task": {
            task: {
                "pct_positive": ts.pct_positive,
                "pct_null_explanation": ts.pct_null_explanation,
                "pct_subgraph_explanation": ts.pct_subgraph_explanation,
                "node_share_mean": ts.node_share_mean,
                "node_share_std": ts.node_share_std,
                "edge_share_mean": ts.edge_share_mean,
                "edge_share_std": ts.edge_share_std,
            }
            for task, ts in stats.per_task.items()
        },
        "tanimoto_histogram": {
            "bin_edges": stats.tanimoto_bin_edges,
            "counts": stats.tanimoto_counts,
            "n_pairs": stats.tanimoto_pairs,
        },
        "seed": stats.seed,
        "std_convention": "population (ddof=0)",
    }
