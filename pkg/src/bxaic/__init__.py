"""Benchmark toolkit: substructure tasks with ground-truth explanation masks,
plus the null/subgraph attribution scoring protocol."""

__version__ = "0.1.0"

from .baselines import generate_baseline
from .chem import (
    canonical_hash,
    morgan_fingerprint,
    parse_smiles,
    perceive_rings,
    prepare_molecule,
    strip_to_largest_fragment,
    tanimoto,
    write_smiles,
)
from .dataset import (
    compute_stats,
    compute_weights,
    filter_corpus,
    split_dataset,
    weighted_sample,
)
from .evaluation import evaluate_explainer, f1_per_task
from .matching import Match, find_matches, match_mask
from .metrics import NEConfig, auroc, average_precision, f1_score, ne_score
from .significance import compare_explainers, wilcoxon_one_sided
from .smarts import Pattern, parse_pattern
from .tasks import (
    EDGE_TASKS,
    TASK_IDS,
    LabeledMolecule,
    TaskOutcome,
    label_all,
    label_element_task,
    label_indole,
    label_pains,
    label_rings_count,
    label_rings_max,
)
