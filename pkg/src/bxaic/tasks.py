"""The seven benchmark tasks: labels plus ground-truth explanation masks.

Tasks B, P and X are atom-identity checks and carry atom masks only. The
indole and PAINS tasks are pattern matches whose masks are the union of all
match atoms/bonds. The two ring tasks derive their masks from the perceived
SSSR: a cyclic molecule always gets a subgraph explanation (all ring
atoms/bonds, or only the oversized rings for a positive rings-max), and only
acyclic molecules count as null explanations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .chem.elements import HALOGENS
from .chem.graph import MoleculeGraph
from .matching import find_matches, match_mask
from .smarts import Pattern, parse_pattern

TASK_IDS = ("B", "P", "X", "indole", "PAINS", "rings-count", "rings-max")

# Tasks whose ground truth includes bond masks; B/P/X target single atoms
# and never carry one.
EDGE_TASKS = ("indole", "PAINS", "rings-count", "rings-max")

NULL_KIND = "null"
SUBGRAPH_KIND = "subgraph"

DEFAULT_RING_COUNT_THRESHOLD = 4
DEFAULT_RING_SIZE_THRESHOLD = 6

PATTERN_DIR_ENV = "BXAIC_PATTERN_DIR"


@dataclass(frozen=True)
class TaskOutcome:
    task: str
    label: bool
    atom_mask: tuple[int, ...]
    bond_mask: tuple[int, ...] | None
    explanation_kind: str

    def __post_init__(self):
        empty = not any(self.atom_mask) and not (self.bond_mask and any(self.bond_mask))
        if (self.explanation_kind == NULL_KIND) != empty:
            raise ValueError(
                f"{self.task}: explanation kind {self.explanation_kind!r} "
                f"inconsistent with mask contents"
            )


@dataclass
class LabeledMolecule:
    id: str
    smiles: str
    n_atoms: int
    bond_pairs: list[tuple[int, int]]
    outcomes: dict[str, TaskOutcome]
    graph: MoleculeGraph | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if set(self.outcomes) != set(TASK_IDS):
            raise ValueError(f"molecule {self.id}: expected outcomes for all 7 tasks")


def load_patterns(text: str, origin: str = "<string>") -> list[tuple[str, Pattern]]:
    """Parse a pattern asset: one ``name<TAB>smarts`` per line, '#' comments."""
    patterns = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, smarts = line.partition("\t")
        if not sep or not smarts.strip():
            raise ValueError(f"{origin}:{line_no}: expected 'name<TAB>smarts'")
        patterns.append((name.strip(), parse_pattern(smarts.strip())))
    return patterns


def _read_pattern_asset(filename: str) -> str:
    override = os.environ.get(PATTERN_DIR_ENV)
    if override:
        with open(os.path.join(override, filename), encoding="utf-8") as fh:
            return fh.read()
    return (resources.files("bxaic") / "assets" / filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _pattern_set(filename: str, pattern_dir: str | None) -> tuple[tuple[str, Pattern], ...]:
    return tuple(load_patterns(_read_pattern_asset(filename), origin=filename))


def pains_patterns() -> tuple[tuple[str, Pattern], ...]:
    return _pattern_set("pains.smarts", os.environ.get(PATTERN_DIR_ENV))


def indole_patterns() -> tuple[tuple[str, Pattern], ...]:
    return _pattern_set("indole.smarts", os.environ.get(PATTERN_DIR_ENV))


def _outcome(task: str, label: bool, atom_mask: list[int],
             bond_mask: list[int] | None) -> TaskOutcome:
    empty = not any(atom_mask) and not (bond_mask and any(bond_mask))
    return TaskOutcome(
        task=task,
        label=label,
        atom_mask=tuple(atom_mask),
        bond_mask=None if bond_mask is None else tuple(bond_mask),
        explanation_kind=NULL_KIND if empty else SUBGRAPH_KIND,
    )


def label_element_task(m: MoleculeGraph, task: str, elements: frozenset[str]) -> TaskOutcome:
    atom_mask = [1 if a.element in elements else 0 for a in m.atoms]
    return _outcome(task, any(atom_mask), atom_mask, bond_mask=None)


def _label_pattern_task(m: MoleculeGraph, task: str,
                        patterns: tuple[tuple[str, Pattern], ...]) -> TaskOutcome:
    atom_mask = [0] * m.n_atoms
    bond_mask = [0] * m.n_bonds
    hit = False
    for _, pattern in patterns:
        matches = find_matches(pattern, m)
        if not matches:
            continue
        hit = True
        am, bm = match_mask(matches, m)
        atom_mask = [a | b for a, b in zip(atom_mask, am)]
        bond_mask = [a | b for a, b in zip(bond_mask, bm)]
    return _outcome(task, hit, atom_mask, bond_mask)


def label_indole(m: MoleculeGraph,
                 patterns: tuple[tuple[str, Pattern], ...] | None = None) -> TaskOutcome:
    return _label_pattern_task(m, "indole", patterns or indole_patterns())


def label_pains(m: MoleculeGraph,
                patterns: tuple[tuple[str, Pattern], ...] | None = None) -> TaskOutcome:
    return _label_pattern_task(m, "PAINS", patterns or pains_patterns())


def _ring_masks(m: MoleculeGraph, rings: list[list[int]]) -> tuple[list[int], list[int]]:
    atom_mask = [0] * m.n_atoms
    bond_mask = [0] * m.n_bonds
    for ring in rings:
        for atom_index in ring:
            atom_mask[atom_index] = 1
        for bond in m.ring_bonds(ring):
            bond_mask[bond.index] = 1
    return atom_mask, bond_mask


def label_rings_count(m: MoleculeGraph,
                      threshold: int = DEFAULT_RING_COUNT_THRESHOLD) -> TaskOutcome:
    if m.rings is None:
        raise ValueError("ring perception required before labeling")
    atom_mask, bond_mask = _ring_masks(m, m.rings)
    return _outcome("rings-count", len(m.rings) > threshold, atom_mask, bond_mask)


def label_rings_max(m: MoleculeGraph,
                    size_threshold: int = DEFAULT_RING_SIZE_THRESHOLD) -> TaskOutcome:
    if m.rings is None:
        raise ValueError("ring perception required before labeling")
    large = [ring for ring in m.rings if len(ring) > size_threshold]
    masked_rings = large if large else m.rings
    atom_mask, bond_mask = _ring_masks(m, masked_rings)
    return _outcome("rings-max", bool(large), atom_mask, bond_mask)


def label_all(m: MoleculeGraph, molecule_id: str,
              ring_count_threshold: int = DEFAULT_RING_COUNT_THRESHOLD,
              ring_size_threshold: int = DEFAULT_RING_SIZE_THRESHOLD) -> LabeledMolecule:
    """All seven task outcomes for one sanitized, ring-perceived molecule."""
    outcomes = {
        "B": label_element_task(m, "B", frozenset({"B"})),
        "P": label_element_task(m, "P", frozenset({"P"})),
        "X": label_element_task(m, "X", HALOGENS),
        "indole": label_indole(m),
        "PAINS": label_pains(m),
        "rings-count": label_rings_count(m, ring_count_threshold),
        "rings-max": label_rings_max(m, ring_size_threshold),
    }
    return LabeledMolecule(
        id=molecule_id,
        smiles=m.source_smiles,
        n_atoms=m.n_atoms,
        bond_pairs=[(b.a1, b.a2) for b in m.bonds],
        outcomes=outcomes,
        graph=m,
    )
