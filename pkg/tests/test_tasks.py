import pytest

from bxaic.chem import HALOGENS, prepare_molecule
from bxaic.matching import find_matches
from bxaic.smarts import parse_pattern
from bxaic.tasks import (
    EDGE_TASKS,
    TASK_IDS,
    label_all,
    label_element_task,
    label_indole,
    label_pains,
    label_rings_count,
    label_rings_max,
    load_patterns,
    pains_patterns,
)


def mol(text):
    return prepare_molecule(text)


# --- element tasks --------------------------------------------------------

def test_halogen_positive():
    outcome = label_element_task(mol("CCF"), "X", HALOGENS)
    assert outcome.label
    assert outcome.atom_mask == (0, 0, 1)
    assert outcome.bond_mask is None
    assert outcome.explanation_kind == "subgraph"


def test_boron_negative_is_null():
    outcome = label_element_task(mol("CCO"), "B", frozenset({"B"}))
    assert not outcome.label
    assert outcome.explanation_kind == "null"
    assert not any(outcome.atom_mask)


def test_element_masks_count_every_occurrence():
    outcome = label_element_task(mol("FC(F)(F)c1ccc(Cl)cc1"), "X", HALOGENS)
    assert sum(outcome.atom_mask) == 4


# --- indole ----------------------------------------------------------------

def test_indole_itself_fully_masked():
    outcome = label_indole(mol("c1ccc2c(c1)cc[nH]2"))
    assert outcome.label
    assert sum(outcome.atom_mask) == 9
    assert outcome.bond_mask is not None and sum(outcome.bond_mask) == 10


def test_benzene_is_not_indole():
    outcome = label_indole(mol("c1ccccc1"))
    assert not outcome.label
    assert outcome.explanation_kind == "null"
    assert outcome.bond_mask == (0,) * 6


def test_kekulized_tryptophan_masks_only_indole_atoms():
    m = mol("C1=CC2=C(C=C1)C(=CN2)CC(C(=O)O)N")
    outcome = label_indole(m)
    assert outcome.label
    masked = {i for i, bit in enumerate(outcome.atom_mask) if bit}
    oracle = parse_pattern("c1ccc2c(c1)C=C[NH]2")
    expected = set().union(*(mm.atom_indices for mm in find_matches(oracle, m)))
    assert masked == expected
    assert len(masked) == 9


def test_n_substituted_indole_is_negative():
    outcome = label_indole(mol("Cn1ccc2ccccc21"))
    assert not outcome.label


# --- PAINS -------------------------------------------------------------------

def test_pains_negative_molecule():
    outcome = label_pains(mol("CCO"))
    assert not outcome.label
    assert outcome.explanation_kind == "null"


def test_pains_single_pattern_mask():
    m = mol("O=C1C=CC(=O)C=C1")  # para-quinone
    patterns = pains_patterns()
    outcome = label_pains(m, patterns)
    assert outcome.label
    quinone = dict(patterns)["quinone_para"]
    matches = find_matches(quinone, m)
    expected = set().union(*(mm.atom_indices for mm in matches))
    assert {i for i, bit in enumerate(outcome.atom_mask) if bit} == expected


def test_pains_union_of_overlapping_patterns():
    patterns = load_patterns("a\tOC=O\nb\tC(=O)O\n")
    m = mol("OC(=O)C")
    outcome = label_pains(m, tuple(patterns))
    assert outcome.label
    assert outcome.atom_mask == (1, 1, 1, 0)


def test_pains_asset_loads_thirty_patterns():
    assert len(pains_patterns()) == 30


# --- ring tasks ----------------------------------------------------------------

def test_acyclic_ring_tasks_null():
    for fn in (label_rings_count, label_rings_max):
        outcome = fn(mol("CCCC"))
        assert not outcome.label
        assert outcome.explanation_kind == "null"


def test_naphthalene_rings_count_negative_but_subgraph():
    outcome = label_rings_count(mol("c1ccc2ccccc2c1"))
    assert not outcome.label  # 2 rings, threshold 4
    assert outcome.explanation_kind == "subgraph"
    assert sum(outcome.atom_mask) == 10
    assert sum(outcome.bond_mask) == 11


def test_five_fused_rings_is_positive():
    pentacyclic = "C1CC2CCC3C(C2C1)CCC4C3CCC5C4CCC5"
    outcome = label_rings_count(mol(pentacyclic))
    assert outcome.label


def test_cycloheptane_rings_max_positive():
    outcome = label_rings_max(mol("C1CCCCCC1"))
    assert outcome.label
    assert outcome.atom_mask == (1,) * 7
    assert outcome.bond_mask == (1,) * 7


def test_benzene_rings_max_negative_subgraph():
    outcome = label_rings_max(mol("c1ccccc1"))
    assert not outcome.label
    assert outcome.explanation_kind == "subgraph"
    assert outcome.atom_mask == (1,) * 6


def test_rings_max_positive_masks_only_large_rings():
    # cycloheptane fused story: benzene + azepane-like ring via two shared atoms
    m = mol("c1ccc2c(c1)CCCCC2")
    outcome = label_rings_max(m)
    assert outcome.label
    # only the 7-ring atoms: 5 aliphatic + the two shared aromatic carbons
    assert sum(outcome.atom_mask) == 7
    rings_outcome = label_rings_count(m)
    assert sum(rings_outcome.atom_mask) == m.n_atoms


def test_ring_mask_excludes_acyclic_appendages():
    outcome = label_rings_count(mol("CCCc1ccccc1"))
    assert outcome.atom_mask == (0, 0, 0, 1, 1, 1, 1, 1, 1)


def test_non_ring_bond_between_ring_atoms_not_masked():
    # biphenyl: the linker joins two ring atoms but is no ring bond
    m = mol("c1ccccc1-c1ccccc1")
    outcome = label_rings_count(m)
    linker = m.bond_between(5, 6)
    assert outcome.bond_mask[linker.index] == 0
    assert sum(outcome.bond_mask) == 12


# --- label_all -----------------------------------------------------------------

def test_label_all_has_all_seven_outcomes():
    labeled = label_all(mol("c1ccc2c(c1)cc[nH]2"), "indole-1")
    assert set(labeled.outcomes) == set(TASK_IDS)
    assert labeled.outcomes["indole"].label
    assert labeled.outcomes["rings-count"].explanation_kind == "subgraph"
    assert len(labeled.bond_pairs) == 10


def test_label_all_single_boron():
    labeled = label_all(mol("B"), "b-1")
    assert labeled.outcomes["B"].label
    for task in TASK_IDS:
        if task != "B":
            assert not labeled.outcomes[task].label
            assert labeled.outcomes[task].explanation_kind == "null"


def test_bond_mask_presence_matches_task_kind():
    labeled = label_all(mol("c1ccc2c(c1)cc[nH]2CCl"), "m1")
    for task in TASK_IDS:
        outcome = labeled.outcomes[task]
        if task in EDGE_TASKS:
            assert outcome.bond_mask is not None
        else:
            assert outcome.bond_mask is None


def test_null_kind_iff_empty_masks_everywhere():
    for text in ["B", "CCO", "c1ccccc1", "C1CCCCCC1", "CCCl",
                 "c1ccc2c(c1)cc[nH]2", "O=C1C=CC(=O)C=C1"]:
        labeled = label_all(mol(text), "t")
        for outcome in labeled.outcomes.values():
            empty = not any(outcome.atom_mask) and not (
                outcome.bond_mask and any(outcome.bond_mask)
            )
            assert (outcome.explanation_kind == "null") == empty


def test_pattern_mask_bonds_have_masked_endpoints():
    labeled = label_all(mol("Cc1ccc2c(c1)cc[nH]2"), "t")
    for task in ("indole", "PAINS"):
        outcome = labeled.outcomes[task]
        if outcome.bond_mask is None:
            continue
        for bond, bit in zip(labeled.graph.bonds, outcome.bond_mask):
            if bit:
                assert outcome.atom_mask[bond.a1] == 1
                assert outcome.atom_mask[bond.a2] == 1
