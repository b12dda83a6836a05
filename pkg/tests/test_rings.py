import random

import pytest

from bxaic.chem import parse_smiles, perceive_rings, prepare_molecule
from bxaic.chem.graph import AROMATIC, SINGLE
from conftest import random_molecule


def rings_of(text):
    return perceive_rings(parse_smiles(text)).rings


def test_benzene_single_ring():
    rings = rings_of("c1ccccc1")
    assert len(rings) == 1
    assert len(rings[0]) == 6


def test_acyclic_has_no_rings():
    assert rings_of("CCCC") == []
    assert rings_of("CC(C)C") == []


def test_naphthalene_two_six_rings():
    # circuit rank 11 - 10 + 1 = 2; smallest cycles are the two benzenoid rings,
    # not the 10-cycle perimeter
    rings = rings_of("c1ccc2ccccc2c1")
    assert sorted(len(r) for r in rings) == [6, 6]


def test_spiro_and_bridged_systems():
    assert sorted(len(r) for r in rings_of("C1CCC2(CC1)CCCC2")) == [5, 6]
    # bicyclo[2.2.2]octane: rank 2, two six-rings
    assert sorted(len(r) for r in rings_of("C1CC2CCC1CC2")) == [6, 6]


def test_steroid_like_scaffold_has_four_rings():
    gonane = "C1CCC2C(C1)CCC3C2CCC4C3CCC4"
    assert sorted(len(r) for r in rings_of(gonane)) == [5, 6, 6, 6]


def test_macrocycle():
    rings = rings_of("C1CCCCCCCCCCC1")
    assert len(rings) == 1
    assert len(rings[0]) == 12


def test_ring_is_a_valid_cycle():
    m = perceive_rings(parse_smiles("c1ccc2c(c1)cc[nH]2"))
    for ring in m.rings:
        bonds = m.ring_bonds(ring)
        assert len(bonds) == len(ring)
        assert len(set(ring)) == len(ring)


def test_ring_count_equals_circuit_rank_randomized():
    rng = random.Random(1234)
    for _ in range(300):
        m = random_molecule(rng, max_atoms=10)
        assert len(m.rings) == m.circuit_rank()


def test_ring_perception_deterministic():
    text = "c1ccc2c(c1)C3CC(C3)c4ccccc24"
    first = rings_of(text)
    second = rings_of(text)
    assert first == second


def test_perceive_requires_no_mutation():
    m = parse_smiles("c1ccccc1")
    assert m.rings is None
    perceived = perceive_rings(m)
    assert m.rings is None
    assert perceived.rings is not None


# --- kekulized-ring aromatic flagging -------------------------------------

def test_kekulized_benzene_flagged_aromatic():
    m = prepare_molecule("C1=CC=CC=C1")
    assert all(a.aromatic for a in m.atoms)
    assert all(b.order == AROMATIC for b in m.bonds)


def test_kekulized_pyridine_flagged():
    m = prepare_molecule("C1=CC=NC=C1")
    assert all(a.aromatic for a in m.atoms)


def test_cyclohexane_not_flagged():
    m = prepare_molecule("C1CCCCC1")
    assert not any(a.aromatic for a in m.atoms)
    assert all(b.order == SINGLE for b in m.bonds)


def test_cyclohexadiene_not_flagged():
    # only two double bonds: not alternating all the way around
    m = prepare_molecule("C1=CC=CCC1")
    assert not any(a.aromatic for a in m.atoms)


def test_kekulized_ring_with_oxygen_not_flagged():
    # pyranone-style ring contains O: outside the C/N-only rule
    m = prepare_molecule("O1C=CC=CC1")
    assert not any(a.aromatic for a in m.atoms)


def test_kekulized_five_ring_left_alone():
    # kekulized pyrrole stays aliphatic by design
    m = prepare_molecule("C1=CC=CN1")
    assert not any(a.aromatic for a in m.atoms)
