import pytest

from bxaic.chem import morgan_fingerprint, prepare_molecule, tanimoto
from bxaic.chem.fingerprint import Fingerprint


def fp(text, radius=2, width=2048):
    return morgan_fingerprint(prepare_molecule(text), radius=radius, width=width)


def test_deterministic():
    assert fp("CC(=O)Oc1ccccc1C(=O)O") == fp("CC(=O)Oc1ccccc1C(=O)O")


def test_distinct_atoms_at_radius_zero():
    a = fp("C", radius=0)
    b = fp("N", radius=0)
    assert a.bits.isdisjoint(b.bits)
    assert tanimoto(a, b) == 0.0


def test_self_similarity_is_one():
    indole = fp("c1ccc2c(c1)cc[nH]2")
    assert tanimoto(indole, indole) == 1.0


def test_isomorphic_molecules_share_fingerprint():
    assert fp("OCC") == fp("CCO")


def test_similar_molecules_score_between_zero_and_one():
    value = tanimoto(fp("CCO"), fp("CCCO"))
    assert 0.0 < value < 1.0


def test_radius_grows_bit_count():
    small = fp("CC(=O)Oc1ccccc1C(=O)O", radius=0)
    large = fp("CC(=O)Oc1ccccc1C(=O)O", radius=2)
    assert small.bits <= large.bits
    assert len(large.bits) > len(small.bits)


def test_tanimoto_set_arithmetic():
    a = Fingerprint(bits=frozenset({1, 2, 3}), width=2048)
    b = Fingerprint(bits=frozenset({2, 3, 4}), width=2048)
    assert tanimoto(a, b) == pytest.approx(0.5)
    assert tanimoto(a, a) == 1.0
    disjoint = Fingerprint(bits=frozenset({9, 10}), width=2048)
    assert tanimoto(a, disjoint) == 0.0


def test_both_empty_is_one():
    empty = Fingerprint(bits=frozenset(), width=64)
    assert tanimoto(empty, empty) == 1.0


def test_width_mismatch_rejected():
    a = Fingerprint(bits=frozenset({1}), width=1024)
    b = Fingerprint(bits=frozenset({1}), width=2048)
    with pytest.raises(ValueError):
        tanimoto(a, b)
