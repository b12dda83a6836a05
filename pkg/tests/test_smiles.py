import pytest

from bxaic.chem import (
    DanglingBondError,
    SmilesParseError,
    UnbalancedDelimiterError,
    UnknownElementError,
    UnmatchedRingClosureError,
    canonical_hash,
    parse_smiles,
    prepare_molecule,
    strip_to_largest_fragment,
    write_smiles,
)
from bxaic.chem.graph import AROMATIC, DOUBLE, SINGLE, TRIPLE


def test_single_atom():
    m = parse_smiles("B")
    assert m.n_atoms == 1
    assert m.n_bonds == 0
    assert m.atoms[0].element == "B"
    assert not m.atoms[0].aromatic


def test_benzene_aromatic_ring():
    m = parse_smiles("c1ccccc1")
    assert m.n_atoms == 6
    assert m.n_bonds == 6
    assert all(a.aromatic and a.element == "C" for a in m.atoms)
    assert all(b.order == AROMATIC for b in m.bonds)
    # circuit rank oracle |E| - |V| + C
    assert m.circuit_rank() == 6 - 6 + 1


def test_parse_order_is_left_to_right():
    m = parse_smiles("NCO")
    assert [a.element for a in m.atoms] == ["N", "C", "O"]
    assert [(b.a1, b.a2) for b in m.bonds] == [(0, 1), (1, 2)]


def test_bond_symbols():
    m = parse_smiles("C=C-C#CC")
    assert [b.order for b in m.bonds] == [DOUBLE, SINGLE, TRIPLE, SINGLE]


def test_branching():
    m = parse_smiles("CC(C)(C)O")
    assert m.degree(1) == 4
    assert m.atoms[4].element == "O"


def test_ring_closure_digit_reuse_and_percent():
    m1 = parse_smiles("C1CC1C1CC1")
    assert m1.circuit_rank() == 2
    m2 = parse_smiles("C%11CC%11")
    assert m2.circuit_rank() == 1


def test_bracket_atom_charge_and_h():
    m = parse_smiles("[NH4+]")
    atom = m.atoms[0]
    assert atom.element == "N"
    assert atom.formal_charge == 1
    assert atom.explicit_h == 4
    m2 = parse_smiles("[O-]C")
    assert m2.atoms[0].formal_charge == -1
    assert m2.atoms[0].explicit_h == 0
    m3 = parse_smiles("[Fe+2]")
    assert m3.atoms[0].formal_charge == 2


def test_isotope_and_stereo_are_discarded():
    m = parse_smiles("[13CH4]")
    assert m.atoms[0].element == "C"
    assert m.atoms[0].explicit_h == 4
    m2 = parse_smiles("F/C=C/F")
    assert [b.order for b in m2.bonds] == [SINGLE, DOUBLE, SINGLE]
    m3 = parse_smiles("N[C@@H](C)C(=O)O")
    assert m3.n_atoms == 6


def test_aromatic_bracket_atom():
    m = parse_smiles("c1cc[nH]c1")
    nitrogen = m.atoms[3]
    assert nitrogen.element == "N"
    assert nitrogen.aromatic
    assert nitrogen.explicit_h == 1


def test_two_letter_elements_outside_brackets():
    m = parse_smiles("ClCBr")
    assert [a.element for a in m.atoms] == ["Cl", "C", "Br"]


def test_dot_separated_fragments():
    m = parse_smiles("CCO.Cl")
    assert m.n_atoms == 4
    assert len(m.connected_components()) == 2


def test_default_bond_between_aromatic_atoms_is_aromatic():
    m = parse_smiles("cc")
    assert m.bonds[0].order == AROMATIC
    biphenyl = parse_smiles("c1ccccc1-c1ccccc1")
    linker = biphenyl.bond_between(5, 6)
    assert linker is not None and linker.order == SINGLE


@pytest.mark.parametrize(
    "text,exc",
    [
        ("C1CC", UnmatchedRingClosureError),
        ("C1CC2C1", UnmatchedRingClosureError),
        ("C(C", UnbalancedDelimiterError),
        ("CC)", UnbalancedDelimiterError),
        ("[CH4", UnbalancedDelimiterError),
        ("CQ", UnknownElementError),
        ("q", UnknownElementError),
        ("[Xx]", UnknownElementError),
        ("C=", DanglingBondError),
        ("=CC", DanglingBondError),
        ("C=.C", DanglingBondError),
        ("1CC1", DanglingBondError),
    ],
)
def test_error_categories(text, exc):
    with pytest.raises(exc):
        parse_smiles(text)
    assert issubclass(exc, SmilesParseError)


def test_self_and_duplicate_ring_bonds_rejected():
    with pytest.raises(SmilesParseError):
        parse_smiles("C11")
    with pytest.raises(SmilesParseError):
        parse_smiles("C12CC12")


def test_conflicting_ring_closure_bond_symbols():
    with pytest.raises(SmilesParseError):
        parse_smiles("C=1CCCCC#1")
    m = parse_smiles("C=1CCCCC=1")
    closure = m.bond_between(0, 5)
    assert closure is not None and closure.order == DOUBLE


def test_empty_input_rejected():
    with pytest.raises(SmilesParseError):
        parse_smiles("")


# --- fragment stripping -------------------------------------------------

def test_strip_keeps_largest_component():
    m = strip_to_largest_fragment(parse_smiles("CCO.Cl"))
    assert m.n_atoms == 3
    assert [a.element for a in m.atoms] == ["C", "C", "O"]


def test_strip_tie_keeps_first():
    m = strip_to_largest_fragment(parse_smiles("CN.CO"))
    assert [a.element for a in m.atoms] == ["C", "N"]


def test_strip_salt_counterion():
    m = strip_to_largest_fragment(parse_smiles("c1ccccc1.[Na+]"))
    assert m.n_atoms == 6
    assert all(a.aromatic for a in m.atoms)


def test_strip_is_idempotent_and_never_grows():
    for text in ["CCO.Cl", "C", "CC.CC.CCC", "c1ccccc1.[Na+].[Cl-]"]:
        parsed = parse_smiles(text)
        once = strip_to_largest_fragment(parsed)
        twice = strip_to_largest_fragment(once)
        assert once.n_atoms <= parsed.n_atoms
        assert twice.n_atoms == once.n_atoms
        assert [a.element for a in twice.atoms] == [a.element for a in once.atoms]


def test_strip_renumbers_bonds_consistently():
    m = strip_to_largest_fragment(parse_smiles("O.C1=CC=CC=C1"))
    assert m.n_atoms == 6
    assert all(0 <= b.a1 < 6 and 0 <= b.a2 < 6 for b in m.bonds)
    assert [b.index for b in m.bonds] == list(range(m.n_bonds))


# --- round trip ----------------------------------------------------------

ROUND_TRIP_CORPUS = [
    "C",
    "CCO",
    "c1ccccc1",
    "C1=CC=CC=C1",
    "c1ccc2ccccc2c1",
    "C1CCCCCC1",
    "CC(C)(C)c1ccc(O)cc1",
    "[NH4+]",
    "C[N+](C)(C)C",
    "OB(O)c1ccccc1",
    "OP(=O)(O)OCC",
    "FC(F)(F)c1ccccc1Cl",
    "c1ccc2c(c1)cc[nH]2",
    "C1=CC2=C(C=C1)C(=CN2)CC(C(=O)O)N",
    "O=C1C=CC(=O)C=C1",
    "C1CC2CCC1CC2",
    "c1ccc(-c2ccccc2)cc1",
    "N#Cc1ccccc1",
]


def test_parse_write_parse_round_trip():
    for text in ROUND_TRIP_CORPUS:
        original = prepare_molecule(text)
        rewritten = write_smiles(original)
        reparsed = prepare_molecule(rewritten)
        assert canonical_hash(reparsed) == canonical_hash(original), text
        assert reparsed.n_atoms == original.n_atoms
        assert reparsed.n_bonds == original.n_bonds
