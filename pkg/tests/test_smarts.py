import pytest

from bxaic.chem import prepare_molecule
from bxaic.matching import find_matches
from bxaic.smarts import (
    AnyAtom,
    BondConstraint,
    ChargeIs,
    DegreeIs,
    ElementIs,
    HCountIs,
    Not,
    Or,
    PatternParseError,
    RingMembership,
    UnsupportedConstructError,
    parse_pattern,
)


def test_halogen_disjunction():
    p = parse_pattern("[F,Cl,Br,I]")
    assert p.n_atoms == 1
    expr = p.atoms[0].expr
    assert isinstance(expr, Or)
    assert {part.element for part in expr.parts} == {"F", "Cl", "Br", "I"}


def test_indole_pattern_shape():
    p = parse_pattern("c1ccc2c(c1)cc[nH]2")
    assert p.n_atoms == 9
    assert len(p.bonds) == 10
    nh = p.atoms[8].expr
    assert any(isinstance(part, HCountIs) for part in nh.parts)
    assert any(isinstance(part, ElementIs) and part.element == "N" for part in nh.parts)


def test_aromatic_vs_aliphatic_element():
    aromatic = parse_pattern("c").atoms[0].expr
    aliphatic = parse_pattern("C").atoms[0].expr
    assert aromatic == ElementIs("C", aromatic=True)
    assert aliphatic == ElementIs("C", aromatic=False)


def test_atomic_number_primitive_ignores_aromaticity():
    expr = parse_pattern("[#6]").atoms[0].expr
    assert expr == ElementIs("C", aromatic=None)
    benzene = prepare_molecule("c1ccccc1")
    hexane = prepare_molecule("CCCCCC")
    p = parse_pattern("[#6]")
    assert len(find_matches(p, benzene)) == 6
    assert len(find_matches(p, hexane)) == 6


def test_wildcards():
    assert isinstance(parse_pattern("*").atoms[0].expr, AnyAtom)
    assert parse_pattern("a").atoms[0].expr.matches is not None
    p = parse_pattern("[!C]")
    assert isinstance(p.atoms[0].expr, Not)


def test_logical_precedence_semicolon_binds_weakest():
    # (aromatic-any OR N) AND H1
    p = parse_pattern("[a,N;H1]")
    pyrrole = prepare_molecule("c1cc[nH]c1")
    hits = find_matches(p, pyrrole)
    # only ring atoms with exactly one hydrogen match: all five
    assert len(hits) == 5
    methane = prepare_molecule("C")
    assert find_matches(p, methane) == []


def test_charge_primitives():
    assert parse_pattern("[+]").atoms[0].expr == ChargeIs(1)
    assert parse_pattern("[++]").atoms[0].expr == ChargeIs(2)
    assert parse_pattern("[-2]").atoms[0].expr == ChargeIs(-2)
    ammonium = prepare_molecule("C[N+](C)(C)C")
    assert len(find_matches(parse_pattern("[N+]"), ammonium)) == 1


def test_ring_membership_and_degree():
    assert parse_pattern("[R]").atoms[0].expr == RingMembership(None)
    assert parse_pattern("[R0]").atoms[0].expr == RingMembership(0)
    assert parse_pattern("[R2]").atoms[0].expr == RingMembership(2)
    assert parse_pattern("[D3]").atoms[0].expr == DegreeIs(3)
    toluene = prepare_molecule("Cc1ccccc1")
    ring_carbons = find_matches(parse_pattern("[C,c;R]"), toluene)
    assert len(ring_carbons) == 6
    fused = prepare_molecule("c1ccc2ccccc2c1")
    junctions = find_matches(parse_pattern("[R2]"), fused)
    assert {m.atom_map[0] for m in junctions} == {3, 8}


def test_bond_expressions():
    p = parse_pattern("C~C")
    assert p.bonds[0].constraint == BondConstraint(kind="any")
    p = parse_pattern("C@C")
    assert p.bonds[0].constraint == BondConstraint(kind="default", ring=True)
    p = parse_pattern("C!@C")
    assert p.bonds[0].constraint == BondConstraint(kind="default", ring=False)
    p = parse_pattern("C-&@C")
    assert p.bonds[0].constraint == BondConstraint(kind="single", ring=True)


def test_default_bond_is_single_or_aromatic():
    p = parse_pattern("CC")
    constraint = p.bonds[0].constraint
    assert constraint.kind == "default"
    biphenyl = prepare_molecule("c1ccccc1-c1ccccc1")
    # c-c crosses the single linker as well as aromatic ring bonds
    assert len(find_matches(parse_pattern("cc"), biphenyl)) == 13


@pytest.mark.parametrize(
    "text,construct",
    [
        ("$([#6])", "recursive"),
        ("[$(CC)]", "recursive"),
        ("C.C", "component"),
        ("[C@H]", "chirality"),
        ("[13C]", "isotope"),
        ("[X2]", "connectivity"),
        ("[v4]", "valence"),
        ("[r5]", "ring size"),
        ("C/C=C/C", "stereo"),
        ("[C,N]=,#[C]", "disjunction"),
    ],
)
def test_unsupported_constructs_are_named(text, construct):
    with pytest.raises(UnsupportedConstructError) as excinfo:
        parse_pattern(text)
    assert construct.lower() in str(excinfo.value).lower()


@pytest.mark.parametrize(
    "text",
    ["", "C(C", "C1CC", "[C", "[]", "C=#C", "(C)C", "[Zz]", "C%1C"],
)
def test_malformed_patterns_rejected(text):
    with pytest.raises(PatternParseError):
        parse_pattern(text)


def test_disconnected_pattern_rejected():
    # '.' raises as unsupported before connectivity is even checked
    with pytest.raises(UnsupportedConstructError):
        parse_pattern("C.C")
    # the connectivity net still catches programmatically built query graphs
    from bxaic.smarts import Pattern, PatternAtom, _check_connected

    orphaned = Pattern(
        atoms=[
            PatternAtom(expr=AnyAtom(), source="*", index=0),
            PatternAtom(expr=AnyAtom(), source="*", index=1),
        ],
        bonds=[],
        source="<built>",
    )
    with pytest.raises(PatternParseError):
        _check_connected(orphaned)


def test_hydrogen_count_uses_implied_hydrogens():
    p = parse_pattern("[CH3]")
    ethane = prepare_molecule("CC")
    assert len(find_matches(p, ethane)) == 2
    isobutane = prepare_molecule("CC(C)C")
    assert len(find_matches(p, isobutane)) == 3
    assert len(find_matches(parse_pattern("[CH1]"), isobutane)) == 1
