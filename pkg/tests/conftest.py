"""Shared generators for randomized tests.

Molecules and patterns are built directly as graphs (not via text) so the
randomized properties do not inherit any parser bias.
"""

from __future__ import annotations

import random

from bxaic.chem.graph import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, MoleculeGraph
from bxaic.chem.rings import perceive_rings
from bxaic.smarts import (
    AliphaticAny,
    AnyAtom,
    AromaticAny,
    BondConstraint,
    ChargeIs,
    DegreeIs,
    ElementIs,
    HCountIs,
    Not,
    Or,
    Pattern,
    PatternAtom,
    PatternBond,
    RingMembership,
)

ELEMENT_POOL = ["C", "C", "C", "N", "O", "S", "F", "Cl", "P", "B"]
ORDER_POOL = [SINGLE, SINGLE, SINGLE, DOUBLE, AROMATIC, TRIPLE]


def random_molecule(rng: random.Random, max_atoms: int = 8,
                    extra_edge_prob: float = 0.5) -> MoleculeGraph:
    """Random connected labeled graph with perceived rings."""
    n = rng.randint(1, max_atoms)
    atoms = [
        Atom(
            element=rng.choice(ELEMENT_POOL),
            index=i,
            formal_charge=rng.choice([0, 0, 0, 0, 1, -1]),
            aromatic=rng.random() < 0.3,
        )
        for i in range(n)
    ]
    edges: set[tuple[int, int]] = set()
    bonds: list[Bond] = []

    def add_edge(u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        if u == v or key in edges:
            return
        edges.add(key)
        bonds.append(Bond(a1=u, a2=v, order=rng.choice(ORDER_POOL), index=len(bonds)))

    for i in range(1, n):
        add_edge(i, rng.randrange(i))
    extra = 0
    while n >= 3 and extra < 3 and rng.random() < extra_edge_prob:
        add_edge(rng.randrange(n), rng.randrange(n))
        extra += 1
    molecule = MoleculeGraph(atoms=atoms, bonds=bonds, source_smiles="")
    return perceive_rings(molecule)


def permuted_copy(m: MoleculeGraph, perm: list[int]) -> MoleculeGraph:
    """Relabel atom indices by perm (old index -> new index)."""
    atoms = [None] * m.n_atoms
    for atom in m.atoms:
        new_index = perm[atom.index]
        atoms[new_index] = Atom(
            element=atom.element, index=new_index,
            formal_charge=atom.formal_charge, aromatic=atom.aromatic,
            explicit_h=atom.explicit_h,
        )
    bonds = [
        Bond(a1=perm[b.a1], a2=perm[b.a2], order=b.order, index=i)
        for i, b in enumerate(m.bonds)
    ]
    return perceive_rings(MoleculeGraph(atoms=atoms, bonds=bonds, source_smiles=""))


def _random_atom_expr(rng: random.Random):
    choice = rng.randrange(10)
    if choice < 4:
        return ElementIs(rng.choice(ELEMENT_POOL), aromatic=rng.choice([True, False, None]))
    if choice == 4:
        return Or((ElementIs(rng.choice(ELEMENT_POOL), aromatic=None),
                   ElementIs(rng.choice(ELEMENT_POOL), aromatic=None)))
    if choice == 5:
        return AnyAtom()
    if choice == 6:
        return rng.choice([AromaticAny(), AliphaticAny()])
    if choice == 7:
        return Not(ElementIs(rng.choice(ELEMENT_POOL), aromatic=None))
    if choice == 8:
        return rng.choice([RingMembership(None), RingMembership(0),
                           DegreeIs(rng.randint(1, 3)), ChargeIs(rng.choice([0, 1, -1]))])
    return HCountIs(rng.randint(0, 3))


def random_pattern(rng: random.Random, max_atoms: int = 4) -> Pattern:
    """Random connected query graph over the supported constraint vocabulary."""
    n = rng.randint(1, max_atoms)
    atoms = [
        PatternAtom(expr=_random_atom_expr(rng), source=f"q{i}", index=i)
        for i in range(n)
    ]
    bonds: list[PatternBond] = []
    edges: set[tuple[int, int]] = set()

    def constraint() -> BondConstraint:
        kind = rng.choice(["default", "default", SINGLE, DOUBLE, AROMATIC, "any"])
        ring = rng.choice([None, None, None, True, False])
        return BondConstraint(kind=kind, ring=ring)

    for i in range(1, n):
        j = rng.randrange(i)
        edges.add((j, i))
        bonds.append(PatternBond(a1=j, a2=i, constraint=constraint(), index=len(bonds)))
    if n >= 3 and rng.random() < 0.3:
        u, v = rng.sample(range(n), 2)
        key = (u, v) if u < v else (v, u)
        if key not in edges:
            bonds.append(PatternBond(a1=u, a2=v, constraint=constraint(), index=len(bonds)))
    return Pattern(atoms=atoms, bonds=bonds, source="<random>")
