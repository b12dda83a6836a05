"""Molecule preparation: fragment stripping and aromatic-ring normalization."""

from __future__ import annotations

from dataclasses import replace

from .graph import AROMATIC, DOUBLE, SINGLE, Atom, Bond, MoleculeGraph
from .rings import perceive_rings
from .smiles import parse_smiles


def strip_to_largest_fragment(m: MoleculeGraph) -> MoleculeGraph:
    """Keep only the connected component with the most atoms.

    Ties go to the fragment appearing first in parse order. Atom and bond
    indices are renumbered but keep their original relative order. Solvents
    and counterions written as extra dot-separated fragments disappear here.
    """
    components = m.connected_components()
    if len(components) <= 1:
        return m
    best = max(components, key=lambda comp: (len(comp), -comp[0]))
    keep = set(best)
    remap = {old: new for new, old in enumerate(best)}
    atoms = [
        replace(m.atoms[old], index=new) for old, new in sorted(remap.items())
    ]
    bonds = []
    for bond in m.bonds:
        if bond.a1 in keep and bond.a2 in keep:
            bonds.append(
                Bond(a1=remap[bond.a1], a2=remap[bond.a2], order=bond.order,
                     index=len(bonds))
            )
    return MoleculeGraph(atoms=atoms, bonds=bonds, rings=None,
                         source_smiles=m.source_smiles)


def flag_kekulized_aromatic_rings(m: MoleculeGraph) -> MoleculeGraph:
    """Mark six-membered C/N rings with alternating single/double bonds aromatic.

    Corpora that ship kekulized SMILES would otherwise never match aromatic
    query atoms. Requires perceived rings; five-membered heteroaromatics are
    deliberately left alone (handled by kekulized task patterns instead).
    """
    if m.rings is None:
        raise ValueError("ring perception must run before aromatic flagging")
    flip_atoms: set[int] = set()
    flip_bonds: set[int] = set()
    for ring in m.rings:
        if len(ring) != 6:
            continue
        if not all(m.atoms[i].element in ("C", "N") for i in ring):
            continue
        orders = [b.order for b in m.ring_bonds(ring)]
        if any(o not in (SINGLE, DOUBLE) for o in orders):
            continue
        if all(orders[i] != orders[(i + 1) % 6] for i in range(6)):
            flip_atoms.update(ring)
            flip_bonds.update(b.index for b in m.ring_bonds(ring))
    if not flip_atoms:
        return m
    atoms = [
        replace(a, aromatic=True) if a.index in flip_atoms else a for a in m.atoms
    ]
    bonds = [
        replace(b, order=AROMATIC) if b.index in flip_bonds else b for b in m.bonds
    ]
    return MoleculeGraph(atoms=atoms, bonds=bonds, rings=m.rings,
                         source_smiles=m.source_smiles)


def prepare_molecule(smiles: str) -> MoleculeGraph:
    """Full preparation pipeline: parse, strip, perceive rings, normalize."""
    m = parse_smiles(smiles)
    m = strip_to_largest_fragment(m)
    m = perceive_rings(m)
    return flag_kekulized_aromatic_rings(m)
