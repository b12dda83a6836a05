"""Molecular graph model.

Atoms and bonds are stored in parse order and never renumbered after
construction, because every downstream mask (task explanations, attribution
scores) is indexed positionally against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .elements import DEFAULT_VALENCES

SINGLE = "single"
DOUBLE = "double"
TRIPLE = "triple"
AROMATIC = "aromatic"

BOND_ORDER_VALUE = {SINGLE: 1.0, DOUBLE: 2.0, TRIPLE: 3.0, AROMATIC: 1.5}


@dataclass(frozen=True)
class Atom:
    element: str
    index: int
    formal_charge: int = 0
    aromatic: bool = False
    # None for organic-subset atoms (hydrogens implied by valence);
    # an explicit count for bracket atoms.
    explicit_h: int | None = None


@dataclass(frozen=True)
class Bond:
    a1: int
    a2: int
    order: str
    index: int

    @property
    def key(self) -> tuple[int, int]:
        """Canonical unordered endpoint pair."""
        return (self.a1, self.a2) if self.a1 < self.a2 else (self.a2, self.a1)

    def other(self, atom_index: int) -> int:
        return self.a2 if atom_index == self.a1 else self.a1


@dataclass
class MoleculeGraph:
    atoms: list[Atom]
    bonds: list[Bond]
    # None until ring perception runs; afterwards a list of ordered atom
    # cycles (possibly empty for acyclic molecules).
    rings: list[list[int]] | None = None
    source_smiles: str = ""
    _adjacency: list[list[tuple[int, int]]] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def n_bonds(self) -> int:
        return len(self.bonds)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-atom list of (neighbor atom index, bond index) pairs."""
        if self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in self.atoms]
            for bond in self.bonds:
                adj[bond.a1].append((bond.a2, bond.index))
                adj[bond.a2].append((bond.a1, bond.index))
            self._adjacency = adj
        return self._adjacency

    def degree(self, atom_index: int) -> int:
        return len(self.adjacency()[atom_index])

    def bond_between(self, a1: int, a2: int) -> Bond | None:
        for nbr, bond_index in self.adjacency()[a1]:
            if nbr == a2:
                return self.bonds[bond_index]
        return None

    def connected_components(self) -> list[list[int]]:
        """Components as sorted atom-index lists, ordered by first atom."""
        seen = [False] * self.n_atoms
        components: list[list[int]] = []
        adj = self.adjacency()
        for start in range(self.n_atoms):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for nbr, _ in adj[v]:
                    if not seen[nbr]:
                        seen[nbr] = True
                        stack.append(nbr)
            components.append(sorted(comp))
        return components

    def circuit_rank(self) -> int:
        return self.n_bonds - self.n_atoms + len(self.connected_components())

    def total_hydrogens(self, atom_index: int) -> int:
        """Hydrogen count: the explicit bracket count, or the valence-implied one."""
        atom = self.atoms[atom_index]
        if atom.explicit_h is not None:
            return atom.explicit_h
        order_sum = math.ceil(
            sum(BOND_ORDER_VALUE[self.bonds[b].order] for _, b in self.adjacency()[atom_index])
        )
        valences = DEFAULT_VALENCES.get(atom.element, ())
        if atom.aromatic:
            # Aromatic atoms never escalate to a higher valence state: a
            # three-connected aromatic nitrogen carries no hydrogen
            # (pyrrole-type NH must be written explicitly).
            return max(0, valences[0] - order_sum) if valences else 0
        for valence in valences:
            if valence >= order_sum:
                return valence - order_sum
        return 0

    def ring_bond_indices(self) -> frozenset[int]:
        """Bond indices that are cycle edges of at least one perceived ring."""
        if self.rings is None:
            raise ValueError("ring perception has not run on this molecule")
        indices: set[int] = set()
        for ring in self.rings:
            for bond in self.ring_bonds(ring):
                indices.add(bond.index)
        return frozenset(indices)

    def ring_bonds(self, ring: list[int]) -> list[Bond]:
        """The bonds forming one ring cycle, in cycle order."""
        bonds = []
        for pos, atom_index in enumerate(ring):
            nxt = ring[(pos + 1) % len(ring)]
            bond = self.bond_between(atom_index, nxt)
            if bond is None:
                raise ValueError(f"ring {ring} is not a cycle in the bond set")
            bonds.append(bond)
        return bonds

    def ring_counts_per_atom(self) -> list[int]:
        """Number of perceived rings each atom belongs to."""
        if self.rings is None:
            raise ValueError("ring perception has not run on this molecule")
        counts = [0] * self.n_atoms
        for ring in self.rings:
            for atom_index in ring:
                counts[atom_index] += 1
        return counts
