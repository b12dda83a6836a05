"""Subgraph matching of query patterns against molecules.

Backtracking search in the VF2 spirit: pattern atoms are visited
most-constrained-first along the pattern's connectivity, candidates are drawn
from the molecule neighborhoods of already-mapped atoms, and every pattern
bond must map onto an existing molecule bond satisfying its constraint.
Matches that cover the same molecule atom set and bond set are reported once,
since downstream ground-truth masks are unions and automorphic re-mappings
add nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chem.graph import MoleculeGraph
from .smarts import MatchContext, Pattern


@dataclass(frozen=True)
class Match:
    """One embedding: position p in atom_map holds the molecule atom for pattern atom p."""

    atom_map: tuple[int, ...]
    bond_indices: frozenset[int]

    @property
    def atom_indices(self) -> frozenset[int]:
        return frozenset(self.atom_map)


def _search_order(pattern: Pattern) -> list[int]:
    """Pattern atom visit order: selective first, then grow along adjacency."""
    adj = pattern.adjacency()
    start = max(
        range(pattern.n_atoms),
        key=lambda i: (pattern.atoms[i].selectivity, len(adj[i]), -i),
    )
    order = [start]
    placed = {start}
    while len(order) < pattern.n_atoms:
        frontier = [
            i for i in range(pattern.n_atoms)
            if i not in placed and any(nbr in placed for nbr, _ in adj[i])
        ]
        nxt = max(
            frontier,
            key=lambda i: (
                sum(nbr in placed for nbr, _ in adj[i]),
                pattern.atoms[i].selectivity,
                -i,
            ),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


def find_matches(pattern: Pattern, mol: MoleculeGraph) -> list[Match]:
    """All distinct matches of the pattern, deduplicated by (atom set, bond set)."""
    ctx = MatchContext.for_molecule(mol)
    if pattern.n_atoms > mol.n_atoms:
        return []

    pattern_adj = pattern.adjacency()
    mol_adj = mol.adjacency()
    order = _search_order(pattern)
    position_of = {atom: pos for pos, atom in enumerate(order)}

    # For each search position: pattern bonds into already-placed atoms.
    back_edges: list[list[tuple[int, int]]] = []  # (earlier pattern atom, pattern bond idx)
    for pos, p_atom in enumerate(order):
        edges = [
            (nbr, bond_index)
            for nbr, bond_index in pattern_adj[p_atom]
            if position_of[nbr] < pos
        ]
        back_edges.append(edges)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    seen_keys: set[tuple[frozenset[int], frozenset[int]]] = set()
    results: list[Match] = []

    def candidates(pos: int) -> list[int]:
        if not back_edges[pos]:
            return list(range(mol.n_atoms))
        best: set[int] | None = None
        for p_nbr, p_bond in back_edges[pos]:
            constraint = pattern.bonds[p_bond].constraint
            anchor = mapping[p_nbr]
            reachable = {
                m_nbr
                for m_nbr, m_bond in mol_adj[anchor]
                if constraint.matches(ctx, m_bond)
            }
            best = reachable if best is None else (best & reachable)
            if not best:
                return []
        return sorted(best)

    def extend(pos: int) -> None:
        if pos == len(order):
            atoms = frozenset(mapping.values())
            bonds = frozenset(
                mol.bond_between(mapping[b.a1], mapping[b.a2]).index
                for b in pattern.bonds
            )
            key = (atoms, bonds)
            if key not in seen_keys:
                seen_keys.add(key)
                results.append(
                    Match(
                        atom_map=tuple(mapping[i] for i in range(pattern.n_atoms)),
                        bond_indices=bonds,
                    )
                )
            return
        p_atom = order[pos]
        query = pattern.atoms[p_atom]
        for m_atom in candidates(pos):
            if m_atom in used or not query.matches(ctx, m_atom):
                continue
            ok = True
            for p_nbr, p_bond in back_edges[pos]:
                m_bond = mol.bond_between(m_atom, mapping[p_nbr])
                if m_bond is None or not pattern.bonds[p_bond].constraint.matches(
                    ctx, m_bond.index
                ):
                    ok = False
                    break
            if not ok:
                continue
            mapping[p_atom] = m_atom
            used.add(m_atom)
            extend(pos + 1)
            del mapping[p_atom]
            used.discard(m_atom)

    extend(0)
    results.sort(key=lambda m: (sorted(m.atom_indices), sorted(m.bond_indices)))
    return results


def has_match(pattern: Pattern, mol: MoleculeGraph) -> bool:
    return bool(find_matches(pattern, mol))


def match_mask(matches: list[Match], mol: MoleculeGraph) -> tuple[list[int], list[int]]:
    """Union of all matches as 0/1 masks over the molecule's atoms and bonds."""
    atom_mask = [0] * mol.n_atoms
    bond_mask = [0] * mol.n_bonds
    for match in matches:
        for atom_index in match.atom_map:
            atom_mask[atom_index] = 1
        for bond_index in match.bond_indices:
            bond_mask[bond_index] = 1
    return atom_mask, bond_mask
