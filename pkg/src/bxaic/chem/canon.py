"""Structural hashing for duplicate detection.

Weisfeiler-Lehman style label refinement over (element, charge, aromatic)
atom labels and bond orders, iterated for at least as many rounds as there
are atoms. Isomorphic graphs hash equal; the (rare) converse failure is
bounded by :func:`is_isomorphic`, which corpus filtering runs on equal-hash
pairs before declaring a duplicate.
"""

from __future__ import annotations

from collections import Counter

from .elements import ATOMIC_NUMBER
from .graph import MoleculeGraph

_ORDER_CODE = {"single": 1, "double": 2, "triple": 3, "aromatic": 4}
_MASK = (1 << 64) - 1


def _mix(h: int, value: int) -> int:
    """splitmix64-style combine; fixed algorithm so hashes are portable."""
    h = (h + 0x9E3779B97F4A7C15 + value) & _MASK
    h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & _MASK
    return h ^ (h >> 31)


def _initial_labels(m: MoleculeGraph) -> list[int]:
    labels = []
    for atom in m.atoms:
        h = _mix(0x243F6A8885A308D3, ATOMIC_NUMBER[atom.element])
        h = _mix(h, atom.formal_charge & 0xFFFF)
        h = _mix(h, 1 if atom.aromatic else 0)
        labels.append(h)
    return labels


def _refine(m: MoleculeGraph, labels: list[int], rounds: int) -> list[int]:
    adj = m.adjacency()
    for _ in range(rounds):
        nxt = []
        for i in range(m.n_atoms):
            h = _mix(labels[i], 0x452821E638D01377)
            for code, nbr_label in sorted(
                (_ORDER_CODE[m.bonds[b].order], labels[j]) for j, b in adj[i]
            ):
                h = _mix(h, code)
                h = _mix(h, nbr_label)
            nxt.append(h)
        labels = nxt
    return labels


def canonical_hash(m: MoleculeGraph) -> str:
    """Deterministic 128-bit hex digest, equal for isomorphic graphs."""
    labels = _refine(m, _initial_labels(m), max(1, m.n_atoms))
    lo = _mix(_mix(0, m.n_atoms), m.n_bonds)
    for label in sorted(labels):
        lo = _mix(lo, label)
    hi = _mix(lo, 0x13198A2E03707344)
    for bond in sorted(
        (_ORDER_CODE[b.order], *sorted((labels[b.a1], labels[b.a2]))) for b in m.bonds
    ):
        for part in bond:
            hi = _mix(hi, part)
    return f"{hi:016x}{lo:016x}"


def _atom_key(m: MoleculeGraph, i: int) -> tuple:
    a = m.atoms[i]
    return (a.element, a.formal_charge, a.aromatic)


def is_isomorphic(a: MoleculeGraph, b: MoleculeGraph) -> bool:
    """Exact labeled-graph isomorphism (backtracking with WL pruning)."""
    if a.n_atoms != b.n_atoms or a.n_bonds != b.n_bonds:
        return False
    la = _refine(a, _initial_labels(a), max(1, a.n_atoms))
    lb = _refine(b, _initial_labels(b), max(1, b.n_atoms))
    if Counter(la) != Counter(lb):
        return False

    adj_a, adj_b = a.adjacency(), b.adjacency()
    # Map rarest labels first to cut the branching factor.
    freq = Counter(la)
    order = sorted(range(a.n_atoms), key=lambda i: (freq[la[i]], -len(adj_a[i]), i))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for j in range(b.n_atoms):
            if j in used or lb[j] != la[i] or _atom_key(b, j) != _atom_key(a, i):
                continue
            ok = True
            for nbr, bond_index in adj_a[i]:
                if nbr in mapping:
                    other = b.bond_between(mapping[nbr], j)
                    if other is None or other.order != a.bonds[bond_index].order:
                        ok = False
                        break
            if not ok:
                continue
            if len(adj_a[i]) != len(adj_b[j]):
                continue
            mapping[i] = j
            used.add(j)
            if extend(pos + 1):
                return True
            del mapping[i]
            used.discard(j)
        return False

    return extend(0)
