"""Circular (Morgan/ECFP-style) fingerprints and Tanimoto similarity."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import _ORDER_CODE, _mix
from .elements import ATOMIC_NUMBER
from .graph import MoleculeGraph


@dataclass(frozen=True)
class Fingerprint:
    bits: frozenset[int]
    width: int = 2048
    radius: int = 2


def morgan_fingerprint(m: MoleculeGraph, radius: int = 2, width: int = 2048) -> Fingerprint:
    """Iterative neighborhood hashing; every level's atom invariants set a bit."""
    adj = m.adjacency()
    invariants = []
    for atom in m.atoms:
        h = _mix(0x082EFA98EC4E6C89, ATOMIC_NUMBER[atom.element])
        h = _mix(h, atom.formal_charge & 0xFFFF)
        h = _mix(h, 1 if atom.aromatic else 0)
        h = _mix(h, len(adj[atom.index]))
        invariants.append(h)

    bits = {inv % width for inv in invariants}
    for level in range(1, radius + 1):
        nxt = []
        for i in range(m.n_atoms):
            h = _mix(invariants[i], level)
            for code, nbr_inv in sorted(
                (_ORDER_CODE[m.bonds[b].order], invariants[j]) for j, b in adj[i]
            ):
                h = _mix(h, code)
                h = _mix(h, nbr_inv)
            nxt.append(h)
        invariants = nxt
        bits.update(inv % width for inv in invariants)
    return Fingerprint(bits=frozenset(bits), width=width, radius=radius)


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    """Intersection over union of the bit sets; 1.0 when both are empty."""
    if a.width != b.width:
        raise ValueError(f"fingerprint width mismatch: {a.width} != {b.width}")
    union = len(a.bits | b.bits)
    if union == 0:
        return 1.0
    return len(a.bits & b.bits) / union
