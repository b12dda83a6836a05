"""Ring perception: a smallest set of smallest rings.

Candidate cycles are generated Horton-style (for every vertex v and edge
(x, y) in the 2-core, the cycle formed by shortest paths v..x and v..y plus
the edge), then a basis is selected greedily by cycle size with GF(2)
independence over bond incidence vectors. Ties are broken by the
lexicographically smallest atom index set, so the result is deterministic.
The selected count always equals the circuit rank
``|bonds| - |atoms| + components``.
"""

from __future__ import annotations

from dataclasses import replace

from .graph import MoleculeGraph


def _two_core(adj: list[list[tuple[int, int]]]) -> set[int]:
    """Vertices remaining after iteratively stripping degree<=1 vertices."""
    degree = [len(nbrs) for nbrs in adj]
    alive = [True] * len(adj)
    stack = [v for v, d in enumerate(degree) if d <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for nbr, _ in adj[v]:
            if alive[nbr]:
                degree[nbr] -= 1
                if degree[nbr] <= 1:
                    stack.append(nbr)
    return {v for v, a in enumerate(alive) if a}


def _bfs_tree(
    adj: list[list[tuple[int, int]]], root: int, allowed: set[int]
) -> tuple[dict[int, int], dict[int, int]]:
    """Parents and depths of a BFS tree restricted to ``allowed`` vertices."""
    parent = {root: -1}
    depth = {root: 0}
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for nbr, _ in sorted(adj[v]):
            if nbr in allowed and nbr not in depth:
                depth[nbr] = depth[v] + 1
                parent[nbr] = v
                queue.append(nbr)
    return parent, depth


def _path_to_root(parent: dict[int, int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def _cycle_bond_indices(m: MoleculeGraph, cycle: list[int]) -> list[int]:
    indices = []
    for pos, v in enumerate(cycle):
        bond = m.bond_between(v, cycle[(pos + 1) % len(cycle)])
        if bond is None:
            raise ValueError(f"{cycle} is not a cycle in the bond set")
        indices.append(bond.index)
    return indices


def _horton_candidates(m: MoleculeGraph, core: set[int]) -> list[list[int]]:
    adj = m.adjacency()
    core_bonds = [b for b in m.bonds if b.a1 in core and b.a2 in core]
    seen: set[frozenset[int]] = set()
    candidates: list[list[int]] = []
    for root in sorted(core):
        parent, depth = _bfs_tree(adj, root, core)
        for bond in core_bonds:
            x, y = bond.a1, bond.a2
            if x not in depth or y not in depth:
                continue
            px = _path_to_root(parent, x)
            py = _path_to_root(parent, y)
            # The two paths must meet only at the root for a simple cycle.
            if set(px) & set(py) != {root}:
                continue
            cycle = px[::-1] + py[:-1]
            if len(cycle) < 3:
                continue
            edge_set = frozenset(_cycle_bond_indices(m, cycle))
            if edge_set not in seen:
                seen.add(edge_set)
                candidates.append(cycle)
    return candidates


def _fundamental_cycles(m: MoleculeGraph, core: set[int]) -> list[list[int]]:
    """Spanning-tree fundamental cycles; a fallback set that always spans."""
    adj = m.adjacency()
    cycles = []
    visited: set[int] = set()
    for root in sorted(core):
        if root in visited:
            continue
        parent, depth = _bfs_tree(adj, root, core)
        visited |= set(depth)
        for bond in m.bonds:
            x, y = bond.a1, bond.a2
            if x not in depth or y not in depth:
                continue
            if parent.get(x) == y or parent.get(y) == x:
                continue  # tree edge
            px = _path_to_root(parent, x)
            py = _path_to_root(parent, y)
            shared = set(px) & set(py)
            # Walk both paths up to their lowest common ancestor.
            lca = px[min(range(len(px)), key=lambda i: (px[i] not in shared, i))]
            ix, iy = px.index(lca), py.index(lca)
            cycle = px[: ix + 1][::-1] + py[:iy]
            if len(cycle) >= 3:
                cycles.append(cycle)
    return cycles


def perceive_rings(m: MoleculeGraph) -> MoleculeGraph:
    """Return a copy of the molecule with the SSSR filled in."""
    rank = m.circuit_rank()
    if rank == 0:
        return replace(m, rings=[], _adjacency=m._adjacency)

    core = _two_core(m.adjacency())
    candidates = _horton_candidates(m, core) + _fundamental_cycles(m, core)
    seen: set[frozenset[int]] = set()
    unique: list[list[int]] = []
    for cycle in candidates:
        key = frozenset(_cycle_bond_indices(m, cycle))
        if key not in seen:
            seen.add(key)
            unique.append(cycle)
    unique.sort(key=lambda c: (len(c), tuple(sorted(c))))

    basis_vectors: list[int] = []
    rings: list[list[int]] = []
    for cycle in unique:
        vector = 0
        for bond_index in _cycle_bond_indices(m, cycle):
            vector |= 1 << bond_index
        reduced = vector
        for existing in basis_vectors:
            reduced = min(reduced, reduced ^ existing)
        if reduced == 0:
            continue
        basis_vectors.append(reduced)
        basis_vectors.sort(reverse=True)
        rings.append(_normalize_cycle(cycle))
        if len(rings) == rank:
            break

    if len(rings) != rank:
        raise RuntimeError(
            f"ring perception found {len(rings)} independent cycles, expected {rank}"
        )
    rings.sort(key=lambda r: (len(r), tuple(sorted(r))))
    return replace(m, rings=rings, _adjacency=m._adjacency)


def _normalize_cycle(cycle: list[int]) -> list[int]:
    """Rotate/reflect so the cycle starts at its smallest atom, smaller neighbor next."""
    pivot = cycle.index(min(cycle))
    rotated = cycle[pivot:] + cycle[:pivot]
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return rotated
