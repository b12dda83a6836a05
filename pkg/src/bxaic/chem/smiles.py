"""SMILES reader and writer.

Covers the organic subset, bracket atoms (charge and explicit hydrogens kept,
isotopes and atom classes dropped), branches, ring closures ``1``-``9`` and
``%nn``, the bond symbols ``- = # :``, and dot-separated fragments.
Stereochemistry markers (``/ \\ @``) are accepted and discarded: no task in
this benchmark is stereo-sensitive.

Parse failures raise a :class:`SmilesParseError` subclass per failure
category so corpus filtering can report precise per-line diagnostics.
"""

from __future__ import annotations

import re

from .elements import AROMATIC_SYMBOLS, ELEMENTS, ORGANIC_SUBSET
from .graph import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, MoleculeGraph


class SmilesParseError(ValueError):
    """Base class for all SMILES syntax failures."""


class UnmatchedRingClosureError(SmilesParseError):
    pass


class UnbalancedDelimiterError(SmilesParseError):
    """Unbalanced brackets or parentheses."""


class UnknownElementError(SmilesParseError):
    pass


class DanglingBondError(SmilesParseError):
    """A bond symbol or ring closure with no atom on one side."""


_BOND_SYMBOLS = {"-": SINGLE, "=": DOUBLE, "#": TRIPLE, ":": AROMATIC,
                 "/": SINGLE, "\\": SINGLE}

_BRACKET_RE = re.compile(
    r"""^(?P<isotope>\d+)?
        (?P<symbol>\*|[A-Z][a-z]?|[a-z])
        (?P<chiral>@{1,2}(?:TH\d|AL\d|SP\d)?)?
        (?P<hcount>H\d*)?
        (?P<charge>\+{1,3}|-{1,3}|[+-]\d+)?
        (?::(?P<cls>\d+))?$""",
    re.VERBOSE,
)


def _parse_bracket(content: str, index: int) -> Atom:
    m = _BRACKET_RE.match(content)
    if m is None:
        raise SmilesParseError(f"malformed bracket atom [{content}]")
    symbol = m.group("symbol")
    if symbol == "*":
        raise UnknownElementError("wildcard atoms are not valid in molecules")
    aromatic = symbol.islower()
    if aromatic:
        if symbol not in AROMATIC_SYMBOLS:
            raise UnknownElementError(f"unknown aromatic symbol '{symbol}'")
        element = symbol.capitalize()
    else:
        element = symbol
    if element not in ELEMENTS:
        raise UnknownElementError(f"unknown element '{element}'")

    hcount = m.group("hcount")
    if hcount is None:
        explicit_h = 0
    elif hcount == "H":
        explicit_h = 1
    else:
        explicit_h = int(hcount[1:])

    charge_text = m.group("charge")
    if charge_text is None:
        charge = 0
    elif set(charge_text) <= {"+"}:
        charge = len(charge_text)
    elif set(charge_text) <= {"-"}:
        charge = -len(charge_text)
    else:
        charge = int(charge_text)

    return Atom(element=element, index=index, formal_charge=charge,
                aromatic=aromatic, explicit_h=explicit_h)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.atoms: list[Atom] = []
        self.bonds: list[Bond] = []
        self.bond_keys: set[tuple[int, int]] = set()
        self.prev: int | None = None
        self.pending_bond: str | None = None
        self.branch_stack: list[int | None] = []
        # ring number -> (open atom index, bond symbol at opening or None)
        self.open_rings: dict[int, tuple[int, str | None]] = {}

    def add_atom(self, atom: Atom) -> None:
        self.atoms.append(atom)
        if self.prev is not None:
            self.add_bond(self.prev, atom.index, self.pending_bond)
        elif self.pending_bond is not None:
            raise DanglingBondError("bond symbol with no atom before it")
        self.pending_bond = None
        self.prev = atom.index

    def add_bond(self, a1: int, a2: int, symbol: str | None) -> None:
        if a1 == a2:
            raise SmilesParseError(f"ring closure bonds atom {a1} to itself")
        key = (a1, a2) if a1 < a2 else (a2, a1)
        if key in self.bond_keys:
            raise SmilesParseError(f"duplicate bond between atoms {a1} and {a2}")
        if symbol is None:
            order = AROMATIC if (self.atoms[a1].aromatic and self.atoms[a2].aromatic) else SINGLE
        else:
            order = _BOND_SYMBOLS[symbol]
        self.bond_keys.add(key)
        self.bonds.append(Bond(a1=a1, a2=a2, order=order, index=len(self.bonds)))

    def close_ring(self, number: int) -> None:
        if self.prev is None:
            raise DanglingBondError(f"ring closure {number} before any atom")
        if number in self.open_rings:
            open_atom, open_symbol = self.open_rings.pop(number)
            symbol = self.pending_bond
            if open_symbol is not None and symbol is not None and open_symbol != symbol:
                raise SmilesParseError(
                    f"conflicting bond symbols on ring closure {number}"
                )
            self.add_bond(open_atom, self.prev, symbol or open_symbol)
        else:
            self.open_rings[number] = (self.prev, self.pending_bond)
        self.pending_bond = None

    def run(self) -> MoleculeGraph:
        text = self.text
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch in _BOND_SYMBOLS:
                if self.pending_bond is not None:
                    raise DanglingBondError("two bond symbols in a row")
                self.pending_bond = ch
                i += 1
            elif ch == ".":
                if self.pending_bond is not None:
                    raise DanglingBondError("bond symbol before fragment separator")
                if self.branch_stack:
                    raise UnbalancedDelimiterError("fragment separator inside a branch")
                self.prev = None
                i += 1
            elif ch == "(":
                if self.prev is None:
                    raise SmilesParseError("branch opened before any atom")
                self.branch_stack.append(self.prev)
                i += 1
            elif ch == ")":
                if not self.branch_stack:
                    raise UnbalancedDelimiterError("unmatched ')'")
                if self.pending_bond is not None:
                    raise DanglingBondError("bond symbol before ')'")
                self.prev = self.branch_stack.pop()
                i += 1
            elif ch.isdigit():
                self.close_ring(int(ch))
                i += 1
            elif ch == "%":
                seg = text[i + 1 : i + 3]
                if len(seg) != 2 or not seg.isdigit():
                    raise SmilesParseError("'%' must be followed by two digits")
                self.close_ring(int(seg))
                i += 3
            elif ch == "[":
                end = text.find("]", i)
                if end < 0:
                    raise UnbalancedDelimiterError("unclosed '['")
                self.add_atom(_parse_bracket(text[i + 1 : end], len(self.atoms)))
                i = end + 1
            elif ch == "]":
                raise UnbalancedDelimiterError("unmatched ']'")
            elif ch.isupper():
                two = text[i : i + 2]
                if two in ("Cl", "Br"):
                    symbol, i = two, i + 2
                elif ch in ORGANIC_SUBSET:
                    symbol, i = ch, i + 1
                else:
                    raise UnknownElementError(
                        f"'{ch}' is not valid outside brackets"
                    )
                self.add_atom(Atom(element=symbol, index=len(self.atoms)))
            elif ch.islower():
                if ch not in AROMATIC_SYMBOLS:
                    raise UnknownElementError(f"'{ch}' is not valid outside brackets")
                self.add_atom(
                    Atom(element=ch.capitalize(), index=len(self.atoms), aromatic=True)
                )
                i += 1
            else:
                raise SmilesParseError(f"unexpected character {ch!r}")

        if self.branch_stack:
            raise UnbalancedDelimiterError("unmatched '('")
        if self.open_rings:
            numbers = ", ".join(str(k) for k in sorted(self.open_rings))
            raise UnmatchedRingClosureError(f"unmatched ring closure digit(s) {numbers}")
        if self.pending_bond is not None:
            raise DanglingBondError("trailing bond symbol")
        if not self.atoms:
            raise SmilesParseError("no atoms")
        return MoleculeGraph(atoms=self.atoms, bonds=self.bonds, source_smiles=self.text)


def parse_smiles(text: str) -> MoleculeGraph:
    """Parse a SMILES string into a molecular graph.

    Atoms and bonds come out in left-to-right parse order, with ring-closure
    bonds created at the position of the closing digit.
    """
    return _Parser(text.strip()).run()


def _atom_token(atom: Atom) -> str:
    symbol = atom.element.lower() if atom.aromatic else atom.element
    if atom.explicit_h is None and atom.formal_charge == 0:
        return symbol
    h = "" if atom.explicit_h in (None, 0) else ("H" if atom.explicit_h == 1 else f"H{atom.explicit_h}")
    c = atom.formal_charge
    if c == 0:
        charge = ""
    elif c == 1:
        charge = "+"
    elif c == -1:
        charge = "-"
    else:
        charge = f"{c:+d}"
    return f"[{symbol}{h}{charge}]"


def _bond_token(m: MoleculeGraph, bond: Bond) -> str:
    both_aromatic = m.atoms[bond.a1].aromatic and m.atoms[bond.a2].aromatic
    if bond.order == SINGLE:
        return "-" if both_aromatic else ""
    if bond.order == AROMATIC:
        return "" if both_aromatic else ":"
    return "=" if bond.order == DOUBLE else "#"


def write_smiles(m: MoleculeGraph) -> str:
    """Serialize a molecular graph back to SMILES.

    The output is not canonical, but reparsing it reproduces an isomorphic
    graph under the (element, charge, aromatic, bond order) labeling.
    """
    adj = m.adjacency()
    visited = [False] * m.n_atoms
    # DFS spanning forest; non-tree edges become ring closures.
    tree_children: dict[int, list[tuple[int, int]]] = {i: [] for i in range(m.n_atoms)}
    closure_at: dict[int, list[int]] = {i: [] for i in range(m.n_atoms)}
    closure_numbers: dict[int, int] = {}
    next_number = 1
    roots = []

    for start in range(m.n_atoms):
        if visited[start]:
            continue
        roots.append(start)
        visited[start] = True
        stack = [start]
        tree_edges: set[int] = set()
        while stack:
            v = stack.pop()
            for nbr, bond_index in sorted(adj[v]):
                if not visited[nbr]:
                    visited[nbr] = True
                    tree_children[v].append((nbr, bond_index))
                    tree_edges.add(bond_index)
                    stack.append(nbr)
                elif bond_index not in tree_edges and bond_index not in closure_numbers:
                    if next_number > 99:
                        raise ValueError("more than 99 ring closures")
                    closure_numbers[bond_index] = next_number
                    next_number += 1
                    closure_at[v].append(bond_index)
                    closure_at[nbr].append(bond_index)

    out: list[str] = []
    opened: set[int] = set()

    def emit(v: int, incoming: str) -> None:
        out.append(incoming)
        out.append(_atom_token(m.atoms[v]))
        for bond_index in closure_at[v]:
            number = closure_numbers[bond_index]
            # Bond symbol goes on the closing side only.
            symbol = _bond_token(m, m.bonds[bond_index]) if bond_index in opened else ""
            opened.add(bond_index)
            out.append(symbol + (str(number) if number < 10 else f"%{number:02d}"))
        children = tree_children[v]
        for pos, (child, bond_index) in enumerate(children):
            token = _bond_token(m, m.bonds[bond_index])
            if pos < len(children) - 1:
                out.append("(")
                emit(child, token)
                out.append(")")
            else:
                emit(child, token)

    fragments = []
    for root in roots:
        out = []
        emit(root, "")
        fragments.append("".join(out))
    return ".".join(fragments)
