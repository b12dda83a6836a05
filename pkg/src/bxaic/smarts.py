"""SMARTS-subset query language.

Supported: element symbols (aromatic lowercase / aliphatic uppercase),
``*`` ``a`` ``A`` wildcards, ``#n`` atomic numbers, charge, ``R``/``R0``/``Rn``
ring membership, ``D`` degree, ``H`` total-hydrogen count, the logical
operators ``!`` ``&`` ``,`` ``;`` (standard precedence), bond expressions
``- = # : ~ @ !@``, branches, and ring closures. Anything outside the subset
(recursive SMARTS, component SMARTS, stereo, isotopes, valence/connectivity
primitives) raises :class:`UnsupportedConstructError` naming the construct.

Ring-dependent primitives (``R``, ``@``) are evaluated against the molecule's
perceived SSSR.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chem.elements import ATOMIC_NUMBER, AROMATIC_SYMBOLS, ELEMENTS, SYMBOL_BY_NUMBER
from .chem.graph import AROMATIC, DOUBLE, SINGLE, TRIPLE, MoleculeGraph


class PatternError(ValueError):
    pass


class PatternParseError(PatternError):
    pass


class UnsupportedConstructError(PatternError):
    def __init__(self, construct: str):
        super().__init__(f"unsupported construct: {construct}")
        self.construct = construct


@dataclass
class MatchContext:
    """Per-molecule data the atom/bond predicates consult."""

    mol: MoleculeGraph
    ring_bond_indices: frozenset[int]
    ring_counts: list[int]
    hydrogens: list[int]

    @classmethod
    def for_molecule(cls, mol: MoleculeGraph) -> "MatchContext":
        if mol.rings is None:
            raise ValueError("molecule needs ring perception before matching")
        return cls(
            mol=mol,
            ring_bond_indices=mol.ring_bond_indices(),
            ring_counts=mol.ring_counts_per_atom(),
            hydrogens=[mol.total_hydrogens(i) for i in range(mol.n_atoms)],
        )


# ----------------------------------------------------------------------
# Atom expression tree
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ElementIs:
    element: str
    aromatic: bool | None  # None: either form matches (from #n)

    def matches(self, ctx: MatchContext, i: int) -> bool:
        atom = ctx.mol.atoms[i]
        if atom.element != self.element:
            return False
        return self.aromatic is None or atom.aromatic == self.aromatic

    selectivity = 4


@dataclass(frozen=True)
class AnyAtom:
    def matches(self, ctx: MatchContext, i: int) -> bool:
        return True

    selectivity = 0


@dataclass(frozen=True)
class AromaticAny:
    def matches(self, ctx: MatchContext, i: int) -> bool:
        return ctx.mol.atoms[i].aromatic

    selectivity = 1


@dataclass(frozen=True)
class AliphaticAny:
    def matches(self, ctx: MatchContext, i: int) -> bool:
        return not ctx.mol.atoms[i].aromatic

    selectivity = 1


@dataclass(frozen=True)
class ChargeIs:
    charge: int

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return ctx.mol.atoms[i].formal_charge == self.charge

    selectivity = 2


@dataclass(frozen=True)
class RingMembership:
    # None: member of at least one ring; 0: no ring; n: exactly n SSSR rings.
    count: int | None

    def matches(self, ctx: MatchContext, i: int) -> bool:
        if self.count is None:
            return ctx.ring_counts[i] > 0
        return ctx.ring_counts[i] == self.count

    selectivity = 1


@dataclass(frozen=True)
class DegreeIs:
    degree: int

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return ctx.mol.degree(i) == self.degree

    selectivity = 1


@dataclass(frozen=True)
class HCountIs:
    count: int

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return ctx.hydrogens[i] == self.count

    selectivity = 1


@dataclass(frozen=True)
class Not:
    inner: object

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return not self.inner.matches(ctx, i)

    @property
    def selectivity(self) -> int:
        return 1


@dataclass(frozen=True)
class And:
    parts: tuple

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return all(p.matches(ctx, i) for p in self.parts)

    @property
    def selectivity(self) -> int:
        return sum(p.selectivity for p in self.parts)


@dataclass(frozen=True)
class Or:
    parts: tuple

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return any(p.matches(ctx, i) for p in self.parts)

    @property
    def selectivity(self) -> int:
        return min(p.selectivity for p in self.parts)


@dataclass(frozen=True)
class PatternAtom:
    expr: object
    source: str
    index: int

    def matches(self, ctx: MatchContext, i: int) -> bool:
        return self.expr.matches(ctx, i)

    @property
    def selectivity(self) -> int:
        return self.expr.selectivity


_KIND_BY_SYMBOL = {"-": SINGLE, "=": DOUBLE, "#": TRIPLE, ":": AROMATIC, "~": "any"}


@dataclass(frozen=True)
class BondConstraint:
    kind: str = "default"  # default = single-or-aromatic, the SMARTS convention
    ring: bool | None = None

    def matches(self, ctx: MatchContext, bond_index: int) -> bool:
        if self.ring is not None:
            if (bond_index in ctx.ring_bond_indices) != self.ring:
                return False
        order = ctx.mol.bonds[bond_index].order
        if self.kind == "default":
            return order in (SINGLE, AROMATIC)
        if self.kind == "any":
            return True
        return order == self.kind


@dataclass(frozen=True)
class PatternBond:
    a1: int
    a2: int
    constraint: BondConstraint
    index: int


@dataclass
class Pattern:
    atoms: list[PatternAtom]
    bonds: list[PatternBond]
    source: str
    _adjacency: list[list[tuple[int, int]]] | None = field(default=None, repr=False)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        if self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in self.atoms]
            for bond in self.bonds:
                adj[bond.a1].append((bond.a2, bond.index))
                adj[bond.a2].append((bond.a1, bond.index))
            self._adjacency = adj
        return self._adjacency


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------

_UNSUPPORTED_PRIMITIVES = {
    "$": "recursive SMARTS $(...)",
    "@": "chirality",
    "x": "ring connectivity (x)",
    "v": "valence (v)",
    "X": "total connectivity (X)",
    "r": "ring size (r)",
}


class _BracketParser:
    """Recursive-descent parser for one bracket atom expression."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def error(self, message: str) -> PatternParseError:
        return PatternParseError(f"in [{self.text}]: {message}")

    def parse(self):
        expr = self.parse_semi()
        if self.pos != len(self.text):
            raise self.error(f"unexpected '{self.text[self.pos:]}'")
        return expr

    def parse_semi(self):
        parts = [self.parse_comma()]
        while self.peek() == ";":
            self.pos += 1
            parts.append(self.parse_comma())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_comma(self):
        parts = [self.parse_amp()]
        while self.peek() == ",":
            self.pos += 1
            parts.append(self.parse_amp())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def parse_amp(self):
        parts = [self.parse_not()]
        while True:
            ch = self.peek()
            if ch == "&":
                self.pos += 1
                parts.append(self.parse_not())
            elif ch is not None and ch not in ";,":
                parts.append(self.parse_not())  # implicit conjunction
            else:
                break
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_not(self):
        if self.peek() == "!":
            self.pos += 1
            return Not(self.parse_not())
        return self.parse_primitive()

    def read_int(self) -> int | None:
        start = self.pos
        while self.peek() is not None and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos]) if self.pos > start else None

    def parse_primitive(self):
        ch = self.peek()
        if ch is None:
            raise self.error("empty expression")
        if ch in _UNSUPPORTED_PRIMITIVES:
            raise UnsupportedConstructError(_UNSUPPORTED_PRIMITIVES[ch])
        if ch.isdigit():
            raise UnsupportedConstructError("isotope specification")
        if ch == "*":
            self.pos += 1
            return AnyAtom()
        if ch == "a":
            self.pos += 1
            return AromaticAny()
        if ch == "A":
            self.pos += 1
            return AliphaticAny()
        if ch == "#":
            self.pos += 1
            number = self.read_int()
            if number is None or number not in SYMBOL_BY_NUMBER:
                raise self.error("'#' needs a valid atomic number")
            return ElementIs(SYMBOL_BY_NUMBER[number], aromatic=None)
        if ch == "R":
            self.pos += 1
            return RingMembership(self.read_int())
        if ch == "D":
            self.pos += 1
            value = self.read_int()
            return DegreeIs(1 if value is None else value)
        if ch == "H":
            self.pos += 1
            value = self.read_int()
            return HCountIs(1 if value is None else value)
        if ch in "+-":
            sign = 1 if ch == "+" else -1
            self.pos += 1
            repeats = 1
            while self.peek() == ch:
                self.pos += 1
                repeats += 1
            value = self.read_int()
            if value is not None and repeats > 1:
                raise self.error("mixed repeated-sign and numeric charge")
            return ChargeIs(sign * (value if value is not None else repeats))
        if ch.isalpha():
            two = self.text[self.pos : self.pos + 2]
            if len(two) == 2 and two[0].isupper() and two[1].islower() and two in ELEMENTS:
                self.pos += 2
                return ElementIs(two, aromatic=False)
            if ch.isupper() and ch in ELEMENTS:
                self.pos += 1
                return ElementIs(ch, aromatic=False)
            if ch in AROMATIC_SYMBOLS:
                self.pos += 1
                return ElementIs(ch.capitalize(), aromatic=True)
            raise self.error(f"unknown atom primitive '{ch}'")
        raise self.error(f"unexpected character '{ch}'")


_BOND_CHARS = set("-=#:~@!&;,")


def _parse_bond_expr(text: str) -> BondConstraint:
    kind = None
    ring: bool | None = None
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "&;":
            i += 1
            continue
        if ch == "!":
            if i + 1 < len(text) and text[i + 1] == "@":
                if ring is not None:
                    raise PatternParseError("conflicting ring-bond constraints")
                ring = False
                i += 2
                continue
            raise UnsupportedConstructError("bond negation (other than !@)")
        if ch == "@":
            if ring is not None:
                raise PatternParseError("conflicting ring-bond constraints")
            ring = True
            i += 1
            continue
        if ch == ",":
            raise UnsupportedConstructError("bond disjunction (',')")
        if ch in _KIND_BY_SYMBOL:
            if kind is not None:
                raise PatternParseError(f"conflicting bond orders in '{text}'")
            kind = _KIND_BY_SYMBOL[ch]
            i += 1
            continue
        raise PatternParseError(f"bad bond expression '{text}'")
    return BondConstraint(kind=kind if kind is not None else "default", ring=ring)


class _PatternParser:
    def __init__(self, text: str):
        self.text = text
        self.atoms: list[PatternAtom] = []
        self.bonds: list[PatternBond] = []
        self.bond_keys: set[tuple[int, int]] = set()
        self.prev: int | None = None
        self.pending: str = ""  # accumulated bond characters
        self.branch_stack: list[int] = []
        self.open_rings: dict[int, tuple[int, str]] = {}

    def take_pending(self) -> BondConstraint | None:
        if not self.pending:
            return None
        constraint = _parse_bond_expr(self.pending)
        self.pending = ""
        return constraint

    def add_atom(self, expr, source: str) -> None:
        index = len(self.atoms)
        self.atoms.append(PatternAtom(expr=expr, source=source, index=index))
        if self.prev is not None:
            self.add_bond(self.prev, index, self.take_pending())
        elif self.pending:
            raise PatternParseError("bond symbol before the first atom")
        self.prev = index

    def add_bond(self, a1: int, a2: int, constraint: BondConstraint | None) -> None:
        if a1 == a2:
            raise PatternParseError("ring closure bonds an atom to itself")
        key = (a1, a2) if a1 < a2 else (a2, a1)
        if key in self.bond_keys:
            raise PatternParseError(f"duplicate bond between pattern atoms {a1},{a2}")
        self.bond_keys.add(key)
        self.bonds.append(
            PatternBond(a1=a1, a2=a2,
                        constraint=constraint or BondConstraint(),
                        index=len(self.bonds))
        )

    def close_ring(self, number: int) -> None:
        if self.prev is None:
            raise PatternParseError(f"ring closure {number} before any atom")
        pending = self.pending
        self.pending = ""
        if number in self.open_rings:
            open_atom, open_text = self.open_rings.pop(number)
            if open_text and pending and open_text != pending:
                raise PatternParseError(f"conflicting bonds on ring closure {number}")
            text = pending or open_text
            self.add_bond(open_atom, self.prev,
                          _parse_bond_expr(text) if text else None)
        else:
            self.open_rings[number] = (self.prev, pending)

    def run(self) -> Pattern:
        text = self.text
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch == "$":
                raise UnsupportedConstructError("recursive SMARTS $(...)")
            if ch == ".":
                raise UnsupportedConstructError("component-level SMARTS ('.')")
            if ch in "/\\":
                raise UnsupportedConstructError("stereo bond")
            if ch in _BOND_CHARS:
                # '#' is the triple bond here; as an atomic-number prefix it
                # only occurs inside brackets, which are scanned separately.
                self.pending += ch
                i += 1
            elif ch == "(":
                if self.prev is None:
                    raise PatternParseError("branch before any atom")
                self.branch_stack.append(self.prev)
                i += 1
            elif ch == ")":
                if not self.branch_stack:
                    raise PatternParseError("unmatched ')'")
                if self.pending:
                    raise PatternParseError("dangling bond before ')'")
                self.prev = self.branch_stack.pop()
                i += 1
            elif ch.isdigit():
                self.close_ring(int(ch))
                i += 1
            elif ch == "%":
                seg = text[i + 1 : i + 3]
                if len(seg) != 2 or not seg.isdigit():
                    raise PatternParseError("'%' must be followed by two digits")
                self.close_ring(int(seg))
                i += 3
            elif ch == "[":
                end = text.find("]", i)
                if end < 0:
                    raise PatternParseError("unclosed '['")
                content = text[i + 1 : end]
                self.add_atom(_BracketParser(content).parse(), f"[{content}]")
                i = end + 1
            elif ch == "]":
                raise PatternParseError("unmatched ']'")
            elif ch == "*":
                self.add_atom(AnyAtom(), "*")
                i += 1
            elif ch == "a":
                self.add_atom(AromaticAny(), "a")
                i += 1
            elif ch == "A":
                self.add_atom(AliphaticAny(), "A")
                i += 1
            elif ch.isupper():
                two = text[i : i + 2]
                if two in ("Cl", "Br"):
                    self.add_atom(ElementIs(two, aromatic=False), two)
                    i += 2
                elif ch in "BCNOPSFI":
                    self.add_atom(ElementIs(ch, aromatic=False), ch)
                    i += 1
                else:
                    raise PatternParseError(f"'{ch}' is not valid outside brackets")
            elif ch.islower():
                if ch not in AROMATIC_SYMBOLS:
                    raise PatternParseError(f"'{ch}' is not valid outside brackets")
                self.add_atom(ElementIs(ch.capitalize(), aromatic=True), ch)
                i += 1
            else:
                raise PatternParseError(f"unexpected character {ch!r}")

        if self.branch_stack:
            raise PatternParseError("unmatched '('")
        if self.open_rings:
            numbers = ", ".join(str(k) for k in sorted(self.open_rings))
            raise PatternParseError(f"unmatched ring closure digit(s) {numbers}")
        if self.pending:
            raise PatternParseError("trailing bond symbol")
        if not self.atoms:
            raise PatternParseError("empty pattern")
        pattern = Pattern(atoms=self.atoms, bonds=self.bonds, source=self.text)
        _check_connected(pattern)
        return pattern


def _check_connected(pattern: Pattern) -> None:
    seen = {0}
    stack = [0]
    adj = pattern.adjacency()
    while stack:
        v = stack.pop()
        for nbr, _ in adj[v]:
            if nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    if len(seen) != pattern.n_atoms:
        raise PatternParseError("pattern must be a connected graph")


def parse_pattern(text: str) -> Pattern:
    """Parse a SMARTS-subset query into a :class:`Pattern`."""
    return _PatternParser(text.strip()).run()
