"""Periodic-table lookups shared by the SMILES parser and the pattern matcher."""

from __future__ import annotations

_SYMBOLS = (
    "H He "
    "Li Be B C N O F Ne "
    "Na Mg Al Si P S Cl Ar "
    "K Ca Sc Ti V Cr Mn Fe Co Ni Cu Zn Ga Ge As Se Br Kr "
    "Rb Sr Y Zr Nb Mo Tc Ru Rh Pd Ag Cd In Sn Sb Te I Xe "
    "Cs Ba La Ce Pr Nd Pm Sm Eu Gd Tb Dy Ho Er Tm Yb Lu "
    "Hf Ta W Re Os Ir Pt Au Hg Tl Pb Bi Po At Rn "
    "Fr Ra Ac Th Pa U Np Pu Am Cm Bk Cf Es Fm Md No Lr "
    "Rf Db Sg Bh Hs Mt Ds Rg Cn Nh Fl Mc Lv Ts Og"
).split()

ATOMIC_NUMBER: dict[str, int] = {sym: i + 1 for i, sym in enumerate(_SYMBOLS)}
SYMBOL_BY_NUMBER: dict[int, str] = {z: sym for sym, z in ATOMIC_NUMBER.items()}
ELEMENTS: frozenset[str] = frozenset(ATOMIC_NUMBER)

# Symbols writable outside brackets, and the lowercase forms that imply aromaticity.
ORGANIC_SUBSET: frozenset[str] = frozenset({"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"})
AROMATIC_SYMBOLS: frozenset[str] = frozenset({"b", "c", "n", "o", "p", "s"})

HALOGENS: frozenset[str] = frozenset({"F", "Cl", "Br", "I"})

# Default valences used to derive implicit hydrogen counts for organic-subset
# atoms (smallest valence >= bond order sum wins; none fits -> zero hydrogens).
DEFAULT_VALENCES: dict[str, tuple[int, ...]] = {
    "B": (3,),
    "C": (4,),
    "N": (3, 5),
    "O": (2,),
    "P": (3, 5),
    "S": (2, 4, 6),
    "F": (1,),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
}
