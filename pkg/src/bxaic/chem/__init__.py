from .canon import canonical_hash, is_isomorphic
from .elements import ATOMIC_NUMBER, ELEMENTS, HALOGENS, ORGANIC_SUBSET
from .fingerprint import Fingerprint, morgan_fingerprint, tanimoto
from .graph import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, MoleculeGraph
from .rings import perceive_rings
from .sanitize import (
    flag_kekulized_aromatic_rings,
    prepare_molecule,
    strip_to_largest_fragment,
)
from .smiles import (
    DanglingBondError,
    SmilesParseError,
    UnbalancedDelimiterError,
    UnknownElementError,
    UnmatchedRingClosureError,
    parse_smiles,
    write_smiles,
)

__all__ = [
    "ATOMIC_NUMBER",
    "AROMATIC",
    "Atom",
    "Bond",
    "DOUBLE",
    "DanglingBondError",
    "ELEMENTS",
    "Fingerprint",
    "HALOGENS",
    "MoleculeGraph",
    "ORGANIC_SUBSET",
    "SINGLE",
    "SmilesParseError",
    "TRIPLE",
    "UnbalancedDelimiterError",
    "UnknownElementError",
    "UnmatchedRingClosureError",
    "canonical_hash",
    "flag_kekulized_aromatic_rings",
    "is_isomorphic",
    "morgan_fingerprint",
    "parse_smiles",
    "perceive_rings",
    "prepare_molecule",
    "strip_to_largest_fragment",
    "tanimoto",
    "write_smiles",
]
