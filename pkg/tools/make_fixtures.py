#!/usr/bin/env python3
"""Build the committed fixture corpora.

corpus_200.smi: hand-curated single-fragment molecules covering every task
class (boron/phosphorus compounds, halogenated molecules, indoles in both
aromatic and kekulized notation, carriers for each PAINS alert, polycyclic
and macrocyclic scaffolds, and plain negatives).

corpus_1000.smi: a synthetic stress corpus for pipeline-level tests: built
from seeded combinations of functional blocks so that every task has both
labels well represented, plus injected invalid lines and duplicates.
"""

from __future__ import annotations

import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from bxaic.chem import canonical_hash, prepare_molecule  # noqa: E402

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "tests", "fixtures")

CURATED = [
    # --- boron ---
    "OB(O)c1ccccc1",
    "CB(O)O",
    "OB(O)c1ccc(Cl)cc1",
    "OB(O)c1cccc(C(F)(F)F)c1",
    "CC1(C)OB(OC1(C)C)c1ccccc1",
    "B(C)(C)C",
    "OB(O)CCC",
    "OB(O)c1ccc2ccccc2c1",
    "CC(C)CC(NC(=O)C)B(O)O",
    "OB(O)C=Cc1ccccc1",
    # --- phosphorus ---
    "OP(=O)(O)O",
    "OP(=O)(O)OCC",
    "CP(C)(C)=O",
    "OC(=O)CNCP(=O)(O)O",
    "c1ccc(P(c2ccccc2)c2ccccc2)cc1",
    "CCOP(=O)(OCC)OCC",
    "CP(=O)(O)O",
    "NCCOP(=O)(O)O",
    "OP(=O)(O)Oc1ccccc1",
    "CCCCP(CCCC)CCCC",
    # --- halogens ---
    "Fc1ccccc1",
    "Clc1ccccc1",
    "Brc1ccccc1",
    "Ic1ccccc1",
    "FC(F)(F)c1ccccc1",
    "FC(F)(F)c1ccccc1Cl",
    "C(Br)(Br)Br",
    "FC(F)(Cl)C(F)(F)F",
    "ClCCCl",
    "BrCCBr",
    "ClC(Cl)(Cl)Cl",
    "Clc1ccc(Cl)cc1",
    "Fc1ccc(Br)cc1",
    "Ic1ccc(N)cc1",
    "CCCCCCCCBr",
    "ClCC(=O)c1ccccc1",
    "FC(F)(F)C(Cl)Br",
    "Clc1cccc(Cl)c1Cl",
    "CC(Cl)C(Br)CC",
    "Fc1cc(F)cc(F)c1",
    # --- indoles (aromatic and kekulized) ---
    "c1ccc2c(c1)cc[nH]2",
    "C1=CC2=C(C=C1)C=CN2",
    "Cc1ccc2c(c1)cc[nH]2",
    "NCCc1c[nH]c2ccc(O)cc12",
    "C1=CC2=C(C=C1)C(=CN2)CC(C(=O)O)N",
    "CC(=O)NCCc1c[nH]c2ccc(OC)cc12",
    "OC(=O)Cc1c[nH]c2ccccc12",
    "c1ccc2c(c1)c(CCN)c[nH]2",
    "Clc1ccc2c(c1)cc[nH]2",
    "OCC1=CNC2=CC=CC=C12",
    "c1ccc2c(c1)cc[nH]2CC",
    "CCc1c[nH]c2ccccc12",
    "Cn1ccc2ccccc21",
    "c1ccc2[nH]ccc2c1",
    "O=C(O)c1c[nH]c2ccccc12",
    # --- PAINS carriers ---
    "O=C1C=CC(=O)C=C1",
    "CC1=CC(=O)c2ccccc2C1=O",
    "O=C1C(=O)C=CC=C1",
    "C=C1C=CC(=O)C=C1",
    "N=C1C=CC(=O)C=C1",
    "Oc1ccccc1O",
    "Oc1ccc(CCN)cc1O",
    "Oc1ccc(O)cc1",
    "Nc1ccc(O)cc1",
    "c1ccc(N=Nc2ccccc2)cc1",
    "Cc1ccc(N=Nc2ccc(C)cc2)cc1",
    "CN(C)N=Nc1ccccc1",
    "c1ccc(cc1)[N+]#N",
    "c1ccccc1C=NNc1ccccc1",
    "Oc1ccccc1C=NN",
    "CC(=O)NN=Cc1ccccc1",
    "O=C1NC(=S)SC1=Cc1ccccc1",
    "O=C1NC(=O)C(=Cc2ccccc2)S1",
    "O=C1NC(=O)C(=Cc2ccccc2)N1",
    "O=C1NC(=O)C(=Cc2ccccc2)C(=O)N1",
    "CC1=NN(C(=O)C1=Cc1ccccc1)c1ccccc1",
    "O=C(C=Cc1ccccc1)C=Cc1ccccc1",
    "C=CC(=O)C=C",
    "c1ccc(C=C[N+](=O)[O-])cc1",
    "C=CC#N",
    "c1ccc(C=CC#N)cc1",
    "O=C1C=CC(=O)N1C",
    "CN1SC=CC1=O",
    "CC(=O)C(C)=O",
    "CC(=O)CC(C)=O",
    "O=CC=O",
    "CN=CC(=O)c1ccccc1",
    "Oc1ccccc1CN(C)C",
    "Oc1ccccc1CNCC",
    "C=Cc1ccc(N(C)C)cc1",
    "CN(C)c1ccc(C=Cc2ccccc2)cc1",
    "C=Cc1c[nH]c2ccccc12",
    "NC(=S)Nc1ccccc1",
    "CNC(=S)NC",
    "O=C1C=CC(=O)C=C1CCCCC",
    # --- polycyclic (rings-count territory) ---
    "c1ccc2ccccc2c1",
    "C1=CC2=CC=CC=C2C=C1",
    "c1ccc2cc3ccccc3cc2c1",
    "c1ccc2cc3cc4ccccc4cc3cc2c1",
    "c1ccc2cc3cc4cc5ccccc5cc4cc3cc2c1",
    "c1ccc2c(c1)ccc1ccccc12",
    "C1CCC2(CC1)CCC1(CC2)CCC2(CC1)CCCC2",
    "C1CC2CCC1CC2",
    "C1CC2(C1)CCC1(CC2)CCCC1",
    "CC12CCC3c4ccc(O)cc4CCC3C1CCC2O",
    "CC12CCC3C(CCC4=CC(=O)CCC34C)C1CCC2=O",
    "C1CCC2C(C1)CCC1C2CCC2C1CCC1C2CCCC1",
    "c1ccc2c(c1)C1CC(C1)c1ccccc21",
    "C1CC2CC1C1CC3CC(C1)C2C3",
    "c1cc2ccc3cccc4ccc(c1)c2c34",
    "C1CC2(CC1)CC1(CCC1)CC1(CCCC1)C2",
    # --- macrocycles (rings-max territory) ---
    "C1CCCCCC1",
    "O=C1CCCCCC1",
    "O=C1CCCCCN1",
    "C1CCCCCCC1",
    "C1CCCCCCCCC1",
    "C1COCCOCCOCCO1",
    "O=C1CCCCCCCCCCO1",
    "C1CCCCCCCCCCC1",
    "C1CCC2(CC1)CCCCCC2",
    "c1ccc2c(c1)CCCCC2",
    "O=C1NCCCCCC1",
    "C1CSCCSCCSC1",
    # --- plain negatives and diverse drug-like fillers ---
    "C",
    "CC",
    "CCO",
    "CC(=O)O",
    "CCN",
    "CCCCCC",
    "CC(C)O",
    "OCC(O)CO",
    "NC(N)=O",
    "CC(=O)Oc1ccccc1C(=O)O",
    "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
    "CC(=O)Nc1ccc(O)cc1",
    "CN1CCCC1c1cccnc1",
    "Cn1cnc2c1c(=O)n(C)c(=O)n2C",
    "c1ccncc1",
    "c1cncnc1",
    "c1c[nH]cn1",
    "c1ccoc1",
    "c1ccsc1",
    "c1cc[nH]c1",
    "C1=CC=CC=C1",
    "C1=CC=NC=C1",
    "c1ccc(-c2ccccc2)cc1",
    "C=Cc1ccccc1",
    "N#Cc1ccccc1",
    "O=Cc1ccccc1",
    "OCc1ccccc1",
    "NC(=O)c1ccccc1",
    "Cc1ccccc1",
    "CC(C)(C)c1ccccc1",
    "COc1ccccc1",
    "CSc1ccccc1",
    "Nc1ccccc1",
    "O=[N+]([O-])c1ccccc1",
    "CC(=O)c1ccccc1",
    "OC(=O)c1ccccc1",
    "CCOC(=O)c1ccccc1",
    "C1CCCCC1",
    "C1CCCC1",
    "C1CCC1",
    "C1CC1",
    "C1CCOC1",
    "C1CCNC1",
    "C1CCSC1",
    "O1CCOCC1",
    "N1CCNCC1",
    "CN1CCN(C)CC1",
    "OC1CCCCC1",
    "O=C1CCCCC1",
    "CC1CCCCC1C",
    "C1CCC2CCCCC2C1",
    "CC(C)C(N)C(=O)O",
    "NCC(=O)O",
    "CC(N)C(=O)O",
    "OC(=O)CCC(=O)O",
    "OC(=O)C=CC(=O)O",
    "CCCCCCCCCC",
    "CCCCO",
    "CCOCC",
    "CC(C)(C)O",
    "CCSCC",
    "CCNCC",
    "CC(=O)NC",
    "COC(=O)C",
    "CC#N",
    "C#C",
    "C=C",
    "CC=CC",
    "CC#CC",
    "OCCO",
    "OCCN",
    "SCCS",
    "CC(=O)NCCC",
    "CCCC(=O)O",
    "CCCCN",
    "CCCCCO",
]


def systematic_fill() -> list[str]:
    """Deterministic extra molecules to round the corpus out."""
    out = []
    for halo in ("F", "Cl", "Br", "I"):
        out.append(f"{halo}CC(=O)O")
        out.append(f"{halo}c1ccc(C(=O)O)cc1")
        out.append(f"CC({halo})c1ccccn1")
    for size in (3, 4, 5, 6, 8, 9, 10):
        ring = "C1" + "C" * (size - 1) + "1"
        out.append(f"OC(=O){ring}")
    for n in (3, 5, 7, 11):
        out.append("C" * n + "O")
        out.append("C" * n + "N")
    return out


def build_corpus_200() -> list[str]:
    candidates = CURATED + systematic_fill()
    seen: set[str] = set()
    lines: list[str] = []
    for smiles in candidates:
        mol = prepare_molecule(smiles)
        digest = canonical_hash(mol)
        if digest in seen:
            raise SystemExit(f"corpus builder: structural duplicate {smiles!r}")
        if len(mol.connected_components()) != 1:
            raise SystemExit(f"corpus builder: multi-fragment entry {smiles!r}")
        seen.add(digest)
        lines.append(smiles)
    if len(lines) < 200:
        raise SystemExit(f"corpus builder: only {len(lines)} molecules, need 200")
    lines = lines[:200]
    return [f"{smiles}\tfx-{i:04d}" for i, smiles in enumerate(lines, start=1)]


# ----------------------------------------------------------------------
# Synthetic stress corpus
# ----------------------------------------------------------------------

# Fragments attachable to the indole 3-position of the composite scaffold.
BORON_TAILS = ["CB(O)O", "CCB(O)O"]
PHOSPHORUS_TAILS = ["COP(=O)(O)O", "CP(C)(C)=O"]
HALO_TAILS = ["CCl", "CBr", "CCF", "CI"]
PAINS_TAILS = [
    "CC(=O)CC(C)=O",          # beta diketone
    "Cc1ccc(O)c(O)c1",        # catechol
    "CN=NC",                  # azo (aliphatic won't match cN=Nc; use aryl below)
]
PLAIN_TAILS = ["CC", "CCO", "CCC", "CCN", "C(C)C", "CCOC"]


def composite_molecule(rng: random.Random) -> str:
    """Indole + boron + phosphorus + halogen + PAINS motif + big ring.

    Multi-positive stress molecules: positives for every task at once so the
    random-baseline AUROC floor has hundreds of subgraph graphs per task.
    """
    halo = rng.choice(["Cl", "Br", "F", "I"])
    boron = rng.choice(BORON_TAILS)
    phos = rng.choice(PHOSPHORUS_TAILS)
    pains = rng.choice(["C(=O)CC(C)=O", "C(=O)C(C)=O"])  # 1,3- or 1,2-diketone
    chain = "C" * rng.randint(1, 3)
    big_ring = "C1CCCCCC1" if rng.random() < 0.7 else "C1CCCCCCC1"
    # two extra fused aromatics push the ring count past four
    return (
        f"{halo}c1ccc2c(c1)c({chain}{pains})c(-c1ccc3ccccc3c1)n2"
        f"C({boron}){phos}.{big_ring}"
    )


def plain_molecule(rng: random.Random) -> str:
    cores = [
        "c1ccccc1", "C1CCCCC1", "c1ccncc1", "C1CCOC1", "CCCCCC",
        "c1ccc2ccccc2c1", "CC(C)CC", "c1cc[nH]c1", "C1CCNC1",
    ]
    tails = PLAIN_TAILS + ["C(=O)O", "C(=O)N", "CO", "C#N", "O", "N"]
    core = rng.choice(cores)
    tail = rng.choice(tails)
    if core.endswith("1") and rng.random() < 0.8:
        return core[:-1] + "(" + tail + ")" + "1" if core.startswith("C1") else core + tail
    return core + tail


def build_corpus_1000() -> list[str]:
    rng = random.Random(20250810)
    lines: list[str] = []
    n_composite = 620
    for i in range(n_composite):
        lines.append(composite_molecule(rng))
    while len(lines) < 960:
        lines.append(plain_molecule(rng))
    # ensure task-negative diversity and known rejects
    lines.extend([
        "C1CC",              # parse error: unmatched ring digit
        "CC(C",              # parse error: unbalanced parenthesis
        "CQ",                # parse error: unknown element
        "C=",                # parse error: dangling bond
        "",                  # empty line
        "CCO", "OCC",        # structural duplicates of each other
        "c1ccccc1", "C1=CC=CC=C1",  # kekulized duplicate
    ])
    while len(lines) < 1000:
        lines.append(plain_molecule(rng))
    rng.shuffle(lines)
    return [
        line if not line else f"{line}\tsx-{i:04d}"
        for i, line in enumerate(lines, start=1)
    ]


def main() -> None:
    os.makedirs(FIXTURES, exist_ok=True)
    corpus_200 = build_corpus_200()
    with open(os.path.join(FIXTURES, "corpus_200.smi"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(corpus_200) + "\n")
    print(f"corpus_200.smi: {len(corpus_200)} lines")

    corpus_1000 = build_corpus_1000()
    with open(os.path.join(FIXTURES, "corpus_1000.smi"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(corpus_1000) + "\n")
    print(f"corpus_1000.smi: {len(corpus_1000)} lines")


if __name__ == "__main__":
    main()
