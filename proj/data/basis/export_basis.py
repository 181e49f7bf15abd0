#!/usr/bin/env python3
# Copyright 2026 The qforce Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the embedded basis-set files (H-Ar) in Gaussian94 layout.

Source data: the basis library shipped with PySCF, which mirrors the
Basis Set Exchange. Run from this directory; rewrites *.g94 and MANIFEST.
"""
from pyscf import gto

ELEMENTS = ["H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne",
            "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"]
BASES = {"sto-3g": "STO-3G", "6-31g": "6-31G", "6-31g*": "6-31G*"}
LETTERS = "SPDF"


def fnv1a64(data: bytes) -> int:
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def main():
    manifest = []
    for key, name in BASES.items():
        lines = [f"! {name} for H-Ar, Cartesian shells, exported from PySCF/BSE data", "****"]
        for el in ELEMENTS:
            try:
                shells = gto.basis.load(key, el)
            except Exception:
                continue
            lines.append(f"{el}     0")
            for sh in shells:
                l = sh[0]
                prims = sh[1:]
                ncol = len(prims[0]) - 1
                for col in range(ncol):
                    lines.append(f"{LETTERS[l]}   {len(prims)}   1.00")
                    for p in prims:
                        lines.append(f"   {p[0]:>20.10E} {p[1 + col]:>20.10E}")
            lines.append("****")
        text = "\n".join(lines) + "\n"
        fname = key.replace("*", "s") + ".g94"
        with open(fname, "w") as f:
            f.write(text)
        manifest.append(f"{name} {fname} {fnv1a64(text.encode()):016x}")
    with open("MANIFEST", "w") as f:
        f.write("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
