"""Kernel classes and braid orbits (topological actions) for one signature and group.

usage: python3 scripts/braid_orbits.py "0;5,15,15" C15
"""
import sys

from primegenus.epi import braid_orbits, enumerate_epimorphisms
from primegenus.groups import group
from primegenus.signatures import parse_signature

sig = parse_signature(sys.argv[1] if len(sys.argv) > 1 else "0;5,15,15")
G = group(sys.argv[2] if len(sys.argv) > 2 else "C15")
ks = enumerate_epimorphisms(sig, G)
print(f"{sig.short()} -> {G.name}: {ks.count} kernels ({ks.n_epimorphisms} epimorphisms, |Aut|={ks.aut_order})")
if sig.gamma == 0:
    for i, orb in enumerate(braid_orbits(ks.classes)):
        print(f"  action {i}: {len(orb)} kernel classes, e.g. {ks.classes[orb[0]].labels()}")
