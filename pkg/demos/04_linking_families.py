#!/usr/bin/env python3
"""Infinite families of reduced linking systems from difference matrices.

The main machine turns a (G/E, m, 1)-difference matrix into a reduced
linking system of size m-1 in G, for any central E = Z_2^(d+1) in a group
of order 2^(2d+2).  Four drivers package the family constructions:

  build_general        abelian, exponent up to 2^(d+1)        -> size 3
  build_improved       abelian, exponent 2^e, e <= (d+3)/2    -> size 2^floor((d+1)/(e-1)) - 1
  build_tyken          D4 x K, nonabelian                     -> size 2^(d+1) - 1
  build_nonreversible  Z4^(d+1), first member not reversible  -> size 2^(d+1) - 1
"""

from linkset.designs import is_reversible
from linkset.diffmat import (
    build_general,
    build_improved,
    build_nonreversible,
    build_tyken,
)
from linkset.groups import make_abelian
from linkset.linking import reversibility_profile

print("order 64, abelian (the difference-matrix rows of the comparison table):")
for factors in ([4, 2, 2, 2, 2], [4, 4, 2, 2], [4, 4, 4]):
    system = build_improved(make_abelian(factors))
    print(f"  Z{factors}: size {system.size}")
for factors in ([8, 2, 2, 2], [8, 4, 2]):
    system = build_general(make_abelian(factors))
    print(f"  Z{factors}: size {system.size}")

print("\norder 256:")
system = build_improved(make_abelian([4, 4, 4, 4]))
print(f"  Z4^4: size {system.size}")

print("\nnonabelian (first known examples live in D4 x K):")
for d, kfactors in ((1, [2]), (2, [2, 2, 2])):
    system = build_tyken(d, make_abelian(kfactors))
    print(f"  D4 x Z{kfactors}: order {system.group.order}, size {system.size}, "
          f"abelian: {system.group.abelian}")

print("\nnonreversible family in Z4^(d+1):")
for d in (1, 2):
    system = build_nonreversible(d)
    first = system.records[0]
    print(f"  d={d}: size {system.size}, D1 reversible: {is_reversible(first)}, "
          f"profile: {reversibility_profile(system)}")
