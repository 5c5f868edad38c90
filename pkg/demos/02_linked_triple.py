#!/usr/bin/env python3
"""The classical linked triple in Z4 x Z4, verified from scratch.

Three (16,6,2,4)-difference sets D1, D2, D3 form a reduced linking system:
every product D_i D_j^(-1) decomposes as (mu - nu) D(i,j) + nu G with
(mu, nu) = (1, 3) and each witness D(i,j) itself a difference set.  The
triple expands to a full system of 12 difference sets indexed by ordered
pairs, and its complements form a (16,10,6,4;3) system with (mu, nu)
swapped and shifted.
"""

from linkset.linking import (
    complement_system,
    expand,
    reversibility_profile,
    verify_reduced,
)
from linkset.worked_examples import linked_triple_z4z4

G, sets = linked_triple_z4z4()
for i, S in enumerate(sets, start=1):
    print(f"D{i} = {sorted(G.name(a) for a in S)}")

system = verify_reduced(G, sets)
print(f"\nverified: {system is not None}, (mu, nu) = {system.munu.as_tuple()}")
print(f"parameters: {system.params.as_tuple()}")

w = system.witnesses[(2, 1)]
print(f"witness D(2,1) = {sorted(G.name(a) for a in w.elements)}")

print(f"reversibility profile: {reversibility_profile(system)}")

full = expand(system)
print(f"\nexpanded full system: {len(full.entries)} difference sets "
      f"on indices 0..{full.top_index}")

comp = complement_system(system)
print(f"complement system: {comp.params.as_tuple()} with (mu, nu) = {comp.munu.as_tuple()}")
