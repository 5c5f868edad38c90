#!/usr/bin/env python3
"""Bent functions and the largest known linking systems in Z_2^(2d+2).

A Boolean function on 2d+2 bits is bent when its Walsh-Hadamard spectrum
is flat; its support is then a difference set.  A bent set is a family
whose pairwise sums are all bent; pushing a maximum bent set (a Kerdock
set, size 2^(2d+1)) through the support map yields a reduced linking
system of size 2^(2d+1) - 1, the largest known in elementary abelian
2-groups.
"""

from linkset.bent import (
    bent_linking,
    is_bent_set,
    kerdock_bent_set,
    subset_of,
    wht,
)
from linkset.designs import is_difference_set
from linkset.groups import make_abelian

for d in (1, 2):
    fns = kerdock_bent_set(d)
    arity = fns[0].arity
    print(f"d={d}: bent set of size {len(fns)} on {arity} bits; "
          f"verified: {is_bent_set(fns)}")
    f = fns[1]
    print(f"  sample member: weight {f.weight()}, spectrum values "
          f"{sorted(set(wht(f + fns[0]).tolist()))}")
    G = make_abelian([2] * arity)
    S = subset_of(f, G)
    print(f"  its support is a difference set: {is_difference_set(G, S).as_tuple()}")

for d in (1, 2):
    system = bent_linking(kerdock_bent_set(d))
    print(f"d={d}: reduced linking system of size {system.size} "
          f"with parameters {system.params.as_tuple()}, (mu, nu) = {system.munu.as_tuple()}")
