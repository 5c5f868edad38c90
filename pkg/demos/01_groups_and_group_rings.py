#!/usr/bin/env python3
"""Tour of the group layer and exact group-ring arithmetic.

Builds a few of the groups used throughout the library, shows how elements
are named, and verifies the basic difference-set identity D D^(-1) =
n*1 + lambda*G on a first example.
"""

from linkset import group_ring as rg
from linkset.groups import (
    center,
    direct_product,
    exponent,
    make_abelian,
    make_dihedral8,
    make_quaternion8,
    quotient,
    subgroup_generated,
)

# Abelian groups come from their cyclic factor lists; generators are named
# x1, x2, ... and elements print as generator words.
G = make_abelian([4, 4])
print(f"Z4 x Z4: order {G.order}, exponent {exponent(G)}")
x, y = G.element("x1"), G.element("x2")
print(f"  x*y has name {G.name(G.mul(x, y))!r}, inverse {G.name(G.inv(G.mul(x, y)))!r}")

# The two nonabelian building blocks of order 8.
D4 = make_dihedral8()
Q8 = make_quaternion8()
print(f"D4: center {[D4.name(a) for a in center(D4).elements]}, "
      f"elements of order 4: {sum(1 for a in D4.elements() if D4.element_order(a) == 4)}")
print(f"Q8: elements of order 2: {sum(1 for a in Q8.elements() if Q8.element_order(a) == 2)}")

# Direct products concatenate names; central quotients collapse to smaller groups.
GK = direct_product(D4, make_abelian([2]))
print(f"D4 x Z2: order {GK.order}, abelian: {GK.abelian}")
Zq, proj = quotient(D4, subgroup_generated(D4, [D4.element("a^2")]))
print(f"D4 / <a^2>: order {Zq.order}, exponent {exponent(Zq)}  (the Klein four-group)")

# Group-ring arithmetic is exact: a 6-element difference set in Z4 x Z4
# satisfies D D^(-1) = 4*1 + 2*G.
D = [G.element(w) for w in ("x1", "x1^3*x2", "x2^3", "x1^3", "x1*x2^3", "x2")]
d = rg.from_subset(G, D)
prod = rg.mul(d, rg.involution(d))
print(f"\nD = {sorted(G.name(a) for a in D)}")
print(f"D D^(-1) coefficients: {prod.coeffs.tolist()}")
expected = rg.add(rg.scale(4, rg.one(G)), rg.scale(2, rg.all_ones(G)))
print(f"equals 4*1 + 2*G: {prod == expected}")
