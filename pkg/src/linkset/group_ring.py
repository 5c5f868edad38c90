"""Exact integer group-ring arithmetic over a finite group.

A ring element is an int64 coefficient vector indexed by element id.  All
operations are pure; products respect the group's multiplication order, so
nonabelian groups are handled correctly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup


@dataclass(frozen=True)
class GroupRingElement:
    group: FiniteGroup
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.int64)
        if arr.shape != (self.group.order,):
            raise ValueError("coefficient vector length must equal the group order")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupRingElement)
                and self.group is other.group
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((id(self.group), self.coeffs.tobytes()))

    def __repr__(self) -> str:
        terms = [f"{int(c)}*{self.group.name(i)}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def zero(G: FiniteGroup) -> GroupRingElement:
    return GroupRingElement(G, np.zeros(G.order, dtype=np.int64))


def one(G: FiniteGroup) -> GroupRingElement:
    c = np.zeros(G.order, dtype=np.int64)
    c[0] = 1
    return GroupRingElement(G, c)


def all_ones(G: FiniteGroup) -> GroupRingElement:
    """The element G = sum of all group elements."""
    return GroupRingElement(G, np.ones(G.order, dtype=np.int64))


def from_subset(G: FiniteGroup, S) -> GroupRingElement:
    c = np.zeros(G.order, dtype=np.int64)
    for a in S:
        if not 0 <= int(a) < G.order:
            raise ValueError(f"element id {a} out of range")
        if c[int(a)]:
            raise ValueError("subset contains a repeated element")
        c[int(a)] = 1
    return GroupRingElement(G, c)


def is_subset(x: GroupRingElement):
    """The support as a sorted tuple iff all coefficients are 0 or 1."""
    c = x.coeffs
    if np.all((c == 0) | (c == 1)):
        return tuple(int(i) for i in np.nonzero(c)[0])
    return None


def _same_group(x: GroupRingElement, y: GroupRingElement) -> FiniteGroup:
    if x.group is not y.group:
        raise ValueError("group-ring operands live in different groups")
    return x.group


def add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(_same_group(x, y), x.coeffs + y.coeffs)


def sub(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(_same_group(x, y), x.coeffs - y.coeffs)


def scale(k: int, x: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(x.group, int(k) * x.coeffs)


def mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution: the coefficient of g*h accumulates x[g]*y[h]."""
    G = _same_group(x, y)
    out = np.zeros(G.order, dtype=np.int64)
    table, inv = G.table, G.inv_table
    support = np.nonzero(x.coeffs)[0]
    # out[g*h] += x[g]*y[h]  <=>  out += x[g] * y[g^-1 * (.)]
    for g in support:
        out += x.coeffs[g] * y.coeffs[table[inv[g]]]
    return GroupRingElement(G, out)


def involution(x: GroupRingElement) -> GroupRingElement:
    """Move the coefficient of g to g^-1 (the map S -> S^(-1))."""
    out = np.zeros_like(x.coeffs)
    out[x.group.inv_table] = x.coeffs
    return GroupRingElement(x.group, out)


def decompose_two_valued(x: GroupRingElement, mu: int, nu: int):
    """Solve x = (mu - nu)*D + nu*G for a subset D, if possible.

    Returns the support of D (coefficient mu positions) as a sorted tuple
    when every coefficient of x is mu or nu; otherwise None.
    """
    if mu == nu:
        raise ValueError("mu and nu must be distinct")
    c = x.coeffs
    if not np.all((c == mu) | (c == nu)):
        return None
    return tuple(int(i) for i in np.nonzero(c == mu)[0])
