"""Finite groups on dense element ids 0..v-1 with precomputed tables.

Element id 0 is always the identity.  Every group carries a full v x v
multiplication table (groups here are desk-scale, v <= 4096), an inverse
table, and printable element names built from generator words such as
``x1^3*x2`` or ``a^2*b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

MAX_TABLE_ORDER = 4096


class FiniteGroup:
    """A finite group with elements 0..order-1 and id 0 the identity."""

    def __init__(
        self,
        table: np.ndarray,
        names: list[str],
        generators: list[tuple[str, int]],
        spec: object,
        cyclic_factors: tuple[int, ...] | None = None,
    ):
        self.table = np.ascontiguousarray(table, dtype=np.int32)
        self.order = int(self.table.shape[0])
        if self.order > MAX_TABLE_ORDER:
            raise ValueError(f"group order {self.order} exceeds table limit {MAX_TABLE_ORDER}")
        self.names = list(names)
        self.generators = list(generators)
        self.spec = spec
        self.cyclic_factors = cyclic_factors
        self.inv_table = _invert_table(self.table)
        self.abelian = bool(np.array_equal(self.table, self.table.T))
        self._name_to_id = {n: i for i, n in enumerate(self.names)}
        self._validate()

    def _validate(self) -> None:
        v = self.order
        ids = np.arange(v)
        if not np.array_equal(self.table[0], ids):
            raise ValueError("id 0 is not a left identity")
        if not np.array_equal(self.table[:, 0], ids):
            raise ValueError("id 0 is not a right identity")
        # cancellation: each row and each column is a permutation
        if not np.array_equal(np.sort(self.table, axis=1), np.broadcast_to(ids, (v, v))):
            raise ValueError("a table row is not a permutation")
        if not np.array_equal(np.sort(self.table, axis=0), np.broadcast_to(ids[:, None], (v, v))):
            raise ValueError("a table column is not a permutation")

    # -- basic operations ----------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inv_table[a])

    def elements(self) -> range:
        return range(self.order)

    def name(self, a: int) -> str:
        return self.names[a]

    def element(self, name: str) -> int:
        """Parse a generator word like ``x1^3*x2`` (identity is ``1``)."""
        name = name.strip()
        if name in self._name_to_id:
            return self._name_to_id[name]
        if name == "1":
            return 0
        gens = dict(self.generators)
        acc = 0
        for token in name.split("*"):
            token = token.strip()
            if "^" in token:
                base, _, exp = token.partition("^")
                e = int(exp)
            else:
                base, e = token, 1
            if base not in gens:
                raise ValueError(f"unknown generator {base!r} in element name {name!r}")
            g = gens[base]
            e %= self.element_order(g)
            for _ in range(e):
                acc = self.mul(acc, g)
        return acc

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def power(self, a: int, e: int) -> int:
        e %= self.element_order(a)
        x = 0
        for _ in range(e):
            x = self.mul(x, a)
        return x

    def __repr__(self) -> str:
        kind = "abelian" if self.abelian else "nonabelian"
        return f"FiniteGroup(order={self.order}, {kind}, spec={self.spec!r})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element-id list."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        G = self.group
        eset = set(elems)
        if 0 not in eset:
            raise ValueError("subgroup must contain the identity")
        for a in elems:
            if G.inv(a) not in eset:
                raise ValueError("subgroup not closed under inverses")
            for b in elems:
                if G.mul(a, b) not in eset:
                    raise ValueError("subgroup not closed under products")
        if G.order % len(elems) != 0:
            raise ValueError("subgroup order does not divide group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in set(self.elements)


@dataclass(frozen=True)
class CosetTransversal:
    """One representative per left coset of a subgroup; identity represents H."""

    subgroup: Subgroup
    reps: tuple[int, ...]

    def __post_init__(self):
        G = self.subgroup.group
        seen: set[int] = set()
        for r in self.reps:
            coset = frozenset(G.mul(r, h) for h in self.subgroup.elements)
            if seen & coset:
                raise ValueError("coset representatives overlap")
            seen |= coset
        if len(seen) != G.order:
            raise ValueError("coset representatives do not cover the group")


def _invert_table(table: np.ndarray) -> np.ndarray:
    v = table.shape[0]
    inv = np.empty(v, dtype=np.int32)
    rows, cols = np.nonzero(table == 0)
    inv[rows] = cols
    return inv


# -- constructors -------------------------------------------------------------


def make_abelian(invariant_factors: list[int] | tuple[int, ...]) -> FiniteGroup:
    """Direct product of cyclic groups; elements are mixed-radix exponent tuples.

    Generators are named x1, x2, ...; factor i is most significant in the id
    encoding, so the identity (all exponents zero) is id 0.
    """
    factors = tuple(int(n) for n in invariant_factors)
    if any(n < 2 for n in factors):
        raise ValueError("cyclic factors must be >= 2")
    v = 1
    for n in factors:
        v *= n
    exps = _abelian_exponents(factors, v)
    weights = _radix_weights(factors)
    table = ((exps[:, None, :] + exps[None, :, :]) % np.array(factors)) @ weights
    gen_names = [f"x{i+1}" for i in range(len(factors))]
    names = [_word_name(gen_names, e) for e in exps]
    gens = [(gen_names[i], int(weights[i])) for i in range(len(factors))]
    return FiniteGroup(table, names, gens, {"abelian": list(factors)}, cyclic_factors=factors)


def _radix_weights(factors: tuple[int, ...]) -> np.ndarray:
    w = np.ones(len(factors), dtype=np.int64)
    for i in range(len(factors) - 2, -1, -1):
        w[i] = w[i + 1] * factors[i + 1]
    return w


def _abelian_exponents(factors: tuple[int, ...], v: int) -> np.ndarray:
    exps = np.zeros((v, len(factors)), dtype=np.int64)
    ids = np.arange(v)
    for i in range(len(factors) - 1, -1, -1):
        exps[:, i] = ids % factors[i]
        ids //= factors[i]
    return exps


def _word_name(gen_names: list[str], exps) -> str:
    parts = []
    for g, e in zip(gen_names, exps):
        e = int(e)
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts) if parts else "1"


def abelian_exponent_tuple(G: FiniteGroup, a: int) -> tuple[int, ...]:
    """Exponent tuple of element a w.r.t. the cyclic factors of make_abelian."""
    if G.cyclic_factors is None:
        raise ValueError("group was not built from cyclic factors")
    exps = []
    for n in reversed(G.cyclic_factors):
        exps.append(a % n)
        a //= n
    return tuple(reversed(exps))


def abelian_element(G: FiniteGroup, exps) -> int:
    if G.cyclic_factors is None:
        raise ValueError("group was not built from cyclic factors")
    a = 0
    for n, e in zip(G.cyclic_factors, exps):
        a = a * n + (int(e) % n)
    return a


def _presentation_order8(twist: int, name: str) -> FiniteGroup:
    """Order-8 group <a,b> with a^4=1, b a b^-1 = a^-1, b^2 = a^twist."""
    ids = [(i, j) for j in range(2) for i in range(4)]  # id = i + 4j
    idx = {e: k for k, e in enumerate(ids)}
    table = np.zeros((8, 8), dtype=np.int32)
    for (i1, j1) in ids:
        for (i2, j2) in ids:
            i = (i1 + (i2 if j1 == 0 else -i2) + twist * j1 * j2) % 4
            j = (j1 + j2) % 2
            table[idx[(i1, j1)], idx[(i2, j2)]] = idx[(i, j)]
    names = [_word_name(["a", "b"], (i, j)) for (i, j) in ids]
    gens = [("a", idx[(1, 0)]), ("b", idx[(0, 1)])]
    return FiniteGroup(table, names, gens, name)


def make_dihedral8() -> FiniteGroup:
    """Dihedral group of order 8: a^4 = b^2 = 1, b a b^-1 = a^-1."""
    return _presentation_order8(0, "D4")


def make_quaternion8() -> FiniteGroup:
    """Quaternion group of order 8: a^4 = 1, b^2 = a^2, b a b^-1 = a^-1."""
    return _presentation_order8(2, "Q8")


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """Componentwise product; ids are packed as a*|G2| + b, names concatenate."""
    v1, v2 = G1.order, G2.order
    t1 = G1.table.astype(np.int64)
    t2 = G2.table.astype(np.int64)
    # T[(a1,b1),(a2,b2)] = (t1[a1,a2], t2[b1,b2])
    table = (np.kron(t1, np.ones((v2, v2), dtype=np.int64)) * v2
             + np.kron(np.ones((v1, v1), dtype=np.int64), t2))
    names, gens = _product_names(G1, G2)
    factors = None
    if G1.cyclic_factors is not None and G2.cyclic_factors is not None:
        factors = G1.cyclic_factors + G2.cyclic_factors
    return FiniteGroup(table, names, gens, {"product": [G1.spec, G2.spec]},
                       cyclic_factors=factors)


def _product_names(G1: FiniteGroup, G2: FiniteGroup) -> tuple[list[str], list[tuple[str, int]]]:
    # renumber abelian generators x1..xk across the product; keep a/b as is
    rename1, rename2 = {}, {}
    counter = itertools.count(1)
    for (gname, _), rename in [(g, rename1) for g in G1.generators] + [(g, rename2) for g in G2.generators]:
        rename[gname] = f"x{next(counter)}" if gname.startswith("x") else gname
    named = set(rename1.values())
    if named & set(rename2.values()):
        raise ValueError("generator name collision in direct product")
    v2 = G2.order

    def combined(a: int, b: int) -> str:
        p1 = _rename_word(G1.names[a], rename1)
        p2 = _rename_word(G2.names[b], rename2)
        parts = [p for p in (p1, p2) if p != "1"]
        return "*".join(parts) if parts else "1"

    names = [combined(a, b) for a in range(G1.order) for b in range(v2)]
    gens = [(rename1[n], i * v2) for n, i in G1.generators]
    gens += [(rename2[n], i) for n, i in G2.generators]
    return names, gens


def _rename_word(word: str, rename: dict[str, str]) -> str:
    if word == "1":
        return word
    out = []
    for token in word.split("*"):
        base, sep, exp = token.partition("^")
        out.append(rename[base] + sep + exp)
    return "*".join(out)


def group_from_spec(spec: object) -> FiniteGroup:
    """Build a group from its JSON description.

    Accepted forms: ``{"abelian": [4,4]}``, ``"D4"``, ``"Q8"``, and
    ``{"product": [spec1, spec2]}`` nesting any of these.
    """
    if spec == "D4":
        return make_dihedral8()
    if spec == "Q8":
        return make_quaternion8()
    if isinstance(spec, dict) and "abelian" in spec:
        return make_abelian(spec["abelian"])
    if isinstance(spec, dict) and "product" in spec:
        parts = spec["product"]
        if len(parts) != 2:
            raise ValueError("product spec must have exactly two factors")
        return direct_product(group_from_spec(parts[0]), group_from_spec(parts[1]))
    raise ValueError(f"unrecognized group spec {spec!r}")


# -- structure operations ------------------------------------------------------


def center(G: FiniteGroup) -> Subgroup:
    mask = np.all(G.table == G.table.T, axis=1)
    return Subgroup(G, tuple(int(i) for i in np.nonzero(mask)[0]))


def exponent(G: FiniteGroup) -> int:
    exp = 1
    for a in G.elements():
        exp = _lcm(exp, G.element_order(a))
    return exp


def _lcm(a: int, b: int) -> int:
    import math

    return a * b // math.gcd(a, b)


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Primary cyclic factors (sorted descending) of an abelian group.

    For each prime p let d_k = log_p #{g : g^(p^k) = 1}; the number of
    factors of order exactly p^k is 2*d_k - d_(k-1) - d_(k+1).
    """
    if not G.abelian:
        raise ValueError("abelian invariants require an abelian group")
    orders = [G.element_order(a) for a in G.elements()]
    out: list[int] = []
    for p in _prime_factors(G.order):
        dims = [0]
        k = 1
        while True:
            cnt = sum(1 for o in orders if (p ** k) % o == 0)
            dims.append(_ilog(cnt, p))
            if k > 1 and dims[-1] == dims[-2]:
                break
            k += 1
        dims.append(dims[-1])
        for k in range(1, len(dims) - 1):
            mult = 2 * dims[k] - dims[k - 1] - dims[k + 1]
            out.extend([p ** k] * mult)
    return tuple(sorted(out, reverse=True))


def _ilog(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_rank(G: FiniteGroup) -> int:
    """Number of cyclic factors in the invariant decomposition (abelian only)."""
    if not G.abelian:
        raise ValueError("rank is defined here for abelian groups only")
    inv = abelian_invariants(G)
    primes = {_prime_factors(n)[0] for n in inv}
    return max(sum(1 for n in inv if n % p == 0) for p in primes)


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    closure = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    while frontier:
        a = frontier.pop()
        for g in gens:
            for b in (G.mul(a, g), G.mul(g, a)):
                if b not in closure:
                    closure.add(b)
                    frontier.append(b)
    return Subgroup(G, tuple(sorted(closure)))


def is_central(G: FiniteGroup, S) -> bool:
    elems = S.elements if isinstance(S, Subgroup) else S
    sub = G.table[:, list(elems)]
    return bool(np.array_equal(sub, G.table[list(elems), :].T))


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    nset = set(N.elements)
    for g in G.elements():
        for h in N.elements:
            if G.mul(G.mul(g, h), G.inv(g)) not in nset:
                return False
    return True


def quotient(G: FiniteGroup, N: Subgroup):
    """Quotient group on coset ids plus the projection map g -> coset id.

    Coset ids are assigned in increasing order of the minimal element id in
    each coset, so the image of the identity is 0.
    """
    if N.group is not G:
        raise ValueError("subgroup belongs to a different group")
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal; quotient undefined")
    proj = np.full(G.order, -1, dtype=np.int32)
    reps: list[int] = []
    for a in G.elements():
        if proj[a] == -1:
            cid = len(reps)
            reps.append(a)
            for h in N.elements:
                proj[G.mul(a, h)] = cid
    q = len(reps)
    table = np.zeros((q, q), dtype=np.int32)
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            table[i, j] = proj[G.mul(r, s)]
    names = [G.names[r] for r in reps]
    gens = [(f"c{i}", i) for i in range(1, q)]  # quotient generators unnamed; expose all cosets
    Q = FiniteGroup(table, names, gens, {"quotient": [G.spec, list(N.elements)]})
    return Q, proj


def coset_transversal(G: FiniteGroup, H: Subgroup) -> CosetTransversal:
    """Minimum element id per left coset, sorted; identity represents H."""
    if H.group is not G:
        raise ValueError("subgroup belongs to a different group")
    seen = np.zeros(G.order, dtype=bool)
    reps = []
    for a in G.elements():
        if not seen[a]:
            reps.append(a)
            for h in H.elements:
                seen[G.mul(a, h)] = True
    return CosetTransversal(H, tuple(reps))


def find_central_elementary_abelian(G: FiniteGroup, rank: int, p: int = 2) -> list[Subgroup]:
    """All central subgroups isomorphic to Z_p^rank, in deterministic order.

    Enumerates within the elements of order dividing p inside the center,
    viewing them as a GF(p) vector space and walking echelon-form bases.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    Z = center(G)
    torsion = [a for a in Z.elements if G.power(a, p) == 0]
    basis = _independent_basis(G, torsion, p)
    t = len(basis)
    if t < rank:
        return []
    span, coords = _span_table(G, basis, p)
    out = []
    for rows in _echelon_bases(t, rank, p):
        gens = [span[_coord_to_index(r, p)] for r in rows]
        sub = subgroup_generated(G, gens)
        out.append(sub)
    out.sort(key=lambda s: s.elements)
    del coords
    return out


def _independent_basis(G: FiniteGroup, torsion: list[int], p: int) -> list[int]:
    basis: list[int] = []
    spanned = {0}
    for a in sorted(torsion):
        if a not in spanned:
            basis.append(a)
            spanned = {G.mul(x, G.power(a, e)) for x in spanned for e in range(p)}
    return basis


def _span_table(G: FiniteGroup, basis: list[int], p: int):
    t = len(basis)
    span = []
    coords = {}
    for vec in itertools.product(range(p), repeat=t):
        x = 0
        for b, e in zip(basis, vec):
            x = G.mul(x, G.power(b, e))
        span.append(x)
        coords[x] = vec
    return span, coords


def _coord_to_index(vec: tuple[int, ...], p: int) -> int:
    idx = 0
    for e in vec:
        idx = idx * p + e
    return idx


def _echelon_bases(t: int, r: int, p: int):
    """Reduced-echelon r x t matrices over GF(p); one per r-dim subspace."""
    for pivots in itertools.combinations(range(t), r):
        free_pos = []
        for i in range(r):
            for j in range(t):
                if j > pivots[i] and j not in pivots:
                    free_pos.append((i, j))
        for values in itertools.product(range(p), repeat=len(free_pos)):
            rows = []
            for i in range(r):
                row = [0] * t
                row[pivots[i]] = 1
                rows.append(row)
            for (i, j), val in zip(free_pos, values):
                rows[i][j] = val
            yield [tuple(row) for row in rows]
