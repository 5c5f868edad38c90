import random

import numpy as np
import pytest

from linkset.bent import (
    BooleanFunction,
    bent_linking,
    enumerate_bent,
    is_bent,
    is_bent_set,
    kerdock_bent_set,
    subset_of,
    translate_to_zero,
    wht,
    zero_function,
)
from linkset.designs import is_difference_set
from linkset.groups import make_abelian


def naive_wht(f):
    """O(4^n) double sum straight from the definition."""
    n = f.arity
    size = 2 ** n
    out = np.zeros(size, dtype=np.int64)
    for u in range(size):
        total = 0
        for x in range(size):
            dot = bin(u & x).count("1") & 1
            total += (-1) ** (int(f.table[x]) ^ dot)
        out[u] = total
    return out


def from_anf(arity, monomials):
    """Truth table from a list of variable-index tuples (1-based), XORed."""
    table = np.zeros(2 ** arity, dtype=np.uint8)
    for x in range(2 ** arity):
        val = 0
        for mono in monomials:
            val ^= all((x >> (i - 1)) & 1 for i in mono)
        table[x] = val
    return BooleanFunction(arity, table)


QUAD44 = from_anf(4, [(1, 2), (3, 4)])  # x1 x2 + x3 x4


def test_wht_zero_function():
    w = wht(zero_function(4))
    assert w[0] == 16 and np.all(w[1:] == 0)


def test_wht_matches_naive():
    rng = random.Random(31)
    for n in (2, 3, 4, 6, 8):
        f = BooleanFunction(n, np.array([rng.randint(0, 1) for _ in range(2 ** n)],
                                        dtype=np.uint8))
        assert np.array_equal(wht(f), naive_wht(f))


def test_parseval():
    rng = random.Random(37)
    for n in (2, 4, 6, 8, 10):
        f = BooleanFunction(n, np.array([rng.randint(0, 1) for _ in range(2 ** n)],
                                        dtype=np.uint8))
        assert int((wht(f).astype(object) ** 2).sum()) == 2 ** (2 * n)


def test_is_bent():
    assert np.all(np.abs(wht(QUAD44)) == 4)
    assert is_bent(QUAD44)
    assert not is_bent(zero_function(4))
    assert is_bent(from_anf(2, [(1, 2)]))
    with pytest.raises(ValueError):
        is_bent(zero_function(3))


def test_subset_of():
    G = make_abelian([2, 2])
    f = from_anf(2, [(1, 2)])
    assert subset_of(f, G) == (G.element("x1*x2"),)
    G4 = make_abelian([2, 2, 2, 2])
    assert len(subset_of(QUAD44, G4)) == QUAD44.weight()
    with pytest.raises(ValueError):
        subset_of(QUAD44, make_abelian([4, 4]))


def test_dillon_equivalence_exhaustive():
    """bent <-> the support is a nontrivial difference set, all 2^16 functions."""
    G = make_abelian([2, 2, 2, 2])
    size = 16
    tables = np.arange(2 ** size, dtype=np.uint32)
    bits = ((tables[:, None] >> np.arange(size)[None, :]) & 1).astype(np.int8)
    from linkset.bent import wht_signs

    spectra = wht_signs(1 - 2 * bits)
    bent_mask = np.all(np.abs(spectra) == 4, axis=1)
    assert int(bent_mask.sum()) == 896

    B = bits.astype(np.int32)
    coeffs = np.empty((2 ** size, size), dtype=np.int32)
    for h in range(size):
        coeffs[:, h] = (B * B[:, G.table[h]]).sum(axis=1)
    k = B.sum(axis=1)
    ds_mask = (coeffs[:, 0] == k) & np.all(coeffs[:, 1:] == coeffs[:, 1:2], axis=1)
    nontrivial = (k >= 2) & (k <= size - 2)
    assert np.array_equal(bent_mask, ds_mask & nontrivial)


def test_dillon_spot_checks():
    G = make_abelian([2, 2, 2, 2])
    rng = random.Random(41)
    for _ in range(50):
        f = BooleanFunction(4, np.array([rng.randint(0, 1) for _ in range(16)],
                                        dtype=np.uint8))
        params = is_difference_set(G, subset_of(f, G))
        nontrivial = params is not None and 2 <= params.k <= 14
        assert is_bent(f) == nontrivial


def test_is_bent_set():
    assert is_bent_set(kerdock_bent_set(1))
    assert is_bent_set([zero_function(4), QUAD44])
    assert not is_bent_set([zero_function(4), zero_function(4)])
    with pytest.raises(ValueError):
        is_bent_set([zero_function(4), zero_function(2)])


@pytest.mark.parametrize("d,size", [(0, 2), (1, 8), (2, 32)])
def test_kerdock_sizes(d, size):
    fns = kerdock_bent_set(d)
    assert len(fns) == size
    assert fns[0].arity == 2 * d + 2
    assert any(f.is_zero() for f in fns)
    assert len(set(fns)) == size


def test_translate_to_zero():
    fns = kerdock_bent_set(1)
    shifted = [f + fns[3] for f in fns]
    back = translate_to_zero(shifted)
    assert back[0].is_zero()
    assert is_bent_set(back)
    assert translate_to_zero(back) == back  # idempotent once zero leads


def test_bent_linking_d1():
    system = bent_linking(kerdock_bent_set(1))
    assert system.size == 7
    assert system.params.as_tuple() == (16, 6, 2, 4)
    assert system.munu.as_tuple() == (1, 3)


def test_bent_linking_requires_zero_and_size():
    fns = kerdock_bent_set(1)
    with pytest.raises(ValueError):
        bent_linking([f for f in fns if not f.is_zero()])
    with pytest.raises(ValueError):
        bent_linking([zero_function(4), QUAD44])  # only one nonzero member


def test_enumerate_bent_small():
    assert len(enumerate_bent(2)) == 8
    bents4 = enumerate_bent(4)
    assert len(bents4) == 896
    assert all(is_bent(f) for f in bents4[:10])


@pytest.mark.extended
def test_bent_pipeline_d3():
    fns = kerdock_bent_set(3)
    assert len(fns) == 128 and fns[0].arity == 8
    system = bent_linking(fns)
    assert system.size == 127
    assert system.params.as_tuple() == (256, 120, 56, 64)
