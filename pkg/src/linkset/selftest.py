"""End-to-end selftest over the worked examples."""

from __future__ import annotations

from .diffmat import linked_from_dm, normalize, verify_dm, witness_direct
from .linking import reversibility_profile, verify_reduced
from .worked_examples import (
    dm_z2z2,
    linked_triple_z4z4,
    order16_worked_example,
    triple_dm_data,
    witness_21_z4z4,
)


def _check(name: str, ok: bool, verbose: bool, failures: list[str]) -> None:
    if verbose:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    if not ok:
        failures.append(name)


def run_selftest(verbose: bool = True) -> bool:
    failures: list[str] = []

    G, sets = linked_triple_z4z4()
    system = verify_reduced(G, sets)
    _check("linked triple in Z4xZ4 verifies", system is not None, verbose, failures)
    if system is not None:
        _check("triple has (mu, nu) = (1, 3)", system.munu.as_tuple() == (1, 3),
               verbose, failures)
        _check("triple witness (2,1) matches",
               system.witnesses[(2, 1)].elements == witness_21_z4z4(G), verbose, failures)
        _check("triple reversibility profile (T, F, F)",
               reversibility_profile(system) == (True, False, False), verbose, failures)

    E, family, bmat, emat = triple_dm_data(G)
    rebuilt = linked_from_dm(G, E, bmat, emat, family=family)
    _check("matrix data reproduces the triple",
           {r.elements for r in rebuilt.records} == {tuple(s) for s in sets},
           verbose, failures)

    M = dm_z2z2()
    _check("(Z2^2, 4, 1) matrix verifies", verify_dm(M), verbose, failures)
    _check("matrix is normalization fixed point", normalize(M).rows == M.rows,
           verbose, failures)

    G16, E16, family16, b16, e16, expected, witness23 = order16_worked_example()
    system16 = linked_from_dm(G16, E16, b16, e16, family=family16)
    _check("order-16 worked example reproduces its three sets",
           [r.elements for r in system16.records] == expected, verbose, failures)
    _check("order-16 witness (2,3) matches",
           system16.witnesses[(2, 3)].elements == witness23, verbose, failures)
    f_reps = [G16.mul(b16[2][j], e16[1][j - 1]) for j in range(1, 4)]
    g_reps = [G16.mul(b16[3][j], e16[2][j - 1]) for j in range(1, 4)]
    _check("direct witness formula agrees",
           witness_direct(G16, family16, f_reps, g_reps) == witness23, verbose, failures)

    if verbose and not failures:
        print("all selftest checks passed")
    return not failures
