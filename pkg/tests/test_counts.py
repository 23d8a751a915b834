import itertools
from fractions import Fraction
from math import factorial

import pytest

from hurwitz.counts import (
    HurwitzRequest,
    Profile,
    canonical_permutation,
    connected_series_character,
    cycle_type,
    disconnected_series_character,
    fock_shifted_coefficient,
    hurwitz_number,
    oracle_group_algebra,
    request_status,
    result_record,
)
from hurwitz.kinds import ALL_KINDS, HurwitzKind as K
from hurwitz.partitions import enumerate_partitions


def one_point_closed(kind, r, quotient):
    mu, nu = r * quotient, quotient
    if kind is K.MONOTONE:
        return Fraction(factorial(mu + nu - 2), factorial(mu) * factorial(nu))
    return Fraction(factorial(mu - 1), factorial(mu - nu + 1) * factorial(nu))


def test_profile():
    p = Profile((5, 3, 2), 2)
    assert p.degree == 10
    assert p.quotients() == (2, 1, 1)
    assert p.residues() == (1, 1, 0)
    with pytest.raises(ValueError):
        Profile((0,), 2)


def test_branch_count_and_status():
    req = HurwitzRequest(K.MONOTONE, 2, 0, (2,))
    assert req.branch_count() == 0
    assert request_status(req) is None
    req = HurwitzRequest(K.MONOTONE, 2, 0, (1,))
    assert request_status(req) is not None
    assert hurwitz_number(req) == 0


def test_disconnected_series_examples():
    s = disconnected_series_character(K.USUAL, 1, (2,), 2)
    assert s.coefficient(u=1) == Fraction(1, 2)
    s = disconnected_series_character(K.MONOTONE, 2, (2,), 2)
    assert s.coefficient(u=0) == Fraction(1, 2)
    s = disconnected_series_character(K.MONOTONE, 2, (3,), 2)
    assert s.is_zero()


def test_hurwitz_number_examples():
    assert hurwitz_number(HurwitzRequest(K.MONOTONE, 1, 0, (1,))) == 1
    # one-point genus 0 at mu=2, r=2: the closed form gives 1/2
    assert hurwitz_number(HurwitzRequest(K.STRICT, 2, 0, (2,))) == Fraction(1, 2)
    assert hurwitz_number(HurwitzRequest(K.MONOTONE, 2, 0, (2, 2))) == Fraction(3, 2)
    assert hurwitz_number(HurwitzRequest(K.MONOTONE, 2, 0, (1, 3))) == 2


def test_one_point_closed_forms():
    for kind in (K.MONOTONE, K.STRICT):
        for r in (1, 2, 3):
            for q in (1, 2):
                got = hurwitz_number(HurwitzRequest(kind, r, 0, (r * q,)))
                assert got == one_point_closed(kind, r, q), (kind, r, q)


def test_oracle_examples():
    assert oracle_group_algebra(K.USUAL, 1, 1, (2,)) == Fraction(1, 2)
    assert oracle_group_algebra(K.MONOTONE, 1, 0, (1,)) == 1
    # C_{(2)} * J_2 = id has no (12)-coefficient; both routes give 0
    assert oracle_group_algebra(K.STRICT, 2, 1, (2,)) == 0
    assert disconnected_series_character(K.STRICT, 2, (2,), 1).coefficient(u=1) == 0


def test_oracle_calibration_against_one_point_closed_forms():
    # pin the oracle normalization to the closed (0,1) values before the sweep
    for kind in (K.MONOTONE, K.STRICT):
        for r in (1, 2, 3):
            for q in (1, 2):
                mu = r * q
                if mu > 6:
                    continue
                b = q - 1
                assert oracle_group_algebra(kind, r, b, (mu,)) == \
                    one_point_closed(kind, r, q), (kind, r, q)


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_group_algebra(K.USUAL, 1, 1, (7,))


def test_permutation_helpers():
    p = canonical_permutation((3, 2))
    assert cycle_type(p) == (3, 2)
    assert canonical_permutation((2,)) == (1, 0)


def test_route_agreement_small():
    # spot grid here; the full desk-scale sweep lives in the acceptance suite
    for kind in ALL_KINDS:
        for r in (1, 2):
            for d in (1, 2, 3, 4):
                if d % r:
                    continue
                for mus in enumerate_partitions(d):
                    for b in range(4):
                        o = oracle_group_algebra(kind, r, b, mus)
                        c = disconnected_series_character(kind, r, mus, b).coefficient(u=b)
                        assert o == c, (kind, r, mus, b)


def test_connected_vs_fock_small():
    for kind in ALL_KINDS:
        for r, mus in [(1, (1, 1)), (1, (2, 1)), (2, (2, 2)), (2, (1, 1, 2)), (3, (3,))]:
            ch = connected_series_character(kind, r, mus, 4)
            for b in range(5):
                assert ch.coefficient(u=b) == fock_shifted_coefficient(kind, r, mus, b, True), \
                    (kind, r, mus, b)


def test_symmetry_under_permutation():
    for kind in ALL_KINDS:
        a = connected_series_character(kind, 2, (1, 2, 3), 4)
        b = connected_series_character(kind, 2, (3, 1, 2), 4)
        for e in range(5):
            assert a.coefficient(u=e) == b.coefficient(u=e)


def test_nonnegativity_of_connected_numbers():
    for kind in ALL_KINDS:
        for r in (1, 2):
            for d in range(1, 6):
                if d % r:
                    continue
                for mus in enumerate_partitions(d):
                    for g in range(3):
                        req = HurwitzRequest(kind, r, g, mus)
                        if request_status(req) is None:
                            assert hurwitz_number(req) >= 0, (kind, r, mus, g)


def test_domination_monotone_over_strict():
    # strictly monotone sequences are a subset of the monotone ones
    for r in (1, 2):
        for d in range(1, 6):
            if d % r:
                continue
            for mus in enumerate_partitions(d):
                mono = disconnected_series_character(K.MONOTONE, r, mus, 5)
                strict = disconnected_series_character(K.STRICT, r, mus, 5)
                for b in range(6):
                    assert mono.coefficient(u=b) >= strict.coefficient(u=b), (r, mus, b)


def test_vanishing_conditions():
    # r does not divide d <=> b is not an integer; both flagged and zero
    req = HurwitzRequest(K.USUAL, 3, 0, (2, 2))
    assert request_status(req) is not None
    assert hurwitz_number(req) == 0
    for method in ("character", "oracle", "fock"):
        req = HurwitzRequest(K.MONOTONE, 2, 0, (3,), method=method)
        assert hurwitz_number(req) == 0


def test_result_record():
    req = HurwitzRequest(K.MONOTONE, 2, 0, (1, 3))
    rec = result_record(req, Fraction(2))
    assert rec == {"kind": "monotone", "r": 2, "g": 0, "mu": [1, 3],
                   "connected": True, "method": "character", "value": "2"}


def _transpositions(d):
    return [(i, k) for k in range(1, d) for i in range(k)]


def _apply_transposition(p, t):
    i, k = t
    q = list(p)
    q[i], q[k] = q[k], q[i]
    return tuple(q)


def _is_transitive(d, perms):
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, j in enumerate(p):
            parent[find(i)] = find(j)
    return len({find(i) for i in range(d)}) == 1


def direct_count(kind, r, mus, b, connected):
    """First-principles enumeration of weighted transposition factorizations.

    Counts tuples (pi, tau_1..tau_b) with pi of cycle type (r^{d/r}),
    pi . tau_1 ... tau_b equal to one fixed permutation of cycle type mus,
    maxima of the transpositions weakly (monotone) or strictly (strictly
    monotone) increasing, or unconstrained with a 1/b! weight (usual);
    connected counts keep only transitive monodromy. Exponential cost.
    """
    d = sum(mus)
    if d % r:
        return Fraction(0)
    sigma0 = canonical_permutation(mus)
    orb_type = tuple(sorted((r,) * (d // r), reverse=True))
    orbifold_perms = [p for p in itertools.permutations(range(d))
                      if cycle_type(p) == orb_type]
    taus = _transpositions(d)
    total = Fraction(0)
    for pi in orbifold_perms:
        for tuple_taus in itertools.product(taus, repeat=b):
            maxima = [t[1] for t in tuple_taus]
            if kind is K.MONOTONE and any(maxima[j] > maxima[j + 1]
                                          for j in range(b - 1)):
                continue
            if kind is K.STRICT and any(maxima[j] >= maxima[j + 1]
                                        for j in range(b - 1)):
                continue
            prod_perm = pi
            for t in tuple_taus:
                prod_perm = _apply_transposition(prod_perm, t)
            if prod_perm != sigma0:
                continue
            if connected:
                gens = [pi, sigma0] + [
                    _apply_transposition(tuple(range(d)), t) for t in tuple_taus]
                if not _is_transitive(d, gens):
                    continue
            total += 1
    if kind is K.USUAL:
        total /= factorial(b)
    return total / prod_mus(mus)


def prod_mus(mus):
    out = 1
    for m in mus:
        out *= m
    return out


def test_routes_match_direct_enumeration():
    cases = [
        (1, (3,)), (1, (2, 1)), (1, (1, 1)), (1, (4,)), (1, (2, 2)),
        (2, (2,)), (2, (4,)), (2, (2, 2)), (2, (1, 3)), (2, (1, 1, 2)),
        (3, (3,)), (3, (2, 1)), (4, (4,)),
    ]
    for kind in ALL_KINDS:
        for r, mus in cases:
            for b in range(4):
                direct_disc = direct_count(kind, r, mus, b, connected=False)
                char_disc = disconnected_series_character(kind, r, mus, b).coefficient(u=b)
                assert direct_disc == char_disc, ("disc", kind, r, mus, b,
                                                  direct_disc, char_disc)
                direct_conn = direct_count(kind, r, mus, b, connected=True)
                char_conn = connected_series_character(kind, r, mus, b).coefficient(u=b)
                assert direct_conn == char_conn, ("conn", kind, r, mus, b,
                                                  direct_conn, char_conn)
