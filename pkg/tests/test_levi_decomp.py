from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement
from math import comb

import pytest

from modelorbit import (
    LeviWeight,
    NegativeMultiplicity,
    NotWeylInvariant,
    g2_closed_form_sk,
    levi_irrep_extract,
    sym_power_multiset,
    verify_sk_equality,
)
from modelorbit.levi_decomp import WeightMultiset, levi_constituents


def _brute_sym_power(o, k, zero):
    """Enumerate degree-k monomials directly."""
    out = Counter()
    for combo in combinations_with_replacement(range(len(o)), k):
        full = list(zero.full)
        for i in combo:
            full = [a + b for a, b in zip(full, o[i].full)]
        out[tuple(full)] += 1
    return out


def _h_levi(m):
    return sorted((w.h_value, w.levi_coords, n) for w, n in m.entries.items())


def test_sym_power_examples(model):
    o = model.o_weights
    zero = model.levi_weight((0, 0))
    assert sym_power_multiset(o, 0).entries == {zero: 1}
    assert _h_levi(sym_power_multiset(o, 1)) == [(2, (0,), 1), (3, (-1,), 1), (3, (1,), 1)]
    assert _h_levi(sym_power_multiset(o, 2)) == [
        (4, (0,), 1), (5, (-1,), 1), (5, (1,), 1), (6, (-2,), 1), (6, (0,), 1), (6, (2,), 1)]


@pytest.mark.parametrize("k", range(0, 21))
def test_sym_power_matches_enumeration(model, k):
    o = model.o_weights
    zero = model.levi_weight((0, 0))
    m = sym_power_multiset(o, k)
    assert m.total == comb(len(o) + k - 1, k)
    if k <= 12:
        assert Counter({w.full: n for w, n in m.entries.items()}) == _brute_sym_power(o, k, zero)
    assert all(2 * k <= w.h_value <= 3 * k for w in m.entries)


def test_sym_power_principal_binomial(principal):
    zero = principal.levi_weight((0, 0))
    for k in range(9):
        m = sym_power_multiset(principal.o_weights, k, zero)
        assert m.total == comb(6 + k - 1, k)
        assert Counter({w.full: n for w, n in m.entries.items()}) == \
            _brute_sym_power(principal.o_weights, k, zero)


def test_empty_o_needs_zero(zero_grading):
    with pytest.raises(ValueError):
        sym_power_multiset((), 0)
    zero = zero_grading.levi_weight((0, 0))
    assert sym_power_multiset((), 0, zero).entries == {zero: 1}
    assert sym_power_multiset((), 3, zero).entries == {}


def test_extract_examples(model):
    s1 = levi_irrep_extract(sym_power_multiset(model.o_weights, 1), model)
    assert [(c.mu.h_value, c.mu.levi_coords, c.multiplicity) for c in s1] == [
        (2, (0,), 1), (3, (1,), 1)]
    s2 = levi_irrep_extract(sym_power_multiset(model.o_weights, 2), model)
    assert [(c.mu.h_value, c.mu.levi_coords, c.multiplicity) for c in s2] == [
        (4, (0,), 1), (5, (1,), 1), (6, (2,), 1)]
    assert levi_irrep_extract(WeightMultiset({}), model) == []


def test_extract_rejects_non_invariant(model):
    lw = model.levi_weight
    with pytest.raises(NotWeylInvariant):
        levi_irrep_extract(WeightMultiset({lw((0, 1)): 1}), model)


def test_extract_rejects_negative(model):
    # beta-string at h-degree 6: levi coords 4, 2, 0, -2, -4 with 1, 2, 1, 2, 1
    lw = model.levi_weight
    m = WeightMultiset({lw((-3, 4)): 1, lw((0, 2)): 2, lw((3, 0)): 1,
                        lw((6, -2)): 2, lw((9, -4)): 1})
    with pytest.raises(NegativeMultiplicity):
        levi_irrep_extract(m, model)


def test_closed_form_examples():
    assert [(c.mu.full, c.tag) for c in g2_closed_form_sk(0)] == [((0, 0), (0, 0))]
    assert [(c.mu.full, c.tag) for c in g2_closed_form_sk(1)] == [((1, 0), (1, 0)), ((0, 1), (1, 1))]
    # 4a+2b, 5a+3b, 6a+4b with a = (2,-1), b = (-3,2)
    assert [(c.mu.full, c.tag) for c in g2_closed_form_sk(2)] == [
        ((2, 0), (2, 0)), ((1, 1), (2, 1)), ((0, 2), (2, 2))]
    for k in range(8):
        for c in g2_closed_form_sk(k):
            kk, q = c.tag
            assert c.mu.h_value == 2 * kk + q and c.mu.levi_coords == (q,)


@pytest.mark.parametrize("k", [0, 5, 12, 20])
def test_verify_sk_equality(k):
    assert verify_sk_equality(k)


def test_constituents_are_homogeneous(model):
    for k in range(13):
        for c in levi_constituents(model, k):
            assert 2 * k <= c.mu.h_value <= 3 * k
            assert c.mu.levi_coords[0] >= 0


def test_principal_levi_is_torus(principal):
    # no Levi roots: every weight is its own constituent
    for k in range(5):
        m = sym_power_multiset(principal.o_weights, k, principal.levi_weight((0, 0)))
        cons = levi_constituents(principal, k)
        assert {c.mu: c.multiplicity for c in cons} == m.entries


def test_levi_weight_ordering():
    a = LeviWeight(2, (0,), (1, 0))
    b = LeviWeight(3, (-1,), (3, -1))
    assert sorted([b, a]) == [a, b]


@pytest.mark.parametrize("k", range(13))
def test_reexpansion_round_trip(model, k):
    from modelorbit import freudenthal_multiplicities

    m = sym_power_multiset(model.o_weights, k)
    rebuilt = Counter()
    for c in levi_irrep_extract(m, model, verify=False):
        for full, n in freudenthal_multiplicities(model.rs, c.mu.full, model.levi_nodes).items():
            rebuilt[model.levi_weight(full)] += c.multiplicity * n
    assert rebuilt == Counter(m.entries)
