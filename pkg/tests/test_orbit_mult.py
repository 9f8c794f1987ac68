from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modelorbit import (
    NotDominant,
    bruteforce_multiplicity_g2,
    build_root_system,
    freudenthal_multiplicities,
    grading_from_diagram,
    multiplicity,
    s_lambda_set,
    truncation_bound,
    verify_model,
    weyl_dimension,
)
from modelorbit.orbit_mult import bruteforce_solutions_g2, dominant_weights


def test_truncation_bound(model):
    assert truncation_bound(model, (0, 0)) == 0
    assert truncation_bound(model, (1, 0)) == 1
    assert truncation_bound(model, (2, 3)) == 6


def test_multiplicity_examples(g2, model):
    r = multiplicity(g2, model, (0, 0))
    assert r.total == 1 and len(r.terms) == 1
    assert r.terms[0].w.is_identity and r.terms[0].mu.full == (0, 0) and r.tags == ((0, 0),)

    r = multiplicity(g2, model, (1, 0))
    assert r.total == 1 and r.tags == ((1, 0),) and r.terms[0].w.is_identity
    assert r.terms[0].mu.full == (1, 0)

    r = multiplicity(g2, model, (0, 1))
    assert r.total == 1 and r.tags == ((1, 1),)
    assert r.terms[0].mu.full == g2.from_simple_coords((3, 2))
    assert r.lam_dual == (0, 1)


def test_rejects_non_dominant(g2, model):
    with pytest.raises(NotDominant):
        multiplicity(g2, model, (-1, 2))
    with pytest.raises(NotDominant):
        s_lambda_set(g2, model, (0, -1))
    with pytest.raises(NotDominant):
        bruteforce_multiplicity_g2((2, -1))


def test_grading_must_match_root_system(model):
    with pytest.raises(ValueError):
        multiplicity(build_root_system("A", 2), model, (0, 0))


@pytest.mark.parametrize("lam", [(4, 2), (0, 0), (7, 3)])
def test_s_lambda_is_identity(g2, model, lam):
    s = s_lambda_set(g2, model, lam)
    assert len(s) == 1 and next(iter(s)).is_identity
    sols = bruteforce_solutions_g2(lam)
    assert len(sols) == 1 and sols[0][0].is_identity


@pytest.mark.parametrize("lam,expected", [((0, 0), 1), ((1, 1), 1), ((5, 0), 1)])
def test_bruteforce_examples(lam, expected):
    assert bruteforce_multiplicity_g2(lam) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15))
def test_generic_equals_bruteforce(a, b):
    from modelorbit import g2_model_grading

    g = g2_model_grading()
    r = multiplicity(g.rs, g, (a, b))
    sols = bruteforce_solutions_g2((a, b))
    assert r.total == sum(w.sign for w, _, _ in sols) == 1
    assert r.tags == tuple((k, q) for _, k, q in sols)
    # contributing degrees: k = a + b, q = b
    assert r.tags == ((a + b, b),)


@pytest.mark.parametrize("k", range(9))
def test_degree_k_dimension_identity(g2, model, k):
    expected = sum(weyl_dimension(g2, (k - q, q)) for q in range(k + 1))
    attributed = 0
    for lam in dominant_weights(2, k):
        for t in multiplicity(g2, model, lam).terms:
            if t.k == k:
                attributed += t.signed * weyl_dimension(g2, lam)
    assert attributed == expected


def test_zero_orbit(g2, zero_grading):
    for lam in dominant_weights(2, 4):
        assert multiplicity(g2, zero_grading, lam).total == (1 if lam == (0, 0) else 0)


def test_principal_orbit_matches_zero_weight_space(g2, principal):
    # functions on the nilpotent cone: multiplicity is the zero-weight dimension
    for lam in dominant_weights(2, 4):
        zero_mult = freudenthal_multiplicities(g2, lam).get((0, 0), 0)
        assert multiplicity(g2, principal, lam).total == zero_mult


def test_minimal_orbit(g2):
    g = grading_from_diagram(g2, (0, 1))
    for lam in dominant_weights(2, 5):
        assert multiplicity(g2, g, lam).total == (1 if lam[0] == 0 else 0)


def test_a2_principal_orbit():
    a2 = build_root_system("A", 2)
    g = grading_from_diagram(a2, (2, 2))
    for lam in dominant_weights(2, 4):
        assert multiplicity(a2, g, lam).total == freudenthal_multiplicities(a2, lam).get((0, 0), 0)


def test_a2_reports_dual():
    a2 = build_root_system("A", 2)
    g = grading_from_diagram(a2, (2, 2))
    r = multiplicity(a2, g, (3, 0))
    assert r.lam_dual == (0, 3)
    assert r.total == 1


def test_verify_model_examples(g2, model, zero_grading):
    v = verify_model(g2, model, 1)
    assert [r.lam for r in v.rows] == [(0, 0), (0, 1), (1, 0)]
    assert v.passed
    v = verify_model(g2, zero_grading, 2)
    assert not v.passed
    assert [r.multiplicity for r in v.rows] == [1, 0, 0, 0, 0, 0]
    assert v.failures == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    with pytest.raises(ValueError):
        verify_model(g2, model, 0)


def test_verify_model_parallel_matches_serial(g2, model):
    serial = verify_model(g2, model, 6)
    parallel = verify_model(g2, model, 6, workers=2)
    assert [(r.lam, r.multiplicity, r.bruteforce, r.agree) for r in serial.rows] == \
        [(r.lam, r.multiplicity, r.bruteforce, r.agree) for r in parallel.rows]


def test_dominant_weights_count():
    assert len(list(dominant_weights(2, 12))) == 91
    assert list(dominant_weights(2, 1)) == [(0, 0), (0, 1), (1, 0)]
