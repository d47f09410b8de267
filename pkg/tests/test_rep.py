"""Simple modules of the double."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hopfkit.hopf import radical_dim
from hopfkit.linalg import Matrix
from hopfkit.rep import (LAMBDA, ParameterOutOfRange, RelationViolated, check_representation,
                         direct_sum, dual_certificate, dual_module, dual_params, extra_simples,
                         intertwiner_dim, is_simple, is_simple_eigen, module_from_generators,
                         one_dim_module, two_dim_module, verify_simple_list)
from hopfkit.scalar import ONE


def test_count(simples):
    assert len(simples) == 48
    assert sorted(m.dim for m in simples) == [1] * 16 + [2] * 32
    assert sum(m.dim ** 2 for m in simples) == 144


def test_every_relation_holds(simples):
    for m in simples:
        rep = check_representation(m)
        assert rep.ok, (m.label, rep.to_text())


def test_simple_and_schur(simples):
    for m in simples:
        assert is_simple(m) and is_simple_eigen(m), m.label
        assert intertwiner_dim(m, m) == 1


def test_pairwise_non_isomorphic(simples):
    pairs = list(itertools.combinations(simples, 2))
    assert len(pairs) == 1128
    assert all(intertwiner_dim(m, n) == 0 for m, n in pairs)


def test_report(simples):
    assert verify_simple_list(simples, pairwise=False).ok


@pytest.mark.parametrize("p", LAMBDA)
def test_dual_certificate(p):
    rep = dual_certificate(*p)
    assert rep.get("phi invertible and intertwining").status == "pass"
    assert rep.get("Hom(W, V*) is one-dimensional").status == "pass"


def test_dual_params_involution():
    for p in LAMBDA:
        assert dual_params(*dual_params(*p)) == p
        assert dual_params(*p) in LAMBDA


def test_double_dual(simples):
    for m in simples:
        assert intertwiner_dim(dual_module(dual_module(m)), m) == 1


def test_characters_dual_is_character(simples):
    chars = [m for m in simples if m.dim == 1]
    for m in chars:
        md = dual_module(m)
        assert sum(intertwiner_dim(md, n) for n in chars) == 1


def test_direct_sum_is_not_simple(simples):
    m, n = simples[0], simples[20]
    s = direct_sum(m, n)
    assert not is_simple(s)
    assert intertwiner_dim(s, s) == 2


def test_parameter_range():
    with pytest.raises(ParameterOutOfRange):
        one_dim_module(2, 0, 0)
    with pytest.raises(ParameterOutOfRange):
        two_dim_module(0, 2, 0, 0)


def test_relation_violation_detected(D):
    bad = {g: Matrix([[ONE]]) for g in "ghxabcd"}
    with pytest.raises(RelationViolated):
        module_from_generators(D.carrier, bad, label="bad")


def test_extra_simples_complete_the_census(D, simples):
    """The 48 listed simples fill 144 of the 256 - rad dimensions; the
    remaining two-dimensional simples (lambda_2 = +-1) account for the rest."""
    extra = extra_simples()
    assert len(extra) == 16
    for m in extra:
        assert check_representation(m).ok and is_simple(m)
        assert all(intertwiner_dim(m, n) == 0 for n in simples if n.dim == 2)
    assert all(intertwiner_dim(m, n) == 0 for m, n in itertools.combinations(extra, 2))
    rad = radical_dim(D.carrier)
    assert rad + sum(m.dim ** 2 for m in simples + extra) == 256


@settings(max_examples=25)
@given(st.sampled_from(LAMBDA), st.sampled_from(LAMBDA))
def test_hom_between_two_dim(p, q):
    V, W = two_dim_module(*p), two_dim_module(*q)
    assert intertwiner_dim(V, W) == (1 if p == q else 0)
