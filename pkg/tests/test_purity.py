import numpy as np
import pytest
from hypothesis import given, strategies as st

from reltor.algebra import preset
from reltor.corpus import random_module, residue_sequence
from reltor.module import direct_power, direct_sum, free_module, zero_hom
from reltor.purity import NotInjective, hom_purity_transport, is_pure_submodule, pure_fc_pd_check
from reltor.relative import NEG_INF, HDim


def test_summand_is_pure(C, mods):
    S = direct_sum(mods["omega"], mods["k"])
    cert = is_pure_submodule(S.injections[0])
    assert cert and cert.verify()


def test_maximal_ideal_not_pure(R):
    assert not is_pure_submodule(residue_sequence(R).f)


def test_non_injective_rejected(mods):
    k = mods["k"]
    with pytest.raises(NotInjective):
        is_pure_submodule(zero_hom(k, k))


@pytest.mark.parametrize("L", ["R", "omega", "k"])
def test_hom_transport(mods, L):
    cert = is_pure_submodule(direct_sum(mods["omega"], mods["k"]).injections[0])
    moved = hom_purity_transport(mods[L], cert)
    assert moved.verify()
    if L == "R":
        assert moved.inclusion.source.dim == cert.inclusion.source.dim


def test_inequality_cases(C, mods):
    rep = pure_fc_pd_check(C, is_pure_submodule(direct_sum(C, C).injections[0]), 6)
    assert rep.fc_pd_sub == rep.fc_pd_whole == HDim("finite", 0) and rep.holds and not rep.strict
    rep = pure_fc_pd_check(C, is_pure_submodule(direct_sum(C, mods["k"]).injections[0]), 6)
    assert rep.fc_pd_whole.kind == "above" and rep.holds
    zero = direct_sum(direct_power(mods["k"], 0), C)
    rep = pure_fc_pd_check(C, is_pure_submodule(zero.injections[0]), 6)
    assert rep.fc_pd_sub == NEG_INF and rep.holds and rep.strict


@given(seed=st.integers(0, 10_000))
def test_random_summands(seed):
    R = preset("square_zero_2vars")
    rng = np.random.default_rng(seed)
    M, N = random_module(R, rng, 5), random_module(R, rng, 5)
    S = direct_sum(M, N)
    cert = is_pure_submodule(S.injections[0])
    assert cert and cert.verify()
    assert hom_purity_transport(free_module(R, 1), cert).verify()
