import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from reltor.algebra import make_field, preset
from reltor.corpus import MODULE_NAMES, corpus_modules, random_module
from reltor.module import (
    FDModule,
    HomSpace,
    InvalidModule,
    TensorProduct,
    biduality_map,
    direct_power,
    direct_sum,
    evaluation_map,
    free_module,
    homothety_map,
    identity,
    is_isomorphic,
    matlis_dual,
    minimal_generators,
    module_from_json,
    module_to_json,
    residue_field_module,
    swap_map,
    tensor_module,
)

Q = make_field("Q")


def float_hom_dim(M, N):
    """Nullity of the commutation system f A_M = A_N f, by floating point rank (exact for tiny integer data)."""
    if M.dim == 0 or N.dim == 0:
        return 0
    rows = []
    for l in range(M.ring.dim):
        a = np.array(M.actions[l], dtype=float)
        b = np.array(N.actions[l], dtype=float)
        rows.append(np.kron(np.eye(N.dim), a.T) - np.kron(b, np.eye(M.dim)))
    return M.dim * N.dim - np.linalg.matrix_rank(np.vstack(rows))


@pytest.fixture(scope="module")
def Rq():
    return preset("square_zero_2vars", Q)


@pytest.fixture(scope="module")
def mods_q(Rq):
    return corpus_modules(Rq)


def test_free_and_residue(R):
    assert free_module(R, 0).dim == 0
    assert free_module(R, 2).dim == 6
    k = residue_field_module(preset("truncated_poly(3)"))
    assert k.dim == 1 and not k.actions[1].any()


def test_tensor_examples(mods):
    w, k = mods["omega"], mods["k"]
    T = tensor_module(w, w)[0]
    assert T.dim == 4 and all(not a.any() for a in T.max_ideal_actions())
    assert tensor_module(k, w)[0].dim == minimal_generators(w)[0] == 2


def test_hom_examples(mods):
    w, k = mods["omega"], mods["k"]
    assert HomSpace(w, w).dim == 3
    assert HomSpace(w, k).dim == 2


@pytest.mark.parametrize("a", MODULE_NAMES)
@pytest.mark.parametrize("b", MODULE_NAMES)
def test_hom_dim_matches_float_oracle(mods_q, a, b):
    M, N = mods_q[a], mods_q[b]
    assert HomSpace(M, N).dim == float_hom_dim(M, N)


@pytest.mark.parametrize("a", MODULE_NAMES)
@pytest.mark.parametrize("b", MODULE_NAMES)
def test_hom_duality_and_tensor_swap(mods, a, b):
    M, N = mods[a], mods[b]
    assert HomSpace(M, N).dim == HomSpace(matlis_dual(N), matlis_dual(M)).dim
    s = swap_map(M, N)
    assert s.is_valid() and s.is_iso()
    # Hom(M, N^v) = (M (x) N)^v
    assert HomSpace(M, matlis_dual(N)).dim == TensorProduct(M, N).module.dim


def test_iso_verdicts(R, mods):
    w = mods["omega"]
    v = is_isomorphic(w, w)
    assert v.status == "YES" and v.witness.is_iso()
    v = is_isomorphic(tensor_module(w, w)[0], direct_power(mods["k"], 4))
    assert v.status == "YES" and v.witness.is_valid() and v.witness.is_iso()
    assert is_isomorphic(mods["R"], w).status == "NO"
    T = preset("truncated_poly(3)")
    v = is_isomorphic(corpus_modules(T)["omega"], free_module(T, 1))
    assert v.status == "YES" and v.witness.is_valid()


def test_natural_maps(R, mods):
    w = mods["omega"]
    for M in mods.values():
        xi = evaluation_map(mods["R"], M)
        assert xi.is_valid() and xi.is_iso()
    assert homothety_map(w).is_iso()
    assert evaluation_map(w, w).is_surjective()
    assert biduality_map(w, mods["R"]).is_iso()


def test_invalid_module_rejected(R):
    acts = np.array(residue_field_module(R).actions)
    acts[1] = [[1]]
    with pytest.raises(InvalidModule):
        FDModule(R, acts)


@pytest.mark.parametrize("name", MODULE_NAMES)
def test_json_round_trip(R, mods, name):
    M = mods[name]
    M2 = module_from_json(json.loads(json.dumps(module_to_json(M))))
    assert np.array_equal(M2.actions, M.actions) and M2.ring.same_as(R)


def test_json_round_trip_rational(mods_q):
    M = mods_q["omega"]
    assert np.array_equal(module_from_json(json.loads(json.dumps(module_to_json(M)))).actions, M.actions)


@given(seed=st.integers(0, 10_000), name=st.sampled_from(["square_zero_2vars", "truncated_poly(3)"]))
def test_nakayama(seed, name):
    R = preset(name)
    M = random_module(R, np.random.default_rng(seed))
    k = residue_field_module(R)
    beta0 = minimal_generators(M)[0]
    assert beta0 == TensorProduct(M, k).module.dim == HomSpace(M, k).dim
    assert (beta0 == 0) == (M.dim == 0)


@given(seed=st.integers(0, 10_000))
def test_matlis_dual_involutive(seed):
    R = preset("square_zero_2vars")
    M = random_module(R, np.random.default_rng(seed))
    assert np.array_equal(matlis_dual(matlis_dual(M)).actions, M.actions)


@given(seed=st.integers(0, 10_000))
def test_hom_from_free_and_sums(seed):
    R = preset("square_zero_2vars")
    rng = np.random.default_rng(seed)
    M, N = random_module(R, rng), random_module(R, rng)
    assert HomSpace(free_module(R, 1), M).dim == M.dim
    S = direct_sum(M, N)
    assert S.module.dim == M.dim + N.dim
    for inj, proj in zip(S.injections, S.projections):
        assert inj.is_valid() and proj.is_valid()
        assert np.array_equal((proj @ inj).matrix, identity(inj.source).matrix)
