import pytest

from reltor.algebra import PRESET_NAMES, make_field, preset
from reltor.corpus import corpus_modules
from reltor.module import free_module, is_isomorphic, minimal_generators
from reltor.semidualizing import (
    IN,
    OUT,
    canonical_module,
    foxby_transport,
    in_auslander_class,
    in_bass_class,
    is_free,
    is_injective,
    is_semidualizing,
)


def test_canonical_module_shapes():
    assert canonical_module(preset("field")).dim == 1
    w = canonical_module(preset("square_zero_2vars"))
    assert w.dim == 3 and minimal_generators(w)[0] == 2
    T = preset("truncated_poly(3)")
    assert is_isomorphic(canonical_module(T), free_module(T, 1)).status == "YES"


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_ring_is_semidualizing(name):
    assert is_semidualizing(free_module(preset(name), 1), 6)


def test_omega_certified(C):
    cert = is_semidualizing(C, 6)
    assert cert and cert.ext_vanishing_checked_to == 6 and cert.homothety_ok


def test_residue_field_refused(mods):
    ref = is_semidualizing(mods["k"], 3)
    assert not ref and ref.axiom == "homothety"
    assert ref.witness == "dim Hom(C,C) = 1 != 3 = dim R"


def test_omega_over_f2_and_q():
    for F in (make_field("Fp", 2), make_field("Q")):
        assert is_semidualizing(canonical_module(preset("square_zero_2vars", F)), 2)


def test_class_membership(C, mods):
    assert in_auslander_class(C, mods["R"], 4).status == IN
    assert in_bass_class(C, C, 4).status == IN
    v = in_auslander_class(C, mods["k"], 4)
    assert v.status == OUT and v.failed_check == "dim Tor_1(C,M) = 3"
    assert in_bass_class(C, mods["k"], 4).status == OUT


def test_free_and_injective(C, mods):
    assert is_free(mods["R"]) and not is_free(C)
    assert is_injective(C) and not is_injective(mods["k"])


def test_foxby_round_trip(C, mods):
    # C is in the Bass class, so C (x) Hom(C, C) = C
    back = foxby_transport(C, foxby_transport(C, C, "down"), "up")
    assert is_isomorphic(back, C).status == "YES"
    with pytest.raises(ValueError):
        foxby_transport(C, C, "sideways")


def test_gorenstein_omega_is_ring():
    for n in (2, 3, 4):
        T = preset(f"truncated_poly({n})")
        v = is_isomorphic(corpus_modules(T)["omega"], free_module(T, 1))
        assert v.status == "YES" and v.witness.is_iso()
