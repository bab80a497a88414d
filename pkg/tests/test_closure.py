"""Closedness of an ideal: reflection, coreflection, and their weak forms."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from family import CORE, CORE_NAMES, UNDERLYING, ZERO_IDEALS
from twoexact import (
    InputError,
    bizero_objects,
    canonical_zero_ideal,
    closedness_triple_1cat,
    is_closed_ideal,
    is_strong_bizero,
    is_weakly_closed,
    maximal_two_ideal,
    weak_closure_triple,
    zero_ideal_1cat,
)
from family import NO_ZERO, NO_ZERO_IDEAL

LD_NAMES = ("ld_term", "ld_pb1", "ld_pb2", "ld_ct22", "ld_ps2")


@pytest.mark.parametrize("name", CORE_NAMES)
def test_canonical_zero_ideal_is_closed(name):
    cert = is_closed_ideal(CORE[name], ZERO_IDEALS[name])
    assert cert.ok, cert.counterexample


@pytest.mark.parametrize("name", CORE_NAMES)
def test_canonical_zero_ideal_is_weakly_closed(name):
    assert is_weakly_closed(CORE[name], ZERO_IDEALS[name]).ok


@given(st.sampled_from(CORE_NAMES))
def test_weak_closure_triple_components_coincide(name):
    triple = weak_closure_triple(CORE[name], ZERO_IDEALS[name])
    assert triple[0] == triple[1] == triple[2]


@pytest.mark.parametrize("name", LD_NAMES)
def test_closure_agrees_with_the_one_dimensional_oracle(name):
    t, n = CORE[name], ZERO_IDEALS[name]
    c = UNDERLYING[name]
    two_dim = weak_closure_triple(t, n)
    one_dim = closedness_triple_1cat(c, zero_ideal_1cat(c))
    assert all(two_dim) == all(one_dim)


@pytest.mark.parametrize("name", CORE_NAMES)
def test_strong_bizero_implies_closed_zero_ideal(name):
    t = CORE[name]
    strong = [z for z in bizero_objects(t) if is_strong_bizero(t, z)]
    if strong:
        n = canonical_zero_ideal(t, strong[0])
        assert is_closed_ideal(t, n).ok


@pytest.mark.parametrize("name", CORE_NAMES)
def test_maximal_ideal_is_closed(name):
    t = CORE[name]
    assert is_closed_ideal(t, maximal_two_ideal(t)).ok


def test_closure_refuses_when_kernels_are_missing():
    with pytest.raises(InputError):
        weak_closure_triple(NO_ZERO, NO_ZERO_IDEAL)
