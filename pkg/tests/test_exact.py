"""End-to-end exactness: reports, the equivalence of presentations, pieces."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from family import (
    CH_PB1,
    CORE,
    CORE_NAMES,
    LD_CT22,
    LD_PB1,
    LD_PB2,
    LD_PS2,
    NO_ZERO,
    NO_ZERO_IDEAL,
    UNDERLYING,
    ZERO_IDEALS,
)
from twoexact import (
    InputError,
    arrow_subcat,
    check_grandis_i,
    check_grandis_ii,
    check_puppe,
    fs_from_ideal,
    grandis_exact_1cat,
    ideal_from_fs,
    ideals_equivalent,
    is_biequivalence_over_base,
    is_equivalence,
    three_pieces,
    validate_fs,
    validate_pseudofunctor,
    validate_pseudonatural,
    validate_two_ideal,
    zero_ideal_1cat,
)
from twoexact.exact import _cod_projection, _dom_projection

LD_NAMES = ("ld_term", "ld_pb1", "ld_pb2", "ld_ct22", "ld_ps2")

EXACT_NAMES = ("ld_term", "ld_pb1", "ld_pb2", "ld_ct22", "ch_pb1")


@pytest.mark.parametrize("name", CORE_NAMES)
def test_grandis_report_structure(name):
    rep = check_grandis_ii(CORE[name], ZERO_IDEALS[name])
    names = [nm for nm, _ in rep.checks]
    assert names == [
        "all-kernels-exist", "all-cokernels-exist", "closedness",
        "kernel-of-its-cokernel", "cokernel-of-its-kernel", "factorization"]
    assert rep.status in ("pass", "fail")


@pytest.mark.parametrize("name", EXACT_NAMES)
def test_exact_fixtures_pass_grandis(name):
    rep = check_grandis_ii(CORE[name], ZERO_IDEALS[name])
    assert rep.ok, [(nm, c.counterexample)
                    for nm, c in rep.checks if not c.ok]


def test_pointed_sets_fail_only_the_factorization_bullet():
    rep = check_grandis_ii(LD_PS2, ZERO_IDEALS["ld_ps2"])
    assert rep.status == "fail"
    verdicts = {nm: c.status for nm, c in rep.checks}
    assert verdicts == {
        "all-kernels-exist": "pass",
        "all-cokernels-exist": "pass",
        "closedness": "pass",
        "kernel-of-its-cokernel": "pass",
        "cokernel-of-its-kernel": "pass",
        "factorization": "fail",
    }
    cert = rep.certificate("factorization")
    assert cert.counterexample["cells"]["one_cell"] == "m13_2to1_11"


@pytest.mark.parametrize("name", LD_NAMES)
def test_two_dimensional_verdict_matches_the_one_dimensional_oracle(name):
    t, n = CORE[name], ZERO_IDEALS[name]
    c = UNDERLYING[name]
    oracle = grandis_exact_1cat(c, zero_ideal_1cat(c))
    rep = check_grandis_ii(t, n)
    assert oracle.ok == rep.ok


@pytest.mark.parametrize("name", CORE_NAMES)
def test_puppe_agrees_with_grandis_at_the_canonical_ideal(name):
    rep = check_puppe(CORE[name])
    grandis = check_grandis_ii(CORE[name], ZERO_IDEALS[name])
    assert rep.ok == grandis.ok


def test_puppe_weak_mode_passes_on_the_chaotic_fixture():
    assert check_puppe(CH_PB1, weak=True).ok
    assert check_puppe(CH_PB1, weak=False).ok


def test_puppe_requires_a_bizero():
    rep = check_puppe(NO_ZERO)
    assert rep.status == "fail"
    assert rep.checks[0][0] == "two-pointed"


def test_missing_kernels_are_reported_per_arrow():
    rep = check_grandis_ii(NO_ZERO, NO_ZERO_IDEAL)
    assert rep.status == "fail"
    cert = rep.certificate("all-kernels-exist")
    assert cert.status == "fail"
    assert cert.counterexample["clause"] == "missing-kernel"


@pytest.mark.parametrize("name", EXACT_NAMES)
def test_factorization_data_from_the_ideal_passes_every_check(name):
    t, n = CORE[name], ZERO_IDEALS[name]
    fs, k, c, eta, epsilon = fs_from_ideal(t, n)
    assert validate_fs(t, fs).ok
    assert validate_pseudofunctor(k).ok
    assert validate_pseudofunctor(c).ok
    assert validate_pseudonatural(eta).ok
    assert validate_pseudonatural(epsilon).ok
    cert = check_grandis_i(t, fs, k, c, eta, epsilon)
    assert cert.ok, cert.counterexample


@pytest.mark.parametrize("name", EXACT_NAMES)
def test_ideal_recovered_from_the_factorization_system(name):
    t, n = CORE[name], ZERO_IDEALS[name]
    fs, k, _, _, _ = fs_from_ideal(t, n)
    n2 = ideal_from_fs(t, fs, k)
    assert validate_two_ideal(t, n2).ok
    assert ideals_equivalent(t, n, n2).ok


@pytest.mark.parametrize("name", EXACT_NAMES)
def test_biequivalence_over_the_base(name):
    t, n = CORE[name], ZERO_IDEALS[name]
    fs, k, c, eta, epsilon = fs_from_ideal(t, n)
    e_arrow = arrow_subcat(t, fs.left_class)
    m_arrow = arrow_subcat(t, fs.right_class)
    cert = is_biequivalence_over_base(
        _dom_projection(e_arrow), _cod_projection(m_arrow),
        k, c, eta, epsilon)
    assert cert.ok, cert.counterexample


def test_fs_from_ideal_refuses_when_kernels_are_missing():
    with pytest.raises(InputError):
        fs_from_ideal(NO_ZERO, NO_ZERO_IDEAL)


@settings(max_examples=40)
@given(st.sampled_from(EXACT_NAMES), st.data())
def test_three_pieces_middle_is_an_equivalence(name, data):
    t, n = CORE[name], ZERO_IDEALS[name]
    f = data.draw(st.sampled_from(t.one_ids))
    pieces = three_pieces(t, n, f)
    assert is_equivalence(t, pieces.middle).ok
    assert pieces.arrow == f


def test_three_pieces_constituents_cohere():
    t, n = LD_CT22, ZERO_IDEALS["ld_ct22"]
    pieces = three_pieces(t, n, "m10_2to1x1")
    # the projection splits as its cokernel leg, an equivalence in the
    # middle, and its kernel-leg-of-the-cokernel on the right
    assert t.src1[pieces.middle] == t.tgt1[pieces.first.leg]
    assert t.tgt1[pieces.middle] == t.src1[pieces.last.leg]
    assert t.is_invertible2(pieces.composite_iso)
    assert t.is_invertible2(pieces.connecting)


def test_three_pieces_refuses_weak_closedness():
    t, n = LD_PB2, ZERO_IDEALS["ld_pb2"]
    with pytest.raises(InputError):
        three_pieces(t, n, "m05_1to1_11", closedness="weak")
