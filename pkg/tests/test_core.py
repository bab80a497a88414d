"""Composition tables, validation, pasting, duality, whisker solving."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from family import CH_PB1, CORE, CORE_NAMES, LD_CT22, LD_PB2
from twoexact import (
    Budget,
    CapExceeded,
    InputError,
    dualize,
    is_cofaithful,
    is_equivalence,
    is_faithful,
    iso_two_cells,
    natural_key,
    replay_two_category_counterexample,
    solve_lwhisker,
    solve_rwhisker,
    validate_two_category,
)
from twoexact.core import Gen, Id2, Inverse, LWhisker, RWhisker, VComp, paste
from twoexact.gen import mutate


@pytest.mark.parametrize("name", CORE_NAMES)
def test_core_fixtures_validate(name):
    cert = validate_two_category(CORE[name])
    assert cert.ok, cert.counterexample


def test_fixture_inventory_sizes():
    sizes = {name: (len(t.objects), len(t.one_cells), len(t.two_cells))
             for name, t in CORE.items()}
    assert sizes == {
        "ld_term": (1, 1, 1),
        "ld_pb1": (2, 5, 5),
        "ld_pb2": (3, 20, 20),
        "ld_ct22": (3, 15, 15),
        "ld_ps2": (3, 23, 23),
        "ch_pb1": (2, 5, 7),
    }


def test_composition_convention_is_target_to_source():
    # In the cyclic tower, m07: o1→o2 is the multiplication-by-two
    # embedding and m10: o2→o1 the projection; their composite (projection
    # applied after the embedding) is the zero endomorphism of o1, the very
    # identity that makes the tower a null-composable pair.
    t = LD_CT22
    zero_endo = "m04_1to1x0"
    assert t.cmp1("m10_2to1x1", "m07_1to2x2") == zero_endo
    assert t.cmp1_chain("m10_2to1x1", "m07_1to2x2") == zero_endo
    assert (t.cmp1_chain(t.id1["o1"], "m10_2to1x1", "m07_1to2x2")
            == zero_endo)
    # the transposition of the two-element set is an involution
    p = LD_PB2
    assert p.cmp1("m19_2to2_1221", "m19_2to2_1221") == p.id1["o2"]


def test_vertical_composition_chain_order():
    t = CH_PB1
    f = t.id1["o1"]
    cells = t.hom2(f, f)
    a = cells[0]
    assert t.vc_chain(t.id2[f], a) == t.vc(t.id2[f], a) == a
    assert t.vc_chain(a, t.id2[f], t.id2[f]) == a


@given(st.sampled_from(CORE_NAMES))
def test_dualize_is_an_involution(name):
    t = CORE[name]
    assert dualize(dualize(t)) == t


@given(st.sampled_from(CORE_NAMES))
def test_dualize_preserves_validity(name):
    assert validate_two_category(dualize(CORE[name])).ok


def test_paste_evaluates_expression_trees():
    t = CH_PB1
    f = t.id1["o1"]
    a = t.hom2(f, f)[0]
    assert paste(t, Gen(a)) == a
    assert paste(t, Id2(f)) == t.id2[f]
    assert paste(t, VComp(Gen(t.id2[f]), Gen(a))) == a
    assert paste(t, LWhisker(f, Gen(a))) == t.lw(f, a)
    assert paste(t, RWhisker(Gen(a), f)) == t.rw(a, f)
    if t.is_invertible2(a):
        assert paste(t, VComp(Gen(t.inv(a)), Gen(a))) == t.id2[f]
        assert paste(t, Inverse(Gen(a))) == t.inv(a)


def test_paste_rejects_non_composable():
    t = LD_PB2
    a = t.id2[t.id1["o1"]]
    b = t.id2[t.id1["o2"]]
    with pytest.raises(InputError):
        paste(t, VComp(Gen(a), Gen(b)))


def test_whisker_solvers_recover_unique_factor():
    t = CH_PB1
    # whenever h ⋆ μ is defined, solving h ⋆ ? = h ⋆ μ recovers a factor
    for h, _, _ in t.one_cells:
        for mu_id, mu_src, mu_tgt in t.two_cells:
            if t.src1[h] != t.tgt1[mu_src]:
                continue
            whiskered = t.lw(h, mu_id)
            solved = solve_lwhisker(t, h, mu_src, mu_tgt, whiskered)
            assert t.lw(h, solved) == whiskered


def test_solve_lwhisker_rejects_unsolvable():
    t = CH_PB1
    f = t.id1["o1"]
    # no 2-cell whiskers to something outside the table
    with pytest.raises(InputError):
        solve_lwhisker(t, f, f, f, "a99_absent")


def test_solve_rwhisker_matches_left_on_identity_whisker():
    t = CH_PB1
    f = t.id1["o1"]
    for a, s, tg in t.two_cells:
        if s == f and tg == f:
            assert solve_rwhisker(t, f, s, tg, t.rw(a, f)) == a


def test_natural_key_orders_digit_runs_numerically():
    names = ["f10", "f2", "f1", "o2", "o10", "a2b10", "a2b9"]
    assert sorted(names, key=natural_key) == [
        "a2b9", "a2b10", "f1", "f2", "f10", "o2", "o10"]


def test_iso_two_cells_on_locally_discrete_are_identities():
    t = LD_PB2
    for f, g in t.parallel_pairs():
        isos = iso_two_cells(t, f, g)
        if f == g:
            assert isos == (t.id2[f],)
        else:
            assert isos == ()


def test_chaotic_enrichment_makes_every_parallel_pair_isomorphic():
    t = CH_PB1
    for f, g in t.parallel_pairs():
        assert iso_two_cells(t, f, g)


def test_faithful_and_cofaithful_identities():
    t = LD_PB2
    for o in t.objects:
        assert is_faithful(t, t.id1[o]).ok
        assert is_cofaithful(t, t.id1[o]).ok
        assert is_equivalence(t, t.id1[o]).ok


def test_equivalences_are_identities_and_the_transposition():
    t = LD_PB2
    eqs = {f for f in t.one_ids if is_equivalence(t, f).ok}
    assert eqs == {t.id1[o] for o in t.objects} | {"m19_2to2_1221"}


def test_budget_raises_cap_exceeded():
    b = Budget(3, "probe")
    b.tick()
    b.tick()
    b.tick()
    with pytest.raises(CapExceeded):
        b.tick()


def test_budget_unbounded_when_cap_is_none():
    b = Budget(None, "probe")
    for _ in range(10_000):
        b.tick()


@given(st.integers(min_value=0, max_value=11))
def test_mutant_certificates_replay(seed):
    mut = mutate(LD_PB2, "retarget-vcomp", seed)
    cert = validate_two_category(mut)
    assert cert.status == "fail"
    assert replay_two_category_counterexample(mut, cert)


def test_validation_cites_the_broken_clause():
    mut = mutate(LD_PB2, "retarget-vcomp", 3)
    cert = validate_two_category(mut)
    assert cert.counterexample["clause"]
    assert cert.counterexample["cells"]
