"""Factorization systems, squares, fibration property, relative orthogonality."""

import pytest

from family import CT22, LD_CT22, LD_PB1, LD_PB2, ZERO_IDEALS, epi_mono_fs
from twoexact import (
    ArrowTwoCategory,
    FactorizationSystem,
    InputError,
    arrow_subcat,
    canonical_zero_ideal,
    check_weak_two_fibration,
    fill_ins,
    fs_from_ideal,
    is_proper_11,
    mutate,
    natural_key,
    squares_between,
    validate_fs,
    validate_rofs,
    validate_two_category,
)

_T = LD_PB2
_N = ZERO_IDEALS["ld_pb2"]
_FS, _K, _C, _ETA, _EPS = fs_from_ideal(_T, _N)
_epi_mono_fs = epi_mono_fs


def test_constructed_factorization_system_validates():
    cert = validate_fs(_T, _FS)
    assert cert.ok, cert.counterexample


def test_constructed_classes_are_the_cokernel_and_kernel_legs():
    assert len(_FS.left_class) == 8
    assert len(_FS.right_class) == 8
    assert set(_FS.left_class) & set(_FS.right_class)  # identities sit in both


def test_identities_belong_to_both_classes():
    for o in _T.objects:
        assert _T.id1[o] in _FS.left_class
        assert _T.id1[o] in _FS.right_class


def test_epi_mono_system_on_the_cyclic_tower():
    t, fs = _epi_mono_fs()
    assert len(fs.left_class) == 7
    assert len(fs.right_class) == 7
    cert = validate_fs(t, fs)
    assert cert.ok, cert.counterexample
    assert is_proper_11(t, fs).ok


def test_epi_mono_system_is_a_weak_two_fibration_both_ways():
    t, fs = _epi_mono_fs()
    for direction in ("cod", "dom"):
        cert = check_weak_two_fibration(t, fs, direction)
        assert cert.ok, (direction, cert.counterexample)


def test_constructed_system_is_a_weak_two_fibration_both_ways():
    for direction in ("cod", "dom"):
        cert = check_weak_two_fibration(_T, _FS, direction)
        assert cert.ok, (direction, cert.counterexample)


def test_relative_orthogonality_of_the_constructed_classes():
    cert = validate_rofs(_T, _N, _FS.left_class, _FS.right_class)
    assert cert.ok, cert.counterexample


def test_arrow_subcategories_validate():
    for members in (_FS.left_class, _FS.right_class):
        arrow = arrow_subcat(_T, members)
        cert = validate_two_category(arrow.cat)
        assert cert.ok, cert.counterexample


def test_square_ids_decode_to_their_parts():
    arrow = arrow_subcat(_T, _FS.right_class)
    for sid, src_member, tgt_member in arrow.cat.one_cells:
        a, b, phi = arrow.square(sid)
        assert sid == ArrowTwoCategory.square_id(
            src_member, tgt_member, a, b, phi)


def test_squares_between_finds_the_identity_square():
    e = _T.id1["o1"]
    found = squares_between(_T, e, e)
    assert any(a == _T.id1["o1"] and b == _T.id1["o1"]
               for a, b, _ in found)


def test_fill_ins_exist_for_orthogonal_squares():
    t, fs = _epi_mono_fs()
    # the projection (epi) against the embedding (mono): every square
    # admits at least one diagonal fill-in
    e, m = "m10_2to1x1", "m07_1to2x2"
    for a, b, phi in squares_between(t, e, m):
        assert fill_ins(t, e, m, a, b, phi)


def test_dropped_translate_mutant_fails_validation():
    mut = mutate((_T, _FS), "drop-M-translate", 0)
    cert = validate_fs(_T, mut)
    assert cert.status == "fail"
    assert cert.counterexample["clause"]


def test_factorization_system_requires_known_cells():
    broken = FactorizationSystem(
        _FS.left_class + ("m99_missing",), _FS.right_class,
        _FS.factorization)
    with pytest.raises(InputError):
        validate_fs(_T, broken)


def test_fibration_direction_is_checked():
    with pytest.raises(InputError):
        check_weak_two_fibration(_T, _FS, "sideways")
