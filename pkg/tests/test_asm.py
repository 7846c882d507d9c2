import pytest

from asmdpp.asm import (
    Asm,
    asm_from_json,
    asm_from_row_word,
    asm_nu_second_form,
    asm_reflect,
    asm_row_word,
    asm_stats,
    asm_to_json,
    count_asm_no_isolated,
    enumerate_asms,
    isolated_ones_count,
    rotation_invariance,
    z_asm_brute,
)
from asmdpp.errors import ResourceLimitError, ValidationError
from asmdpp.polynomial import poly_str
from helpers import ASMEX, asm_list

CENTER = Asm(((0, 1, 0), (1, -1, 1), (0, 1, 0)))

ASM3_EXPECTED = {
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
}


def test_validation_rejects_bad_matrices():
    with pytest.raises(ValidationError):
        Asm(((1, 1), (0, 0)))  # row sum 2
    with pytest.raises(ValidationError):
        Asm(((0, 1), (1, -1)))  # column sum 0
    with pytest.raises(ValidationError):
        Asm(((-1, 1), (1, 0)))  # partial row sum -1
    with pytest.raises(ValidationError):
        Asm(((2, -1), (0, 1)))  # entry outside range


def test_enumeration_small_orders():
    assert [a.rows for a in enumerate_asms(1)] == [((1,),)]
    assert {a.rows for a in enumerate_asms(3)} == ASM3_EXPECTED
    assert len(asm_list(5)) == 429


def test_enumeration_rejects_zero():
    with pytest.raises(ValidationError):
        next(enumerate_asms(0))


def test_enumeration_is_sorted_lexicographically():
    for n in (3, 4):
        seq = [a.rows for a in enumerate_asms(n)]
        assert seq == sorted(seq)
        assert len(set(seq)) == len(seq)


def test_enumeration_partitions_by_first_row():
    full = [a.rows for a in enumerate_asms(4)]
    parts = []
    for col in range(4):
        parts.extend(a.rows for a in enumerate_asms(4, first_one_column=col))
    assert sorted(parts) == sorted(full)


def test_stats_of_worked_example():
    s = asm_stats(ASMEX)
    assert (s.nu, s.mu, s.rho) == (5, 3, 3)
    assert s.nu_prime == 8


def test_stats_identity_and_center():
    for n in (1, 2, 3, 4):
        ident = Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
        assert asm_stats(ident) == type(asm_stats(ident))(0, 0, 0)
    assert (asm_stats(CENTER).nu, asm_stats(CENTER).mu, asm_stats(CENTER).rho) == (1, 1, 1)


def test_nu_two_forms_agree():
    for n in range(1, 5):
        for a in asm_list(n):
            assert asm_nu_second_form(a) == asm_stats(a).nu


def test_reflect_examples():
    ident = Asm(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    anti = Asm(((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    assert asm_reflect(ident) == anti
    assert asm_reflect(CENTER) == CENTER
    s = asm_stats(asm_reflect(ASMEX))
    assert (s.nu, s.mu, s.rho) == (7, 3, 2)


def test_reflect_is_involution_with_stat_transform():
    for n in range(1, 5):
        half = n * (n - 1) // 2
        for a in asm_list(n):
            r = asm_reflect(a)
            assert asm_reflect(r) == a
            s, t = asm_stats(a), asm_stats(r)
            assert (t.nu, t.mu, t.rho) == (half - s.nu - s.mu, s.mu, n - 1 - s.rho)


def test_rotation_invariance():
    ident = Asm(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert rotation_invariance(ident, "half")
    assert not rotation_invariance(ident, "quarter")
    halves = sum(1 for a in asm_list(3) if rotation_invariance(a, "half"))
    quarters = sum(1 for a in asm_list(3) if rotation_invariance(a, "quarter"))
    assert (halves, quarters) == (3, 1)
    with pytest.raises(ValidationError):
        rotation_invariance(ident, "third")


def test_isolated_ones():
    ident = Asm(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert isolated_ones_count(ident) == 3
    assert isolated_ones_count(CENTER) == 0
    assert count_asm_no_isolated(3, 1) == 1
    assert count_asm_no_isolated(3, 0) == 0
    assert count_asm_no_isolated(0, 0) == 1


def test_z_brute_small():
    assert poly_str(z_asm_brute(1)) == "1"
    assert poly_str(z_asm_brute(2)) == "1 + x*z"
    assert (
        poly_str(z_asm_brute(3)) == "1 + x + x*z + x^2*z + x*y*z + x^2*z^2 + x^3*z^2"
    )


def test_z_brute_limit():
    with pytest.raises(ResourceLimitError):
        z_asm_brute(8)


def test_boundary_relation_small():
    for n in (2, 3, 4):
        assert z_asm_brute(n).substitute(2, 0) == z_asm_brute(n - 1).substitute(2, 1)


def test_json_roundtrip():
    for a in asm_list(3):
        assert asm_from_json(asm_to_json(a)) == a


def test_row_word_roundtrip():
    assert asm_row_word(CENTER) == "2/1.2.3/2"
    for n in (1, 3, 4):
        for a in asm_list(n):
            assert asm_from_row_word(asm_row_word(a)) == a
