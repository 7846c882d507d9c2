import pytest

from asmdpp.dpp import (
    Dpp,
    EMPTY_DPP,
    dpp_from_json,
    dpp_stats,
    dpp_to_json,
    enumerate_dpps,
    q_sum_of_parts,
    z_dpp_brute,
    z_dpp_brute_w,
)
from asmdpp.errors import ResourceLimitError, ValidationError
from asmdpp.polynomial import poly_str
from helpers import dpp_list

DPPEX = Dpp(((6, 6, 6, 5, 2), (4, 4, 1), (3,)))

DPP3_EXPECTED = {
    (),
    ((3, 3), (2,)),
    ((2,),),
    ((3, 3),),
    ((3,),),
    ((3, 2),),
    ((3, 1),),
}


def test_validation():
    Dpp(((3, 1),))
    with pytest.raises(ValidationError):
        Dpp(((2, 2),))  # first part must exceed row length
    with pytest.raises(ValidationError):
        Dpp(((3, 4),))  # weak decrease violated
    with pytest.raises(ValidationError):
        Dpp(((3, 3), (3,)))  # strict column decrease violated
    with pytest.raises(ValidationError):
        Dpp(((3, 1), (2,)))  # 2 sits under the 1 above it
    with pytest.raises(ValidationError):
        Dpp(((3, 0),))  # nonpositive part


def test_enumeration_small_orders():
    assert [d.rows for d in enumerate_dpps(1)] == [()]
    assert {d.rows for d in enumerate_dpps(2)} == {(), ((2,),)}
    assert {d.rows for d in enumerate_dpps(3)} == DPP3_EXPECTED
    assert len(dpp_list(5)) == 429
    assert DPPEX in dpp_list(6)


def test_enumeration_order_is_documented_key():
    for n in (3, 4):
        seq = list(enumerate_dpps(n))
        key = lambda d: (
            d.row_count,
            tuple(r[0] for r in d.rows),
            tuple(len(r) for r in d.rows),
            d.rows,
        )
        assert [key(d) for d in seq] == sorted(key(d) for d in seq)


def test_stats_worked_example():
    s = dpp_stats(DPPEX, 6)
    assert (s.nu, s.mu, s.rho) == (7, 2, 3)
    assert s.parts_sum == 37
    assert s.row_count == 3


def test_stats_empty_and_single_row():
    s = dpp_stats(EMPTY_DPP, 4)
    assert (s.nu, s.mu, s.rho, s.parts_sum, s.row_count) == (0, 0, 0, 0, 0)
    s = dpp_stats(Dpp(((3, 1),)), 3)
    assert (s.nu, s.mu, s.rho) == (1, 1, 1)


def test_stats_rejects_oversized_part():
    with pytest.raises(ValidationError):
        dpp_stats(Dpp(((4, 1),)), 3)


def test_z_brute_small():
    assert poly_str(z_dpp_brute(2)) == "1 + x*z"
    assert (
        poly_str(z_dpp_brute(3)) == "1 + x + x*z + x^2*z + x*y*z + x^2*z^2 + x^3*z^2"
    )
    assert poly_str(z_dpp_brute_w(2)) == "w + x*z*w^2"


def test_z_brute_limit():
    with pytest.raises(ResourceLimitError):
        z_dpp_brute(8)


def test_q_sum_small():
    assert poly_str(q_sum_of_parts(1)) == "1"
    assert poly_str(q_sum_of_parts(2)) == "1 + q^2"
    # multiset of part sums over order 3: {0, 8, 2, 6, 3, 5, 4}
    sums = sorted(d.parts_sum() for d in dpp_list(3))
    assert sums == [0, 2, 3, 4, 5, 6, 8]


def test_boundary_relation_small():
    for n in (2, 3, 4):
        assert z_dpp_brute(n).substitute(2, 0) == z_dpp_brute(n - 1).substitute(2, 1)


def test_json_roundtrip():
    for d in dpp_list(3):
        assert dpp_from_json(dpp_to_json(d)) == d
