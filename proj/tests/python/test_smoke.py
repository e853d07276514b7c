"""Smoke tests for the python bindings."""

import os

import pytest

import heffter


def data(name):
    return os.path.join(os.environ["HEFFTER_DATA"], name)


def test_construct_golden():
    a = heffter.construct(19, 17)
    assert len(a) == 323
    assert a.dims.modulus == 647
    assert a.at(1, 1) == 18
    assert a.at(3, 1) == 96
    assert not a.filled(1, 3)
    with open(data("h19_17.csv")) as f:
        assert a.to_csv() == f.read()


def test_construct_rejects_bad_classes():
    with pytest.raises(heffter.UnsupportedClassError):
        heffter.construct(18, 13)
    with pytest.raises(heffter.UnsupportedClassError):
        heffter.construct(19, 9)
    assert len(heffter.construct(19, 9, force=True)) == 19 * 9


def test_verify_and_global_simplicity():
    a = heffter.construct(20, 17)
    rep = heffter.verify(a)
    assert rep["fill_ok"] and rep["support_ok"]
    assert rep["integer_sums_ok"] and rep["globally_simple"]
    assert heffter.is_heffter(a, integer=True)


def test_negative_fixture_h86():
    a = heffter.load_array(data("h8_6.json"))
    assert heffter.is_heffter(a)
    rep = heffter.verify(a)
    assert not rep["globally_simple"]
    axis, index, detail = rep["witnesses"][0]
    assert (axis, index) == ("row", 1)
    assert "-1" in detail
    assert heffter.partial_sums([-1, 5, 2, -7, -9, 10], 97) == [-1, 4, 6, -1, -10, 0]
    assert not heffter.is_simple(a.line("rows", 1), 97)
    assert heffter.find_simple_ordering(a.line("rows", 1), 97) is not None


def test_sum_table_matches_fixture():
    a = heffter.construct(19, 17)
    with open(data("h19_17_colsums.csv")) as f:
        assert heffter.sum_table_csv(a, "cols", "n3") == f.read()
    first = heffter.sum_table(a, "cols", "n3")[0]
    assert first[1][-1] == 0
    with pytest.raises(heffter.ClassError):
        heffter.sum_table(a, "rows", "n0")


def test_decompose_and_compatibility():
    a = heffter.construct(15, 13)
    check = heffter.decompose_check(a)
    assert check["rows_ok"] and check["cols_ok"] and check["orthogonal"]
    assert check["edges"] == 391 * 390 // 2

    comp = heffter.compatibility(heffter.construct(20, 17))
    assert not comp["compatible"]
    assert heffter.gcd_compat_predicate(19, 17)
    assert not heffter.gcd_compat_predicate(20, 17)

    with pytest.raises(heffter.NotSimpleError):
        heffter.base_cycles(heffter.load_array(data("h8_6.json")), "rows")


def test_round_trip_and_search():
    a = heffter.construct(16, 13)
    assert heffter.from_json(a.to_json()) == a
    assert heffter.from_csv(a.to_csv()) == a
    assert heffter.diagonal_bands(a) == (13, [1, 2])

    res = heffter.search(3, 3, 3, 3, limit=2)
    assert len(res["solutions"]) == 2
    assert not res["budget_exceeded"]
    assert all(heffter.is_heffter(s) for s in res["solutions"])
