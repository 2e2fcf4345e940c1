from fractions import Fraction

import pytest

import hurwitzkit as hk


def test_small_numbers_agree():
    assert hk.hurwitz_number(0, [1, 1, 1], "oracle") == 4
    assert hk.hurwitz_number(0, [1, 1, 1], "cutjoin") == 4
    assert hk.hurwitz_number(1, [1, 1]) == Fraction(1, 2)
    assert hk.hurwitz_number(1, [2, 1, 1], "elsv") == hk.hurwitz_number(1, [2, 1, 1])


def test_table_rows():
    rows = hk.hurwitz_table(3, 1)
    assert {"g", "alpha", "r", "value", "method"} <= set(rows[0])
    assert all(isinstance(r["value"], Fraction) for r in rows)


def test_hodge():
    assert hk.hodge_integral(0, [0, 0, 0]) == 1
    assert hk.hodge_integral(1, [1]) == Fraction(1, 24)
    assert hk.hodge_integral(1, [0], 1) == Fraction(1, 24)


def test_wexpr():
    e = hk.wexpr(1, 1)
    assert e["log"] == {}
    assert e["laurent"] == {0: Fraction(1, 24), 1: Fraction(-1, 12), 2: Fraction(1, 24)}
    # [x^2] D H~_1 = 2 H^1_(1,1) / 4!
    assert hk.simple_series_coeff(1, 1, 2) == Fraction(1, 24)


def test_suite_and_search():
    assert "closed-forms" in hk.suite_names()
    report = hk.run_suite("oracle-vs-cutjoin", d_max=3, r_max=8)
    assert report["suite"] == "oracle-vs-cutjoin"
    family = [{"factors": [{"g": 0, "p": 2}]}, {"factors": [{"g": 0, "p": 2}, {"g": 0, "p": 2}]},
              {"factors": [{"g": 0, "p": 1}]}]
    result = hk.search(family, d_check=6)
    assert result["rank"] == 2


def test_errors():
    with pytest.raises(ValueError):
        hk.wexpr(0, 0)
    with pytest.raises(ValueError):
        hk.search([{"factors": []}])
