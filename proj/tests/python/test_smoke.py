import math

import pytest

import amtv


def test_values():
    assert float(amtv.t_value("-1", 30)) == pytest.approx(-math.pi / 2, abs=1e-15)
    assert amtv.t_value("1,-2", 40) == "0.7739912010788711523280383838765103162761"
    assert float(amtv.evaluate("3/4*zeta(2)")) == pytest.approx(math.pi**2 / 8, abs=1e-15)


def test_words_and_duality():
    assert amtv.dual("-1,-3,2,-5") == "1,1,1,-1,-1,-1,-1,1,-2,-1"
    assert amtv.to_word("-1,-3,2,-5") == (-1, "mpzzmzmzzzz")
    assert amtv.from_word("mz") == (-1, "-2")
    assert amtv.duality_sign("1,2") in (-1, 1)
    assert amtv.shuffle("m", "mz") == {"mmz": "2", "mzm": "1"}


def test_errors():
    with pytest.raises(ValueError):
        amtv.dual("1,,2")
    with pytest.raises(ValueError):
        amtv.t_value("2,1")
    with pytest.raises(ArithmeticError):
        amtv.pslq(["pi", "log2", "zeta(3)", "zeta(5)"], digits=10)


def test_algebra():
    assert amtv.weighted_sum(3, 3, 2) == {"1,-1,-1": "1"}
    assert amtv.psi_bar([1, 2], 2) == {"-1,-1,-3": "1", "-1,1,-3": "1", "1,-1,3": "1", "1,-2,2": "1"}
    assert amtv.expand_poset('{"labels": {"0": -1, "1": -1}, "cover": []}') == {"mm": "2"}


def test_relations():
    assert amtv.pslq(["T(1,-1)", "zeta(2)"]) in ([4, -3], [-4, 3])
    rep = amtv.find_basis(3, digits=60)
    assert rep["dim"] == 4
    assert rep["basis"] == ["3", "1,-2", "-2,-1", "1,1,-1"]
    assert amtv.verify_catalog("weight2")["pass"] is True
