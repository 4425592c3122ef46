import pytest

import sextic

EX23 = {
    "field": "Q",
    "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"],
               ["10", "11", "1"], ["27", "2", "17"], ["-19", "11", "-12"], ["-15", "-19", "20"]],
}


def test_validate_and_census():
    assert sextic.validate(EX23)["ok"]
    rep = sextic.census(EX23)
    assert rep["s"] == 5
    assert (rep["real"], rep["totallyReal"]) == (120, 120)
    assert len(rep["classes"]) == 120


def test_collinear_configuration_raises():
    bad = dict(EX23, points=[["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"]] + EX23["points"][3:])
    assert not sextic.validate(bad)["ok"]
    with pytest.raises(sextic.DegenerateConfigurationError, match="collinear"):
        sextic.census(bad)


def test_fixtures_and_verify():
    assert "ex-4.2" in sextic.fixture_names()
    qk = sextic.fixture("ex-4.2")
    plane = ["666727858907928630542805134887161895157", "-371406861222752391050720128495402169926", "0",
             "-13148859997292971155483015"]
    assert sextic.verify(qk, plane)["status"] == "tritangent(3)"
    assert sextic.verify(qk, [1, 2, 3, 5])["status"] == "not_tritangent"


def test_qi_fixture():
    rep = sextic.census(sextic.fixture("ex-3.4"))
    assert (rep["s"], rep["real"], rep["totallyReal"]) == (2, 16, 1)


def test_branch_curve_linear_matches_ambient_shape():
    basis = sextic.sextic_basis(EX23)
    c = sextic.branch_curve(basis, method="linear")
    assert c["6,0"] == "1"
    qk = sextic.to_ambient(c)
    assert set(qk) == {"Q", "K"}


def test_bidegrees():
    assert sextic.delta1_bidegree(2, 3) == (33, 34)
    assert sextic.pullback_bidegree(1440, 152) == (744, 592)
    assert sextic.pullback_bidegree(32130, 3626) == (8862, 5236)


def test_search_is_deterministic():
    a = sextic.search(5, 2, 11)
    b = sextic.search(5, 2, 11)
    assert a == b
    assert all(s["real"] == 120 for s in a["samples"])


def test_parse_error():
    with pytest.raises(sextic.ParseError):
        sextic.census({"field": "Q", "points": [["1", "0", "0"]]})
