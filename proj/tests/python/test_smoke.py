import json

import prymhg

GAMMA = "-18,-1,2,3,5,9"


def test_singular_value():
    assert prymhg.singular_value(GAMMA) == "3125/940369969152"
    assert prymhg.singular_value("-2,1,1") == "1/4"


def test_series_coefficient():
    assert prymhg.series_coefficient(GAMMA, 0) == "1"
    assert prymhg.series_coefficient(GAMMA, 1) == "12252240"


def test_exponent_data():
    d = prymhg.exponent_data(GAMMA)
    assert d["order"] == 8
    assert d["alpha0"] == "3125/940369969152"
    assert len(d["exps0"]) == 8 and len(d["expsInf"]) == 8
    assert d["exps0"].count("0") == 2


def test_operator_roundtrips():
    op = json.loads(prymhg.irreducible_operator(GAMMA))
    assert op[0]["D"] == 8
    assert prymhg.factorization_check(GAMMA)
    assert prymhg.charpoly_ratio_check(GAMMA)
    assert json.loads(prymhg.reducible_operator(GAMMA))[0]["D"] == 19


def test_toric_model_and_restriction():
    m = prymhg.toric_model(GAMMA)
    assert len(m["monomials"]) == 6
    assert sum(k * g for k, g in zip(m["kexp"], [-18, -1, 2, 3, 5, 9])) == 1
    # the restriction is proportional to the uncancelled operator; the unit is 18^18
    assert prymhg.restriction_unit(GAMMA) == str(18**18)


def test_volume_and_counts():
    assert prymhg.normalized_volume(GAMMA) == "19"
    for alpha in range(1, 7):
        assert prymhg.count_points("paper", 7, alpha) == prymhg.count_points("bcm", 7, alpha)


def test_conic_report():
    r = prymhg.conic_report()
    assert r["genus_base"] == 3
    assert r["genus_cover"] == 7
    assert r["fixed_points"] == 4
    assert r["weighted_degree"] == 9
    assert "4*y^3" in r["closure_weighted"]


def test_hodge_table():
    table = json.loads(prymhg.hodge_table_json())
    assert sum(e["h"] for e in table) == 18
    assert sum(e["h"] for e in table if e["p"] + e["q"] == 3) == 8


def test_critical_certificate():
    c = prymhg.critical_certificate(bits=192)
    assert c["alpha_sing"] == "3125/940369969152"
    assert c["converged"]
    assert float(c["residual"]) < 1e-10


def test_monodromy_quick():
    r = json.loads(prymhg.monodromy_json(GAMMA, bits=128, tol="1/1000000"))
    assert r["order"] == 8
    assert r["reflection_rank"] == 1
    assert r["charpoly_residual_0"] < 1e-6
    assert r["charpoly_residual_inf"] < 1e-6
    assert r["all_pass"]
