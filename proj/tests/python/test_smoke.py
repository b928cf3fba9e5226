import pytest

import ouro


def test_check_mean_2():
    r = ouro.check("mean(x1,x2)", "R^2")
    assert r["status"] == "HoldsProbably"
    assert r["points_checked"] == 10000
    assert r["max_defect"] <= 1e-9


def test_check_exhaustive_identity():
    r = ouro.check("x1", "int[-50..50]")
    assert r["status"] == "Holds"
    assert r["points_checked"] == 101
    assert r["max_defect"] == 0.0


def test_failure_modes():
    succ = ouro.check("x1+1", "R")
    assert succ["status"] == "Fails"
    assert succ["witness"]["defect"] == 1.0

    dbl = ouro.check("2*x1", "real[0,1]")
    assert dbl["status"] == "Undefined"
    assert dbl["witness"]["output"] > 1.0


def test_catalog_names_resolve():
    names = {e["name"] for e in ouro.catalog()}
    assert {"identity", "const_7", "mean_2", "succ", "double_unit"} <= names
    r = ouro.check("const_7")
    assert r["status"] == "HoldsProbably"


def test_containment_report():
    r = ouro.check_containment("mean(x1,x2)", "real[0,1] x int[0..9]")
    assert r["status"] == "escape"
    assert "witness" in r


def test_image_report():
    r = ouro.image_report("const_7_int")
    assert r["equal"] is True
    assert r["image"]["values"] == [7]
    with pytest.raises(ouro.PreconditionError):
        ouro.image_report("succ")


def test_expr_helpers():
    assert ouro.eval_expr("mean(x1,x2,x3)", [1, 2, 3]) == 2
    assert isinstance(ouro.eval_expr("mean(x1,x2,x3)", [1, 2, 3]), int)
    assert ouro.eval_expr("1/2", [0]) == 0.5
    src = "(x1+x2)/2"
    assert ouro.print_parsed(ouro.print_parsed(src, 2), 2) == ouro.print_parsed(src, 2)
    with pytest.raises(ouro.ExprArityError):
        ouro.eval_expr("x3", [1, 2])
    with pytest.raises(ouro.EvalDomainError):
        ouro.eval_expr("x1/x2", [1, 0])


def test_domain_helpers():
    assert ouro.domain_contains("real[0,1]", 0.5)
    assert not ouro.domain_contains("int[-50..50]", 51)
    assert ouro.domain_enumerate("int[0..2]") == [0, 1, 2]
    with pytest.raises(ouro.NotEnumerableError):
        ouro.domain_enumerate("R")
    a = ouro.domain_sample("real[0,1]", 100, seed=5)
    b = ouro.domain_sample("real[0,1]", 100, seed=5)
    assert a == b
    assert all(0 <= x <= 1 for x in a)


def test_slln():
    t = ouro.simulate_path("uniform(0,1)", n_max=100000, checkpoints=[10, 100000], seed=42)
    assert t["analytic_mean"] == 0.5
    assert abs(t["running_means"][-1] - 0.5) < 0.01
    assert t == ouro.simulate_path(
        "uniform(0,1)", n_max=100000, checkpoints=[10, 100000], seed=42
    )

    csv = ouro.convergence_csv("bernoulli(1)", n_max=1000, checkpoints=[1, 1000])
    lines = csv.strip().splitlines()
    assert lines[0] == "n,running_mean,analytic_mean,abs_error"
    assert all(line.endswith(",0") for line in lines[1:])


def test_membership_sweep():
    r = ouro.membership_sweep("uniform(0,1)", [1, 2, 8], samples=200)
    assert [row["status"] for row in r["results"]] == ["HoldsProbably"] * 3
    assert r["distribution"] == "uniform(0,1)"

    z = ouro.mean_sweep([2], base="int[0..9]", samples=50)
    assert z["results"][0]["status"] == "Undefined"
