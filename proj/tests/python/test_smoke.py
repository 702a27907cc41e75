import ringsum


def test_telescope_alternating_identity():
    res = ringsum.telescope(
        "(-1)^Binom(k+1,2) * k^2 * Sum(j,1,k,(-1)^j/j)",
        zeta=1,
        extra=["Sum(j,1,k,(-1)^Binom(j+1,2)/j)"],
    )
    assert res["exit_code"] == 0
    assert res["verification"]["status"] == "pass"
    assert res["solution"]["certificate"]
    names = [g["name"] for g in res["tower"]["generators"]]
    assert len(names) == 4


def test_telescope_no_solution():
    res = ringsum.telescope("(-1)^k/(k+1)", zeta=1)
    assert res["exit_code"] == 1
    assert res["solution"] is None


def test_rewrite_product():
    res = ringsum.rewrite_product(
        "Prod(k,1,b, -(I^k)/(1+k))", zeta=4, extra=["Prod(j,1,k-1, j*I^j)"]
    )
    assert res["exit_code"] == 0
    assert res["verification"]["status"] == "pass"
    assert "t1" in res["solution"]["g"]


def test_zeilberger_binomial():
    res = ringsum.zeilberger("Binom(n,k)", params=["n"])
    assert res["exit_code"] == 0
    assert res["solution"]["order"] == 1
    c1, c2 = res["solution"]["coefficients"]
    assert {c1, c2} == {"-2", "1"} or {c1, c2} == {"2", "-1"}


def test_order_table():
    assert ringsum.order("I", zeta=4)["solution"]["order"] == 4
    res = ringsum.order("-1", zeta=1)
    assert res["solution"]["order"] == 2
    assert res["solution"]["period"] == 1
    assert res["solution"]["factorial_order"] == 2


def test_verify():
    ok = ringsum.verify("Sum(j,1,b,j)", "b*(b+1)/2", var="b", zeta=1, lo=1, hi=20)
    assert ok["verification"]["status"] == "pass"
    bad = ringsum.verify("k", "k+1", var="k", zeta=1, lo=1, hi=1)
    assert bad["verification"]["status"] == "fail"
    assert bad["exit_code"] == 1


def test_errors():
    import pytest

    with pytest.raises(ringsum.ParseError):
        ringsum.telescope("Sum(j,1,")
    with pytest.raises(ringsum.CapExceeded):
        ringsum.telescope("(-1)^Binom(k+1,2)/(k+1)", zeta=1, lambda_cap=2)
