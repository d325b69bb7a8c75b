from fractions import Fraction

import pytest

import horikawa

sympy = pytest.importorskip("sympy")


def test_sigmas():
    assert horikawa.sigma_names() == ["E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13"]
    info = horikawa.sigma_info("E12")
    assert (info["p"], info["q"], info["d"], info["mu"]) == (3, 7, 21, 12)


def test_weights_and_milnor():
    assert horikawa.weight("W12", 0, 0, 5) == 5
    assert horikawa.weight("W12", 10, 0, 0) == -20
    assert horikawa.milnor_number("z^3 + y^7") == 12
    assert horikawa.classify_local("y^2 + z^2 + z^5")["name"] == "A1"


def test_k_squared_matches_closed_form():
    # K_Z + B/2 = Dx + c E with Dx^2 = 1/2, E^2 = -1/pq, so K^2 = 2(K_Z + B/2)^2 = 1 - 2c^2/pq
    for s in horikawa.sigma_names():
        i = horikawa.sigma_info(s)
        p, q, d = i["p"], i["q"], i["d"]
        c = p + q - 1 - d // 2
        want = 1 - Fraction(2 * c * c, p * q)
        assert Fraction(horikawa.k_squared(s)) == want


def test_replace_w12_example():
    d = horikawa.replace("W12", "z^5 + x^5*y^5 + x^2*z^4 + x^10")
    assert d["totalChi"] == 37
    assert d["boundaryDim"] == 27
    with pytest.raises(horikawa.HorikawaError):
        horikawa.replace("W12", "x^5*y^5 + x^2*z^4 + x^10")


def test_git():
    r = horikawa.git_forms("x^2*(x^2 + y^2)", "x^3*y^3", "x^4*(x^4 + y^4)", "x^5*y^5")
    assert r["stable"] is False
    assert r["witness"] == "x"
    assert horikawa.git_forms("x^4 + y^4", "x^6 + y^6", "x^8 + y^8", "x^10 + y^10")["stable"] is True
    with pytest.raises(horikawa.HorikawaError):
        horikawa.git("x^10")


def _sympy_singular_points(form):
    x0, x1, x2 = sympy.symbols("x0 x1 x2")
    F = sympy.sympify(form.replace("^", "**"))
    pts = set()
    for chart in (x0, x1, x2):
        eqs = [e.subs(chart, 1) for e in (F, F.diff(x0), F.diff(x1), F.diff(x2))]
        for sol in sympy.solve(eqs, [v for v in (x0, x1, x2) if v != chart], dict=True):
            p = tuple(sympy.nsimplify(sol.get(v, 1 if v == chart else 0)) for v in (x0, x1, x2))
            k = next(c for c in p if c != 0)
            pts.add(tuple(c / k for c in p))
    return pts


@pytest.mark.parametrize("sigma,count", [("Z11", 0), ("Z12", 1), ("Z13", 1), ("W12", 0), ("W13", 1)])
def test_sample_sextic_singular_loci_against_sympy(sigma, count):
    s = horikawa.sextic(sigma)
    assert s["shapeOk"]
    ours = s["singularScan"]["points"]
    theirs = _sympy_singular_points(s["form"])
    assert len(ours) == count
    assert len(theirs) == count
    if count:
        assert ours[0]["point"] == "[1:0:0]"
        assert (1, 0, 0) in theirs


def test_tables():
    assert "weights" in horikawa.table_ids()
    t = horikawa.table("ksq")
    assert t["ok"]
    assert any("4/3" in n for n in t["notes"])
    li = horikawa.table("line-incidence")
    assert not li["ok"]
    assert {m.split(":")[0] for m in li["mismatches"]} == {"Z11", "Z13"}
