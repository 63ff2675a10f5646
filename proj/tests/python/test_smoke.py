"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import reesdiff as rd


def frac(s):
    return Fraction(s) if s != "inf" else None


def test_ring_and_poly_arithmetic():
    ring = rd.Ring(0, ["x", "y"])
    f = rd.Poly(ring, "x^2 + y^3")
    g = rd.Poly(ring, "x - y")
    assert repr(f * g) == repr(rd.Poly(ring, "(x^2 + y^3) * (x - y)"))
    assert (f - f).is_zero()
    assert f.total_degree() == 3
    assert f.order_at([0, 0]) == 2
    assert f.order_at([1, 1]) == 0
    assert rd.Poly(ring, "0").order_at([0, 0]) is None


def test_hasse_derivatives():
    ring = rd.Ring(0, ["x"])
    assert rd.Poly(ring, "x^3").hasse([1]) == rd.Poly(ring, "3*x^2")
    f2 = rd.Ring(2, ["x"])
    assert rd.Poly(f2, "x^2").hasse([1]).is_zero()
    assert rd.Poly(f2, "x^2").hasse([2]) == rd.Poly(f2, "1")
    assert rd.Poly(ring, "x^3").log_hasse([1]) == rd.Poly(ring, "3*x^3")


def test_parse_error_positions():
    ring = rd.Ring(0, ["x"])
    with pytest.raises(rd.PolyParseError):
        rd.Poly(ring, "x + q")


def test_closure_and_sing():
    ring = rd.Ring(0, ["x"])
    g = rd.Algebra(ring, [("x^2", 2)])
    closed = g.diff_close()
    assert not g.is_diff_closed()
    assert closed.is_diff_closed()
    assert ("2*x", 1) in closed.gens()

    f5 = rd.Ring(5, ["x", "y"])
    cusp = rd.Algebra(f5, [("x^2 + y^3", 2)])
    assert cusp.sing_points() == [[0, 0]]
    assert cusp.in_sing([0, 0])
    assert not cusp.in_sing([1, 1])


def test_lambda_and_membership():
    line = rd.Ring(0, ["t"])
    g = rd.Algebra(line, [("t^3", 2)])
    assert frac(g.lambda_value()) == Fraction(3, 2)
    assert g.integral_member(2, 1)
    assert not g.integral_member(1, 1)
    assert frac(g.saturate().lambda_value()) == Fraction(3, 2)
    assert frac(g.diff_close().lambda_value()) == Fraction(3, 2)


def test_coefficient_algebra_and_restriction():
    ring = rd.Ring(0, ["x", "y"])
    g = rd.Algebra(ring, [("x^2 + y^3", 2)])
    coeff = g.coefficient_algebra(1)
    assert coeff.gens() == [("y^3", 2)]
    closed = g.diff_close()
    assert closed.restrict(1).lambda_value() == coeff.diff_close().lambda_value()


def test_probe_and_main_check():
    ring = rd.Ring(0, ["x", "y"])
    g = rd.Algebra(ring, [("x", 1), ("y", 2)])
    verdict = rd.equal_closure_probe(g, g.saturate(), trials=10, seed=0)
    assert not verdict["refuted"]

    line = rd.Ring(0, ["t"])
    bad = rd.equal_closure_probe(
        rd.Algebra(line, [("t^2", 1)]), rd.Algebra(line, [("t", 1)]), trials=5, seed=0
    )
    assert bad["refuted"]
    assert frac(bad["witness"]["lambda_left"]) == 2 * frac(bad["witness"]["lambda_right"])

    report = rd.main_theorem_check(g, g.saturate(), "sat", trials=10, seed=1, split_h=1)
    assert report["consistent"]
    assert report["coeff_lambda_left"] == report["coeff_lambda_right"]


def test_algebra_file_round_trip():
    text = "ring char=0 vars=x,y\ngen w=2 x^2 + y^3\nsplit h=1\n"
    algebra, split_h = rd.parse_algebra_file(text)
    assert split_h == 1
    again, _ = rd.parse_algebra_file(algebra.render() + "split h=1\n")
    assert algebra == again
