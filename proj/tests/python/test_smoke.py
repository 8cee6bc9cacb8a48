from fractions import Fraction

import pytest

import bellpoly


def test_stirling():
    assert bellpoly.stirling(3, 2) == 3
    assert bellpoly.stirling(7, 3) == 301


def test_chsh_pipeline():
    points = bellpoly.lsr_vertices(2, 2, "bidir")
    assert len(points) == 16
    assert bellpoly.affine_dimension(points) == 8
    h = bellpoly.facets(points)
    assert len(h["inequalities"]) == 24
    cls = bellpoly.classes(h["inequalities"], 2, 2, "bidir", h["equations"])
    assert sum(not c["trivial"] for c in cls) == 1


def test_fixed_direction_counts():
    points = bellpoly.fixed_vertices(3, 2, 1, "a>b")
    assert len(points) == 320
    h = bellpoly.facets(points)
    cls = bellpoly.classes(h["inequalities"], 3, 2, "fixed")
    assert sum(not c["trivial"] for c in cls) == 8
    assert len(cls) == 9


def test_witness_and_membership():
    hat = bellpoly.hat_distribution(3, 3)
    assert hat["p"][(0, 1, 1, 1)] == Fraction(1, 2)
    assert bellpoly.no_signaling(hat) == (True, True)
    points = bellpoly.bidir_vertices(3, 3, 1)
    verdict, cert = bellpoly.membership(bellpoly.project(hat), points)
    assert verdict == "outside"
    coeffs, bound = cert
    for p in points:
        assert sum(c * x for c, x in zip(coeffs, p)) <= bound
    verdict, weights = bellpoly.membership(bellpoly.project(bellpoly.uniform_table(3, 3)), points)
    assert verdict == "inside"
    assert sum(w for _, w in weights) == 1


def test_simulation():
    report = bellpoly.simulate(bellpoly.hat_distribution(3, 3))
    assert report == {"bits": 2, "strategies": report["strategies"], "exact": True}
    signaling = {
        "scenario": (3, 2, 2, 2),
        "p": {(j, 1 if i else 0, i, j): 1 for i in range(3) for j in range(2)},
    }
    with pytest.raises(ValueError):
        bellpoly.simulate(signaling)


def test_lower_bound():
    r = bellpoly.lower_bound(3, 3, 1)
    assert r["exhaustive_refuted"] and r["lp_outside"] and r["agree"]
    r = bellpoly.lower_bound(2, 2, 1)
    assert not r["exhaustive_refuted"] and not r["lp_outside"]
