import json
from fractions import Fraction

import pytest

import fractal_tutte as ft


def test_generation_one_polynomial():
    t = ft.tutte_symbolic(ft.LatticeFamily.Fractal, 1)
    assert str(t) == "x^3+2*x^2+2*x*y+x+y^2+y"
    g = ft.build_lattice(ft.LatticeFamily.Fractal, 1)
    assert ft.tutte_deletion_contraction(g) == t
    assert ft.tutte_subgraph_expansion(g) == t


def test_big_integers_are_python_ints():
    assert ft.spanning_trees_closed(ft.LatticeFamily.Fractal, 3) == 2**63
    assert ft.tutte_eval(ft.LatticeFamily.Fractal, 6, 1, 1) == 2 ** (4**6 - 1)


def test_rational_evaluation():
    value = ft.tutte_eval(ft.LatticeFamily.Fractal, 2, Fraction(1, 2), -3)
    assert value == Fraction(4026753, 2048)
    assert ft.tutte_eval(ft.LatticeFamily.Fractal, 2, "1/2", "-3") == value


def test_polynomial_arithmetic():
    x, y = ft.BiPoly.x(), ft.BiPoly.y()
    p = (x + y) * (x - y)
    assert p == x**2 - y**2
    assert p.evaluate(3, 2) == 5
    assert (x * x - ft.BiPoly.constant(1)).divide_by_x_minus_1() == x + ft.BiPoly.constant(1)
    with pytest.raises(ft.NotDivisible):
        (x + y).divide_by_x_minus_1()
    assert json.loads(p.to_json())["terms"][0] == {"x": 2, "y": 0, "c": "1"}
    assert ft.BiPoly.from_json(p.to_json()) == p


def test_potts_relation():
    g = ft.build_lattice(ft.LatticeFamily.Flower13, 1)
    for q in (1, 2, 3):
        for v in (Fraction(-1, 2), 1, 2):
            assert ft.potts_direct(g, q, v) == ft.potts_lattice(ft.LatticeFamily.Flower13, 1, q, v)


def test_errors_map_to_exceptions():
    with pytest.raises(ft.CapExceeded):
        ft.tutte_symbolic(ft.LatticeFamily.Fractal, 9)
    with pytest.raises(ft.DomainError):
        ft.indegree_sequences_strong(0)
    with pytest.raises(ft.FractalTutteError):
        ft.potts_lattice(ft.LatticeFamily.Fractal, 1, 2, 0)


def test_growth_and_cli():
    growth = ft.growth_constant(ft.LatticeFamily.Flower22, 8)
    assert growth["exact"] == "ln(2)"
    assert abs(growth["sequence"][-1][1] - 0.6931) < 1e-3
    code, out, err = ft.run_cli(["gen", "--family", "fractal", "--n", "1"])
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "p 4 5 0 3"
    code, out, _ = ft.run_cli(["gen", "--family", "fractal", "--n", "99"])
    assert code == 3 and out == ""
