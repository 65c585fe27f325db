import random
from math import factorial

import pytest

from witrees.gamma import multiset_schett
from witrees.grammar import (
    XYZ,
    derive,
    four_var_coeffs,
    four_var_poly,
    grammar_derive,
    schett_coeffs,
    schett_poly,
    schett_rules,
)
from witrees.mpoly import MPoly
from witrees.multiset import set_multiset

SCHETT_DISPLAYS = [
    "x",
    "yz",
    "xy^2+xz^2",
    "y^3z+yz^3+4x^2yz",
    "xy^4+14xy^2z^2+xz^4+4x^3y^2+4x^3z^2",
]


def test_schett_displays():
    for n, want in enumerate(SCHETT_DISPLAYS):
        assert schett_poly(n).canonical_str("grouped") == want


def test_eulerian_grammar():
    xy = ("x", "y")
    rules = {"x": MPoly(xy, {(1, 1): 1}), "y": MPoly(xy, {(1, 1): 1})}
    d3 = grammar_derive(rules, MPoly.var(xy, "x"), 3)
    assert d3 == MPoly(xy, {(3, 1): 1, (2, 2): 4, (1, 3): 1})


def test_derive_zero_times():
    start = MPoly.var(XYZ, "x")
    assert grammar_derive(schett_rules(), start, 0) == start


def test_undeclared_variable_rejected():
    with pytest.raises(ValueError, match="undeclared"):
        derive({"q": MPoly.const(XYZ, 1)}, MPoly.var(XYZ, "x"))
    with pytest.raises(ValueError, match="no substitution rule"):
        derive({"x": MPoly.var(XYZ, "y")}, MPoly.var(XYZ, "z"))


def test_factorial_evaluation():
    for n in range(9):
        assert schett_poly(n).evaluate({"x": 1, "y": 1, "z": 1}) == factorial(n)


def test_symmetry_and_parity_shape():
    for n in range(8):
        s = schett_poly(n)
        assert s == s.rename({"y": "z", "z": "y"})
        for (ex, ey, ez), _ in s.terms.items():
            if n % 2 == 0:
                assert ex % 2 == 1 and ey % 2 == 0 and ez % 2 == 0
            else:
                assert ex % 2 == 0 and ey % 2 == 1 and ez % 2 == 1


def test_grammar_equals_enumeration():
    for n in range(7):
        assert multiset_schett(set_multiset(n)) == schett_poly(n)


def test_four_var_small():
    assert four_var_poly(1) == MPoly(("w", "x", "y", "z"), {(1, 0, 1, 0): 1})
    assert four_var_coeffs(1) == {(0, 0): 1}


def test_st_relations():
    for n in range(1, 9):
        s = schett_coeffs(n)
        t = four_var_coeffs(n)
        for (i, j), v in s.items():
            if n % 2 == 1:
                assert v == t.get((2 * i - 1, j), 0) + t.get((2 * i, j), 0), (n, i, j)
            else:
                assert v == t.get((2 * i + 1, j), 0) + t.get((2 * i, j), 0), (n, i, j)
        assert sum(t.values()) == factorial(n)


def test_leibniz_law():
    rng = random.Random(5)
    rules = schett_rules()
    for _ in range(40):
        u = MPoly(XYZ, {tuple(rng.randrange(3) for _ in range(3)): rng.randint(-5, 5) for _ in range(4)})
        v = MPoly(XYZ, {tuple(rng.randrange(3) for _ in range(3)): rng.randint(-5, 5) for _ in range(4)})
        assert derive(rules, u * v) == derive(rules, u) * v + u * derive(rules, v)
