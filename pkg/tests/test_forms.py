"""Exact homogeneous forms, binary-form arithmetic along a line, and the
text input formats."""

import random
from fractions import Fraction

import pytest

from tangency.fields import QQ, PrimeField
from tangency.forms import (
    HyperForm,
    LineParam,
    binary_is_zero,
    binary_mul,
    linear_power,
    monomials,
    parse_form,
    parse_line_param,
    pullback_of_partial,
    s_valuation,
)


def test_monomials_enumeration():
    ms = monomials(2, 2)
    assert len(ms) == 6
    assert all(sum(e) == 2 and len(e) == 3 for e in ms)
    assert len(set(ms)) == 6
    from math import comb

    assert len(monomials(4, 3)) == comb(4 + 3, 3)


def test_binary_arithmetic_against_direct_expansion():
    f = PrimeField(101)
    # (2s + 3t)^4 expanded coefficient by coefficient
    coeffs = linear_power(2, 3, 4, f)
    for idx, c in enumerate(coeffs):
        # coefficient of s^idx t^(4-idx)
        from math import comb

        assert c == comb(4, idx) * 2 ** idx * 3 ** (4 - idx) % 101
    prod = binary_mul([1, 1], [1, 100], f)  # (t + s)(t - s) = t^2 - s^2
    assert prod == [1, 0, 100]


def test_s_valuation():
    f = QQ
    assert s_valuation([0, 0, Fraction(3)], f) == 2
    assert s_valuation([Fraction(1)], f) == 0
    assert s_valuation([0, 0], f) is None
    assert binary_is_zero([0, 0], f)


def test_line_param_validation():
    f = QQ
    with pytest.raises(ValueError, match="rank"):
        LineParam([(1, 0), (2, 0), (0, 0)], f)
    line = LineParam.from_point_direction([1, 0, 0], [0, 1, 0], f)
    assert line.marked_point() == [1, 0, 0]
    assert line.direction() == [0, 1, 0]
    assert line.point_at(1, 1) == [1, 1, 0]


def test_hyperform_validation():
    f = QQ
    with pytest.raises(ValueError):
        HyperForm(2, 2, {(1, 0, 0): 1}, f)  # inhomogeneous exponent
    with pytest.raises(ValueError, match="exceed the degree"):
        HyperForm(2, 3, {(3, 0, 0): 1}, PrimeField(3))
    F = HyperForm(2, 2, {(2, 0, 0): 0, (0, 2, 0): 1}, f)
    assert (2, 0, 0) not in F.terms  # zero coefficients dropped


def test_evaluate_and_gradient_euler_identity():
    rng = random.Random(23)
    f = PrimeField(97)
    for _ in range(20):
        n = rng.choice((2, 3))
        dd = rng.choice((2, 3, 4))
        terms = {}
        for e in monomials(n, dd):
            c = rng.randrange(97)
            if c:
                terms[e] = c
        F = HyperForm(n, dd, terms, f)
        pt = [rng.randrange(97) for _ in range(n + 1)]
        grad = F.gradient(pt)
        euler = 0
        for xi, gi in zip(pt, grad):
            euler = f.add(euler, f.mul(xi, gi))
        assert euler == f.mul(f.of(dd), F.evaluate(pt))


def test_pullback_worked_example():
    # F = x0 x2 - x1^2 along [s:t] -> [t:s:0] pulls back to -s^2
    f = QQ
    F = HyperForm(2, 2, {(1, 0, 1): 1, (0, 2, 0): -1}, f)
    line = LineParam([(0, 1), (1, 0), (0, 0)], f)
    pb = F.pullback(line)
    assert pb == [0, 0, Fraction(-1)]
    assert s_valuation(pb, f) == 2


def test_pullback_of_partial_matches_partial_pullback():
    rng = random.Random(31)
    f = PrimeField(101)
    for _ in range(25):
        n = rng.choice((2, 3, 4))
        dd = rng.choice((2, 3, 5))
        terms = {}
        for e in monomials(n, dd):
            c = rng.randrange(101)
            if c and rng.random() < 0.5:
                terms[e] = c
        if not terms:
            continue
        F = HyperForm(n, dd, terms, f)
        rows = [(rng.randrange(101), rng.randrange(101)) for _ in range(n + 1)]
        try:
            line = LineParam(rows, f)
        except ValueError:
            continue
        for i in range(n + 1):
            direct = pullback_of_partial(F, i, line)
            via_partial = F.partial(i).pullback(line)
            assert direct == via_partial


def test_substitute_identity_and_permutation():
    f = QQ
    F = HyperForm(2, 3, {(2, 1, 0): Fraction(2), (0, 0, 3): 1}, f)
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert F.substitute(ident) == F
    # swap x0 <-> x1
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    G = F.substitute(swap)
    assert G.terms.get((1, 2, 0)) == Fraction(2)
    assert G.terms.get((0, 0, 3)) == 1


def test_substitute_is_multiplicative_in_the_matrix():
    rng = random.Random(41)
    f = PrimeField(101)
    F = HyperForm.fermat(2, 3, f)
    for _ in range(10):
        A = [[rng.randrange(101) for _ in range(3)] for _ in range(3)]
        B = [[rng.randrange(101) for _ in range(3)] for _ in range(3)]
        AB = [
            [sum(A[i][k] * B[k][j] for k in range(3)) % 101 for j in range(3)]
            for i in range(3)
        ]
        assert F.substitute(A).substitute(B) == F.substitute(AB)


def test_parse_form_roundtrip_and_errors():
    f = QQ
    text = "# a smooth quadric\n1  1 0 0 1\n-1 0 1 1 0\n"
    F = parse_form(text, f)
    assert F.n == 3 and F.d == 2
    assert F.terms[(1, 0, 0, 1)] == 1
    again = parse_form(F.text(), f)
    assert again == F
    with pytest.raises(ValueError, match="line 2"):
        parse_form("1 2 0\n1 1 1 0\n", f)  # wrong number of exponents
    with pytest.raises(ValueError):
        parse_form("1 2 0\n1 1 0\n", f)  # inhomogeneous
    with pytest.raises(ValueError):
        parse_form("", f)
    # duplicate exponent rows merge
    merged = parse_form("1 1 1\n2 1 1\n", f)
    assert merged.terms[(1, 1)] == 3


def test_parse_form_rational_coefficients():
    F = parse_form("1/2 2 0\n-3/4 0 2\n", QQ)
    assert F.terms[(2, 0)] == Fraction(1, 2)
    assert F.terms[(0, 2)] == Fraction(-3, 4)


def test_parse_line_param():
    f = QQ
    line = parse_line_param("1 0\n0 1\n0 0\n", f)
    assert line.marked_point() == [0, 1, 0]
    with pytest.raises(ValueError):
        parse_line_param("1 0\n2 0\n0 0\n", f)


def test_fermat_constructor():
    f = PrimeField(7)
    F = HyperForm.fermat(3, 5, f)
    assert len(F.terms) == 4
    assert all(c == 1 for c in F.terms.values())
    assert F.evaluate([1, 1, 1, 1]) == f.of(4)
