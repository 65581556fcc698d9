"""The permutation-sum evaluation oracle against the basis-rule product."""

import itertools
import random
from fractions import Fraction

import pytest

from doubleforms import DimensionMismatchError, eval_oracle, make_basis, make_g
from doubleforms.verify import random_form


def _basis_vectors(n):
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def test_oracle_worked_examples():
    g = make_g(2)
    e = _basis_vectors(2)
    assert eval_oracle(g, g, [e[0], e[1]], [e[0], e[1]]) == 2
    # skew symmetry: repeated argument kills the value
    assert eval_oracle(g, g, [e[0], e[0]], [e[0], e[1]]) == 0
    # frozen from expanding the four-term sum by hand
    e3 = _basis_vectors(3)
    left = make_basis(3, (0,), (0,))
    right = make_basis(3, (1,), (1,))
    assert eval_oracle(left, right, [e3[0], e3[1]], [e3[0], e3[1]]) == 1


def test_oracle_length_validation():
    g = make_g(3)
    e = _basis_vectors(3)
    with pytest.raises(DimensionMismatchError):
        eval_oracle(g, g, [e[0]], [e[0], e[1]])


def test_product_agrees_with_oracle_on_all_basis_pairs():
    rng = random.Random("oracle-agreement")
    for n in (3, 4):
        e = _basis_vectors(n)
        for (p1, q1), (p2, q2) in (((1, 1), (1, 1)), ((1, 0), (0, 1)), ((1, 1), (2, 1))):
            if p1 + p2 > n or q1 + q2 > n:
                continue
            a = random_form(rng, n, p1, q1, density=0.5)
            b = random_form(rng, n, p2, q2, density=0.5)
            product = a.mul(b)
            for rows in itertools.combinations(range(n), p1 + p2):
                for cols in itertools.combinations(range(n), q1 + q2):
                    direct = product[rows, cols]
                    via_oracle = eval_oracle(
                        a, b, [e[r] for r in rows], [e[c] for c in cols]
                    )
                    assert direct == via_oracle, (n, (p1, q1), (p2, q2), rows, cols)


def test_oracle_on_non_basis_vectors():
    # multilinearity: evaluating on combinations matches expanding by hand
    g = make_g(3)
    x = [Fraction(1), Fraction(2), Fraction(0)]
    y = [Fraction(0), Fraction(1), Fraction(-1)]
    value = eval_oracle(g, g, [x, y], [x, y])
    # (g.g)(v^w, v^w) = 2 (|v|^2 |w|^2 - <v,w>^2) by the determinant rule
    dot = lambda a, b: sum(u * v for u, v in zip(a, b))
    expected = 2 * (dot(x, x) * dot(y, y) - dot(x, y) ** 2)
    assert value == expected


def test_evaluate_skew_symmetry_and_basis_duality():
    rng = random.Random("evaluate")
    e = _basis_vectors(4)
    w = random_form(rng, 4, 2, 1)
    assert w.evaluate([e[1], e[1]], [e[0]]) == 0
    swapped = w.evaluate([e[2], e[0]], [e[1]])
    assert w.evaluate([e[0], e[2]], [e[1]]) == -swapped
    assert w.evaluate([e[0], e[2]], [e[1]]) == w[(0, 2), (1,)]
