import random

import pytest

from functions.errors import DomainError, DivisibilityError
from functions.laurent import (LaurentPolynomial, ZERO, ONE, V, add, mul, negate, bar, is_bar_invariant,
                               quantum_integer, quantum_factorial, exact_divide, symmetric_defect, eval_at_one,
                               exponent_parity, has_only_positive_exponents, has_nonnegative_coefficients,
                               to_string, from_string, from_json, PARITY_ODD, PARITY_MIXED,
                               PARITY_EVEN, PARITY_ZERO)

V_INV = LaurentPolynomial.monomial(-1)


def test_ring_operations():
    q = V + V_INV
    assert mul(q, q) == LaurentPolynomial({2: 1, 0: 2, -2: 1})
    p = LaurentPolynomial({-3: 2, 1: -1, 4: 5})
    assert add(p, negate(p)) == ZERO
    assert mul(p, ONE) == p
    assert p - p == 0
    assert 3 * V == LaurentPolynomial.monomial(1, 3)


def test_zero_coefficients_are_dropped():
    p = LaurentPolynomial({0: 0, 2: 1})
    assert p.coeffs == {2: 1}
    assert LaurentPolynomial({1: 0}).is_zero()
    assert (V - V).min_degree() is None


def test_bar():
    assert bar(V.shift(1)) == LaurentPolynomial.monomial(-2)
    assert bar(ONE + V) == ONE + V_INV
    p = LaurentPolynomial({-2: 3, 5: -1})
    assert bar(bar(p)) == p
    assert is_bar_invariant(V + V_INV)
    assert not is_bar_invariant(V)


def test_quantum_integers():
    assert quantum_integer(2) == V + V_INV
    assert quantum_integer(3) == LaurentPolynomial({2: 1, 0: 1, -2: 1})
    assert quantum_integer(0) == ZERO
    assert quantum_factorial(0) == ONE
    assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)
    with pytest.raises(DomainError):
        quantum_integer(-1)
    with pytest.raises(DomainError):
        quantum_factorial(-2)


def test_exact_divide():
    q = V + V_INV
    assert exact_divide(q * q, q) == q
    assert exact_divide(ZERO, q) == ZERO
    assert exact_divide(LaurentPolynomial({3: 1, 1: 1}), LaurentPolynomial({2: 1, 0: 1})) == V
    with pytest.raises(DivisibilityError):
        exact_divide(V, q)
    with pytest.raises(DivisibilityError):
        exact_divide(ONE, ZERO)
    with pytest.raises(DivisibilityError):
        exact_divide(LaurentPolynomial.monomial(0, 3), LaurentPolynomial.monomial(0, 2))


def test_symmetric_defect():
    p = V_INV + LaurentPolynomial.monomial(1, 2)
    defect = symmetric_defect(p)
    assert defect == V_INV + V
    assert is_bar_invariant(defect)
    assert p - defect == V
    assert symmetric_defect(LaurentPolynomial.monomial(0, 3)) == 3
    assert symmetric_defect(V.shift(1)) == ZERO


def test_evaluation_and_parity():
    assert eval_at_one(LaurentPolynomial({2: 1, 0: 2, -2: 1})) == 4
    assert exponent_parity(V + V.shift(2)) == PARITY_ODD
    assert exponent_parity(ONE + V) == PARITY_MIXED
    assert exponent_parity(LaurentPolynomial({-2: 1, 4: 3})) == PARITY_EVEN
    assert exponent_parity(ZERO) == PARITY_ZERO


@pytest.mark.parametrize('p, text', [
    (LaurentPolynomial({-2: 1, 0: 2, 2: 1}), 'v^-2 + 2 + v^2'),
    (ONE + V, '1 + v'),
    (ONE - V, '1 - v'),
    (ZERO, '0'),
    (LaurentPolynomial({1: -1}), '-v'),
    (LaurentPolynomial({-1: 3, 3: -2}), '3v^-1 - 2v^3'),
])
def test_canonical_string(p, text):
    assert to_string(p) == text
    assert str(p) == text
    assert from_string(text) == p


def test_from_string_rejects_garbage():
    with pytest.raises(DomainError):
        from_string('v^ + 2')
    with pytest.raises(DomainError):
        from_string('x')


def test_json_form_is_ascending():
    p = LaurentPolynomial({3: -1, -2: 4})
    assert p.to_json() == [[-2, 4], [3, -1]]
    assert from_json(p.to_json()) == p


def test_coefficient_and_exponent_predicates():
    assert has_nonnegative_coefficients(ZERO)
    assert has_nonnegative_coefficients(LaurentPolynomial({1: 2, 3: 1}))
    assert not has_nonnegative_coefficients(V - V.shift(1))
    assert has_only_positive_exponents(V + V.shift(2))
    assert not has_only_positive_exponents(ONE + V)


def random_poly(rng, span=8, terms=4):
    return LaurentPolynomial({rng.randint(-span, span): rng.randint(-5, 5) for _ in range(rng.randint(0, terms))})


@pytest.mark.parametrize('seed', range(20))
def test_bar_is_multiplicative(seed):
    rng = random.Random(seed)
    for _ in range(25):
        p, q = random_poly(rng), random_poly(rng)
        assert bar(p * q) == bar(p) * bar(q)
        assert bar(p + q) == bar(p) + bar(q)


@pytest.mark.parametrize('seed', range(20))
def test_exact_divide_undoes_multiplication(seed):
    rng = random.Random(seed)
    for _ in range(25):
        p, q = random_poly(rng), random_poly(rng)
        if q.is_zero():
            continue
        assert exact_divide(p * q, q) == p


@pytest.mark.parametrize('k', range(13))
def test_quantum_integers_are_bar_invariant(k):
    assert is_bar_invariant(quantum_integer(k))
    assert is_bar_invariant(quantum_factorial(k))
    assert eval_at_one(quantum_integer(k)) == k


@pytest.mark.parametrize('seed', range(20))
def test_symmetric_defect_leaves_positive_part(seed):
    rng = random.Random(seed)
    for _ in range(25):
        f = random_poly(rng)
        s = symmetric_defect(f)
        assert is_bar_invariant(s)
        assert has_only_positive_exponents(f - s)
