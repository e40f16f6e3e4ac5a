import pytest

from functions.errors import DomainError
from functions.laurent import LaurentPolynomial, ZERO, ONE, V
from functions.fock import (FockVector, residue_context, f_action, e_action, f_divided, e_divided,
                            inner_product, vacuum, random_vector, make_rng)
from functions.partition_core import Partition, EMPTY, partitions_of, core_weight_sign, residue_content


def P(*parts):
    return Partition(parts)


def s(*parts):
    return FockVector.basis(P(*parts))


def test_residue_context_picks_smallest_legal_bead_count():
    ctx = residue_context(2, 1, 1)
    assert (ctx.t, ctx.i) == (2, 1)
    ctx = residue_context(2, 0, 1)
    assert (ctx.t, ctx.i) == (3, 1)
    with pytest.raises(DomainError):
        residue_context(2, 1, 1, t=3)
    with pytest.raises(DomainError):
        residue_context(2, 1, 3, t=3)
    with pytest.raises(DomainError):
        residue_context(2, 2, 0)


def test_f_action_examples():
    assert f_action(0, vacuum(), 2) == s(1)
    assert f_action(1, s(1), 2) == s(2) + s(1, 1).scale(V)
    assert f_action(1, FockVector.zero(), 2).is_zero()
    for t in (2, 4, 6):
        assert f_action(1, s(1), 2, t) == s(2) + s(1, 1).scale(V)


def test_e_action_examples():
    assert e_action(0, s(1), 2) == vacuum()
    assert e_action(0, vacuum(), 2).is_zero()
    assert e_action(1, vacuum(), 3).is_zero()


def test_inner_product():
    assert inner_product(s(2), s(2)) == ONE
    assert inner_product(s(2), s(1, 1)) == ZERO
    assert inner_product(f_action(1, s(1), 2), s(1, 1)) == V


def test_divided_powers():
    x = f_divided(1, 2, s(1), 2)
    twice = f_action(1, f_action(1, s(1), 2), 2)
    q = V + LaurentPolynomial.monomial(-1)
    assert x.scale(q) == twice
    assert f_divided(0, 0, s(2), 3) == s(2)
    with pytest.raises(DomainError):
        f_divided(0, -1, s(2), 3)
    with pytest.raises(DomainError):
        e_divided(0, -1, s(2), 3)


def test_actions_preserve_residue_content():
    for e in (2, 3):
        for lam in partitions_of(5):
            for r in range(e):
                content = list(residue_content(lam, e))
                content[r] += 1
                for mu in f_action(r, FockVector.basis(lam), e).terms:
                    assert residue_content(mu, e) == tuple(content)
                    assert mu.size == lam.size + 1


def test_actions_are_adjoint():
    rng = make_rng(7)
    for _ in range(60):
        e = rng.choice((2, 3, 4, 5))
        r = rng.randrange(e)
        n = rng.randint(0, 5)
        x = random_vector(rng, n)
        y = random_vector(rng, n + 1)
        assert inner_product(f_action(r, x, e), y) == inner_product(x, e_action(r, y, e))


def test_display_shift_invariance():
    rng = make_rng(11)
    for _ in range(30):
        e = rng.choice((2, 3, 5))
        r = rng.randrange(e)
        x = random_vector(rng, rng.randint(0, 5))
        t = 7
        while (r + t) % e == 0:
            t += 1
        assert f_action(r, x, e, t) == f_action(r, x, e, t + e)
        assert e_action(r, x, e, t) == e_action(r, x, e, t + e)


def test_vector_rendering():
    x = s(2) + s(1, 1).scale(V)
    assert str(x) == 's(2) + (v) s(1,1)'
    assert x.to_json() == [{'partition': [2], 'coeff': [[0, 1]]}, {'partition': [1, 1], 'coeff': [[1, 1]]}]
    assert FockVector.from_json(x.to_json()) == x
    assert str(FockVector.zero()) == '0'
    assert x.max_length() == 2
    assert vacuum().coefficient(EMPTY) == ONE
