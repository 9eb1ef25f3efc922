import itertools

import pytest

from macdual import OrderSpec, Polynomial, compare_monomials, initial_term
from macdual.exceptions import InputError
from macdual.poly import exponents_up_to

ORDERS = [
    OrderSpec.graded(2),
    OrderSpec.graded(3),
    OrderSpec.graded(3, permutation=[2, 0, 1]),
    OrderSpec.elimination(3, [0]),
    OrderSpec.elimination(3, [1, 2]),
]


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: str(o.describe()))
def test_order_axioms_brute_force(order):
    n = order.nvars
    exps = exponents_up_to(n, 3)
    one = (0,) * n
    for a in exps:
        assert compare_monomials(order, a, a) == 0
        if a != one:
            assert compare_monomials(order, one, a) == 1
    for a, b in itertools.combinations(exps, 2):
        c = compare_monomials(order, a, b)
        assert c in (1, -1)
        assert compare_monomials(order, b, a) == -c
        for s in exponents_up_to(n, 1):
            a2 = tuple(x + y for x, y in zip(a, s))
            b2 = tuple(x + y for x, y in zip(b, s))
            assert compare_monomials(order, a2, b2) == c
    for a, b, c in itertools.permutations(exps[:12], 3):
        if compare_monomials(order, a, b) == 1 and compare_monomials(order, b, c) == 1:
            assert compare_monomials(order, a, c) == 1


def test_graded_prefers_low_degree():
    o = OrderSpec.graded(2)
    assert compare_monomials(o, (0, 2), (1, 2)) == 1
    assert compare_monomials(o, (3, 0), (0, 4)) == 1


def test_elimination_prefers_low_A_degree():
    o = OrderSpec.elimination(3, [0])
    assert compare_monomials(o, (0, 5, 0), (1, 0, 0)) == 1


def test_elimination_all_variables_is_graded():
    assert OrderSpec.elimination(2, [0, 1]).kind == "graded"


def test_dual_initial_is_primal_smallest():
    # the dual order reverses the local primal order
    o = OrderSpec.graded(2)
    assert o.dual_initial([(2, 0), (0, 1), (1, 1)]) == (1, 1)
    assert o.dual_initial([(0, 1), (0, 0)]) == (0, 1)


def test_initial_term_of_polynomial():
    f = Polynomial({(2, 0): 3, (0, 1): -1}, 2)
    assert initial_term(OrderSpec.graded(2), f) == ((0, 1), -1)


def test_bad_permutation():
    with pytest.raises(InputError):
        OrderSpec.graded(2, permutation=[0, 0])
