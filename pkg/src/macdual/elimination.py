"""Eliminating dual spaces and duals of colon ideals."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .dual import (
    DualFunctional,
    TruncatedDualSpace,
    _policy_for,
    check_vanishing,
    contract,
    full_dual_zero_dim,
    initial_support,
    reduce_basis,
    span_contains,
    span_equal,
)
from .exceptions import InputError, RegularPositionError
from .linalg import RankPolicy
from .orders import OrderSpec
from .poly import DEFAULT_POINT_TOL, Ideal, Polynomial, exponents_of_degree


@dataclass(frozen=True)
class EliminatingDualSpace:
    """Functionals of the dual space whose order in the eliminated variables
    is at most ``d``."""

    basis: tuple[DualFunctional, ...]
    eliminated: tuple[int, ...]
    d: int
    order: OrderSpec
    nvars: int
    cap_used: int
    complete: bool
    k: int = -1  # order at which the computation stabilized

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def initial_support(self):
        return initial_support(self)


def ord_A(q: DualFunctional, A: Iterable[int]) -> int:
    """Largest total degree of a term of ``q`` in the variables ``A``."""
    A = list(A)
    if any(not 0 <= i < q.nvars for i in A):
        raise InputError("variable index out of range")
    return max((sum(e[i] for i in A) for e in q.terms), default=0)


def _normalize_vars(A, nvars) -> tuple[int, ...]:
    A = tuple(sorted(set(int(i) for i in A)))
    if not A:
        raise InputError("need at least one eliminated variable")
    if any(not 0 <= i < nvars for i in A):
        raise InputError("variable index out of range")
    return A


def default_max_degree(ideal: Ideal, d: int) -> int:
    return d + 2 * sum(g.degree() for g in ideal.generators)


def eliminating_dual(
    ideal: Ideal,
    A: Iterable[int],
    d: int,
    policy: RankPolicy | None = None,
    max_degree: int | None = None,
    method: str = "completion",
    point_tol: float = DEFAULT_POINT_TOL,
) -> EliminatingDualSpace:
    """Dual space of ``I + <A>^(d+1)``.

    The result is complete when that ideal is zero-dimensional at the origin
    and its dual stabilizes before ``max_degree``; otherwise ``complete`` is
    False (typically a curve component lies inside ``{A = 0}``).
    """
    if d < 0:
        raise InputError("d must be non-negative")
    ideal = check_vanishing(ideal, point_tol)
    policy = _policy_for(ideal, policy)
    n = ideal.nvars
    A = _normalize_vars(A, n)
    if max_degree is None:
        max_degree = default_max_degree(ideal, d)
    extra = []
    for e in exponents_of_degree(len(A), d + 1):
        full = [0] * n
        for i, a in zip(A, e):
            full[i] = a
        extra.append(Polynomial.monomial(full))
    order = OrderSpec.elimination(n, A)
    space = full_dual_zero_dim(
        ideal.with_generators(extra), policy, max(max_degree, 1), order, method, point_tol
    )
    for q in space.basis:
        if ord_A(q, A) > d:
            raise AssertionError("eliminating dual element exceeds the A-order bound")
    return EliminatingDualSpace(
        space.basis, A, d, order, n, max_degree, space.complete, space.k
    )


def quotient_eliminating_dual(
    E: EliminatingDualSpace, x1: int, policy: RankPolicy | None = None
) -> EliminatingDualSpace:
    """``x1 . E^(d+1)[I, {x1}]``, which is ``E^d[I : <x1>, {x1}]``."""
    if E.eliminated != (x1,):
        raise InputError(f"eliminating dual was computed for {E.eliminated}, not ({x1},)")
    if not E.complete:
        raise RegularPositionError("eliminating dual space is incomplete")
    if E.d < 1:
        raise InputError("need a bound of at least 1 to contract")
    g = Polynomial.variable(x1, E.nvars)
    basis = reduce_basis([contract(g, q) for q in E.basis], E.order, policy)
    return EliminatingDualSpace(
        tuple(basis), E.eliminated, E.d - 1, E.order, E.nvars, E.cap_used, True, E.k
    )


def quotient_dual_truncated(
    space: TruncatedDualSpace, g: Polynomial, policy: RankPolicy | None = None
) -> TruncatedDualSpace:
    """``g . D^k[I]`` inside the truncation of the dual of ``I : <g>``.

    Only a lower bound in general (``lower_bound_only``): functionals of the
    colon dual may come from elements of ``D[I]`` beyond order ``k``.
    """
    if g.is_zero():
        raise InputError("cannot divide by the zero polynomial")
    v = g.valuation()
    basis = reduce_basis([contract(g, q) for q in space.basis], space.order, policy)
    return TruncatedDualSpace(
        tuple(basis),
        max(space.k - v, 0),
        space.order,
        space.nvars,
        complete=space.complete,
        lower_bound_only=v > 0,
        method="quotient",
    )


def colon_inclusion_check(
    ideal: Ideal,
    variables: Sequence[int],
    d: int,
    policy: RankPolicy | None = None,
    colon_ideal: Ideal | None = None,
    max_degree: int | None = None,
) -> bool:
    """Check ``sum_i x_i . E^(d+1)[I, vars]`` against ``E^d`` of the colon.

    With ``colon_ideal`` (the ideal ``I : <vars>`` computed elsewhere) the
    sum must lie inside ``E^d[colon, vars]``, and equal it when there is a
    single variable. Without it the sum is checked against ``E^d[I, vars]``,
    which contains it because dual spaces are closed under differentiation.
    """
    variables = _normalize_vars(variables, ideal.nvars)
    E = eliminating_dual(ideal, variables, d + 1, policy, max_degree)
    if not E.complete:
        raise RegularPositionError("eliminating dual space is incomplete")
    policy = policy or _policy_for(check_vanishing(ideal), None)
    images = []
    for i in variables:
        g = Polynomial.variable(i, ideal.nvars)
        images.extend(contract(g, q) for q in E.basis)
    images = [q for q in images if not q.is_zero()]
    target_ideal = colon_ideal if colon_ideal is not None else ideal
    T = eliminating_dual(target_ideal, variables, d, policy, max_degree)
    if not T.complete:
        raise RegularPositionError("eliminating dual space of the target is incomplete")
    if colon_ideal is not None and len(variables) == 1:
        return span_equal(images, T.basis, policy)
    return span_contains(T.basis, images, policy)
