"""Local Hilbert function, regularity index and multiplicity from truncated
dual dimensions, plus staircases and homogeneous membership."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dual import (
    _policy_for,
    apply_functional,
    check_vanishing,
    iter_truncated_duals,
    truncated_dual_direct,
)
from .exceptions import InputError, NonStabilizationError, NotHomogeneousError
from .linalg import RankPolicy
from .orders import OrderSpec
from .poly import DEFAULT_POINT_TOL, Exponent, Ideal, Polynomial, exponents_up_to


@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]
    rho: int | None = None
    mu: int | None = None
    hp_value: int | None = None
    certified: bool = False
    window: int | None = None
    dims: tuple[int, ...] = ()

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def to_json(self) -> dict:
        return {
            "H": list(self.values),
            "rho": self.rho,
            "mu": self.mu,
            "certified": self.certified,
            "window": self.window,
            "k_max": self.k_max,
        }


@dataclass(frozen=True)
class StaircaseReport:
    k: int
    standard: tuple[Exponent, ...]
    initial_ideal: tuple[Exponent, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "standard": [list(e) for e in self.standard],
            "initial_ideal": [list(e) for e in self.initial_ideal],
        }


def _dims(ideal, policy, point_tol):
    ideal = check_vanishing(ideal, point_tol)
    policy = _policy_for(ideal, policy)
    for space in iter_truncated_duals(ideal, policy, point_tol=point_tol):
        yield space.dim


def hilbert_function(
    ideal: Ideal,
    k_max: int,
    policy: RankPolicy | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
) -> HilbertData:
    """``H(k) = dim D^k - dim D^(k-1)`` for ``k = 0..k_max``."""
    if k_max < 0:
        raise InputError("k_max must be non-negative")
    dims = []
    for dim in _dims(ideal, policy, point_tol):
        dims.append(dim)
        if len(dims) > k_max:
            break
    values = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])]
    return HilbertData(tuple(values), dims=tuple(dims))


def default_window(ideal: Ideal) -> int:
    return ideal.max_degree() + 2


def regularity_and_multiplicity(
    ideal: Ideal,
    window: int | None = None,
    k_cap: int | None = None,
    policy: RankPolicy | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
) -> HilbertData:
    """Regularity index and multiplicity of a locally 0- or 1-dimensional ideal.

    The Hilbert function is computed until it takes the same value ``window``
    times in a row; that value is the multiplicity and the start of the run
    is the regularity index. This is a heuristic (``certified=False``) except
    when the stable value is 0: then the dual space has stopped growing and
    the multiplicity is its dimension.
    """
    if window is None:
        window = default_window(ideal)
    if window < 1:
        raise InputError("window must be positive")
    if k_cap is None:
        k_cap = window + 12
    values: list[int] = []
    dims: list[int] = []
    for dim in _dims(ideal, policy, point_tol):
        values.append(dim - (dims[-1] if dims else 0))
        dims.append(dim)
        k = len(values) - 1
        if values[-1] == 0 and k > 0:
            return HilbertData(
                tuple(values), rho=_run_start(values), mu=dims[-1], hp_value=0,
                certified=True, window=window, dims=tuple(dims),
            )
        if len(values) >= window and len(set(values[-window:])) == 1:
            mu = values[-1]
            return HilbertData(
                tuple(values), rho=_run_start(values), mu=mu, hp_value=mu,
                certified=False, window=window, dims=tuple(dims),
            )
        if k >= k_cap:
            raise NonStabilizationError(
                f"Hilbert function did not stabilize by k={k_cap}: {values}"
            )
    raise AssertionError("unreachable")


def _run_start(values) -> int:
    i = len(values) - 1
    while i > 0 and values[i - 1] == values[-1]:
        i -= 1
    return i


def standard_monomials(
    ideal: Ideal,
    k: int,
    order: OrderSpec | None = None,
    policy: RankPolicy | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
) -> StaircaseReport:
    """Initial support of ``D^k`` and its complement among degree <= k
    exponents (the initial ideal of ``I + m^(k+1)``)."""
    space = truncated_dual_direct(ideal, k, policy, order, point_tol)
    std = set(space.initial_support())
    everything = exponents_up_to(ideal.nvars, k)
    return StaircaseReport(
        k,
        tuple(e for e in everything if e in std),
        tuple(e for e in everything if e not in std),
    )


def homogeneous_membership(
    f: Polynomial,
    ideal: Ideal,
    policy: RankPolicy | None = None,
) -> bool:
    """Membership of ``f`` in a homogeneous ideal, via ``D^deg(f)``."""
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise NotHomogeneousError(
                "membership through truncated duals needs homogeneous generators"
            )
    if f.nvars != ideal.nvars:
        raise InputError("polynomial and ideal have different variables")
    if f.is_zero():
        return True
    policy = _policy_for(ideal, policy)
    space = truncated_dual_direct(ideal, f.degree(), policy)
    fnorm = f.norm()
    for q in space.basis:
        val = apply_functional(q, f)
        if policy.exact:
            if val != 0:
                return False
        else:
            qnorm = float(np.sqrt(sum(abs(complex(c)) ** 2 for c in q.terms.values())))
            if abs(complex(val)) >= policy.tol * fnorm * qnorm:
                return False
    return True
