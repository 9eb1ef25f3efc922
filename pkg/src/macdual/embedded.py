"""Embedded-point test for curves.

At the origin of a curve in regular position with respect to ``x1``, the
origin is an embedded component exactly when ``x1 . E^k[I, {x1}]`` is a
proper subspace of ``E^(k-1)[I, {x1}]`` for ``k = max(rho, mu - 1)``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .dual import DualFunctional, _policy_for, check_vanishing, span_contains, span_rank
from .elimination import (
    EliminatingDualSpace,
    eliminating_dual,
    quotient_eliminating_dual,
)
from .exceptions import ContainmentError, InputError, RegularPositionError
from .hilbert import HilbertData, regularity_and_multiplicity
from .linalg import RankPolicy
from .poly import DEFAULT_POINT_TOL, Ideal, apply_linear_change

log = logging.getLogger(__name__)

MAX_CONDITION = 100.0


@dataclass
class EmbeddedVerdict:
    embedded: bool
    k: int
    rho: int
    mu: int
    certified_hilbert: bool
    dim_E_k: int
    dim_xE_k: int
    dim_E_km1: int
    seed: int | None = None
    matrix: list | None = None
    tolerances: dict = field(default_factory=dict)
    retries: list = field(default_factory=list)
    hilbert: HilbertData | None = None
    bases: dict | None = None

    @property
    def dims(self) -> dict:
        return {"E_k": self.dim_E_k, "xE_k": self.dim_xE_k, "E_km1": self.dim_E_km1}


def subspace_strictly_contains(
    a: EliminatingDualSpace | Sequence[DualFunctional],
    b: Sequence[DualFunctional],
    policy: RankPolicy | None = None,
) -> bool:
    """True iff ``span(b)`` is a proper subspace of ``span(a)``.

    Raises :class:`ContainmentError` when ``span(b)`` is not inside
    ``span(a)`` at all.
    """
    abasis = list(a.basis) if hasattr(a, "basis") else list(a)
    b = [q for q in b if not q.is_zero()]
    if not span_contains(abasis, b, policy):
        raise ContainmentError("span(b) is not contained in span(a)")
    return span_rank(b, policy) < span_rank(abasis, policy)


def is_origin_embedded_in_curve(
    ideal: Ideal,
    policy: RankPolicy | None = None,
    window: int | None = None,
    k_cap: int | None = None,
    assume_rho: int | None = None,
    assume_mu: int | None = None,
    max_degree: int | None = None,
    verbose: bool = False,
    point_tol: float = DEFAULT_POINT_TOL,
) -> EmbeddedVerdict:
    """Decide whether the origin is an embedded component of a curve.

    ``ideal`` must be one-dimensional at the origin and in regular position
    relative to the first variable. ``assume_rho``/``assume_mu`` replace the
    heuristic regularity index and multiplicity with known values.
    """
    ideal = check_vanishing(ideal, point_tol)
    policy = _policy_for(ideal, policy)
    hd = None
    rho, mu = assume_rho, assume_mu
    if rho is None or mu is None:
        hd = regularity_and_multiplicity(ideal, window, k_cap, policy, point_tol)
        rho = hd.rho if rho is None else rho
        mu = hd.mu if mu is None else mu
    certified = (assume_rho is not None and assume_mu is not None) or (hd is not None and hd.certified)
    # floor at 1 so that E^(k-1) exists
    k = max(rho, mu - 1, 1)
    E = eliminating_dual(ideal, [0], k, policy, max_degree, point_tol=point_tol)
    if not E.complete:
        raise RegularPositionError(
            f"E^{k}[I, {{x1}}] did not stabilize by order {E.cap_used}; "
            "the ideal is not in regular position relative to x1"
        )
    xE = quotient_eliminating_dual(E, 0, policy)
    Em1 = eliminating_dual(ideal, [0], k - 1, policy, max_degree, point_tol=point_tol)
    if not Em1.complete:
        raise RegularPositionError(f"E^{k - 1}[I, {{x1}}] did not stabilize")
    embedded = subspace_strictly_contains(Em1, xE.basis, policy)
    bases = None
    if verbose:
        bases = {"E_k": list(E.basis), "xE_k": list(xE.basis), "E_km1": list(Em1.basis)}
    return EmbeddedVerdict(
        embedded=embedded,
        k=k,
        rho=rho,
        mu=mu,
        certified_hilbert=certified,
        dim_E_k=E.dim,
        dim_xE_k=xE.dim,
        dim_E_km1=Em1.dim,
        tolerances={**policy.describe(), "point_tol": point_tol},
        hilbert=hd,
        bases=bases,
    )


def random_change_matrix(nvars: int, rng: np.random.Generator, exact: bool, max_tries: int = 1000):
    """Random invertible matrix with condition number below ``MAX_CONDITION``.

    Complex entries are uniform on the unit disk; exact entries are small
    integers.
    """
    for _ in range(max_tries):
        if exact:
            ints = rng.integers(-3, 4, size=(nvars, nvars))
            m = ints.astype(float)
        else:
            r = np.sqrt(rng.random((nvars, nvars)))
            theta = 2 * np.pi * rng.random((nvars, nvars))
            m = r * np.exp(1j * theta)
        if np.linalg.cond(m) < MAX_CONDITION:
            if exact:
                return [[Fraction(int(v)) for v in row] for row in ints]
            return [[complex(v) for v in row] for row in m]
    raise InputError("could not sample a well-conditioned change of coordinates")


def embedded_point_test(
    ideal: Ideal,
    point: Sequence | None = None,
    seed: int = 0,
    retries: int = 5,
    policy: RankPolicy | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
    window: int | None = None,
    k_cap: int | None = None,
    assume_rho: int | None = None,
    assume_mu: int | None = None,
    max_degree: int | None = None,
    verbose: bool = False,
) -> EmbeddedVerdict:
    """Embedded test at ``point`` after a seeded random linear change.

    The point is moved to the origin, coordinates are mixed by a random
    well-conditioned matrix, and the origin test runs. If regular position
    fails, the next seed is tried, up to ``retries`` extra attempts.
    """
    if retries < 0:
        raise InputError("retries must be non-negative")
    if point is None:
        point = [0] * ideal.nvars
    local = ideal.translate(point, point_tol)
    policy = _policy_for(local, policy)
    exact = policy.exact
    tried = []
    last_error = None
    for attempt in range(retries + 1):
        s = seed + attempt
        rng = np.random.default_rng(s)
        m = random_change_matrix(ideal.nvars, rng, exact)
        changed = apply_linear_change(local, m)
        try:
            verdict = is_origin_embedded_in_curve(
                changed, policy, window, k_cap, assume_rho, assume_mu,
                max_degree, verbose, point_tol,
            )
        except RegularPositionError as exc:
            log.info("seed %d: %s", s, exc)
            tried.append(s)
            last_error = exc
            continue
        verdict.seed = s
        verdict.matrix = m
        verdict.retries = tried
        return verdict
    raise RegularPositionError(
        f"no regular position found after seeds {tried}: {last_error}"
    )
