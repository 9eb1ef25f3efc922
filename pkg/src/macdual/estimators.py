"""scikit-learn style wrappers.

Each estimator is configured by constructor parameters (``get_params`` /
``set_params`` come from :class:`sklearn.base.BaseEstimator`), learns from an
ideal in ``fit`` and exposes results as trailing-underscore attributes.
``transform`` pairs the fitted dual basis with polynomials.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dual import (
    apply_functional,
    truncated_dual_completion,
    truncated_dual_direct,
)
from .elimination import eliminating_dual, quotient_eliminating_dual
from .embedded import embedded_point_test
from .exceptions import InputError
from .hilbert import hilbert_function, regularity_and_multiplicity
from .poly import DEFAULT_POINT_TOL
from .validation import check_ideal, check_point, check_policy, check_polynomials


class _DualTransformMixin(TransformerMixin):
    def transform(self, X):
        """Matrix of pairings ``q_j(f_i)`` for polynomials ``X`` and the
        fitted basis ``q_j``."""
        check_is_fitted(self, "basis_")
        polys = check_polynomials(X, self.names_, self.n_vars_)
        exact = self.policy_.exact and all(p.is_exact for p in polys)
        out = np.empty((len(polys), len(self.basis_)), dtype=object if exact else complex)
        for i, f in enumerate(polys):
            for j, q in enumerate(self.basis_):
                out[i, j] = apply_functional(q, f)
        return out

    def fit_transform(self, X, y=None, **fit_params):
        raise InputError("fit on an ideal, then transform polynomials")


def _prepare(est, X, names):
    ideal, names, point = check_ideal(X, names, est.mode)
    pt = est.point if est.point is not None else point
    if pt is not None:
        ideal = ideal.translate(check_point(pt, ideal.nvars), est.point_tol)
    return ideal, names


class TruncatedDualSpaceEstimator(_DualTransformMixin, BaseEstimator):
    """Truncated dual space ``D^k`` of an ideal at a point.

    Parameters
    ----------
    k : int
        Truncation order.
    method : {"direct", "completion"}
        Macaulay-matrix kernel or degree-by-degree completion.
    tol : float
        Relative SVD rank tolerance (complex mode).
    mode : {"exact", "complex"} or None
        Scalar field; inferred from the coefficients when None.
    point : sequence or None
        Point to move to the origin before computing.
    """

    def __init__(self, k=1, method="direct", tol=1e-8, mode=None, point=None,
                 point_tol=DEFAULT_POINT_TOL, order=None):
        self.k = k
        self.method = method
        self.tol = tol
        self.mode = mode
        self.point = point
        self.point_tol = point_tol
        self.order = order

    def fit(self, X, y=None, names=None):
        ideal, self.names_ = _prepare(self, X, names)
        self.policy_ = check_policy(ideal, self.mode, self.tol)
        if self.method == "direct":
            fn = truncated_dual_direct
        elif self.method == "completion":
            fn = truncated_dual_completion
        else:
            raise InputError(f"unknown method {self.method!r}")
        self.space_ = fn(ideal, self.k, self.policy_, self.order, self.point_tol)
        self.basis_ = list(self.space_.basis)
        self.dim_ = self.space_.dim
        self.initial_support_ = self.space_.initial_support()
        self.n_vars_ = ideal.nvars
        return self


class EliminatingDualSpaceEstimator(_DualTransformMixin, BaseEstimator):
    """Eliminating dual space ``E^d[I, A]``; ``A`` holds variable indices."""

    def __init__(self, A=(0,), d=1, tol=1e-8, mode=None, point=None,
                 point_tol=DEFAULT_POINT_TOL, max_degree=None):
        self.A = A
        self.d = d
        self.tol = tol
        self.mode = mode
        self.point = point
        self.point_tol = point_tol
        self.max_degree = max_degree

    def fit(self, X, y=None, names=None):
        ideal, self.names_ = _prepare(self, X, names)
        self.policy_ = check_policy(ideal, self.mode, self.tol)
        self.space_ = eliminating_dual(
            ideal, self.A, self.d, self.policy_, self.max_degree, point_tol=self.point_tol
        )
        self.basis_ = list(self.space_.basis)
        self.dim_ = self.space_.dim
        self.complete_ = self.space_.complete
        self.n_vars_ = ideal.nvars
        return self

    def colon_space(self):
        """``x . E^d`` for the single eliminated variable ``x``: the
        eliminating dual of ``I : <x>`` with bound ``d - 1``."""
        check_is_fitted(self, "space_")
        if len(self.space_.eliminated) != 1:
            raise InputError("colon space needs a single eliminated variable")
        return quotient_eliminating_dual(self.space_, self.space_.eliminated[0], self.policy_)


class LocalHilbertEstimator(BaseEstimator):
    """Local Hilbert function with heuristic regularity index and multiplicity."""

    def __init__(self, window=None, k_cap=None, kmax=None, tol=1e-8, mode=None,
                 point=None, point_tol=DEFAULT_POINT_TOL):
        self.window = window
        self.k_cap = k_cap
        self.kmax = kmax
        self.tol = tol
        self.mode = mode
        self.point = point
        self.point_tol = point_tol

    def fit(self, X, y=None, names=None):
        ideal, self.names_ = _prepare(self, X, names)
        policy = check_policy(ideal, self.mode, self.tol)
        if self.kmax is not None:
            self.values_ = list(hilbert_function(ideal, self.kmax, policy, self.point_tol).values)
            self.hilbert_ = None
            self.rho_ = self.mu_ = None
            return self
        self.hilbert_ = regularity_and_multiplicity(
            ideal, self.window, self.k_cap, policy, self.point_tol
        )
        self.values_ = list(self.hilbert_.values)
        self.rho_ = self.hilbert_.rho
        self.mu_ = self.hilbert_.mu
        self.certified_ = self.hilbert_.certified
        return self


class EmbeddedComponentDetector(BaseEstimator):
    """Classifies points of a curve as embedded components or not.

    ``fit`` stores the ideal; ``predict`` runs the randomized embedded test
    at each point and returns a boolean array. The full verdicts of the last
    call are kept in ``verdicts_``.
    """

    def __init__(self, seed=0, retries=5, tol=1e-8, mode=None, point_tol=DEFAULT_POINT_TOL,
                 window=None, assume_rho=None, assume_mu=None, max_degree=None):
        self.seed = seed
        self.retries = retries
        self.tol = tol
        self.mode = mode
        self.point_tol = point_tol
        self.window = window
        self.assume_rho = assume_rho
        self.assume_mu = assume_mu
        self.max_degree = max_degree

    def fit(self, X, y=None, names=None):
        self.ideal_, self.names_, self.point_ = check_ideal(X, names, self.mode)
        self.policy_ = check_policy(self.ideal_, self.mode, self.tol)
        return self

    def predict(self, points=None):
        check_is_fitted(self, "ideal_")
        if points is None:
            points = [self.point_ if self.point_ is not None else [0] * self.ideal_.nvars]
        self.verdicts_ = []
        for p in points:
            v = embedded_point_test(
                self.ideal_, check_point(p, self.ideal_.nvars), self.seed, self.retries,
                self.policy_, self.point_tol, self.window, None,
                self.assume_rho, self.assume_mu, self.max_degree,
            )
            self.verdicts_.append(v)
        return np.array([v.embedded for v in self.verdicts_], dtype=bool)
