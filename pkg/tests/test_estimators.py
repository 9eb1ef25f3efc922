from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conftest import DATA
from macdual import (
    EliminatingDualSpaceEstimator,
    EmbeddedComponentDetector,
    LocalHilbertEstimator,
    TruncatedDualSpaceEstimator,
)
from macdual.exceptions import DimensionMismatchError, InputError
from macdual.validation import check_ideal, check_point

CUSP_TEXT = (DATA / "cusp.txt").read_text()
CUSP_GENS = ["x^2 - z^3", "y - z^2"]
XYZ = ["x", "y", "z"]


def test_params_round_trip_and_clone():
    est = TruncatedDualSpaceEstimator(k=3, method="completion")
    assert est.get_params()["k"] == 3
    est.set_params(k=2)
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est


def test_truncated_fit_transform():
    est = TruncatedDualSpaceEstimator(k=2).fit(CUSP_GENS, names=XYZ)
    assert est.dim_ == 5 and len(est.initial_support_) == 5
    m = est.transform(CUSP_GENS + ["z"])
    assert m.shape == (3, 5)
    # generators are annihilated, z is not
    assert all(v == 0 for v in m[:2].ravel())
    assert any(v != 0 for v in m[2])
    assert isinstance(m[2, 0], Fraction)


def test_transform_requires_fit():
    with pytest.raises(NotFittedError):
        TruncatedDualSpaceEstimator().transform(["x"])


def test_completion_method_agrees():
    a = TruncatedDualSpaceEstimator(k=3, method="completion").fit(CUSP_TEXT)
    b = TruncatedDualSpaceEstimator(k=3).fit(CUSP_TEXT)
    assert a.dim_ == b.dim_ == 7


def test_unknown_method():
    with pytest.raises(InputError):
        TruncatedDualSpaceEstimator(method="magic").fit(CUSP_TEXT)


def test_complex_mode_transform_is_numeric():
    est = TruncatedDualSpaceEstimator(k=1, mode="complex").fit(CUSP_TEXT)
    assert est.transform(["y"]).dtype == complex


def test_eliminating_estimator_and_colon():
    est = EliminatingDualSpaceEstimator(A=(0,), d=1).fit(CUSP_TEXT)
    assert est.dim_ == 6 and est.complete_
    assert est.colon_space().dim == 3


def test_hilbert_estimator():
    est = LocalHilbertEstimator().fit(CUSP_TEXT)
    assert (est.rho_, est.mu_) == (1, 2) and est.values_[:3] == [1, 2, 2]
    assert LocalHilbertEstimator(kmax=4).fit(CUSP_TEXT).values_ == [1, 2, 2, 2, 2]


def test_detector_predicts_per_point():
    det = EmbeddedComponentDetector(seed=2).fit(["y^2", "x*y"], names=["x", "y"])
    out = det.predict([[0, 0], [3, 0]])
    assert out.dtype == bool and out.tolist() == [True, False]
    assert len(det.verdicts_) == 2


def test_detector_uses_file_point():
    det = EmbeddedComponentDetector(seed=0).fit((DATA / "cyclic4.txt").read_text())
    assert det.predict().tolist() == [True]


def test_validation_helpers():
    with pytest.raises(InputError):
        check_ideal(["x"])
    with pytest.raises(InputError):
        check_ideal(42)
    with pytest.raises(DimensionMismatchError):
        check_point([1, 2], 3)
    ideal, names, point = check_ideal(CUSP_TEXT)
    assert names == XYZ and point is None and ideal.nvars == 3
    assert np.isclose(complex(check_point([0.5], 1)[0]), 0.5)
