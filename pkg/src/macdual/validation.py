"""Input checking shared by the estimators."""

from __future__ import annotations

from collections.abc import Sequence

from .exceptions import DimensionMismatchError, InputError
from .io import COMPLEX_MODE, EXACT_MODE, SystemFile, parse_polynomial, parse_system
from .linalg import EXACT, SVD, RankPolicy
from .poly import Ideal, Polynomial, as_scalar


def check_ideal(X, names: Sequence[str] | None = None, mode: str | None = None) -> tuple[Ideal, list[str], list | None]:
    """Coerce ``X`` to an ideal.

    Accepts an :class:`Ideal`, a parsed :class:`SystemFile`, the text of a
    system file, or a sequence of polynomials (strings need ``names``).
    Returns ``(ideal, names, point)``; the point is only set for system files.
    """
    point = None
    if isinstance(X, str):
        X = parse_system(X, mode)
    if isinstance(X, SystemFile):
        ideal, names, point = X.ideal, X.names, X.point
    elif isinstance(X, Ideal):
        ideal = X
    elif isinstance(X, Sequence) and X:
        if all(isinstance(g, str) for g in X):
            if names is None:
                raise InputError("variable names are required to parse polynomial strings")
            ideal = Ideal([parse_polynomial(g, names) for g in X], len(names))
        elif all(isinstance(g, Polynomial) for g in X):
            ideal = Ideal(X)
        else:
            raise InputError("expected polynomials or polynomial strings")
    else:
        raise InputError(f"cannot interpret {type(X).__name__} as an ideal")
    if names is None:
        names = [f"x{i + 1}" for i in range(ideal.nvars)]
    if len(names) != ideal.nvars:
        raise DimensionMismatchError("number of names differs from number of variables")
    if mode == COMPLEX_MODE:
        ideal = ideal.to_complex()
    elif mode == EXACT_MODE and not ideal.is_exact:
        raise InputError("exact mode needs rational coefficients")
    return ideal, list(names), point


def check_point(point, nvars: int) -> list:
    pt = [as_scalar(c) for c in point]
    if len(pt) != nvars:
        raise DimensionMismatchError(f"point has {len(pt)} coordinates, expected {nvars}")
    return pt


def check_policy(ideal: Ideal, mode: str | None, tol: float) -> RankPolicy:
    if mode is None:
        mode = EXACT_MODE if ideal.is_exact else COMPLEX_MODE
    if mode not in (EXACT_MODE, COMPLEX_MODE):
        raise InputError(f"mode must be {EXACT_MODE!r} or {COMPLEX_MODE!r}")
    return RankPolicy(EXACT if mode == EXACT_MODE else SVD, tol)


def check_polynomials(polys, names: Sequence[str], nvars: int) -> list[Polynomial]:
    if isinstance(polys, (str, Polynomial)):
        polys = [polys]
    out = []
    for p in polys:
        if isinstance(p, str):
            p = parse_polynomial(p, names)
        if not isinstance(p, Polynomial):
            raise InputError(f"not a polynomial: {p!r}")
        if p.nvars != nvars:
            raise DimensionMismatchError("polynomial has the wrong number of variables")
        out.append(p)
    return out
