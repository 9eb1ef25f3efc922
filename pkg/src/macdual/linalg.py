"""Kernels, ranks and reduced echelon bases for sparse vectors.

Vectors are dictionaries from hashable column labels to scalars. Exact mode
runs fraction-valued Gauss-Jordan elimination; SVD mode decides ranks from
singular values under a :class:`RankPolicy`.
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import InputError, RankAmbiguityError

Vector = dict

EXACT = "exact"
SVD = "svd"


@dataclass(frozen=True)
class RankPolicy:
    """How rank decisions are made.

    In ``svd`` mode a singular value counts as zero when it is below
    ``max(tol * sigma_max, floor)``; one falling in the band
    ``[threshold / 10, threshold]`` raises :class:`RankAmbiguityError`.
    """

    mode: str = EXACT
    tol: float = 1e-8
    floor: float | None = None

    def __post_init__(self):
        if self.mode not in (EXACT, SVD):
            raise InputError(f"unknown rank mode {self.mode!r}")
        if not 0 < self.tol < 1:
            raise InputError("rank tolerance must lie in (0, 1)")
        if self.floor is not None and self.floor < 0:
            raise InputError("absolute floor must be non-negative")

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def pivot_tol(self) -> float:
        return math.sqrt(self.tol)

    @property
    def clean_tol(self) -> float:
        return self.tol * 1e-2

    def describe(self) -> dict:
        return {"mode": self.mode, "tol": self.tol, "floor": self.floor}


def default_policy(exact: bool, tol: float = 1e-8) -> RankPolicy:
    return RankPolicy(EXACT if exact else SVD, tol)


def _check_exact(vectors):
    for v in vectors:
        for c in v.values():
            if not isinstance(c, Fraction):
                raise InputError(
                    "exact rank policy needs rational data; use mode 'svd' for floats"
                )


# exact elimination

def _eliminate(rows: Sequence[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Gauss-Jordan on integer-indexed sparse rows.

    Returns pivot column -> reduced row. Each pivot is the smallest column of
    its row, has value 1, and is absent from every other row.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v != 0}
        for c in [c for c in r if c in pivots]:
            f = r.get(c)
            if not f:
                continue
            for cc, vv in pivots[c].items():
                nv = r.get(cc, 0) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for prow in pivots.values():
            f = prow.get(p)
            if f:
                for cc, vv in r.items():
                    nv = prow.get(cc, 0) - f * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        pivots[p] = r
    return pivots


def exact_rank(rows: Sequence[dict]) -> int:
    labels = _labels(rows)
    index = {c: i for i, c in enumerate(labels)}
    return len(_eliminate([{index[c]: Fraction(v) for c, v in r.items()} for r in rows]))


def _labels(vectors) -> list:
    seen = {}
    for v in vectors:
        for c in v:
            seen.setdefault(c, None)
    return list(seen)


# numeric helpers

def _dense(vectors, columns) -> np.ndarray:
    index = {c: i for i, c in enumerate(columns)}
    a = np.zeros((len(vectors), len(columns)), dtype=complex)
    for i, v in enumerate(vectors):
        for c, x in v.items():
            a[i, index[c]] = complex(x)
    return a


def _svd_rank(a: np.ndarray, policy: RankPolicy):
    """Numerical rank of ``a`` plus its SVD factors."""
    if a.size == 0:
        return 0, np.zeros(0), np.eye(a.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    smax = s[0] if len(s) else 0.0
    if smax == 0:
        return 0, s, vh
    thresh = policy.tol * smax
    if policy.floor is not None:
        thresh = max(thresh, policy.floor)
    ambiguous = s[(s >= thresh / 10) & (s <= thresh)]
    if len(ambiguous):
        raise RankAmbiguityError(
            f"singular value {ambiguous[0]:.3e} lies in the ambiguity band "
            f"[{thresh / 10:.3e}, {thresh:.3e}] (sigma_max={smax:.3e})"
        )
    return int(np.sum(s > thresh)), s, vh


def _from_dense(row: np.ndarray, columns, clean: float = 0.0) -> Vector:
    return {columns[j]: complex(x) for j, x in enumerate(row) if abs(x) > clean}


# public operations

def nullspace(rows: Sequence[Vector], columns: Sequence[Hashable], policy: RankPolicy) -> list[Vector]:
    """Basis of ``{v : sum_c row[c] * v[c] = 0 for every row}`` over ``columns``."""
    columns = list(columns)
    if policy.exact:
        _check_exact(rows)
        index = {c: i for i, c in enumerate(columns)}
        pivots = _eliminate([{index[c]: v for c, v in r.items()} for r in rows])
        out = []
        for f in range(len(columns)):
            if f in pivots:
                continue
            v = {columns[f]: Fraction(1)}
            for p, prow in pivots.items():
                x = prow.get(f)
                if x:
                    v[columns[p]] = -x
            out.append(v)
        return out
    a = _dense(rows, columns)
    if a.shape[0] == 0:
        return [{c: 1 + 0j} for c in columns]
    r, _, vh = _svd_rank(a, policy)
    return [_from_dense(vh[i].conj(), columns) for i in range(r, len(columns))]


def rank(vectors: Sequence[Vector], policy: RankPolicy) -> int:
    if not vectors:
        return 0
    if policy.exact:
        _check_exact(vectors)
        return exact_rank(vectors)
    cols = _labels(vectors)
    return _svd_rank(_dense(vectors, cols), policy)[0]


def reduce(vectors: Sequence[Vector], columns: Sequence[Hashable], policy: RankPolicy) -> list[Vector]:
    """Reduced echelon basis of ``span(vectors)``.

    ``columns`` lists every label in priority order; a row's pivot is its
    first nonzero column in that order. Pivots are 1, pairwise distinct, and
    absent from the other rows; dependent input vectors are dropped. Rows are
    returned by increasing pivot position.
    """
    columns = list(columns)
    if not vectors:
        return []
    index = {c: i for i, c in enumerate(columns)}
    for v in vectors:
        for c in v:
            if c not in index:
                raise InputError(f"label {c!r} missing from column order")
    if policy.exact:
        _check_exact(vectors)
        pivots = _eliminate([{index[c]: x for c, x in v.items()} for v in vectors])
        return [
            {columns[c]: x for c, x in sorted(pivots[p].items())} for p in sorted(pivots)
        ]
    a = _dense(vectors, columns)
    r, _, vh = _svd_rank(a, policy)
    if r == 0:
        return []
    basis = vh[:r]
    piv = []
    q = np.zeros((r, 0), dtype=complex)
    for j in range(len(columns)):
        col = basis[:, j]
        res = col - q @ (q.conj().T @ col)
        res = res - q @ (q.conj().T @ res)
        nrm = np.linalg.norm(res)
        if nrm > policy.pivot_tol:
            q = np.hstack([q, (res / nrm)[:, None]])
            piv.append(j)
            if len(piv) == r:
                break
    if len(piv) < r:
        raise RankAmbiguityError(
            f"found {len(piv)} pivots for a span of numerical rank {r}"
        )
    b = np.linalg.solve(basis[:, piv], basis)
    out = []
    for i, p in enumerate(piv):
        row = b[i].copy()
        row[np.abs(row) <= policy.clean_tol] = 0
        row[piv] = 0
        row[p] = 1
        out.append(_from_dense(row, columns))
    return out


def contains(basis: Sequence[Vector], vectors: Sequence[Vector], policy: RankPolicy) -> bool:
    """Whether every vector lies in ``span(basis)``.

    SVD mode compares the residual after orthogonal projection with ``tol``
    relative to the vector norm.
    """
    vectors = [v for v in vectors if v]
    if not vectors:
        return True
    if policy.exact:
        _check_exact(list(basis) + vectors)
        return exact_rank(list(basis) + vectors) == exact_rank(list(basis))
    cols = _labels(list(basis) + vectors)
    b = _dense(list(basis), cols)
    if b.shape[0]:
        r, _, vh = _svd_rank(b, policy)
        # rows of vh[:r] are an orthonormal basis of the row space
        q = vh[:r].T
    else:
        q = np.zeros((len(cols), 0), dtype=complex)
    for v in _dense(vectors, cols):
        res = v - q @ (q.conj().T @ v)
        if np.linalg.norm(res) > policy.tol * max(np.linalg.norm(v), 1e-300):
            return False
    return True


def intersect(a: Sequence[Vector], b: Sequence[Vector], policy: RankPolicy) -> list[Vector]:
    """Spanning set of ``span(a) & span(b)``."""
    if not a or not b:
        return []
    labels = _labels(list(a) + list(b))
    unknowns = [("a", i) for i in range(len(a))] + [("b", j) for j in range(len(b))]
    rows = []
    for c in labels:
        row = {}
        for i, v in enumerate(a):
            if c in v:
                row[("a", i)] = v[c]
        for j, v in enumerate(b):
            if c in v:
                row[("b", j)] = -v[c]
        rows.append(row)
    out = []
    for sol in nullspace(rows, unknowns, policy):
        w: dict = {}
        for (side, i), lam in sol.items():
            if side != "a":
                continue
            for c, x in a[i].items():
                w[c] = w.get(c, 0) + lam * x
        w = {c: x for c, x in w.items() if x != 0}
        if w:
            out.append(w)
    return out
