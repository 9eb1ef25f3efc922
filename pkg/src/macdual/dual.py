"""Differential functionals and truncated Macaulay dual spaces at the origin.

A functional ``sum c_a d^a`` uses normalized derivatives
``d^a = (1/a!) d^{|a|}/dx^a`` evaluated at 0, so ``d^a(x^b) = [a == b]`` and
pairing a functional with a polynomial is a coefficient dot product.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exceptions import (
    DimensionMismatchError,
    InputError,
    OrderMismatchError,
    PointNotOnVarietyError,
)
from .linalg import RankPolicy
from .orders import OrderSpec
from .poly import (
    DEFAULT_POINT_TOL,
    Exponent,
    Ideal,
    Polynomial,
    Scalar,
    as_scalar,
    exponents_up_to,
    is_exact_scalar,
    truncate,
)


class DualFunctional:
    """Finite linear combination of normalized differential monomials."""

    __slots__ = ("_terms", "_nvars")

    def __init__(self, terms: Mapping[Exponent, object], nvars: int):
        clean = {}
        for e, c in terms.items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise DimensionMismatchError(
                    f"exponent {e} has length {len(e)}, expected {nvars}"
                )
            c = as_scalar(c)
            if c != 0:
                clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in clean.items() if c != 0}
        self._nvars = nvars

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> DualFunctional:
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def identity(cls, nvars: int) -> DualFunctional:
        """Evaluation at the point, ``d^0``."""
        return cls({(0,) * nvars: 1}, nvars)

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return self._terms

    @property
    def nvars(self) -> int:
        return self._nvars

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(c) for c in self._terms.values())

    @property
    def order(self) -> int:
        """Largest total degree in the support (-1 for the zero functional)."""
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, i: int) -> DualFunctional:
        return DualFunctional(
            {e: c for e, c in self._terms.items() if sum(e) == i}, self._nvars
        )

    def __add__(self, other: DualFunctional) -> DualFunctional:
        _same_vars(self, other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return DualFunctional(terms, self._nvars)

    def __neg__(self):
        return DualFunctional({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_scalar(c)
        return DualFunctional({e: c * v for e, v in self._terms.items()}, self._nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    def __call__(self, f: Polynomial) -> Scalar:
        return apply_functional(self, f)

    def __repr__(self):
        from .io import format_functional

        return f"DualFunctional({format_functional(self)!r})"


def _same_vars(a, b):
    if a.nvars != b.nvars:
        raise DimensionMismatchError(
            f"objects in {a.nvars} and {b.nvars} variables"
        )


def apply_functional(q: DualFunctional, f: Polynomial) -> Scalar:
    """The pairing ``q(f)``."""
    _same_vars(q, f)
    total = Fraction(0)
    small, big = (q.terms, f.terms) if len(q.terms) <= len(f.terms) else (f.terms, q.terms)
    for e, c in small.items():
        d = big.get(e)
        if d is not None:
            total = total + c * d
    return total


def contract(g: Polynomial, q: DualFunctional) -> DualFunctional:
    """The functional ``g . q : f -> q(g f)``.

    On monomials ``x^b . d^a = d^(a-b)``, and zero when ``a - b`` has a
    negative entry.
    """
    _same_vars(g, q)
    terms: dict[Exponent, Scalar] = {}
    for b, cb in g.terms.items():
        for a, ca in q.terms.items():
            diff = tuple(x - y for x, y in zip(a, b))
            if min(diff, default=0) < 0:
                continue
            terms[diff] = terms.get(diff, 0) + cb * ca
    return DualFunctional(terms, q.nvars)


def _shift_down(q: DualFunctional, j: int) -> DualFunctional:
    """Fast path of ``contract(x_j, q)``."""
    terms = {}
    for a, c in q.terms.items():
        if a[j]:
            terms[a[:j] + (a[j] - 1,) + a[j + 1:]] = c
    return DualFunctional(terms, q.nvars)


def _integrate(q_terms: Mapping[Exponent, object], j: int) -> dict[Exponent, object]:
    """Right inverse of differentiation by x_j restricted to monomials free of
    the variables before j; all other monomials are sent to zero.

    Summing ``_integrate(x_j . q, j)`` over j recovers ``q`` minus its
    constant term.
    """
    out = {}
    for a, c in q_terms.items():
        if any(a[:j]):
            continue
        out[a[:j] + (a[j] + 1,) + a[j + 1:]] = c
    return out


# dual spaces

@dataclass(frozen=True)
class TruncatedDualSpace:
    """Reduced basis of a dual space truncated at order ``k``."""

    basis: tuple[DualFunctional, ...]
    k: int
    order: OrderSpec
    nvars: int
    fingerprint: str = ""
    complete: bool = True
    lower_bound_only: bool = False
    method: str = "direct"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def initial_support(self) -> list[Exponent]:
        return initial_support(self)


def _vectors(basis: Iterable[DualFunctional]) -> list[dict]:
    return [dict(q.terms) for q in basis]


def _columns(order: OrderSpec, vectors) -> list[Exponent]:
    labels = set()
    for v in vectors:
        labels.update(v)
    return order.dual_sorted(labels)


def infer_policy(objs, tol: float = 1e-8) -> RankPolicy:
    exact = all(o.is_exact for o in objs)
    return linalg.default_policy(exact, tol)


def reduce_basis(
    basis: Sequence[DualFunctional],
    order: OrderSpec,
    policy: RankPolicy | None = None,
) -> list[DualFunctional]:
    """Gaussian elimination to a reduced dual basis.

    Initial terms (largest in the dual order) become monic, pairwise distinct,
    and absent from every other element; dependent elements are dropped.
    Output is sorted from the largest initial term down.
    """
    basis = [q for q in basis if not q.is_zero()]
    if not basis:
        return []
    nvars = basis[0].nvars
    for q in basis:
        _same_vars(q, basis[0])
    if policy is None:
        policy = infer_policy(basis)
    vecs = _vectors(basis)
    rows = linalg.reduce(vecs, _columns(order, vecs), policy)
    return [DualFunctional(r, nvars) for r in rows]


def initial_support(space) -> list[Exponent]:
    """Initial terms of the reduced basis of ``space``, one per element."""
    inits = [space.order.dual_initial(q.terms) for q in space.basis]
    if len(set(inits)) != len(inits):
        raise InputError("basis is not reduced: repeated initial terms")
    for q, e in zip(space.basis, inits):
        for other in space.basis:
            if other is not q and e in other.terms:
                raise InputError("basis is not reduced: initial term shared")
    return inits


def check_vanishing(ideal: Ideal, point_tol: float = DEFAULT_POINT_TOL) -> Ideal:
    """Return the ideal with numerically negligible constant terms removed.

    Raises :class:`PointNotOnVarietyError` if a generator does not vanish at 0.
    """
    gens = []
    zero = (0,) * ideal.nvars
    for g in ideal.generators:
        c = g.constant_term()
        if c != 0:
            if is_exact_scalar(c) or abs(complex(c)) > point_tol * g.max_abs_coefficient():
                raise PointNotOnVarietyError(
                    f"generator has nonzero constant term {c}; the origin is not on the variety"
                )
            g = Polynomial({e: v for e, v in g.terms.items() if e != zero}, g.nvars)
            if g.is_zero():
                continue
        gens.append(g)
    if not gens:
        raise InputError("every generator is numerically zero")
    return Ideal(gens, ideal.nvars)


def _policy_for(ideal: Ideal, policy: RankPolicy | None) -> RankPolicy:
    if policy is None:
        return linalg.default_policy(ideal.is_exact)
    if policy.exact and not ideal.is_exact:
        raise InputError("exact rank policy needs an ideal with rational coefficients")
    return policy


@dataclass(frozen=True)
class MacaulayMatrix:
    """Coefficients of ``truncate(x^b f_i, k)`` for every ``|b| <= k - 1``."""

    rows: tuple[dict, ...]
    row_labels: tuple[tuple[int, Exponent], ...]
    columns: tuple[Exponent, ...]
    k: int

    @classmethod
    def build(cls, ideal: Ideal, k: int) -> MacaulayMatrix:
        n = ideal.nvars
        for g in ideal.generators:
            # the shift range below is only complete when every generator vanishes at 0
            assert g.constant_term() == 0, "generators must vanish at the origin"
        columns = tuple(exponents_up_to(n, k))
        rows, labels = [], []
        shifts = exponents_up_to(n, k - 1) if k >= 1 else []
        for i, g in enumerate(ideal.generators):
            low = [(e, c) for e, c in g.terms.items() if sum(e) <= k]
            for b in shifts:
                db = sum(b)
                row = {}
                for e, c in low:
                    if sum(e) + db <= k:
                        row[tuple(x + y for x, y in zip(e, b))] = c
                if row:
                    rows.append(row)
                    labels.append((i, b))
        return cls(tuple(rows), tuple(labels), columns, k)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def to_dense(self):
        return linalg._dense(self.rows, self.columns)


def truncated_dual_direct(
    ideal: Ideal,
    k: int,
    policy: RankPolicy | None = None,
    order: OrderSpec | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
) -> TruncatedDualSpace:
    """Truncated dual space ``D^k`` as the kernel of the degree-k Macaulay matrix."""
    if k < 0:
        raise InputError("truncation degree must be non-negative")
    ideal = check_vanishing(ideal, point_tol)
    policy = _policy_for(ideal, policy)
    order = order or OrderSpec.graded(ideal.nvars)
    mm = MacaulayMatrix.build(ideal, k)
    kernel = linalg.nullspace(mm.rows, mm.columns, policy)
    basis = reduce_basis([DualFunctional(v, ideal.nvars) for v in kernel], order, policy)
    return TruncatedDualSpace(
        tuple(basis), k, order, ideal.nvars, ideal.fingerprint(), method="direct"
    )


def _completion_step(
    prev: Sequence[DualFunctional],
    gens: Sequence[Polynomial],
    nvars: int,
    policy: RankPolicy,
) -> list[DualFunctional]:
    """Next truncation from the previous one.

    Candidates are ``c0 d^0 + sum_j integrate_j(p_j)`` with ``p_j`` in the span
    of ``prev``; the constraints force ``x_j . q = p_j`` for every j and
    ``q(f) = 0`` for every generator.
    """
    unknowns = [("c0",)] + [(j, l) for j in range(nvars) for l in range(len(prev))]
    zero = (0,) * nvars
    # q as exponent -> {unknown: coefficient}
    q: dict[Exponent, dict] = {zero: {("c0",): Fraction(1)}}
    for j in range(nvars):
        for l, b in enumerate(prev):
            for e, c in _integrate(b.terms, j).items():
                q.setdefault(e, {})[(j, l)] = c
    rows = []
    for j in range(nvars):
        lhs: dict[Exponent, dict] = {}
        for e, coeffs in q.items():
            if e[j]:
                lhs.setdefault(e[:j] + (e[j] - 1,) + e[j + 1:], {}).update(coeffs)
        for l, b in enumerate(prev):
            for e, c in b.terms.items():
                slot = lhs.setdefault(e, {})
                slot[(j, l)] = slot.get((j, l), 0) - c
        rows.extend(r for r in lhs.values() if any(v != 0 for v in r.values()))
    for f in gens:
        row: dict = {}
        for e, coeffs in q.items():
            fe = f.terms.get(e)
            if fe is None:
                continue
            for u, c in coeffs.items():
                row[u] = row.get(u, 0) + c * fe
        if any(v != 0 for v in row.values()):
            rows.append(row)
    if policy.exact:
        rows = [{u: Fraction(v) for u, v in r.items()} for r in rows]
    out = []
    for sol in linalg.nullspace(rows, unknowns, policy):
        terms: dict[Exponent, Scalar] = {}
        for e, coeffs in q.items():
            s = 0
            for u, c in coeffs.items():
                x = sol.get(u)
                if x:
                    s = s + c * x
            if s != 0:
                terms[e] = s
        out.append(DualFunctional(terms, nvars))
    return out


def iter_truncated_duals(
    ideal: Ideal,
    policy: RankPolicy | None = None,
    order: OrderSpec | None = None,
    method: str = "completion",
    point_tol: float = DEFAULT_POINT_TOL,
) -> Iterator[TruncatedDualSpace]:
    """Yield ``D^0, D^1, D^2, ...`` without end."""
    if method not in ("completion", "direct"):
        raise InputError(f"unknown method {method!r}")
    ideal = check_vanishing(ideal, point_tol)
    policy = _policy_for(ideal, policy)
    order = order or OrderSpec.graded(ideal.nvars)
    n = ideal.nvars
    fp = ideal.fingerprint()
    basis = [DualFunctional.identity(n)]
    k = 0
    while True:
        if k > 0:
            if method == "direct":
                basis = list(truncated_dual_direct(ideal, k, policy, order).basis)
            else:
                gens = [truncate(g, k) for g in ideal.generators]
                basis = reduce_basis(_completion_step(basis, gens, n, policy), order, policy)
        yield TruncatedDualSpace(tuple(basis), k, order, n, fp, method=method)
        k += 1


def truncated_dual_completion(
    ideal: Ideal,
    k: int,
    policy: RankPolicy | None = None,
    order: OrderSpec | None = None,
    point_tol: float = DEFAULT_POINT_TOL,
) -> TruncatedDualSpace:
    """Truncated dual space ``D^k`` built degree by degree from ``D^0 = span{1}``."""
    if k < 0:
        raise InputError("truncation degree must be non-negative")
    for space in iter_truncated_duals(ideal, policy, order, "completion", point_tol):
        if space.k == k:
            return space
    raise AssertionError("unreachable")


def full_dual_zero_dim(
    ideal: Ideal,
    policy: RankPolicy | None = None,
    max_degree: int = 20,
    order: OrderSpec | None = None,
    method: str = "completion",
    point_tol: float = DEFAULT_POINT_TOL,
) -> TruncatedDualSpace:
    """The whole dual space of a locally zero-dimensional ideal.

    Stops at the first ``i`` with ``dim D^i = dim D^(i+1)``. When
    ``max_degree`` is reached first the last truncation is returned with
    ``complete=False``.
    """
    if max_degree < 1:
        raise InputError("max_degree must be at least 1")
    prev = None
    for space in iter_truncated_duals(ideal, policy, order, method, point_tol):
        if prev is not None and space.dim == prev.dim:
            return prev
        if space.k >= max_degree:
            return TruncatedDualSpace(
                space.basis, space.k, space.order, space.nvars, space.fingerprint,
                complete=False, method=method,
            )
        prev = space
    raise AssertionError("unreachable")


def _check_compatible(a, b):
    if a.nvars != b.nvars:
        raise DimensionMismatchError("dual spaces in different numbers of variables")
    if a.k != b.k:
        raise OrderMismatchError(f"truncation degrees differ ({a.k} vs {b.k})")
    if a.order != b.order:
        raise OrderMismatchError("dual spaces were computed under different orders")


def _space_policy(spaces, policy):
    if policy is not None:
        return policy
    return infer_policy([q for s in spaces for q in s.basis])


def sum_spaces(
    a: TruncatedDualSpace, b: TruncatedDualSpace, policy: RankPolicy | None = None
) -> TruncatedDualSpace:
    """Reduced basis of ``span(a) + span(b)``."""
    _check_compatible(a, b)
    policy = _space_policy((a, b), policy)
    basis = reduce_basis(list(a.basis) + list(b.basis), a.order, policy)
    return TruncatedDualSpace(tuple(basis), a.k, a.order, a.nvars, method="sum")


def intersect_spaces(
    a: TruncatedDualSpace, b: TruncatedDualSpace, policy: RankPolicy | None = None
) -> TruncatedDualSpace:
    """Reduced basis of ``span(a) & span(b)``."""
    _check_compatible(a, b)
    policy = _space_policy((a, b), policy)
    vecs = linalg.intersect(_vectors(a.basis), _vectors(b.basis), policy)
    basis = reduce_basis([DualFunctional(v, a.nvars) for v in vecs], a.order, policy)
    return TruncatedDualSpace(tuple(basis), a.k, a.order, a.nvars, method="intersection")


def span_contains(
    basis: Sequence[DualFunctional],
    vectors: Sequence[DualFunctional],
    policy: RankPolicy | None = None,
) -> bool:
    """Whether each functional in ``vectors`` lies in ``span(basis)``."""
    if policy is None:
        policy = infer_policy(list(basis) + list(vectors))
    return linalg.contains(_vectors(basis), _vectors(vectors), policy)


def span_equal(a, b, policy: RankPolicy | None = None) -> bool:
    return span_contains(a, b, policy) and span_contains(b, a, policy)


def span_rank(vectors: Sequence[DualFunctional], policy: RankPolicy | None = None) -> int:
    if policy is None:
        policy = infer_policy(vectors)
    return linalg.rank(_vectors(vectors), policy)
