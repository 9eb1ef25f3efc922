"""Local monomial orders and the dual orders they induce.

A primal order is *local*: the constant monomial 1 is the largest monomial.
The dual order on differential monomials is its opposite, so the initial
term of a functional is the exponent that is smallest in the primal order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .exceptions import DimensionMismatchError, InputError
from .poly import Exponent, Polynomial, Scalar

GRADED = "graded"
ELIMINATION = "elimination"


@dataclass(frozen=True)
class OrderSpec:
    """A graded local order, or a local block order eliminating ``eliminated``.

    Ties inside a degree class are broken reverse-lexicographically along
    ``permutation`` (most significant variable first).
    """

    nvars: int
    kind: str = GRADED
    eliminated: frozenset[int] = frozenset()
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (GRADED, ELIMINATION):
            raise InputError(f"unknown order kind {self.kind!r}")
        perm = self.permutation
        if perm is None:
            perm = tuple(range(self.nvars))
        perm = tuple(int(i) for i in perm)
        if sorted(perm) != list(range(self.nvars)):
            raise InputError(f"{perm} is not a permutation of the variables")
        object.__setattr__(self, "permutation", perm)
        elim = frozenset(int(i) for i in self.eliminated)
        if any(not 0 <= i < self.nvars for i in elim):
            raise InputError("eliminated variable out of range")
        if self.kind == GRADED and elim:
            raise InputError("graded orders take no eliminated variables")
        if self.kind == ELIMINATION and not elim:
            raise InputError("elimination order needs at least one variable")
        object.__setattr__(self, "eliminated", elim)

    @classmethod
    def graded(cls, nvars: int, permutation: Sequence[int] | None = None) -> OrderSpec:
        return cls(nvars, GRADED, frozenset(), permutation)

    @classmethod
    def elimination(
        cls, nvars: int, eliminated: Iterable[int], permutation: Sequence[int] | None = None
    ) -> OrderSpec:
        elim = frozenset(eliminated)
        if len(elim) == nvars:
            # eliminating every variable is just the graded order
            return cls(nvars, GRADED, frozenset(), permutation)
        return cls(nvars, ELIMINATION, elim, permutation)

    def key(self, a: Exponent) -> tuple:
        """Sort key of the primal order: a larger key is a larger monomial."""
        if len(a) != self.nvars:
            raise DimensionMismatchError(
                f"exponent {a} does not match order on {self.nvars} variables"
            )
        tie = tuple(-a[self.permutation[i]] for i in reversed(range(self.nvars)))
        if self.kind == GRADED:
            return (-sum(a),) + tie
        deg_a = sum(a[i] for i in self.eliminated)
        return (-deg_a, -(sum(a) - deg_a)) + tie

    def dual_sorted(self, exps: Iterable[Exponent]) -> list[Exponent]:
        """Exponents from largest to smallest in the dual order."""
        return sorted(exps, key=self.key)

    def dual_initial(self, exps: Iterable[Exponent]) -> Exponent:
        """Largest exponent in the dual order (= smallest primal monomial)."""
        return min(exps, key=self.key)

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "eliminated": sorted(self.eliminated),
            "permutation": list(self.permutation),
        }


def compare_monomials(order: OrderSpec, a: Exponent, b: Exponent) -> int:
    """Return 1 if ``x^a > x^b``, -1 if smaller, 0 if equal (primal order)."""
    if len(a) != len(b):
        raise DimensionMismatchError("exponents of different lengths")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def initial_term(order: OrderSpec, f: Polynomial) -> tuple[Exponent, Scalar]:
    """Largest monomial of ``f`` under the primal order, with its coefficient."""
    if f.is_zero():
        raise InputError("initial term of the zero polynomial")
    if f.nvars != order.nvars:
        raise DimensionMismatchError("polynomial and order have different variables")
    e = max(f.terms, key=order.key)
    return e, f.terms[e]
