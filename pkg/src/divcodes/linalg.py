"""Exact rational linear algebra for the small systems that show up here.

Everything is ``fractions.Fraction``; nothing is ever converted to float.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


class SingularSystemError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact/boolean scalar {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class AffineForm:
    """``const + sum(coeff[v] * v)`` with exact rational coefficients.

    Variables are arbitrary hashable labels (weights are plain ints).
    """

    const: Fraction = Fraction(0)
    coeffs: Mapping[Hashable, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "const", as_fraction(self.const))
        clean = {v: as_fraction(c) for v, c in self.coeffs.items() if c != 0}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def var(cls, name: Hashable) -> "AffineForm":
        return cls(0, {name: 1})

    @classmethod
    def lift(cls, x) -> "AffineForm":
        return x if isinstance(x, AffineForm) else cls(x)

    def coeff(self, name: Hashable) -> Fraction:
        return self.coeffs.get(name, Fraction(0))

    @property
    def variables(self) -> set:
        return set(self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = AffineForm.lift(other)
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            coeffs[v] = coeffs.get(v, 0) + c
        return AffineForm(self.const + other.const, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(-self.const, {v: -c for v, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-AffineForm.lift(other))

    def __rsub__(self, other):
        return AffineForm.lift(other) - self

    def __mul__(self, scalar):
        if isinstance(scalar, AffineForm):
            if scalar.is_constant():
                scalar = scalar.const
            elif self.is_constant():
                return scalar * self.const
            else:
                raise TypeError("product of two non-constant affine forms is not affine")
        s = as_fraction(scalar)
        return AffineForm(self.const * s, {v: c * s for v, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_fraction(scalar))

    def __eq__(self, other):
        if not isinstance(other, AffineForm):
            try:
                other = AffineForm(other)
            except TypeError:
                return NotImplemented
        return self.const == other.const and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.const, frozenset(self.coeffs.items())))

    def evaluate(self, assignment: Mapping[Hashable, object]) -> Fraction:
        return self.const + sum(
            (c * as_fraction(assignment[v]) for v, c in self.coeffs.items()), Fraction(0)
        )

    def substitute(self, assignment: Mapping[Hashable, object]) -> "AffineForm":
        """Partial evaluation; values may themselves be affine forms."""
        out = AffineForm(self.const)
        for v, c in self.coeffs.items():
            out = out + c * (AffineForm.lift(assignment[v]) if v in assignment else AffineForm.var(v))
        return out

    def __repr__(self):
        parts = [str(self.const)] if self.const or not self.coeffs else []
        for v, c in sorted(self.coeffs.items(), key=lambda vc: str(vc[0])):
            parts.append(f"{c}*[{v}]")
        return "AffineForm(" + " + ".join(parts) + ")"


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination.

    ``matrix`` has m rows and c columns with m >= c; it must have full column
    rank. Right-hand sides can be numbers or :class:`AffineForm` (anything
    closed under addition and rational scaling). Surplus rows must reduce to
    ``0 = 0``; for affine right-hand sides that means identically zero.
    """
    rows = [[as_fraction(a) for a in row] for row in matrix]
    b = list(rhs)
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    if m < ncols:
        raise SingularSystemError("underdetermined system")
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, m) if rows[r][col] != 0), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {col}")
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        b[pivot_row], b[piv] = b[piv], b[pivot_row]
        p = rows[pivot_row][col]
        rows[pivot_row] = [a / p for a in rows[pivot_row]]
        b[pivot_row] = b[pivot_row] * (1 / p)
        for r in range(m):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * ap for a, ap in zip(rows[r], rows[pivot_row])]
                b[r] = b[r] - f * b[pivot_row]
        pivot_row += 1
    for r in range(ncols, m):
        if b[r] != 0:
            raise InconsistentSystemError(f"equation {r} reduces to 0 = {b[r]!r}")
    return b[:ncols]


def vertices(constraints: Iterable[AffineForm], variables: Sequence[Hashable]):
    """Vertices of ``{x : form(x) >= 0 for every form}`` in the given variables.

    Brute force over all choices of ``len(variables)`` tight constraints; only
    meant for the handful of free counts that moment systems leave.
    """
    from itertools import combinations

    cons = list(constraints)
    d = len(variables)
    if d == 0:
        if all(c.const >= 0 for c in cons):
            yield {}
        return
    seen = set()
    for tight in combinations(cons, d):
        mat = [[c.coeff(v) for v in variables] for c in tight]
        try:
            sol = solve(mat, [-c.const for c in tight])
        except (SingularSystemError, InconsistentSystemError):
            continue
        point = dict(zip(variables, sol))
        key = tuple(sol)
        if key in seen:
            continue
        if all(c.evaluate(point) >= 0 for c in cons):
            seen.add(key)
            yield point
