"""Moment systems for hypothetical projective 2^r-divisible codes.

The first four MacWilliams power moments are four linear equations in the
weight counts and in a_3^*, the number of weight-3 dual words. Solving them
for the three heaviest counts plus a_3^* leaves the lighter counts free;
nonnegativity and integrality of everything then cuts out a small lattice
polytope that we either enumerate or optimize over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor
from typing import Iterator, Mapping, Sequence

from divcodes.divlen import LengthTable, admissible_weights
from divcodes.linalg import AffineForm, InconsistentSystemError, SingularSystemError, solve, vertices
from divcodes.weights import WeightDistribution

A3 = "a3_star"


class EnumerationUnbounded(ValueError):
    def __init__(self, weight):
        self.weight = weight
        super().__init__(f"enumeration unbounded: nothing caps the count of weight {weight}")


class Infeasible(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    r: int
    projective: bool = True

    def __post_init__(self):
        if self.n <= 0 or self.k < 0 or self.r < 0:
            raise ValueError("need n > 0 and k, r >= 0")
        if self.k > self.n:
            raise ValueError("dimension cannot exceed length")


@dataclass(frozen=True)
class ParametricSolution:
    params: CodeParams
    free_weights: tuple[int, ...]
    dependent: Mapping[object, AffineForm] = field(default_factory=dict)

    @property
    def dependent_weights(self) -> list[int]:
        return [w for w in self.dependent if w != A3]

    def constraints(self) -> list[AffineForm]:
        """Every form that must be >= 0: free counts and all dependents."""
        return [AffineForm.var(w) for w in self.free_weights] + list(self.dependent.values())

    def instantiate(self, free_counts: Mapping[int, int]) -> tuple[dict[int, Fraction], Fraction]:
        counts = {w: Fraction(free_counts.get(w, 0)) for w in self.free_weights}
        for w, form in self.dependent.items():
            if w != A3:
                counts[w] = form.evaluate(counts)
        return counts, self.dependent[A3].evaluate(counts)


def _moment_rhs(n: int, k: int) -> list[Fraction]:
    half = Fraction(2**k, 2)
    quarter = Fraction(2**k, 4)
    return [
        Fraction(2**k - 1),
        half * n,
        half * Fraction(n * (n + 1), 2),
        quarter * Fraction(n * n * (n + 3), 2),
    ]


def solve_moments_parametric(params: CodeParams, weights: Sequence[int]) -> ParametricSolution:
    """Dependent counts (three heaviest weights and a_3^*) as affine forms in the rest."""
    if not params.projective:
        raise ValueError("the moment system assumes a projective code")
    ws = sorted(set(weights))
    if any(w <= 0 or w > params.n for w in ws):
        raise ValueError(f"weights must lie in [1, {params.n}]")
    dep = ws[-3:]
    free = ws[: len(ws) - len(dep)]
    n, k = params.n, params.k
    rhs = [
        AffineForm(c) - AffineForm(0, {w: w**p for w in free})
        for p, c in enumerate(_moment_rhs(n, k))
    ]
    a3_col = [0, 0, 0, 3 * Fraction(2**k, 4)]
    matrix = [[w**p for w in dep] + [a3_col[p]] for p in range(4)]
    try:
        sol = solve(matrix, rhs)
    except SingularSystemError as exc:
        raise ArithmeticError(f"singular moment system: {exc}") from None
    except InconsistentSystemError as exc:
        raise Infeasible(f"moment system inconsistent for weights {ws}: {exc}") from None
    dependent = dict(zip(dep, sol[:-1]))
    dependent[A3] = sol[-1]
    return ParametricSolution(params, tuple(free), dependent)


def _free_bounds(sol: ParametricSolution, fixed: Mapping[int, int]) -> dict[int, int]:
    """Integer upper bound per free count from a dependent form that caps it."""
    bounds = {}
    for f in sol.free_weights:
        if f in fixed:
            continue
        best = None
        for form in sol.dependent.values():
            form = form.substitute(fixed)
            c = form.coeff(f)
            if c < 0 and all(v <= 0 for v in form.coeffs.values()):
                cap = floor(form.const / -c)
                best = cap if best is None else min(best, cap)
        if best is None:
            raise EnumerationUnbounded(f)
        bounds[f] = best
    return bounds


def enumerate_solutions(
    sol: ParametricSolution, fixed: Mapping[int, int] | None = None
) -> Iterator[tuple[WeightDistribution, int]]:
    fixed = dict(fixed or {})
    unknown = set(fixed) - set(sol.free_weights)
    if unknown:
        raise ValueError(f"can only fix free weights, not {sorted(unknown)}")
    bounds = _free_bounds(sol, fixed)
    names = sorted(bounds)
    for combo in product(*(range(bounds[f] + 1) for f in names)):
        assign = {**fixed, **dict(zip(names, combo))}
        counts, a3 = sol.instantiate(assign)
        values = list(counts.values()) + [a3]
        if any(v < 0 or v.denominator != 1 for v in values):
            continue
        dist = WeightDistribution(
            sol.params.n, sol.params.k, {0: 1, **{w: int(c) for w, c in counts.items()}}
        )
        yield dist, int(a3)


def enumerate_distributions(
    params: CodeParams, table: LengthTable, fixed: Mapping[int, int] | None = None
) -> list[tuple[WeightDistribution, int]]:
    """All weight distributions (with a_3^*) the moment system allows.

    ``table`` describes projective lengths for exponent r - 1 and filters the
    weights through residual lengths. ``fixed`` pins some free counts.
    """
    if not params.projective:
        raise ValueError("enumeration assumes a projective code")
    if table.r != params.r - 1:
        raise ValueError(f"need the length table for r={params.r - 1}")
    weights = sorted(admissible_weights(params.n, params.r, table))
    if not weights:
        return []
    try:
        sol = solve_moments_parametric(params, weights)
    except Infeasible:
        return []
    return list(enumerate_solutions(sol, fixed))


def min_count_bound(sol: ParametricSolution, target_weight) -> Fraction:
    """Exact minimum of a dependent count over the rational feasible polytope."""
    if target_weight not in sol.dependent:
        raise ValueError(f"weight {target_weight} is not a dependent count")
    # raises EnumerationUnbounded when the polytope is not provably bounded
    _free_bounds(sol, {})
    target = sol.dependent[target_weight]
    values = [target.evaluate(p) for p in vertices(sol.constraints(), list(sol.free_weights))]
    if not values:
        raise Infeasible("feasible polytope is empty")
    return min(values)


def distribution_jsonl(results: Sequence[tuple[WeightDistribution, int]]) -> str:
    lines = []
    for dist, a3 in results:
        obj = dist.to_json()
        obj["a3_star"] = str(a3)
        lines.append(json.dumps(obj, sort_keys=True))
    return "\n".join(lines)
