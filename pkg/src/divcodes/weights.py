"""Weight-enumerator algebra for binary linear codes.

Krawtchouk kernels, the MacWilliams transform, the four low-order power
moments and the partition (multi-block) refinement of the transform. All
counts are Python ints and all intermediate quantities are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Mapping


class InvalidDistributionError(ValueError):
    """A transformed count came out negative or non-integral.

    ``index`` is the offending dual weight (an int) or multi-index (a tuple).
    """

    def __init__(self, index, value, message="not a valid code distribution"):
        self.index = index
        self.value = value
        super().__init__(f"{message}: dual count at {index} is {value}")


@lru_cache(maxsize=None)
def krawtchouk(u: int, i: int, n: int) -> int:
    """Coefficient of z**u in (1+z)**(n-i) * (1-z)**i."""
    if n < 0 or not 0 <= u <= n or not 0 <= i <= n:
        raise ValueError(f"krawtchouk needs 0 <= u, i <= n, got u={u}, i={i}, n={n}")
    return sum((-1) ** j * comb(i, j) * comb(n - i, u - j) for j in range(min(i, u) + 1))


def _check_counts(counts: Mapping, total: int, zero_key):
    if counts.get(zero_key, 0) != 1:
        raise ValueError("count of the zero word must be 1")
    for key, c in counts.items():
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise ValueError(f"count at {key} must be a nonnegative int, got {c!r}")
    if sum(counts.values()) != total:
        raise ValueError(f"counts sum to {sum(counts.values())}, expected {total}")


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("length and dimension must be nonnegative")
        clean = {int(w): c for w, c in self.counts.items() if c != 0}
        for w in clean:
            if not 0 <= w <= self.n:
                raise ValueError(f"weight {w} outside [0, {self.n}]")
        _check_counts(clean, 2**self.k, 0)
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    @property
    def support(self) -> list[int]:
        """Nonzero weights that actually occur."""
        return [w for w in self.counts if w]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "counts": {str(w): str(c) for w, c in self.counts.items()},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "WeightDistribution":
        missing = {"n", "k", "counts"} - set(obj)
        if missing:
            raise ValueError(f"missing field(s): {', '.join(sorted(missing))}")
        extra = set(obj) - {"n", "k", "counts", "a3_star"}
        if extra:
            raise ValueError(f"unknown field(s): {', '.join(sorted(extra))}")
        if not isinstance(obj["n"], int) or not isinstance(obj["k"], int):
            raise ValueError("fields 'n' and 'k' must be integers")
        if not isinstance(obj["counts"], dict):
            raise ValueError("field 'counts' must be an object")
        try:
            counts = {int(w): int(c) for w, c in obj["counts"].items()}
        except (TypeError, ValueError) as exc:
            raise ValueError(f"field 'counts': {exc}") from None
        return cls(obj["n"], obj["k"], counts)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class DualMomentReport:
    a1_star: Fraction
    a2_star: Fraction
    a3_star: Fraction


def dual_counts(dist: WeightDistribution) -> list[Fraction]:
    """Raw MacWilliams image, one exact rational per dual weight 0..n."""
    scale = Fraction(1, 2**dist.k)
    return [
        scale * sum(a * krawtchouk(u, i, dist.n) for i, a in dist.counts.items())
        for u in range(dist.n + 1)
    ]


def dual_moments(dist: WeightDistribution) -> DualMomentReport:
    scale = Fraction(1, 2**dist.k)
    vals = [
        scale * sum(a * krawtchouk(u, i, dist.n) for i, a in dist.counts.items())
        if u <= dist.n else Fraction(0)
        for u in (1, 2, 3)
    ]
    return DualMomentReport(*vals)


def macwilliams_transform(dist: WeightDistribution) -> WeightDistribution:
    """Weight distribution of the dual code.

    Raises InvalidDistributionError at the first dual weight whose count is
    not a nonnegative integer.
    """
    counts = {}
    for u, val in enumerate(dual_counts(dist)):
        if val.denominator != 1 or val < 0:
            raise InvalidDistributionError(u, val)
        if val:
            counts[u] = int(val)
    return WeightDistribution(dist.n, dist.n - dist.k, counts)


def moment_residuals(dist: WeightDistribution, a3_star) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """LHS - RHS of the first four power moments for a projective code.

    All four vanish iff the distribution is consistent with a code whose
    dual has no words of weight 1 or 2 and ``a3_star`` words of weight 3.
    """
    n, k = dist.n, dist.k
    a3 = Fraction(a3_star)
    half = Fraction(2**k, 2)
    quarter = Fraction(2**k, 4)
    s = [sum(i**p * a for i, a in dist.counts.items() if i > 0) for p in range(4)]
    return (
        Fraction(s[0] - (2**k - 1)),
        s[1] - half * n,
        s[2] - half * Fraction(n * (n + 1), 2),
        s[3] - quarter * (Fraction(n * n * (n + 3), 2) - 3 * a3),
    )


@dataclass(frozen=True)
class PartitionWeightDistribution:
    """Counts of codewords by weight inside each block of a coordinate partition."""

    block_sizes: tuple[int, ...]
    k: int
    counts: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        sizes = tuple(int(p) for p in self.block_sizes)
        if not sizes or any(p <= 0 for p in sizes):
            raise ValueError("need at least one block, all of positive size")
        object.__setattr__(self, "block_sizes", sizes)
        clean = {tuple(I): c for I, c in self.counts.items() if c != 0}
        for I in clean:
            if len(I) != len(sizes) or any(not 0 <= i <= p for i, p in zip(I, sizes)):
                raise ValueError(f"multi-index {I} does not fit blocks {sizes}")
        _check_counts(clean, 2**self.k, (0,) * len(sizes))
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    def __getitem__(self, index) -> int:
        return self.counts.get(tuple(index), 0)

    def flatten(self) -> WeightDistribution:
        merged: dict[int, int] = {}
        for I, c in self.counts.items():
            merged[sum(I)] = merged.get(sum(I), 0) + c
        return WeightDistribution(self.n, self.k, merged)


def partition_dual_count(block_sizes, k: int, counts: Mapping, index):
    """One dual count a*_I; ``counts`` may hold numbers or affine forms."""
    total = 0
    for J, a in counts.items():
        kern = prod(krawtchouk(i, j, p) for i, j, p in zip(index, J, block_sizes))
        if kern:
            total = total + a * kern
    return total * Fraction(1, 2**k)


def partition_dual_counts(pdist: PartitionWeightDistribution) -> dict[tuple[int, ...], Fraction]:
    ranges = [range(p + 1) for p in pdist.block_sizes]
    return {
        I: Fraction(partition_dual_count(pdist.block_sizes, pdist.k, pdist.counts, I))
        for I in product(*ranges)
    }


def partition_violations(pdist: PartitionWeightDistribution) -> dict[tuple[int, ...], Fraction]:
    """Dual multi-indices whose count is negative or fractional."""
    return {
        I: v for I, v in partition_dual_counts(pdist).items() if v < 0 or v.denominator != 1
    }


def partition_transform(pdist: PartitionWeightDistribution) -> PartitionWeightDistribution:
    """Partition weight distribution of the dual code.

    An inconsistent input raises InvalidDistributionError naming the first
    violating multi-index (in lexicographic order).
    """
    dual = partition_dual_counts(pdist)
    for I, v in dual.items():
        if v < 0 or v.denominator != 1:
            raise InvalidDistributionError(I, v)
    return PartitionWeightDistribution(
        pdist.block_sizes, pdist.n - pdist.k, {I: int(v) for I, v in dual.items() if v}
    )
