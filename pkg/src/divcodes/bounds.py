"""Upper bounds for partial spreads and constant-dimension codes (q = 2)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from divcodes.divlen import LengthTable, RoundingResult, data_dir, round_down_divisible, table_for


class UnknownBase(LookupError):
    def __init__(self, query):
        self.query = query
        super().__init__(f"unknown base: no value for A_2({query.n},{query.d};{query.k})")


def griesmer(k: int, d: int) -> int:
    """Minimum length a binary [n, k, d] code could have: sum of ceil(d / 2^i)."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return sum(-(-d // 2**i) for i in range(k))


@dataclass(frozen=True)
class BoundQuery:
    """A_2(n, d; k), stored with k replaced by min(k, n - k)."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")
        object.__setattr__(self, "k", min(self.k, self.n - self.k))
        if self.d % 2 or not 2 <= self.d <= 2 * self.k:
            raise ValueError(f"need even d with 2 <= d <= 2k, got d={self.d}, k={self.k}")

    def key(self) -> tuple[int, int, int]:
        return (self.n, self.d, self.k)

    def __str__(self):
        return f"A_2({self.n},{self.d};{self.k})"


@dataclass(frozen=True)
class BoundResult:
    query: BoundQuery
    value: int
    method: str  # spread | recursive | table
    assumptions: tuple[tuple[BoundQuery, int, str], ...] = ()
    rounding_trail: RoundingResult | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.query.n,
            "d": self.query.d,
            "k": self.query.k,
            "value": str(self.value),
            "method": self.method,
            "assumptions": [
                {"n": q.n, "d": q.d, "k": q.k, "value": str(v), "citation": c}
                for q, v, c in self.assumptions
            ],
        }
        if self.rounding_trail is not None:
            out["rounding"] = self.rounding_trail.to_json()
        return out


@dataclass
class BoundTable:
    entries: dict[tuple[int, int, int], tuple[int, str]] = field(default_factory=dict)

    def add(self, query: BoundQuery, value: int, citation: str) -> None:
        if not citation:
            raise ValueError(f"{query}: citation required")
        old = self.entries.get(query.key())
        if old is not None and old[0] != value:
            raise ValueError(f"{query}: conflicting values {old[0]} and {value}")
        self.entries[query.key()] = (value, citation)

    def get(self, query: BoundQuery) -> tuple[int, str] | None:
        return self.entries.get(query.key())

    def __contains__(self, query: BoundQuery) -> bool:
        return query.key() in self.entries

    def to_json(self) -> dict:
        return {
            "entries": [
                {"n": n, "d": d, "k": k, "value": str(v), "citation": c}
                for (n, d, k), (v, c) in sorted(self.entries.items())
            ]
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "BoundTable":
        if set(obj) != {"entries"}:
            raise ValueError("bound table must have exactly the field 'entries'")
        table = cls()
        fields = {"n", "d", "k", "value", "citation"}
        for i, e in enumerate(obj["entries"]):
            missing = fields - set(e)
            if missing:
                raise ValueError(f"entry {i}: missing field(s) {', '.join(sorted(missing))}")
            extra = set(e) - fields
            if extra:
                raise ValueError(f"entry {i}: unknown field(s) {', '.join(sorted(extra))}")
            if not isinstance(e["citation"], str) or not e["citation"]:
                raise ValueError(f"entry {i}: field 'citation' must be a nonempty string")
            try:
                value = int(e["value"])
            except (TypeError, ValueError):
                raise ValueError(f"entry {i}: field 'value' is not an integer") from None
            table.add(BoundQuery(e["n"], e["d"], e["k"]), value, e["citation"])
        return table

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "d", "k", "value", "method", "citation"])
        for (n, d, k), (v, c) in sorted(self.entries.items()):
            w.writerow([n, d, k, v, "table", c])
        return buf.getvalue()


def table_load(path) -> BoundTable:
    with open(path, encoding="utf-8") as f:
        return BoundTable.from_json(json.load(f))


def table_store(table: BoundTable, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(table.to_json(), f, indent=1)
        f.write("\n")


def default_bound_table() -> BoundTable:
    return table_load(Path(data_dir()) / "bounds.json")


def _tables(tables) -> Mapping[int, LengthTable]:
    if isinstance(tables, LengthTable):
        return {tables.r: tables}
    return tables or {}


def spread_upper_bound(n: int, k: int, tables=None) -> BoundResult:
    """Upper bound on partial spreads of k-spaces in F_2^n.

    The uncovered points form a projective 2^(k-1)-divisible code, so the
    plain quotient is rounded down until such a code can exist.
    """
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k and 2k <= n, got n={n}, k={k}")
    table = table_for(_tables(tables), k - 1)
    rnd = round_down_divisible(2**n - 1, 2**k - 1, k - 1, projective=True, table=table)
    return BoundResult(BoundQuery(n, 2 * k, k), rnd.t, "spread", (), rnd)


def cdc_upper_bound(
    query: BoundQuery, base: BoundTable | None = None, tables=None, compute_missing: bool = True
) -> BoundResult:
    """Recursive bound A(n,d;k) <= round((2^n-1) A(n-1,d;k-1) / (2^k-1)).

    The base value comes from ``base`` when it has one, otherwise it is
    computed recursively (or UnknownBase is raised if ``compute_missing`` is
    off). Rounding is the non-projective one.
    """
    n, d, k = query.n, query.d, query.k
    if d == 2 * k:
        return spread_upper_bound(n, k, tables)
    base = base if base is not None else BoundTable()
    if d > 2 * (k - 1):
        base_value, assumptions = 1, ()
    else:
        bq = BoundQuery(n - 1, d, k - 1)
        hit = base.get(bq)
        if hit is not None:
            base_value, assumptions = hit[0], ((bq, hit[0], hit[1]),)
        elif compute_missing:
            sub = cdc_upper_bound(bq, base, tables)
            base_value = sub.value
            assumptions = sub.assumptions + ((bq, sub.value, f"computed ({sub.method})"),)
        else:
            raise UnknownBase(bq)
    rnd = round_down_divisible((2**n - 1) * base_value, 2**k - 1, k - 1)
    return BoundResult(query, rnd.t, "recursive", assumptions, rnd)
