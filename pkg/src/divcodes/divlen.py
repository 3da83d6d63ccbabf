"""Which lengths admit 2^r-divisible binary codes.

Two notions live here. Without the projective requirement the feasible
lengths form a numerical semigroup and membership is decided exactly by a
coin-change style DP. With it, we only know a finite exceptional set per r,
kept in a provenance-tagged :class:`LengthTable`; anything the table cannot
decide is Unknown, and Unknown is always treated as feasible by callers that
compute upper bounds.
"""

from __future__ import annotations

import enum
import json
import operator
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping


class Status(enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    UNKNOWN = "Unknown"


class HypothesisNotMet(ValueError):
    pass


# --------------------------------------------------------------------------
# semigroup of feasible (not necessarily projective) lengths


def semigroup_generators(r: int) -> list[int]:
    """Lengths 2^(r+1-i) * (2^i - 1), i = 1..r+1, generating all feasible lengths."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return [2 ** (r + 1 - i) * (2**i - 1) for i in range(1, r + 2)]


@lru_cache(maxsize=None)
def _semigroup(r: int) -> tuple[bytes, int]:
    """Membership bitmap up to the conductor, and the conductor itself.

    The generators include an odd number, so the gcd is 1 and the semigroup
    has a conductor c: every length >= c is feasible. We find it as the
    start of the first run of ``min(gens)`` consecutive members.
    """
    gens = semigroup_generators(r)
    g0 = min(gens)
    member = bytearray([1])
    run = 1
    m = 0
    while run < g0:
        m += 1
        ok = any(m >= g and member[m - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    conductor = m - g0 + 1
    return bytes(member[:conductor]), conductor


def divisible_length_feasible(n: int, r: int) -> bool:
    """Is there a 2^r-divisible binary code of effective length n?"""
    if n < 0:
        return False
    member, conductor = _semigroup(r)
    return n >= conductor or bool(member[n])


def frobenius_number(r: int) -> int:
    """Largest infeasible length (-1 if every length is feasible)."""
    return _semigroup(r)[1] - 1


def short_length_representable(n: int, r: int) -> bool:
    """Whether n = a(2^(r+1) - 1) + b 2^(r+1) with a, b >= 0.

    For n <= r 2^(r+1) this is a necessary condition for a projective
    2^r-divisible code of length n to exist (a published characterization
    that the nonexistence certificates below rely on).
    """
    big, small = 2 ** (r + 1), 2 ** (r + 1) - 1
    return any((n - a * small) % big == 0 for a in range(n // small + 1))


# --------------------------------------------------------------------------
# tables of projective lengths


@dataclass
class LengthTable:
    """Known existence status of projective 2^r-divisible codes by length."""

    r: int
    entries: dict[int, Status] = field(default_factory=dict)
    provenance: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for n, st in self.entries.items():
            if st is Status.NOT_EXISTS and not self.provenance.get(n):
                raise ValueError(f"length {n} marked NotExists without provenance")

    @property
    def max_excluded(self) -> int:
        return max((n for n, st in self.entries.items() if st is Status.NOT_EXISTS), default=0)

    def register(self, n: int, status: Status, citation: str) -> None:
        """Record a new result. Not thread-safe: callers quiesce readers first."""
        if not citation:
            raise ValueError("a citation is required")
        self.entries[n] = status
        self.provenance[n] = citation

    def without(self, *lengths: int) -> "LengthTable":
        out = self.copy()
        for n in lengths:
            out.entries.pop(n, None)
            out.provenance.pop(n, None)
        return out

    def copy(self) -> "LengthTable":
        return LengthTable(self.r, dict(self.entries), dict(self.provenance))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "not_exists": sorted(n for n, s in self.entries.items() if s is Status.NOT_EXISTS),
            "exists": sorted(n for n, s in self.entries.items() if s is Status.EXISTS),
            "provenance": {str(n): c for n, c in sorted(self.provenance.items())},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LengthTable":
        allowed = {"r", "not_exists", "exists", "provenance"}
        extra = set(obj) - allowed
        if extra:
            raise ValueError(f"unknown field(s): {', '.join(sorted(extra))}")
        if "r" not in obj or not isinstance(obj["r"], int):
            raise ValueError("field 'r' must be an integer")
        entries: dict[int, Status] = {}
        for key, st in (("exists", Status.EXISTS), ("not_exists", Status.NOT_EXISTS)):
            for n in obj.get(key, []):
                if not isinstance(n, int) or n < 0:
                    raise ValueError(f"field '{key}': bad length {n!r}")
                if n in entries:
                    raise ValueError(f"length {n} listed twice")
                entries[n] = st
        prov = {int(n): str(c) for n, c in obj.get("provenance", {}).items()}
        return cls(obj["r"], entries, prov)

    @classmethod
    def load(cls, path) -> "LengthTable":
        with open(path, encoding="utf-8") as f:
            return cls.from_json(json.load(f))

    def store(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_json(), f, indent=1)
            f.write("\n")


DATA_ENV = "DIVCODES_DATA_DIR"


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("divcodes") / "data"))


def load_length_tables(directory=None) -> dict[int, LengthTable]:
    """All ``lengths_r*.json`` files from the data directory, keyed by r."""
    directory = Path(directory) if directory else data_dir()
    tables = {}
    for path in sorted(directory.glob("lengths_r*.json")):
        t = LengthTable.load(path)
        tables[t.r] = t
    return tables


def table_for(tables: Mapping[int, LengthTable], r: int) -> LengthTable:
    return tables.get(r) or LengthTable(r)


# projective tables for these exponents are complete up to their largest member
_COMPLETE_UP_TO_R = 3


def projective_length_status(n: int, r: int, table: LengthTable) -> Status:
    if table.r != r:
        raise ValueError(f"table is for r={table.r}, asked about r={r}")
    if not divisible_length_feasible(n, r):
        return Status.NOT_EXISTS
    if n == 0:
        return Status.EXISTS
    st = table.entries.get(n)
    if st is not None:
        return st
    if r <= _COMPLETE_UP_TO_R and n > table.max_excluded:
        return Status.EXISTS
    return Status.UNKNOWN


def status_provenance(n: int, r: int, table: LengthTable) -> str:
    if not divisible_length_feasible(n, r):
        return "semigroup: no 2^r-divisible code of this length at all"
    if n in table.provenance:
        return table.provenance[n]
    if n == 0:
        return "zero-length code"
    if r <= _COMPLETE_UP_TO_R and n > table.max_excluded:
        return f"beyond the largest excluded length {table.max_excluded}"
    return "no entry"


def admissible_weights(n: int, r: int, table: LengthTable) -> set[int]:
    """Nonzero weights a projective 2^r-divisible length-n code may contain.

    The residual of a weight-w word is projective, 2^(r-1)-divisible and of
    length n - w, so ``table`` must describe exponent r - 1.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    step = 2**r
    return {
        w
        for w in range(step, n + 1, step)
        if projective_length_status(n - w, r - 1, table) is not Status.NOT_EXISTS
    }


# --------------------------------------------------------------------------
# rounding operator


@dataclass(frozen=True)
class TrailEntry:
    t: int
    length: int
    status: Status


@dataclass(frozen=True)
class RoundingResult:
    t: int
    witness_length: int
    trail: tuple[TrailEntry, ...]

    @property
    def unknown_accepted(self) -> bool:
        return self.trail[-1].status is Status.UNKNOWN

    @property
    def rejected_lengths(self) -> list[int]:
        return [e.length for e in self.trail if e.status is Status.NOT_EXISTS]

    def to_json(self) -> dict:
        return {
            "t": str(self.t),
            "witness_length": str(self.witness_length),
            "trail": [
                {"t": str(e.t), "length": str(e.length), "status": e.status.value} for e in self.trail
            ],
        }


def round_down_divisible(a: int, b: int, r: int, projective: bool = False, table: LengthTable | None = None) -> RoundingResult:
    """Largest t such that a code of effective length a - t*b may exist.

    Non-projective mode is exact. In projective mode Unknown lengths are
    accepted, which keeps any bound derived from t sound.
    """
    if a < 0 or b <= 0:
        raise ValueError(f"need a >= 0 and b > 0, got a={a}, b={b}")
    if projective and table is None:
        table = LengthTable(r)
    trail = []
    t = a // b
    while True:
        length = a - t * b
        if projective:
            st = projective_length_status(length, r, table)
        else:
            st = Status.EXISTS if divisible_length_feasible(length, r) else Status.NOT_EXISTS
        trail.append(TrailEntry(t, length, st))
        if st is not Status.NOT_EXISTS:
            return RoundingResult(t, length, tuple(trail))
        t -= 1


# --------------------------------------------------------------------------
# certificates

_OPS = {
    "<": operator.lt,
    "<=": operator.le,
    "==": operator.eq,
    ">": operator.gt,
    ">=": operator.ge,
    "!=": operator.ne,
}


@dataclass(frozen=True)
class Step:
    """One fully evaluated integer comparison ``lhs op rhs``."""

    rule: str
    lhs: int
    op: str
    rhs: int
    citation: str
    note: str = ""

    @property
    def holds(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    def to_json(self) -> dict:
        values = {"lhs": str(self.lhs), "op": self.op, "rhs": str(self.rhs)}
        if self.note:
            values["note"] = self.note
        return {"rule": self.rule, "values": values, "citation": self.citation, "holds": self.holds}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Step":
        v = obj["values"]
        if v["op"] not in _OPS:
            raise ValueError(f"unknown comparison {v['op']!r}")
        return cls(obj["rule"], int(v["lhs"]), v["op"], int(v["rhs"]), obj["citation"], v.get("note", ""))


@dataclass(frozen=True)
class NonexistenceCertificate:
    """No projective 2^r-divisible code of length n (and any dimension in range)."""

    n: int
    r: int
    steps: tuple[Step, ...]
    children: tuple["NonexistenceCertificate", ...] = ()
    projective: bool = True
    k_range: str = "k >= 1"
    premises: tuple[str, ...] = ()

    def verify(self) -> bool:
        """Re-evaluate every comparison, recursively."""
        return all(s.holds for s in self.steps) and all(c.verify() for c in self.children)

    def failed_steps(self) -> list[Step]:
        out = [s for s in self.steps if not s.holds]
        for c in self.children:
            out.extend(c.failed_steps())
        return out

    def to_json(self) -> dict:
        return {
            "claim": {
                "n": str(self.n),
                "r": self.r,
                "projective": self.projective,
                "k_range": self.k_range,
            },
            "premises": list(self.premises),
            "steps": [s.to_json() for s in self.steps],
            "children": [c.to_json() for c in self.children],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "NonexistenceCertificate":
        claim = obj["claim"]
        return cls(
            int(claim["n"]),
            int(claim["r"]),
            tuple(Step.from_json(s) for s in obj["steps"]),
            tuple(cls.from_json(c) for c in obj.get("children", [])),
            bool(claim.get("projective", True)),
            claim.get("k_range", "k >= 1"),
            tuple(obj.get("premises", [])),
        )


SHORT_LENGTHS = "short projective lengths are a(2^(r+1)-1) + b 2^(r+1)"


def lemma6_certificate(r: int, j: int) -> NonexistenceCertificate:
    """No projective 2^r-divisible code of length 3 + j 2^r, r >= 3, j <= 2r - 1."""
    if r < 3 or not 0 <= j <= 2 * r - 1:
        raise HypothesisNotMet(f"need r >= 3 and 0 <= j <= 2r-1, got r={r}, j={j}")
    q = 2**r
    n = 3 + j * q
    short = 3 - q + r * 2 * q
    a_min = next(a for a in range(q) if (n + a) % q == 0)
    reps = sum(
        1
        for a in range(n // (2 * q - 1) + 1)
        if (n - a * (2 * q - 1)) % (2 * q) == 0
    )
    steps = (
        Step("length-in-short-range", n, "<=", short, "lemma6", "n <= 3 - 2^r + r 2^(r+1)"),
        Step("short-range-bound", short, "<", r * 2 * q, "lemma6", "below r 2^(r+1)"),
        Step("residue-forces-a", a_min, "==", q - 3, "lemma6", "2^r | 3 + a, least a"),
        Step(
            "least-representation-too-long",
            (q - 3) * (2 * q - 1),
            ">",
            3 + (2 * r - 1) * q,
            "lemma6",
            "(2^r - 3)(2^(r+1) - 1) > 3 + (2r-1) 2^r",
        ),
        Step("j-bound", 3 + (2 * r - 1) * q, ">=", n, "lemma6", "j <= 2r - 1"),
        Step("no-representation", reps, "==", 0, "lemma6", "exhaustive over a"),
    )
    return NonexistenceCertificate(n, r, steps, premises=(SHORT_LENGTHS,))


def prop10_certificate(r: int, j: int) -> NonexistenceCertificate:
    """No projective 2^r-divisible code of length 3 + j 2^r, r >= 4, j <= 2r.

    The case j = 2r is an induction on r rooted at length 131 (r = 4).
    """
    if r < 4 or not 0 <= j <= 2 * r:
        raise HypothesisNotMet(f"need r >= 4 and 0 <= j <= 2r, got r={r}, j={j}")
    if j < 2 * r:
        return lemma6_certificate(r, j)
    q = 2**r
    n = 3 + j * q
    if r == 4:
        from divcodes.replay import theorem131_certificate

        base = theorem131_certificate()
        steps = (Step("base-length", n, "==", base.n, "prop10", "3 + 8*16"),)
        return NonexistenceCertificate(n, r, steps, (base,))

    def moment_gap(k):
        return 2 ** (k - 1) * n - r * q * (2**k - 1)

    steps = [
        Step("length", n, "==", 3 + 2 * r * q, "prop10"),
        # both sides are affine in 2^k, so two values of k settle every k
        Step("moment-identity@k=1", moment_gap(1), "==", 3 + r * q, "prop10", "mw1 - r 2^r mw0"),
        Step("moment-identity@k=2", moment_gap(2), "==", 3 * 2 + r * q, "prop10", "mw1 - r 2^r mw0"),
        Step("rhs-positive", 3 + r * q, ">", 0, "prop10", "3 2^(k-1) + r 2^r, least at k=1"),
        Step(
            "light-weights-nonpositive",
            max((i - r) * q for i in range(1, r + 1)),
            "<=",
            0,
            "prop10",
            "(i - r) 2^r for i <= r",
        ),
    ]
    children = []
    for i in range(r + 1, 2 * r + 1):
        residual = n - i * q
        jj = 2 * (2 * r - i)
        steps.append(
            Step(f"residual-length@i={i}", residual, "==", 3 + jj * 2 ** (r - 1), "prop10", f"j'={jj} at r-1")
        )
        if i >= r + 2:
            children.append(lemma6_certificate(r - 1, jj))
        else:
            children.append(prop10_certificate(r - 1, jj))
    return NonexistenceCertificate(n, r, tuple(steps), tuple(children))
