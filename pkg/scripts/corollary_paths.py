"""Recompute the constant-dimension bounds with d = 10 along their recursion paths.

Prints every step of each chain next to the values shipped in the bound
table, so that disagreements are visible at the step where they appear.
Also tries the what-if of excluding length 130 at r = 4.
"""

import argparse
from dataclasses import dataclass

from divcodes.bounds import BoundQuery, BoundTable, cdc_upper_bound, default_bound_table, spread_upper_bound
from divcodes.divlen import Status, load_length_tables
from divcodes.replay import register_theorem131


@dataclass(frozen=True)
class Config:
    targets: tuple[tuple[int, int, int], ...] = ((14, 10, 6), (15, 10, 7), (19, 10, 6))


def chain(q: BoundQuery, tables) -> list[tuple[BoundQuery, int]]:
    """Every query on the recursion path, bottom first, all computed from scratch."""
    res = cdc_upper_bound(q, BoundTable(), tables)
    return [(bq, v) for bq, v, _ in res.assumptions] + [(q, res.value)]


def main(cfg: Config) -> None:
    tables = load_length_tables()
    register_theorem131(tables)
    shipped = default_bound_table()
    for key in cfg.targets:
        q = BoundQuery(*key)
        print(f"{q}:")
        for step, value in chain(q, tables):
            printed = shipped.get(step)
            note = ""
            if printed is not None:
                note = "  (table agrees)" if printed[0] == value else f"  (table says {printed[0]})"
            print(f"  {step} <= {value}{note}")
    scratch = {r: t.copy() for r, t in tables.items()}
    scratch[4].register(130, Status.NOT_EXISTS, "hypothetical")
    res = spread_upper_bound(15, 6, scratch)
    print(f"what-if 130 excluded at r=4: A_2(15,12;6) <= {res.value} (trail lengths {[e.length for e in res.rounding_trail.trail]})")


if __name__ == "__main__":
    argparse.ArgumentParser(description=__doc__.splitlines()[0]).parse_args()
    main(Config())
