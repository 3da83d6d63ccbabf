"""Sweep the dimension k for hypothetical projective 16-divisible length-131 codes.

For each k prints the constants of the dependent counts, the exact rational
minimum of a_80 and a_3^* at a_16 = a_32 = 0. Once a_3^* is negative at that
point (and its coefficients are nonnegative) no code of that dimension exists.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from divcodes.divlen import load_length_tables
from divcodes.feasibility import A3, CodeParams, Infeasible, enumerate_distributions, min_count_bound, solve_moments_parametric

WEIGHTS = (16, 32, 48, 64, 80)


@dataclass(frozen=True)
class Config:
    n: int = 131
    r: int = 4
    k_min: int = 8
    k_max: int = 20
    # lattice points grow like 4^k; beyond this only the rational data is shown
    enumerate_up_to: int = 12


def main(cfg: Config) -> None:
    table = load_length_tables()[cfg.r - 1]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "a48_const", "a64_const", "a80_const", "a3_at_zero", "a80_min", "integral_solutions"])
    for k in range(cfg.k_min, cfg.k_max + 1):
        sol = solve_moments_parametric(CodeParams(cfg.n, k, cfg.r), WEIGHTS)
        count = "-"
        if k <= cfg.enumerate_up_to:
            count = len(enumerate_distributions(CodeParams(cfg.n, k, cfg.r), table))
        try:
            a80_min = min_count_bound(sol, 80)
        except Infeasible:
            a80_min = "empty"
        w.writerow([k, *(sol.dependent[x].const for x in (48, 64, 80, A3)), a80_min, count])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k-min", type=int, default=Config.k_min)
    p.add_argument("--k-max", type=int, default=Config.k_max)
    p.add_argument("--enumerate-up-to", type=int, default=Config.enumerate_up_to)
    a = p.parse_args()
    main(Config(k_min=a.k_min, k_max=a.k_max, enumerate_up_to=a.enumerate_up_to))
