"""Exact arithmetic for divisible binary codes and the subspace-code bounds they imply."""

from divcodes.weights import (
    PartitionWeightDistribution,
    WeightDistribution,
    krawtchouk,
    macwilliams_transform,
    moment_residuals,
    partition_transform,
)
from divcodes.divlen import (
    LengthTable,
    Status,
    admissible_weights,
    divisible_length_feasible,
    lemma6_certificate,
    load_length_tables,
    projective_length_status,
    prop10_certificate,
    round_down_divisible,
)
from divcodes.feasibility import CodeParams, enumerate_distributions, min_count_bound, solve_moments_parametric
from divcodes.bounds import BoundQuery, BoundTable, cdc_upper_bound, griesmer, spread_upper_bound

__version__ = "0.1.0"
