"""Littlewood-Richardson coefficients via the hive model, with exact
polytope analysis of hive polytopes."""
from .hive_core import (
    Border, HiveError, Labeling, Partition, Rhombus, all_rhombi, border_from_triple,
    check_labeling, is_hive, is_integral,
)
from .enumeration import count_integral_hives, enumerate_integral_hives, lr_coefficient

__version__ = "0.1.0"

__all__ = [
    "Border", "HiveError", "Labeling", "Partition", "Rhombus", "all_rhombi", "border_from_triple",
    "check_labeling", "is_hive", "is_integral", "count_integral_hives", "enumerate_integral_hives",
    "lr_coefficient",
]
