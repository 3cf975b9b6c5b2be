"""Weighted Spearman footrule and Kendall tau for full and partial ranked lists."""
from .core import (AlignedPair, RankedList, ValidationError, WeightTable, align, complete_pair,
                   parse_ranked_list, parse_weight_table)
from .measures import (MeasureReport, UndefinedNormalization, compare, footrule_denominator,
                       footrule_normalized, footrule_weighted, kendall_denominator,
                       kendall_normalized, kendall_weighted, signed_scale)

__version__ = "0.1.0"
