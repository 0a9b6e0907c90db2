from setcodes.core.bits import (
    BitString,
    SubstitutionPattern,
    Word,
    apply_flips,
    apply_pattern,
    canonical_rows,
    matched_distance,
    min_pairwise_distance,
)
from setcodes.core.params import Params, clog2, log2_binom, log2_int

__all__ = [
    "BitString",
    "Params",
    "SubstitutionPattern",
    "Word",
    "apply_flips",
    "apply_pattern",
    "canonical_rows",
    "clog2",
    "log2_binom",
    "log2_int",
    "matched_distance",
    "min_pairwise_distance",
]
