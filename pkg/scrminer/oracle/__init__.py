from scrminer.oracle.engine import (
    DEFAULT_CAP,
    OracleReport,
    PatternDiff,
    compare_pattern_sets,
    condset_space,
    enumerate_all_condsets,
    oracle_scr_patterns,
)

__all__ = [
    "DEFAULT_CAP",
    "OracleReport",
    "PatternDiff",
    "compare_pattern_sets",
    "condset_space",
    "enumerate_all_condsets",
    "oracle_scr_patterns",
]
