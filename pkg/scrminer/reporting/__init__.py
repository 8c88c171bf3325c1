from scrminer.reporting.patterns_io import (
    TSV_COLUMNS,
    patterns_frame,
    read_patterns_tsv,
    render_rule,
    write_patterns,
    write_patterns_tsv,
    write_rules,
)
from scrminer.reporting.stats import LEVEL_COLUMNS, levels_frame, run_summary, write_stats

__all__ = [
    "LEVEL_COLUMNS",
    "TSV_COLUMNS",
    "levels_frame",
    "patterns_frame",
    "read_patterns_tsv",
    "render_rule",
    "run_summary",
    "write_patterns",
    "write_patterns_tsv",
    "write_rules",
    "write_stats",
]
