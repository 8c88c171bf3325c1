from scrminer.scr.contrast import (
    CONDITIONS,
    SCRRuleitem,
    contrast_conditions,
    is_contrast_pair_ruleitems,
    is_contrast_pair_rules,
)
from scrminer.scr.engine import ScrResult, mine_scr_patterns, mine_scr_ruleitems
from scrminer.scr.filter import FilterDecision, choose_frequent_and_contrast
from scrminer.scr.patterns import SCRPattern, assemble_patterns, distinct_rules, make_pattern, pattern_from_rules

__all__ = [
    "CONDITIONS",
    "FilterDecision",
    "SCRPattern",
    "SCRRuleitem",
    "ScrResult",
    "assemble_patterns",
    "choose_frequent_and_contrast",
    "contrast_conditions",
    "distinct_rules",
    "is_contrast_pair_ruleitems",
    "is_contrast_pair_rules",
    "make_pattern",
    "mine_scr_patterns",
    "mine_scr_ruleitems",
    "pattern_from_rules",
]
