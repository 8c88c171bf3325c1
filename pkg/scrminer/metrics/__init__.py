from scrminer.metrics.measures import (
    GrowthRateValue,
    confidence,
    confidence_from_growth_rate,
    growth_rate,
    growth_rate_from_counts,
    is_rho_emerging,
    rho_for_confidence,
    ruleitem_support,
    support,
    within_class_support,
)
from scrminer.metrics.pruning import PruningStats, format_percent, format_ratio, pruning_stats

__all__ = [
    "GrowthRateValue",
    "PruningStats",
    "confidence",
    "confidence_from_growth_rate",
    "format_percent",
    "format_ratio",
    "growth_rate",
    "growth_rate_from_counts",
    "is_rho_emerging",
    "pruning_stats",
    "rho_for_confidence",
    "ruleitem_support",
    "support",
    "within_class_support",
]
