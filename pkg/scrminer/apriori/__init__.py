from scrminer.apriori.engine import (
    AssociationRule,
    classification_rules_via_postfilter,
    generate_rules,
    mine_frequent_itemsets,
)
from scrminer.apriori.params import MiningParams, to_fraction

__all__ = [
    "AssociationRule",
    "MiningParams",
    "classification_rules_via_postfilter",
    "generate_rules",
    "mine_frequent_itemsets",
    "to_fraction",
]
