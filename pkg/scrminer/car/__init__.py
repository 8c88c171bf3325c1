from scrminer.car.engine import CarResult, mine_car_rules, mine_car_ruleitems, rules_from_ruleitems
from scrminer.car.rules import ClassificationRule, Ruleitem, rule_from_counts

__all__ = [
    "CarResult",
    "ClassificationRule",
    "Ruleitem",
    "mine_car_rules",
    "mine_car_ruleitems",
    "rule_from_counts",
    "rules_from_ruleitems",
]
