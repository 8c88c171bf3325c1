from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from scrminer.lattice.search import RunLog


def _ratio(num: int, den: int) -> Optional[Fraction]:
    return Fraction(num, den) if den > 0 else None


def format_ratio(value: Optional[Fraction], digits: int = 4) -> str:
    """Decimal with `digits` significant digits; "n/a" for an undefined ratio."""
    if value is None:
        return "n/a"
    return f"{float(value):.{digits}g}"


def format_percent(value: Optional[Fraction], digits: int = 4) -> str:
    if value is None:
        return "n/a"
    return f"{float(value * 100):.{digits}g}%"


@dataclass(frozen=True)
class PruningStats:
    """SCR-Apriori against CAR-Apriori on the same data and thresholds."""

    scr_ruleitems: int
    car_ruleitems: int
    scr_rules: int
    car_rules: int
    scr_candidates: int
    car_candidates: int
    # condsets CAR-Apriori carried forward; each holds one or two frequent ruleitems
    car_condsets: int = 0

    @property
    def ruleitem_ratio(self) -> Optional[Fraction]:
        return _ratio(self.scr_ruleitems, self.car_ruleitems)

    @property
    def rule_ratio(self) -> Optional[Fraction]:
        return _ratio(self.scr_rules, self.car_rules)

    @property
    def candidate_ratio(self) -> Optional[Fraction]:
        return _ratio(self.scr_candidates, self.car_candidates)

    @property
    def condset_ratio(self) -> Optional[Fraction]:
        return _ratio(self.scr_ruleitems, self.car_condsets)

    def as_dict(self) -> Dict[str, str]:
        return {
            "scr_ruleitems": str(self.scr_ruleitems),
            "car_ruleitems": str(self.car_ruleitems),
            "ruleitem_ratio": format_ratio(self.ruleitem_ratio),
            "scr_rules": str(self.scr_rules),
            "car_rules": str(self.car_rules),
            "rule_ratio": format_ratio(self.rule_ratio),
            "scr_candidates": str(self.scr_candidates),
            "car_candidates": str(self.car_candidates),
            "candidate_ratio": format_ratio(self.candidate_ratio),
            "car_condsets": str(self.car_condsets),
            "condset_ratio": format_ratio(self.condset_ratio),
        }

    def sentences(self) -> List[str]:
        return [
            f"{self.scr_ruleitems} SCR-ruleitems = {format_percent(self.ruleitem_ratio)} "
            f"of {self.car_ruleitems} CAR frequent ruleitems",
            f"{self.scr_rules} SCR rules = {format_percent(self.rule_ratio)} "
            f"of {self.car_rules} classification rules",
        ]


def pruning_stats(scr_log: RunLog, car_log: RunLog) -> PruningStats:
    """
    SCR-ruleitems (kept condsets, both class counts attached) against CAR frequent
    ruleitems (one per condset and frequent class); rules compare distinct pattern
    rules with confident CAR rules.
    """
    return PruningStats(
        scr_ruleitems=scr_log.ruleitems_total,
        car_ruleitems=car_log.ruleitems_total,
        scr_rules=scr_log.rule_count,
        car_rules=car_log.rule_count,
        scr_candidates=scr_log.counted_total,
        car_candidates=car_log.counted_total,
        car_condsets=car_log.kept_total,
    )
