"""
CAR-Apriori: levelwise mining of frequent ruleitems and direct generation of
confident classification rules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from scrminer.apriori.params import MiningParams
from scrminer.car.rules import ClassificationRule, Ruleitem
from scrminer.dataset.loader import Dataset
from scrminer.lattice.generation import initial_candidates
from scrminer.lattice.items import SupportTable
from scrminer.lattice.search import RunLog, levelwise_search

logger = logging.getLogger(__name__)


@dataclass
class CarResult:
    ruleitems: List[Ruleitem]
    # Condsets carried forward (at least one frequent ruleitem) with class counts.
    condsets: SupportTable
    run_log: RunLog


def mine_car_ruleitems(dataset: Dataset, params: MiningParams, threads: int = 1,
                       run_log: Optional[RunLog] = None) -> CarResult:
    run_log = run_log if run_log is not None else RunLog(algorithm="car")
    threshold = params.count_threshold(dataset.n_total)

    def choose_frequent_ruleitems(table):
        return [c for c, counts in table.items() if counts[0] >= threshold or counts[1] >= threshold]

    kept = levelwise_search(dataset, initial_candidates(dataset.schema), choose_frequent_ruleitems,
                            run_log, threads=threads)

    ruleitems: List[Ruleitem] = []
    for condset, counts in kept.items():
        for label in (0, 1):
            if counts[label] >= threshold:
                ruleitems.append(Ruleitem(
                    condset=condset,
                    label=label,
                    count=counts[label],
                    support=Fraction(counts[label], dataset.n_total),
                ))
    ruleitems.sort()
    run_log.ruleitem_count = len(ruleitems)
    logger.info("car: %d frequent ruleitems over %d condsets (threshold %d)", len(ruleitems), len(kept), threshold)
    return CarResult(ruleitems=ruleitems, condsets=kept, run_log=run_log)


def rules_from_ruleitems(ruleitems: Iterable[Ruleitem], condset_counts: SupportTable,
                         min_conf: Fraction) -> List[ClassificationRule]:
    """Confidence is ruleitem support over condset support; keep those >= min_conf."""
    rules: List[ClassificationRule] = []
    for ri in ruleitems:
        counts = condset_counts[ri.condset]
        conf = Fraction(ri.count, counts[0] + counts[1])
        if conf >= min_conf:
            rules.append(ClassificationRule(
                condset=ri.condset,
                label=ri.label,
                support=ri.support,
                confidence=conf,
                count=ri.count,
            ))
    rules.sort()
    return rules


def mine_car_rules(dataset: Dataset, params: MiningParams,
                   threads: int = 1) -> Tuple[CarResult, List[ClassificationRule]]:
    """Convenience: (CarResult, confident classification rules)."""
    result = mine_car_ruleitems(dataset, params, threads=threads)
    rules = rules_from_ruleitems(result.ruleitems, result.condsets, params.min_conf)
    result.run_log.rule_count = len(rules)
    return result, rules
