"""
Classic Apriori over all attributes (class attribute included), confident
association rule generation, and the post-filter that keeps classification
rules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

from scrminer.apriori.params import MiningParams
from scrminer.car.rules import ClassificationRule
from scrminer.dataset.loader import Dataset
from scrminer.dataset.schema import AttributeSchema
from scrminer.lattice.generation import initial_candidates
from scrminer.lattice.items import Condset
from scrminer.lattice.search import RunLog, levelwise_search

logger = logging.getLogger(__name__)

# Itemsets may carry a class item; condsets never do.
Itemset = Condset


@dataclass(frozen=True, order=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: Fraction
    confidence: Fraction
    count: int


def mine_frequent_itemsets(dataset: Dataset, params: MiningParams, threads: int = 1,
                           run_log: Optional[RunLog] = None) -> Dict[Itemset, int]:
    """All itemsets whose support number reaches the threshold, with that number."""
    run_log = run_log if run_log is not None else RunLog(algorithm="apriori")
    threshold = params.count_threshold(dataset.n_total)

    def choose_frequent(table):
        return [c for c, counts in table.items() if counts[0] + counts[1] >= threshold]

    kept = levelwise_search(
        dataset,
        initial_candidates(dataset.schema, include_class=True),
        choose_frequent,
        run_log,
        threads=threads,
    )
    frequent = {c: counts[0] + counts[1] for c, counts in kept.items()}
    logger.info("apriori: %d frequent itemsets (threshold %d)", len(frequent), threshold)
    return frequent


def generate_rules(frequent: Dict[Itemset, int], n_total: int, min_conf: Fraction) -> List[AssociationRule]:
    """(c - beta) -> beta for every frequent c and non-empty proper subset beta."""
    rules: List[AssociationRule] = []
    for c, count in frequent.items():
        if len(c) < 2:
            continue
        for r in range(1, len(c)):
            for beta in combinations(c, r):
                antecedent = tuple(it for it in c if it not in beta)
                conf = Fraction(count, frequent[antecedent])
                if conf >= min_conf:
                    rules.append(AssociationRule(
                        antecedent=antecedent,
                        consequent=beta,
                        support=Fraction(count, n_total),
                        confidence=conf,
                        count=count,
                    ))
    rules.sort()
    return rules


def classification_rules_via_postfilter(rules: List[AssociationRule], schema: AttributeSchema) -> List[ClassificationRule]:
    """Keep rules whose consequent is exactly one class item."""
    cls_idx = schema.class_index
    out = [
        ClassificationRule(
            condset=r.antecedent,
            label=r.consequent[0].value,
            support=r.support,
            confidence=r.confidence,
            count=r.count,
        )
        for r in rules
        if len(r.consequent) == 1 and r.consequent[0].attr == cls_idx
    ]
    out.sort()
    return out
