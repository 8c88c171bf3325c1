"""
Brute-force reference pipeline: count every condset, keep all frequent and
confident classification rules, then post-filter rule pairs with the
alpha-contrasting conditions. Shares the condition checks with the scr
package but none of its filtering or lattice pruning.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import prod
from typing import Dict, Iterable, List, Set, Tuple

from scrminer.apriori.params import MiningParams
from scrminer.car.rules import ClassificationRule, Ruleitem, rule_from_counts
from scrminer.dataset.loader import Dataset
from scrminer.dataset.schema import AttributeSchema
from scrminer.errors import OracleCapExceeded
from scrminer.lattice.counting import count_supports
from scrminer.lattice.items import Condset, Item, SupportTable, attributes_of
from scrminer.scr.patterns import SCRPattern, pattern_from_rules

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2_000_000


@dataclass
class OracleReport:
    patterns: List[SCRPattern]
    enumerated_condsets: int
    candidate_ruleitems: int
    frequent_ruleitems: List[Ruleitem] = field(default_factory=list)
    confident_rules: List[ClassificationRule] = field(default_factory=list)

    @property
    def stage_counts(self) -> Dict[str, int]:
        return {
            "enumerated_condsets": self.enumerated_condsets,
            "candidate_ruleitems": self.candidate_ruleitems,
            "frequent_ruleitems": len(self.frequent_ruleitems),
            "confident_rules": len(self.confident_rules),
            "patterns": len(self.patterns),
        }


@dataclass(frozen=True)
class PatternDiff:
    missing_from_a: List[SCRPattern]
    missing_from_b: List[SCRPattern]

    @property
    def empty(self) -> bool:
        return not self.missing_from_a and not self.missing_from_b


def condset_space(schema: AttributeSchema) -> int:
    """Number of non-empty condsets: product of (domain size + 1) minus one."""
    return prod(len(schema.attributes[i].domain) + 1 for i in schema.feature_indices) - 1


def enumerate_all_condsets(schema: AttributeSchema, cap: int = DEFAULT_CAP) -> List[Condset]:
    needed = condset_space(schema)
    if needed > cap:
        raise OracleCapExceeded(needed, cap)
    choices = [
        [None] + [Item(i, v) for v in range(len(schema.attributes[i].domain))]
        for i in schema.feature_indices
    ]
    out = [tuple(it for it in combo if it is not None) for combo in product(*choices)]
    return sorted(c for c in out if c)


def oracle_scr_patterns(dataset: Dataset, params: MiningParams, cap: int = DEFAULT_CAP,
                        threads: int = 1) -> OracleReport:
    schema = dataset.schema
    condsets = enumerate_all_condsets(schema, cap)
    threshold = params.count_threshold(dataset.n_total)

    by_size: Dict[int, List[Condset]] = {}
    for c in condsets:
        by_size.setdefault(len(c), []).append(c)
    table: SupportTable = {}
    for size in sorted(by_size):
        table.update(count_supports(by_size[size], dataset, threads=threads))

    frequent: List[Ruleitem] = []
    rules: List[ClassificationRule] = []
    for c in condsets:
        counts = table[c]
        for label in (0, 1):
            if counts[label] < threshold:
                continue
            frequent.append(Ruleitem(condset=c, label=label, count=counts[label],
                                     support=Fraction(counts[label], dataset.n_total)))
            rule = rule_from_counts(c, counts, label, dataset.n_total)
            if rule is not None and rule.confidence >= params.min_conf:
                rules.append(rule)

    # Rules over different attribute sets never contrast, so pairs are tested per attribute set.
    by_attrs: Dict[Tuple[int, ...], List[ClassificationRule]] = {}
    for r in rules:
        by_attrs.setdefault(attributes_of(r.condset), []).append(r)

    found: Set[SCRPattern] = set()
    for group in by_attrs.values():
        for r1, r2 in combinations(group, 2):
            p = pattern_from_rules(r1, table[r1.condset], r2, table[r2.condset], schema, params.min_conf)
            if p is not None:
                found.add(p)

    report = OracleReport(
        patterns=sorted(found),
        enumerated_condsets=len(condsets),
        candidate_ruleitems=2 * len(condsets),
        frequent_ruleitems=sorted(frequent),
        confident_rules=sorted(rules),
    )
    logger.info("oracle: %s", report.stage_counts)
    return report


def compare_pattern_sets(a: Iterable[SCRPattern], b: Iterable[SCRPattern]) -> PatternDiff:
    sa, sb = set(a), set(b)
    return PatternDiff(missing_from_a=sorted(sb - sa), missing_from_b=sorted(sa - sb))
