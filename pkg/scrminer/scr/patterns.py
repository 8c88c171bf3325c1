"""
SCR-pattern assembly from kept SCR-ruleitems.

A pattern is stored canonically: the rule for the first class comes first. Its invariant part
holds the items both antecedents share; each varying part holds the items
where the two antecedents differ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from scrminer.apriori.params import MiningParams
from scrminer.car.rules import ClassificationRule, rule_from_counts
from scrminer.dataset.schema import AttributeSchema
from scrminer.lattice.items import ClassCounts, Condset, SupportTable, attributes_of
from scrminer.scr.contrast import SCRRuleitem, is_contrast_pair_rules

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SCRPattern:
    rule1: ClassificationRule
    rule2: ClassificationRule
    counts1: ClassCounts
    counts2: ClassCounts
    alpha: Fraction
    invariant_part: Condset
    varying1: Condset
    varying2: Condset

    def key(self) -> Tuple[Condset, Condset]:
        return self.rule1.condset, self.rule2.condset

    def rules(self) -> Tuple[ClassificationRule, ClassificationRule]:
        return self.rule1, self.rule2

    def render(self, schema: AttributeSchema, style: str = "keyed", decimals: int = 4) -> str:
        def side(varying: Condset, rule: ClassificationRule) -> str:
            return (
                f"{schema.label_items(varying, style)} -> {schema.class_label(rule.label)} "
                f"(conf={float(rule.confidence):.{decimals}f}, supp={float(rule.support):.{decimals}f})"
            )

        return (
            f"{{{schema.label_items(self.invariant_part, style)} / {side(self.varying1, self.rule1)}"
            f" : {side(self.varying2, self.rule2)}}}"
        )


def pattern_from_rules(ra: ClassificationRule, counts_a: ClassCounts, rb: ClassificationRule,
                       counts_b: ClassCounts, schema: AttributeSchema, alpha: Fraction) -> Optional[SCRPattern]:
    """The canonical pattern for an alpha-contrasting pair, or None."""
    if not is_contrast_pair_rules(ra, rb, schema, alpha):
        return None
    if ra.label != 0:
        ra, rb, counts_a, counts_b = rb, ra, counts_b, counts_a
    pairs = list(zip(ra.condset, rb.condset))
    return SCRPattern(
        rule1=ra,
        rule2=rb,
        counts1=counts_a,
        counts2=counts_b,
        alpha=alpha,
        invariant_part=tuple(x for x, y in pairs if x == y),
        varying1=tuple(x for x, y in pairs if x != y),
        varying2=tuple(y for x, y in pairs if x != y),
    )


def make_pattern(cond_a: Condset, counts_a: ClassCounts, label_a: int, cond_b: Condset, counts_b: ClassCounts,
                 schema: AttributeSchema, alpha: Fraction, n_total: int, threshold: int) -> Optional[SCRPattern]:
    """Rule pair cond_a -> label_a, cond_b -> other class, when both are frequent and contrasting."""
    label_b = 1 - label_a
    if counts_a[label_a] < threshold or counts_b[label_b] < threshold:
        return None
    ra = rule_from_counts(cond_a, counts_a, label_a, n_total)
    rb = rule_from_counts(cond_b, counts_b, label_b, n_total)
    if ra is None or rb is None:
        return None
    return pattern_from_rules(ra, counts_a, rb, counts_b, schema, alpha)


def _as_table(kept: Union[Mapping[Condset, ClassCounts], Iterable[SCRRuleitem]]) -> SupportTable:
    if isinstance(kept, Mapping):
        return dict(kept)
    return {ri.condset: ri.counts for ri in kept}


def assemble_patterns(kept: Union[Mapping[Condset, ClassCounts], Iterable[SCRRuleitem]], schema: AttributeSchema,
                      params: MiningParams, n_total: int) -> List[SCRPattern]:
    table = _as_table(kept)
    threshold = params.count_threshold(n_total)

    # Only condsets with the same attributes and invariant values can pair up.
    groups: Dict[Tuple, List[Condset]] = {}
    for c in table:
        attrs = attributes_of(c)
        if len(attrs) < 2 or not any(schema.is_varying(a) for a in attrs):
            continue
        invariant = tuple(it for it in c if not schema.is_varying(it.attr))
        groups.setdefault((attrs, invariant), []).append(c)

    found: Set[SCRPattern] = set()
    for members in groups.values():
        for a, b in combinations(sorted(members), 2):
            for label_a in (0, 1):
                p = make_pattern(a, table[a], label_a, b, table[b], schema, params.min_conf, n_total, threshold)
                if p is not None:
                    found.add(p)
    patterns = sorted(found)
    logger.debug("assembled %d patterns from %d kept ruleitems", len(patterns), len(table))
    return patterns


def distinct_rules(patterns: Iterable[SCRPattern]) -> Set[ClassificationRule]:
    rules: Set[ClassificationRule] = set()
    for p in patterns:
        rules.update(p.rules())
    return rules
