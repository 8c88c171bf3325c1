"""
chooseFrequentAndContrast: step 2 of SCR-Apriori.

Decisions for a level are taken together against the level as counted; a
ruleitem's contrast pairs are looked up among the candidates of that level
only.

  branch 1  frequent on both classes                         -> keep
  branch 2  frequent on neither class                        -> exclude
  branch 3  frequent on one class, all attributes invariant  -> exclude
  branch 4  frequent on one class, no contrast pair frequent
            on the other class                               -> exclude
  branch 5  frequent on one class, some contrast pair
            frequent on the other class                      -> keep
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from scrminer.dataset.schema import AttributeSchema
from scrminer.lattice.items import Condset, SupportTable, attributes_of
from scrminer.scr.contrast import SCRRuleitem

logger = logging.getLogger(__name__)

KEEP_BRANCHES = frozenset({1, 5})


@dataclass(frozen=True)
class FilterDecision:
    ruleitem: SCRRuleitem
    keep: bool
    branch: int

    @property
    def verdict(self) -> str:
        return "keep" if self.keep else "exclude"


def _contrast_key(condset: Condset, schema: AttributeSchema) -> Tuple:
    # Contrast pairs share the attribute set and every invariant value.
    invariant = tuple(it for it in condset if not schema.is_varying(it.attr))
    return attributes_of(condset), invariant


def choose_frequent_and_contrast(level: SupportTable, schema: AttributeSchema,
                                 thresholds: Tuple[int, int]) -> List[FilterDecision]:
    frequent = {
        c: (counts[0] >= thresholds[0], counts[1] >= thresholds[1])
        for c, counts in level.items()
    }

    frequent_in_group: Dict[Tuple, List[int]] = {}
    for c, (f0, f1) in frequent.items():
        tally = frequent_in_group.setdefault(_contrast_key(c, schema), [0, 0])
        tally[0] += f0
        tally[1] += f1

    decisions: List[FilterDecision] = []
    for c in sorted(level):
        f0, f1 = frequent[c]
        if f0 and f1:
            branch = 1
        elif not f0 and not f1:
            branch = 2
        elif not any(schema.is_varying(it.attr) for it in c):
            branch = 3
        else:
            # c is not frequent on the opposite class, so any tallied member differs from c
            # in a varying value and is a contrast pair.
            opposite = 1 if f0 else 0
            branch = 5 if frequent_in_group[_contrast_key(c, schema)][opposite] > 0 else 4
        decisions.append(FilterDecision(
            ruleitem=SCRRuleitem(condset=c, counts=level[c]),
            keep=branch in KEEP_BRANCHES,
            branch=branch,
        ))
    return decisions
