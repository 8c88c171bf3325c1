"""
Contrast-pair relations.

Two levels exist. Between SCR-ruleitems the relation is relaxed: a single
attribute is enough and no varying value needs to be shared. Between
classification rules all seven alpha-contrasting conditions must hold; they
are exposed one by one through contrast_conditions().
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from scrminer.car.rules import ClassificationRule
from scrminer.dataset.schema import AttributeSchema
from scrminer.lattice.items import ClassCounts, Condset, attributes_of


@dataclass(frozen=True, order=True)
class SCRRuleitem:
    """A condset with its support number in every class."""

    condset: Condset
    counts: ClassCounts


def is_contrast_pair_ruleitems(a: SCRRuleitem, b: SCRRuleitem, schema: AttributeSchema) -> bool:
    if attributes_of(a.condset) != attributes_of(b.condset):
        return False
    varying_differs = False
    for x, y in zip(a.condset, b.condset):
        if x.value == y.value:
            continue
        if not schema.is_varying(x.attr):
            return False
        varying_differs = True
    return varying_differs


CONDITIONS = (
    "confident",
    "different_classes",
    "same_attributes",
    "two_attributes_one_varying",
    "invariant_values_equal",
    "shared_varying_without_invariant",
    "varying_value_differs",
)


def contrast_conditions(r1: ClassificationRule, r2: ClassificationRule, schema: AttributeSchema,
                        alpha: Fraction) -> Dict[str, bool]:
    attrs = attributes_of(r1.condset)
    same_attrs = attrs == attributes_of(r2.condset)
    pairs = list(zip(r1.condset, r2.condset)) if same_attrs else []
    invariant = [(x, y) for x, y in pairs if not schema.is_varying(x.attr)]
    varying = [(x, y) for x, y in pairs if schema.is_varying(x.attr)]
    return {
        "confident": r1.confidence >= alpha and r2.confidence >= alpha,
        "different_classes": r1.label != r2.label,
        "same_attributes": same_attrs,
        "two_attributes_one_varying": len(attrs) >= 2 and any(schema.is_varying(a) for a in attrs),
        "invariant_values_equal": same_attrs and all(x == y for x, y in invariant),
        "shared_varying_without_invariant": same_attrs and (bool(invariant) or any(x == y for x, y in varying)),
        "varying_value_differs": any(x != y for x, y in varying),
    }


def is_contrast_pair_rules(r1: ClassificationRule, r2: ClassificationRule, schema: AttributeSchema,
                           alpha: Fraction) -> bool:
    return all(contrast_conditions(r1, r2, schema, alpha).values())
