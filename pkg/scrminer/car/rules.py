from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from scrminer.lattice.items import ClassCounts, Condset


@dataclass(frozen=True, order=True)
class Ruleitem:
    """condset<Att_Cl = label>; support counts records holding both, over all records."""

    condset: Condset
    label: int
    count: int
    support: Fraction


@dataclass(frozen=True, order=True)
class ClassificationRule:
    """condset -> class label, support taken from the ruleitem."""

    condset: Condset
    label: int
    support: Fraction
    confidence: Fraction
    count: int


def rule_from_counts(condset: Condset, counts: ClassCounts, label: int, n_total: int) -> Optional[ClassificationRule]:
    """Build condset -> label from per-class counts; None when the condset never occurs."""
    covered = counts[0] + counts[1]
    if covered == 0 or n_total == 0:
        return None
    return ClassificationRule(
        condset=condset,
        label=label,
        support=Fraction(counts[label], n_total),
        confidence=Fraction(counts[label], covered),
        count=counts[label],
    )
