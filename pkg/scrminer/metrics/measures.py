"""
Rule and pattern quality measures.

Two normalizations are in use and are named apart:

  support / confidence       whole-dataset ratios (count over n_total), the
                             denominator ruleitem frequency is judged by
  within_class_support       count_k over the size of class k, used by the
                             growth rate

GrowthRate(X, from, to) = supp_to(X) / supp_from(X), so a condset that is
common in class `to` and rare in class `from` has a large growth rate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from scrminer.apriori.params import Number, to_fraction
from scrminer.dataset.loader import Dataset
from scrminer.lattice.counting import count_supports
from scrminer.lattice.items import ClassCounts, Condset

logger = logging.getLogger(__name__)

FINITE = "finite"
INFINITE = "infinite"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class GrowthRateValue:
    value: Optional[Fraction]
    kind: str
    from_class: int
    to_class: int

    @classmethod
    def finite(cls, value: Fraction, from_class: int, to_class: int) -> "GrowthRateValue":
        return cls(value=Fraction(value), kind=FINITE, from_class=from_class, to_class=to_class)

    @classmethod
    def infinite(cls, from_class: int, to_class: int) -> "GrowthRateValue":
        return cls(value=None, kind=INFINITE, from_class=from_class, to_class=to_class)

    @classmethod
    def undefined(cls, from_class: int, to_class: int) -> "GrowthRateValue":
        return cls(value=None, kind=UNDEFINED, from_class=from_class, to_class=to_class)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == INFINITE

    @property
    def is_undefined(self) -> bool:
        return self.kind == UNDEFINED

    def at_least(self, threshold: Fraction) -> bool:
        if self.is_infinite:
            return True
        if self.is_undefined:
            return False
        return self.value >= threshold

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.is_undefined:
            return "undefined"
        return f"{float(self.value):.4g}"


def _counts_of(condset: Condset, dataset: Dataset) -> ClassCounts:
    return count_supports([condset], dataset)[condset]


def support(condset: Condset, dataset: Dataset) -> Fraction:
    """Whole-dataset support: records containing the condset over all records."""
    if dataset.n_total == 0:
        return Fraction(0)
    c = _counts_of(condset, dataset)
    return Fraction(c[0] + c[1], dataset.n_total)


def ruleitem_support(condset: Condset, label: int, dataset: Dataset) -> Fraction:
    if dataset.n_total == 0:
        return Fraction(0)
    return Fraction(_counts_of(condset, dataset)[label], dataset.n_total)


def confidence(condset: Condset, label: int, dataset: Dataset) -> Optional[Fraction]:
    """conf(condset -> label); None when the condset never occurs."""
    c = _counts_of(condset, dataset)
    covered = c[0] + c[1]
    if covered == 0:
        return None
    return Fraction(c[label], covered)


def within_class_support(count: int, class_size: int) -> Fraction:
    if class_size == 0:
        return Fraction(0)
    return Fraction(count, class_size)


def growth_rate_from_counts(counts: ClassCounts, n_class: Tuple[int, int], from_class: int = 1,
                            to_class: int = 0) -> GrowthRateValue:
    if from_class == to_class:
        raise ValueError("growth rate needs two different classes")
    s_to = within_class_support(counts[to_class], n_class[to_class])
    s_from = within_class_support(counts[from_class], n_class[from_class])
    if s_from == 0:
        if s_to == 0:
            return GrowthRateValue.undefined(from_class, to_class)
        return GrowthRateValue.infinite(from_class, to_class)
    return GrowthRateValue.finite(s_to / s_from, from_class, to_class)


def growth_rate(condset: Condset, dataset: Dataset, from_class: int = 1, to_class: int = 0) -> GrowthRateValue:
    """
    supp_to(X) / supp_from(X) over within-class supports.

    Note the argument order: the first class given is the denominator. The
    usual notation GrowthRate(X, Cl1, Cl2) puts its first class on top, so
    it is growth_rate(X, ds, from_class=1, to_class=0) here (the default).
    """
    return growth_rate_from_counts(_counts_of(condset, dataset), dataset.n_class, from_class, to_class)


def is_rho_emerging(condset: Condset, dataset: Dataset, rho: Number, from_class: int = 1,
                    to_class: int = 0) -> bool:
    rho = to_fraction(rho)
    if rho <= 1:
        raise ValueError(f"rho must be > 1, got {rho}")
    gr = growth_rate(condset, dataset, from_class, to_class)
    if gr.is_undefined:
        logger.warning("growth rate of %s is undefined (absent from both classes)", condset)
        return False
    return gr.at_least(rho)


def confidence_from_growth_rate(gr: Union[GrowthRateValue, Number], n_to: int, n_from: int) -> Fraction:
    """conf(X -> to) = GR * n_to / (GR * n_to + n_from), for a condset X that occurs at all."""
    if isinstance(gr, GrowthRateValue):
        if gr.is_undefined:
            raise ValueError("confidence is undefined for an undefined growth rate")
        if gr.is_infinite:
            return Fraction(1)
        gr = gr.value
    gr = to_fraction(gr)
    denom = gr * n_to + n_from
    if denom == 0:
        raise ValueError("confidence is undefined when both class sizes weigh zero")
    return gr * n_to / denom


def rho_for_confidence(alpha: Number, n_to: int, n_from: int) -> GrowthRateValue:
    """Growth-rate threshold equivalent to conf(X -> to) >= alpha at fixed class sizes."""
    alpha = to_fraction(alpha)
    if not (0 <= alpha <= 1):
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if n_to <= 0:
        raise ValueError("target class is empty")
    if alpha == 1:
        return GrowthRateValue.infinite(1, 0)
    return GrowthRateValue.finite(alpha * n_from / (n_to * (1 - alpha)), 1, 0)
