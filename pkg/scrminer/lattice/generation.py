"""
Levelwise candidate generation: initial 1-condsets, prefix self-join and
downward-closure subset pruning.
"""

from __future__ import annotations

from itertools import groupby
from typing import AbstractSet, List, Sequence

from scrminer.dataset.schema import AttributeSchema
from scrminer.lattice.items import Condset, Item


def initial_candidates(schema: AttributeSchema, include_class: bool = False) -> List[Condset]:
    """One condset per (attribute, domain value) in canonical order.

    With include_class the class attribute contributes items too, which is how
    plain Apriori treats it.
    """
    out: List[Condset] = []
    for i, attr in enumerate(schema.attributes):
        if i == schema.class_index and not include_class:
            continue
        for v in range(len(attr.domain)):
            out.append((Item(i, v),))
    return out


def self_join(level: Sequence[Condset]) -> List[Condset]:
    """Join size-p condsets sharing their first p-1 items.

    Pairs whose last items belong to the same attribute are dropped: two values
    of one attribute never co-occur in a record.
    """
    out: List[Condset] = []
    ordered = sorted(set(level))
    for _, group in groupby(ordered, key=lambda c: c[:-1]):
        members = list(group)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if a[-1].attr == b[-1].attr:
                    continue
                out.append(a + (b[-1],))
    out.sort()
    return out


def subset_prune(candidates: Sequence[Condset], survivors: AbstractSet[Condset]) -> List[Condset]:
    """Keep a candidate iff every one-item-smaller subset is among the survivors."""
    kept: List[Condset] = []
    for c in candidates:
        if all(c[:i] + c[i + 1:] in survivors for i in range(len(c))):
            kept.append(c)
    return kept
