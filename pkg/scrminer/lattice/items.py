from __future__ import annotations

from typing import Dict, Iterable, NamedTuple, Tuple


class Item(NamedTuple):
    """One attribute=value assignment, ordered by (attribute index, value id)."""

    attr: int
    value: int


# Sorted by attribute index, at most one item per attribute.
Condset = Tuple[Item, ...]

# Per-class support counts (count for class 1, count for class 2).
ClassCounts = Tuple[int, int]

SupportTable = Dict[Condset, ClassCounts]


def make_condset(items: Iterable[Tuple[int, int]]) -> Condset:
    cs = tuple(sorted(Item(int(a), int(v)) for a, v in items))
    attrs = [it.attr for it in cs]
    if not cs:
        raise ValueError("condset must not be empty")
    if len(set(attrs)) != len(attrs):
        raise ValueError(f"condset has two values of one attribute: {cs}")
    return cs


def attributes_of(condset: Condset) -> Tuple[int, ...]:
    return tuple(it.attr for it in condset)
