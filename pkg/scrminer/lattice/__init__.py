from scrminer.lattice.counting import count_supports
from scrminer.lattice.generation import initial_candidates, self_join, subset_prune
from scrminer.lattice.items import ClassCounts, Condset, Item, SupportTable, attributes_of, make_condset
from scrminer.lattice.search import LevelStats, RunLog, levelwise_search

__all__ = [
    "ClassCounts",
    "Condset",
    "Item",
    "LevelStats",
    "RunLog",
    "SupportTable",
    "attributes_of",
    "count_supports",
    "initial_candidates",
    "levelwise_search",
    "make_condset",
    "self_join",
    "subset_prune",
]
