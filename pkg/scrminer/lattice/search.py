"""
Levelwise (width-first) search skeleton shared by Apriori, CAR-Apriori and
SCR-Apriori:

  1. start from the 1-condsets
  2. count the level and keep what the miner's chooser accepts
  3. stop when nothing is kept
  4. add the kept condsets to the result
  5. self-join the kept level, prune by downward closure, repeat from 2

Only step 2 differs between the miners.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence

from scrminer.dataset.loader import Dataset
from scrminer.lattice.counting import count_supports
from scrminer.lattice.generation import self_join, subset_prune
from scrminer.lattice.items import Condset, SupportTable

logger = logging.getLogger(__name__)

Chooser = Callable[[SupportTable], Iterable[Condset]]


@dataclass(frozen=True)
class LevelStats:
    size: int
    generated: int
    counted: int
    kept: int


@dataclass
class RunLog:
    algorithm: str
    levels: List[LevelStats] = field(default_factory=list)
    rule_count: int = 0
    wall_time_sec: float = 0.0
    # set when a kept condset can stand for more than one ruleitem (CAR keeps one per frequent class)
    ruleitem_count: Optional[int] = None

    @property
    def counted_total(self) -> int:
        return sum(lv.counted for lv in self.levels)

    @property
    def kept_total(self) -> int:
        return sum(lv.kept for lv in self.levels)

    @property
    def ruleitems_total(self) -> int:
        return self.kept_total if self.ruleitem_count is None else self.ruleitem_count


def levelwise_search(dataset: Dataset, first_level: Sequence[Condset], choose: Chooser,
                     run_log: RunLog, threads: int = 1) -> SupportTable:
    """Run the levelwise loop; returns every kept condset with its class counts."""
    result: SupportTable = {}
    level = sorted(first_level)
    generated = len(level)
    size = 1
    while level:
        table = count_supports(level, dataset, threads=threads)
        kept = sorted(set(choose(table)))
        run_log.levels.append(LevelStats(size=size, generated=generated, counted=len(level), kept=len(kept)))
        logger.debug("%s level %d: generated=%d counted=%d kept=%d",
                     run_log.algorithm, size, generated, len(level), len(kept))
        if not kept:
            break
        for c in kept:
            result[c] = table[c]
        joined = self_join(kept)
        generated = len(joined)
        level = subset_prune(joined, set(kept))
        size += 1
    return result
