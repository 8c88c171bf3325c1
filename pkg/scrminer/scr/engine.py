"""
SCR-Apriori: the levelwise loop with chooseFrequentAndContrast as step 2.

Excluded condsets never join, so none of their supersets is generated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from scrminer.apriori.params import MiningParams
from scrminer.dataset.loader import Dataset
from scrminer.lattice.generation import initial_candidates
from scrminer.lattice.items import SupportTable
from scrminer.lattice.search import RunLog, levelwise_search
from scrminer.scr.filter import FilterDecision, choose_frequent_and_contrast
from scrminer.scr.patterns import SCRPattern, assemble_patterns, distinct_rules

logger = logging.getLogger(__name__)


@dataclass
class ScrResult:
    kept: SupportTable
    threshold: int
    run_log: RunLog
    decisions: List[FilterDecision] = field(default_factory=list)

    def branch_counts(self) -> dict:
        out = {b: 0 for b in range(1, 6)}
        for d in self.decisions:
            out[d.branch] += 1
        return out


def mine_scr_ruleitems(dataset: Dataset, params: MiningParams, threads: int = 1,
                       run_log: Optional[RunLog] = None) -> ScrResult:
    run_log = run_log if run_log is not None else RunLog(algorithm="scr")
    threshold = params.count_threshold(dataset.n_total)
    decisions: List[FilterDecision] = []

    def choose(table):
        level_decisions = choose_frequent_and_contrast(table, dataset.schema, (threshold, threshold))
        decisions.extend(level_decisions)
        return [d.ruleitem.condset for d in level_decisions if d.keep]

    kept = levelwise_search(dataset, initial_candidates(dataset.schema), choose, run_log, threads=threads)
    result = ScrResult(kept=kept, threshold=threshold, run_log=run_log, decisions=decisions)
    logger.info("scr: kept %d SCR-ruleitems of %d counted (threshold %d), branches %s",
                len(kept), run_log.counted_total, threshold, result.branch_counts())
    return result


def mine_scr_patterns(dataset: Dataset, params: MiningParams, threads: int = 1) -> Tuple[ScrResult, List[SCRPattern]]:
    """Full pipeline: mine kept SCR-ruleitems, then assemble alpha-contrasting pairs."""
    result = mine_scr_ruleitems(dataset, params, threads=threads)
    patterns = assemble_patterns(result.kept, dataset.schema, params, dataset.n_total)
    result.run_log.rule_count = len(distinct_rules(patterns))
    logger.info("scr: %d patterns over %d distinct rules", len(patterns), result.run_log.rule_count)
    return result, patterns
