from __future__ import annotations

import logging
import statistics
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from scrminer.apriori.params import MiningParams
from scrminer.car.engine import mine_car_rules
from scrminer.datagen.generator import GenSpec, gen_planted, gen_random
from scrminer.dataset.loader import Dataset
from scrminer.lattice.search import RunLog
from scrminer.metrics.pruning import PruningStats, format_ratio, pruning_stats
from scrminer.scr.engine import mine_scr_patterns

logger = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "seed", "min_supp", "n_total", "threshold",
    "car_candidates", "car_condsets", "car_ruleitems", "car_rules", "car_levels", "car_time_sec",
    "scr_candidates", "scr_ruleitems", "scr_rules", "scr_levels", "scr_time_sec",
    "patterns", "ruleitem_ratio", "rule_ratio",
]


@dataclass(frozen=True)
class BenchSweep:
    seeds: Sequence[int]
    min_supps: Sequence[Fraction]
    gen: GenSpec
    min_conf: Fraction = Fraction(1, 2)


@dataclass(frozen=True)
class BenchRow:
    seed: int
    min_supp: Fraction
    n_total: int
    threshold: int
    patterns: int
    stats: PruningStats
    car_levels: str
    scr_levels: str
    car_time_sec: float
    scr_time_sec: float

    def as_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "min_supp": f"{float(self.min_supp):g}",
            "n_total": self.n_total,
            "threshold": self.threshold,
            "car_candidates": self.stats.car_candidates,
            "car_condsets": self.stats.car_condsets,
            "car_ruleitems": self.stats.car_ruleitems,
            "car_rules": self.stats.car_rules,
            "car_levels": self.car_levels,
            "car_time_sec": f"{self.car_time_sec:.4f}",
            "scr_candidates": self.stats.scr_candidates,
            "scr_ruleitems": self.stats.scr_ruleitems,
            "scr_rules": self.stats.scr_rules,
            "scr_levels": self.scr_levels,
            "scr_time_sec": f"{self.scr_time_sec:.4f}",
            "patterns": self.patterns,
            "ruleitem_ratio": format_ratio(self.stats.ruleitem_ratio),
            "rule_ratio": format_ratio(self.stats.rule_ratio),
        }


def _level_counts(run_log: RunLog) -> str:
    return ",".join(str(lv.counted) for lv in run_log.levels)


def generate(spec: GenSpec) -> Dataset:
    return gen_planted(spec) if spec.planted is not None else gen_random(spec)


class PruningBenchmark:
    """Runs CAR-Apriori and SCR-Apriori side by side over a seed x threshold sweep."""

    def __init__(self, threads: int = 1):
        self.threads = threads
        self.rows: List[BenchRow] = []

    def run_once(self, dataset: Dataset, seed: int, min_supp: Fraction, min_conf: Fraction) -> BenchRow:
        params = MiningParams.create(min_supp=min_supp, min_conf=min_conf)

        start = time.perf_counter()
        car, _ = mine_car_rules(dataset, params, threads=self.threads)
        car.run_log.wall_time_sec = time.perf_counter() - start

        start = time.perf_counter()
        scr, patterns = mine_scr_patterns(dataset, params, threads=self.threads)
        scr.run_log.wall_time_sec = time.perf_counter() - start

        missing = set(scr.kept) - set(car.condsets)
        if missing:
            logger.error("seed %d: %d kept SCR-ruleitems are not CAR condsets", seed, len(missing))

        row = BenchRow(
            seed=seed,
            min_supp=min_supp,
            n_total=dataset.n_total,
            threshold=params.count_threshold(dataset.n_total),
            patterns=len(patterns),
            stats=pruning_stats(scr.run_log, car.run_log),
            car_levels=_level_counts(car.run_log),
            scr_levels=_level_counts(scr.run_log),
            car_time_sec=car.run_log.wall_time_sec,
            scr_time_sec=scr.run_log.wall_time_sec,
        )
        self.rows.append(row)
        return row

    def run(self, sweep: BenchSweep) -> List[BenchRow]:
        out: List[BenchRow] = []
        for seed in sweep.seeds:
            dataset = generate(replace(sweep.gen, seed=seed))
            for min_supp in sweep.min_supps:
                out.append(self.run_once(dataset, seed, min_supp, sweep.min_conf))
        logger.info("bench: %d runs", len(out))
        return out

    def summary(self) -> Dict[str, Any]:
        ratios = [r.stats.ruleitem_ratio for r in self.rows if r.stats.ruleitem_ratio is not None]
        rule_ratios = [r.stats.rule_ratio for r in self.rows if r.stats.rule_ratio is not None]
        if not ratios:
            return {"runs": len(self.rows), "sufficient_data": False}
        return {
            "runs": len(self.rows),
            "sufficient_data": True,
            "mean_ruleitem_ratio": round(statistics.mean(float(x) for x in ratios), 4),
            "max_ruleitem_ratio": round(float(max(ratios)), 4),
            "strict_share": round(sum(1 for x in ratios if x < 1) / len(ratios), 4),
            "mean_rule_ratio": round(statistics.mean(float(x) for x in rule_ratios), 4) if rule_ratios else None,
        }

    def totals(self) -> Optional[PruningStats]:
        """All runs pooled into one PruningStats."""
        if not self.rows:
            return None
        return PruningStats(
            scr_ruleitems=sum(r.stats.scr_ruleitems for r in self.rows),
            car_ruleitems=sum(r.stats.car_ruleitems for r in self.rows),
            scr_rules=sum(r.stats.scr_rules for r in self.rows),
            car_rules=sum(r.stats.car_rules for r in self.rows),
            scr_candidates=sum(r.stats.scr_candidates for r in self.rows),
            car_candidates=sum(r.stats.car_candidates for r in self.rows),
            car_condsets=sum(r.stats.car_condsets for r in self.rows),
        )


def bench_frame(rows: Sequence[BenchRow]) -> pd.DataFrame:
    return pd.DataFrame([r.as_dict() for r in rows], columns=BENCH_COLUMNS)
