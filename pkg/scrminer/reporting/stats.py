from __future__ import annotations

from typing import Dict, Iterable, Mapping, TextIO

import pandas as pd

from scrminer.apriori.params import MiningParams
from scrminer.dataset.loader import Dataset
from scrminer.lattice.search import RunLog

LEVEL_COLUMNS = ["algorithm", "level", "generated", "counted", "kept"]


def run_summary(run_log: RunLog, dataset: Dataset, params: MiningParams) -> Dict[str, str]:
    threshold = params.count_threshold(dataset.n_total)
    return {
        "algorithm": run_log.algorithm,
        "n_total": str(dataset.n_total),
        "n_class1": str(dataset.n_class[0]),
        "n_class2": str(dataset.n_class[1]),
        "min_supp": str(params.min_supp) if params.min_supp is not None else "",
        "min_supp_count": str(params.min_supp_count) if params.min_supp_count is not None else "",
        "count_threshold": str(threshold),
        "min_conf": str(params.min_conf),
        "levels": str(len(run_log.levels)),
        "candidates_counted": str(run_log.counted_total),
        "kept": str(run_log.kept_total),
        "rules": str(run_log.rule_count),
        "wall_time_sec": f"{run_log.wall_time_sec:.6f}",
    }


def levels_frame(run_logs: Iterable[RunLog]) -> pd.DataFrame:
    rows = [
        {"algorithm": log.algorithm, "level": lv.size, "generated": lv.generated, "counted": lv.counted, "kept": lv.kept}
        for log in run_logs
        for lv in log.levels
    ]
    return pd.DataFrame(rows, columns=LEVEL_COLUMNS)


def write_stats(stream: TextIO, summary: Mapping[str, str], run_logs: Iterable[RunLog]) -> None:
    """key<TAB>value lines, a blank line, then the per-level candidate table."""
    for key, value in summary.items():
        stream.write(f"{key}\t{value}\n")
    stream.write("\n")
    levels_frame(run_logs).to_csv(stream, sep="\t", index=False, lineterminator="\n")
