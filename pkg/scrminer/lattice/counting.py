"""
Class-wise support counting.

Candidates are grouped by attribute set; each group is counted with one scan
over the record rows (mixed-radix key per row, histogram per class). Row
ranges may be spread over worker threads; partial histograms are merged by
integer addition, so the result does not depend on the thread count.
"""

from __future__ import annotations

import logging
from math import prod
from typing import Dict, List, Sequence, Tuple

import numpy as np

from scrminer.dataset.loader import Dataset
from scrminer.lattice.items import Condset, SupportTable, attributes_of
from scrminer.utils.threading import ThreadPoolManager

logger = logging.getLogger(__name__)

# Above this many value combinations a group falls back to per-candidate masks.
DENSE_KEY_LIMIT = 1 << 20

Group = Tuple[Tuple[int, ...], List[Condset]]


def _group_by_attributes(candidates: Sequence[Condset]) -> List[Group]:
    groups: Dict[Tuple[int, ...], List[Condset]] = {}
    for c in candidates:
        groups.setdefault(attributes_of(c), []).append(c)
    return sorted(groups.items())


def _row_ranges(n: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, n))
    step = -(-n // parts) if n else 0
    if step == 0:
        return [(0, 0)]
    return [(s, min(s + step, n)) for s in range(0, n, step)]


def _count_group(records: np.ndarray, classes: np.ndarray, domain_sizes: Tuple[int, ...],
                 attrs: Tuple[int, ...], members: List[Condset]) -> np.ndarray:
    out = np.zeros((len(members), 2), dtype=np.int64)
    if records.shape[0] == 0:
        return out
    cols = records[:, list(attrs)].astype(np.int64)
    sizes = [domain_sizes[a] for a in attrs]
    space = prod(sizes)
    if space <= DENSE_KEY_LIMIT:
        mult = np.ones(len(attrs), dtype=np.int64)
        for j in range(len(attrs) - 2, -1, -1):
            mult[j] = mult[j + 1] * sizes[j + 1]
        keys = cols @ mult
        hist = np.bincount(keys * 2 + classes, minlength=space * 2).reshape(space, 2)
        for i, c in enumerate(members):
            out[i] = hist[sum(it.value * int(m) for it, m in zip(c, mult))]
        return out
    for i, c in enumerate(members):
        values = np.asarray([it.value for it in c], dtype=np.int64)
        mask = np.all(cols == values, axis=1)
        out[i] = np.bincount(classes[mask], minlength=2)[:2]
    return out


def count_supports(candidates: Sequence[Condset], dataset: Dataset, threads: int = 1) -> SupportTable:
    """Exact per-class containment counts for every candidate."""
    if not candidates:
        return {}
    groups = _group_by_attributes(candidates)
    domain_sizes = tuple(len(a.domain) for a in dataset.schema.attributes)
    records = dataset.records
    classes = dataset.classes.astype(np.int64)

    def _count_range(bounds: Tuple[int, int]) -> List[np.ndarray]:
        lo, hi = bounds
        return [
            _count_group(records[lo:hi], classes[lo:hi], domain_sizes, attrs, members)
            for attrs, members in groups
        ]

    ranges = _row_ranges(dataset.n_total, threads)
    with ThreadPoolManager(max_workers=min(threads, len(ranges))) as pool:
        partials = pool.map(_count_range, ranges)

    table: SupportTable = {}
    for g, (_, members) in enumerate(groups):
        merged = sum(p[g] for p in partials)
        for i, c in enumerate(members):
            table[c] = (int(merged[i, 0]), int(merged[i, 1]))
    logger.debug("counted %d candidates in %d attribute groups over %d row ranges",
                 len(candidates), len(groups), len(ranges))
    return table
