"""
Dataset builders for the test suite.

The two worked examples are rebuilt from the per-class support vectors the
walkthrough cites; every condset count quoted there (A1C1<4,5>, A2<5,0>,
C1<6,5>, C2<4,1>, A1C2<1,1>, B2C2<0,0>, A2B1C2<3,0> in the first, A1B1<2,1>,
A1B2<3,1>, B1C1<4,1>, B2C2<1,4> in the second) holds on these records.
"""

from __future__ import annotations

import io
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from scrminer.apriori.params import MiningParams
from scrminer.dataset.loader import Dataset, from_value_ids, load_dataset
from scrminer.dataset.schema import Attribute, AttributeRole, AttributeSchema, load_schema
from scrminer.lattice.items import Condset, make_condset

EXAMPLE_SCHEMA = """\
# first attribute invariant, the rest varying
A:invariant:1,2
B:varying:1,2
C:varying:1,2
Cl:class:Cl1,Cl2
"""

# (A, B, C) values -> (records in Cl1, records in Cl2)
EXAMPLE1_BLOCKS: Dict[Tuple[str, str, str], Tuple[int, int]] = {
    ("1", "1", "1"): (1, 2),
    ("1", "2", "1"): (3, 3),
    ("1", "1", "2"): (1, 1),
    ("2", "2", "1"): (2, 0),
    ("2", "1", "2"): (3, 0),
}

EXAMPLE2_BLOCKS: Dict[Tuple[str, str, str], Tuple[int, int]] = {
    ("1", "1", "1"): (2, 1),
    ("1", "2", "1"): (3, 1),
    ("2", "1", "1"): (2, 0),
    ("2", "2", "2"): (1, 4),
}


def example_schema() -> AttributeSchema:
    return load_schema(EXAMPLE_SCHEMA)


def blocks_csv(blocks: Dict[Tuple[str, str, str], Tuple[int, int]]) -> str:
    lines = ["A,B,C,Cl"]
    for (a, b, c), (n1, n2) in blocks.items():
        lines += [f"{a},{b},{c},Cl1"] * n1
        lines += [f"{a},{b},{c},Cl2"] * n2
    return "\n".join(lines) + "\n"


def example1() -> Dataset:
    return load_dataset(io.StringIO(blocks_csv(EXAMPLE1_BLOCKS)), example_schema())


def example2() -> Dataset:
    return load_dataset(io.StringIO(blocks_csv(EXAMPLE2_BLOCKS)), example_schema())


def cs(schema: AttributeSchema, text: str) -> Condset:
    """Compact notation to a condset: "A1C1" -> ((0, 0), (2, 0))."""
    items = []
    i = 0
    while i < len(text):
        name = text[i]
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        idx = schema.index_of(name)
        items.append((idx, schema.value_id(idx, text[i + 1:j])))
        i = j
    return make_condset(items)


def random_case(seed: int) -> Tuple[Dataset, MiningParams]:
    """A small random two-class dataset plus thresholds, fully determined by seed."""
    rng = np.random.Generator(np.random.PCG64(seed))
    n_attrs = int(rng.integers(3, 8))
    n_values = [int(v) for v in rng.integers(2, 4, size=n_attrs)]
    roles = [AttributeRole.VARYING if rng.random() < 0.5 else AttributeRole.INVARIANT for _ in range(n_attrs)]
    if AttributeRole.VARYING not in roles:
        roles[int(rng.integers(0, n_attrs))] = AttributeRole.VARYING
    n_records = int(rng.integers(20, 301))
    return random_dataset(rng, n_values, roles, n_records), MiningParams.create(
        min_supp=Fraction(int(rng.choice([5, 10, 15, 20, 25, 30])), 100),
        min_conf=Fraction(int(rng.choice([5, 6, 7, 8, 9])), 10),
    )


def random_dataset(rng: np.random.Generator, n_values: List[int], roles: List[AttributeRole],
                   n_records: int) -> Dataset:
    attrs = [
        Attribute(name=f"X{i}", role=role, domain=tuple(str(v) for v in range(1, k + 1)))
        for i, (k, role) in enumerate(zip(n_values, roles))
    ]
    attrs.append(Attribute(name="Cl", role=AttributeRole.CLASS, domain=("Cl1", "Cl2")))
    # Skewed value distributions give both frequent and rare condsets.
    columns = []
    for k in n_values:
        p = rng.dirichlet(np.ones(k))
        columns.append(rng.choice(k, size=n_records, p=p))
    columns.append(rng.integers(0, 2, size=n_records))
    records = np.column_stack(columns) if n_records else np.zeros((0, len(attrs)), dtype=np.int64)
    return from_value_ids(AttributeSchema(tuple(attrs)), records)


def naive_counts(dataset: Dataset, condset: Condset) -> Tuple[int, int]:
    out = [0, 0]
    cls_idx = dataset.schema.class_index
    for row in dataset.records:
        if all(row[it.attr] == it.value for it in condset):
            out[int(row[cls_idx])] += 1
    return out[0], out[1]
