"""
Dataset Loader

Reads class-labeled categorical CSV files into an immutable value-id matrix.
Every column is categorical text; value-ids follow the schema's declared
domain first and then first appearance in the file.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from scrminer.dataset.schema import AttributeSchema
from scrminer.errors import DatasetError, SchemaError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable record matrix: one column per schema attribute, class column included."""

    schema: AttributeSchema
    records: np.ndarray
    n_class: Tuple[int, int]

    @property
    def n_total(self) -> int:
        return int(self.records.shape[0])

    @property
    def classes(self) -> np.ndarray:
        return self.records[:, self.schema.class_index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.schema == other.schema
            and self.n_class == other.n_class
            and np.array_equal(self.records, other.records)
        )

    def __hash__(self) -> int:
        return hash((self.schema, self.n_class, self.records.tobytes()))


def from_value_ids(schema: AttributeSchema, records: np.ndarray) -> Dataset:
    """Wrap a value-id matrix whose schema domains are already complete."""
    try:
        cls_idx = schema.class_index
    except SchemaError as e:
        raise DatasetError(str(e)) from e
    records = np.asarray(records, dtype=np.int32)
    if records.ndim != 2 or records.shape[1] != len(schema):
        raise DatasetError(f"record matrix must have {len(schema)} columns, got shape {records.shape}")
    for j, attr in enumerate(schema.attributes):
        col = records[:, j]
        if col.size and (col.min() < 0 or col.max() >= len(attr.domain)):
            raise DatasetError(f"column {attr.name!r} holds value-ids outside its domain")
    if len(schema.attributes[cls_idx].domain) != 2:
        raise DatasetError(
            f"class attribute {schema.attributes[cls_idx].name!r} has "
            f"{len(schema.attributes[cls_idx].domain)} distinct values; exactly two are required "
            "(binarize the class column)"
        )

    records = records.copy()
    records.setflags(write=False)
    counts = np.bincount(records[:, cls_idx], minlength=2)
    return Dataset(schema=schema, records=records, n_class=(int(counts[0]), int(counts[1])))


def from_frame(frame: pd.DataFrame, schema: AttributeSchema) -> Dataset:
    names = schema.names
    cols = [str(c) for c in frame.columns]
    missing = [n for n in names if n not in cols]
    extra = [c for c in cols if c not in names]
    if missing or extra or len(cols) != len(names):
        raise DatasetError(f"column mismatch: missing {missing}, unexpected {extra}")

    frame = frame[names].fillna("").astype(str)
    blank = np.char.strip(frame.to_numpy(dtype=str).reshape(len(frame), len(names))) == ""
    if blank.any():
        row, col = np.argwhere(blank)[0]
        raise DatasetError(
            f"missing value at row {row + 1} (line {row + 2}), column {names[col]!r}; "
            "records with missing values are rejected"
        )

    domains: List[List[str]] = []
    columns: List[np.ndarray] = []
    for attr in schema.attributes:
        values = frame[attr.name]
        domain = list(attr.domain)
        known = set(domain)
        for v in pd.unique(values):
            if v not in known:
                domain.append(v)
                known.add(v)
        domains.append(domain)
        columns.append(pd.Categorical(values, categories=domain).codes.astype(np.int32))

    cls_idx = schema.class_index
    if len(domains[cls_idx]) != 2:
        raise DatasetError(
            f"class attribute {names[cls_idx]!r} has {len(domains[cls_idx])} distinct values "
            f"{domains[cls_idx]}; exactly two are required (binarize the class column)"
        )

    records = np.column_stack(columns) if columns else np.zeros((len(frame), 0), dtype=np.int32)
    ds = from_value_ids(schema.with_domains(domains), records.reshape(len(frame), len(names)))
    logger.debug("loaded %d records, class counts %s", ds.n_total, ds.n_class)
    return ds


def load_dataset(csv_source: Union[str, TextIO], schema: AttributeSchema) -> Dataset:
    try:
        frame = pd.read_csv(csv_source, dtype=str, keep_default_na=False, na_filter=False, encoding="utf-8")
    except pd.errors.EmptyDataError as e:
        raise DatasetError("empty CSV: a header row is required") from e
    except pd.errors.ParserError as e:
        raise DatasetError(f"malformed CSV: {e}") from e
    return from_frame(frame, schema)


def to_frame(dataset: Dataset) -> pd.DataFrame:
    data = {}
    for j, attr in enumerate(dataset.schema.attributes):
        domain = np.asarray(attr.domain, dtype=object)
        data[attr.name] = domain[dataset.records[:, j]] if dataset.n_total else np.asarray([], dtype=object)
    return pd.DataFrame(data, columns=dataset.schema.names)


def write_dataset(dataset: Dataset, stream: TextIO) -> None:
    to_frame(dataset).to_csv(stream, index=False, lineterminator="\n")
