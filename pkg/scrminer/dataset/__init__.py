from scrminer.dataset.loader import Dataset, from_value_ids, load_dataset, to_frame, write_dataset
from scrminer.dataset.schema import (
    Attribute,
    AttributeRole,
    AttributeSchema,
    load_schema,
    load_schema_file,
    write_schema,
)

__all__ = [
    "Attribute",
    "AttributeRole",
    "AttributeSchema",
    "Dataset",
    "from_value_ids",
    "load_dataset",
    "load_schema",
    "load_schema_file",
    "to_frame",
    "write_dataset",
    "write_schema",
]
