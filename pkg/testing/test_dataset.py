import io
import logging

import numpy as np
import pytest

from scrminer.dataset.loader import load_dataset, write_dataset
from scrminer.dataset.schema import AttributeRole, load_schema, schema_summary, write_schema
from scrminer.errors import DatasetError, SchemaError
from scrminer.lattice.counting import count_supports
from testing.fixtures import EXAMPLE1_BLOCKS, blocks_csv, cs, example_schema


def test_schema_roles_follow_declaration(schema):
    assert schema_summary(schema) == {"invariant": 1, "varying": 2, "class": 1}
    assert schema.names == ["A", "B", "C", "Cl"]
    assert schema.role(0) is AttributeRole.INVARIANT
    assert schema.is_varying(1) and schema.is_varying(2)
    assert schema.class_index == 3


def test_schema_without_domains():
    schema = load_schema("A:invariant\nB:varying\nC:varying\nCl:class\n")
    assert schema_summary(schema) == {"invariant": 1, "varying": 2, "class": 1}
    assert all(a.domain == () for a in schema.attributes)


@pytest.mark.parametrize("text, message", [
    ("A:varying\nCl:class\nK:class\n", "multiple class attributes"),
    ("", "no class attribute"),
    ("# only a comment\n", "no class attribute"),
    ("A:varying\nA:invariant\nCl:class\n", "duplicate attribute"),
    ("A:mutable\nCl:class\n", "unknown role"),
    ("A\nCl:class\n", "expected 'name:role"),
    ("A:varying\nCl:class:x,y,z\n", "only two classes"),
])
def test_schema_errors(text, message):
    with pytest.raises(SchemaError, match=message):
        load_schema(text)


def test_schema_without_varying_attribute_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="scrminer"):
        schema = load_schema("A:invariant\nCl:class\n")
    assert len(schema) == 2
    assert "no varying attribute" in caplog.text


def test_write_schema_round_trip(schema):
    buf = io.StringIO()
    write_schema(schema, buf)
    assert load_schema(buf.getvalue()) == schema


def test_item_labels(schema):
    items = [(0, 1), (2, 0), (3, 1)]
    assert schema.label_items(items) == "A=2, C=1, Cl=Cl2"
    assert schema.label_items(items, "compact") == "A2C1Cl2"
    assert schema.label_item((3, 0), "compact") == "Cl1"


def test_quoted_domain_values():
    schema = load_schema('time:varying:"10:30", "11:00" # slots\n"a,b":invariant\nCl:class:"x ""y""",z\n')
    assert schema.names == ["time", "a,b", "Cl"]
    assert schema.attributes[0].domain == ("10:30", "11:00")
    assert schema.attributes[2].domain == ('x "y"', "z")


@pytest.mark.parametrize("line", ['A:varying:"1', 'A:varying:"1"x', 'A:varying:1"2"'])
def test_bad_quoting(line):
    with pytest.raises(SchemaError, match="line 1"):
        load_schema(line + "\nCl:class\n")


def test_dataset_round_trip_with_separator_values():
    schema = load_schema("A:invariant\nB:varying\nCl:class\n")
    text = 'A,B,Cl\n"x,y",10:30,#1\nz,11:00,"p,q"\n"x,y", pad ,#1\n'
    ds = load_dataset(io.StringIO(text), schema)
    schema_buf, data_buf = io.StringIO(), io.StringIO()
    write_schema(ds.schema, schema_buf)
    write_dataset(ds, data_buf)
    again = load_dataset(io.StringIO(data_buf.getvalue()), load_schema(schema_buf.getvalue()))
    assert again == ds
    assert again.schema.attributes[0].domain == ("x,y", "z")
    assert again.schema.attributes[1].domain == ("10:30", "11:00", " pad ")
    assert again.schema.attributes[2].domain == ("#1", "p,q")


def test_load_example_one(ex1):
    assert ex1.n_total == 16
    assert ex1.n_class == (10, 6)


def test_loaded_records_are_read_only(ex1):
    assert not ex1.records.flags.writeable
    with pytest.raises(ValueError):
        ex1.records[0, 0] = 1


def test_any_column_order():
    text = blocks_csv(EXAMPLE1_BLOCKS)
    rows = [line.split(",") for line in text.strip().splitlines()]
    shuffled = "\n".join(",".join([r[3], r[2], r[0], r[1]]) for r in rows) + "\n"
    a = load_dataset(io.StringIO(text), example_schema())
    b = load_dataset(io.StringIO(shuffled), example_schema())
    assert a == b


def test_value_ids_follow_first_appearance():
    schema = load_schema("A:invariant\nB:varying\nCl:class\n")
    ds = load_dataset(io.StringIO("A,B,Cl\nx,q,no\ny,q,yes\nx,p,no\n"), schema)
    assert ds.schema.attributes[0].domain == ("x", "y")
    assert ds.schema.attributes[1].domain == ("q", "p")
    assert ds.schema.attributes[2].domain == ("no", "yes")
    assert ds.records[:, 0].tolist() == [0, 1, 0]
    assert ds.n_class == (2, 1)


def test_declared_domain_extended_by_data():
    schema = load_schema("A:varying:1,2\nCl:class:Cl1,Cl2\n")
    ds = load_dataset(io.StringIO("A,Cl\n3,Cl2\n1,Cl1\n"), schema)
    assert ds.schema.attributes[0].domain == ("1", "2", "3")
    assert ds.records[:, 0].tolist() == [2, 0]


def test_three_classes_rejected():
    schema = load_schema("A:varying\nCl:class\n")
    with pytest.raises(DatasetError, match="exactly two"):
        load_dataset(io.StringIO("A,Cl\n1,x\n2,y\n1,z\n"), schema)


def test_single_observed_class_without_declaration_rejected():
    schema = load_schema("A:varying\nCl:class\n")
    with pytest.raises(DatasetError, match="exactly two"):
        load_dataset(io.StringIO("A,Cl\n1,x\n2,x\n"), schema)


def test_blank_cell_names_row_and_column(schema):
    csv = "A,B,C,Cl\n1,1,1,Cl1\n1,,1,Cl2\n"
    with pytest.raises(DatasetError, match=r"row 2 \(line 3\), column 'B'"):
        load_dataset(io.StringIO(csv), schema)


def test_column_mismatch(schema):
    with pytest.raises(DatasetError, match="column mismatch"):
        load_dataset(io.StringIO("A,B,Cl\n1,1,Cl1\n"), schema)


def test_empty_csv_rejected(schema):
    with pytest.raises(DatasetError, match="header"):
        load_dataset(io.StringIO(""), schema)


def test_header_only_csv_is_empty_dataset(schema):
    ds = load_dataset(io.StringIO("A,B,C,Cl\n"), schema)
    assert ds.n_total == 0
    assert ds.n_class == (0, 0)


def test_write_and_reload_is_identical(ex1, ex2):
    for ds in (ex1, ex2):
        buf = io.StringIO()
        write_dataset(ds, buf)
        again = load_dataset(io.StringIO(buf.getvalue()), ds.schema)
        assert again == ds
        assert np.array_equal(again.records, ds.records)
        assert again.n_class == ds.n_class


def test_class_counts_sum_to_whole_support(ex1, schema):
    cands = [cs(schema, t) for t in ("A1", "B2", "A1C1", "B1C2", "A1B2C1")]
    table = count_supports(cands, ex1)
    for c in cands:
        whole = sum(1 for row in ex1.records if all(row[it.attr] == it.value for it in c))
        assert table[c][0] + table[c][1] == whole
