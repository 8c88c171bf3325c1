import io
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from scrminer.dataset.loader import load_dataset
from scrminer.dataset.schema import load_schema
from scrminer.lattice import counting
from scrminer.lattice.counting import count_supports
from scrminer.lattice.generation import initial_candidates, self_join, subset_prune
from scrminer.lattice.items import make_condset
from scrminer.oracle.engine import enumerate_all_condsets
from testing.fixtures import cs, naive_counts, random_case


def test_initial_candidates_example_schema(schema):
    out = initial_candidates(schema)
    assert len(out) == 6
    assert out == [cs(schema, t) for t in ("A1", "A2", "B1", "B2", "C1", "C2")]


def test_initial_candidates_class_only_schema():
    assert initial_candidates(load_schema("Cl:class:y,n\n")) == []


def test_initial_candidates_two_by_three():
    schema = load_schema("A:varying:1,2,3\nB:invariant:1,2,3\nCl:class:y,n\n")
    assert len(initial_candidates(schema)) == 6


def test_initial_candidates_with_class(schema):
    out = initial_candidates(schema, include_class=True)
    assert len(out) == 8
    assert out[-1] == make_condset([(3, 1)])


@pytest.mark.parametrize("text, expected", [
    ("A1C1", (4, 5)),
    ("A2", (5, 0)),
    ("C1", (6, 5)),
    ("C2", (4, 1)),
    ("A1C2", (1, 1)),
    ("B2C2", (0, 0)),
    ("A2B1C2", (3, 0)),
    ("A1", (5, 6)),
])
def test_count_supports_example_one(ex1, schema, text, expected):
    c = cs(schema, text)
    assert count_supports([c], ex1)[c] == expected


@pytest.mark.parametrize("text, expected", [
    ("A1B1", (2, 1)),
    ("A1B2", (3, 1)),
    ("B1C1", (4, 1)),
    ("B2C2", (1, 4)),
    ("A2B1C1", (2, 0)),
    ("A2B2C2", (1, 4)),
])
def test_count_supports_example_two(ex2, schema, text, expected):
    c = cs(schema, text)
    assert count_supports([c], ex2)[c] == expected


def test_count_supports_empty_dataset(schema):
    empty = load_dataset(io.StringIO("A,B,C,Cl\n"), schema)
    cands = [cs(schema, "A1"), cs(schema, "B2C1")]
    assert count_supports(cands, empty) == {c: (0, 0) for c in cands}
    assert count_supports(cands, empty, threads=4) == {c: (0, 0) for c in cands}


def test_count_supports_no_candidates(ex1):
    assert count_supports([], ex1) == {}


def test_self_join_examples(schema):
    assert self_join([cs(schema, "A1B1"), cs(schema, "A1C1")]) == [cs(schema, "A1B1C1")]
    assert self_join([cs(schema, "A1B1"), cs(schema, "A1B2")]) == []


def test_self_join_level_one(schema):
    joined = self_join(initial_candidates(schema))
    assert len(joined) == 12
    assert joined == sorted(set(joined))
    assert all(len({it.attr for it in c}) == 2 for c in joined)


def test_subset_prune_examples(schema):
    cand = cs(schema, "A1B1C1")
    survivors = {cs(schema, t) for t in ("A1B1", "A1C1", "B1C1")}
    assert subset_prune([cand], survivors) == [cand]
    assert subset_prune([cand], survivors - {cs(schema, "B1C1")}) == []
    assert subset_prune([cand], set()) == []
    # {A2} excluded at level 1 -> no 2-condset containing A2 survives, so A2B1C2 never appears
    level2 = {cs(schema, t) for t in ("B1C2",)}
    assert subset_prune([cs(schema, "A2B1C2")], level2) == []
    assert subset_prune([cs(schema, "A2")], set()) == []


def test_dense_and_mask_counting_agree(ex1, schema, monkeypatch):
    cands = enumerate_all_condsets(schema)
    dense = count_supports(cands, ex1)
    monkeypatch.setattr(counting, "DENSE_KEY_LIMIT", 1)
    assert count_supports(cands, ex1) == dense


@pytest.mark.property_based
@given(seed=st.integers(min_value=0, max_value=10_000), threads=st.integers(min_value=2, max_value=6))
@settings(max_examples=40, deadline=None)
def test_count_supports_matches_naive_scan(seed, threads):
    ds, _ = random_case(seed)
    cands = enumerate_all_condsets(ds.schema)
    rng = np.random.Generator(np.random.PCG64(seed))
    sample = [cands[i] for i in rng.choice(len(cands), size=min(40, len(cands)), replace=False)]
    table = count_supports(sample, ds)
    for c in sample:
        assert table[c] == naive_counts(ds, c)
    assert count_supports(sample, ds, threads=threads) == table


@pytest.mark.property_based
@given(seed=st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_counts_are_anti_monotone(seed):
    ds, _ = random_case(seed)
    cands = [c for c in enumerate_all_condsets(ds.schema) if len(c) <= 3]
    table = count_supports(cands, ds)
    for c in cands:
        for sub in combinations(c, len(c) - 1):
            if sub:
                assert table[c][0] <= table[sub][0]
                assert table[c][1] <= table[sub][1]


SMALL_SCHEMA = load_schema("A:invariant:1,2\nB:varying:1,2,3\nC:varying:1,2\nD:varying:1,2\nCl:class:y,n\n")
PAIRS = [c for c in enumerate_all_condsets(SMALL_SCHEMA) if len(c) == 2]
TRIPLES = [c for c in enumerate_all_condsets(SMALL_SCHEMA) if len(c) == 3]


@pytest.mark.property_based
@given(survivors=st.sets(st.sampled_from(PAIRS)))
@settings(max_examples=200, deadline=None)
def test_join_then_prune_is_exactly_closed_candidates(survivors):
    generated = subset_prune(self_join(sorted(survivors)), survivors)
    expected = [c for c in TRIPLES if all(sub in survivors for sub in combinations(c, 2))]
    assert generated == expected
