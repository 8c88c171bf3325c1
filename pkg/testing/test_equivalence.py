"""Mined patterns against the exhaustive reference on random datasets."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scrminer.apriori.engine import classification_rules_via_postfilter, generate_rules, mine_frequent_itemsets
from scrminer.car.engine import mine_car_rules
from scrminer.oracle import compare_pattern_sets, oracle_scr_patterns
from scrminer.scr.engine import mine_scr_patterns
from testing.fixtures import random_case

SEEDS = range(200)


@pytest.mark.slow
@pytest.mark.parametrize("seed", SEEDS)
def test_scr_equals_oracle(seed):
    ds, params = random_case(seed)
    result, mined = mine_scr_patterns(ds, params)
    report = oracle_scr_patterns(ds, params)
    diff = compare_pattern_sets(mined, report.patterns)
    assert diff.empty, f"seed {seed}: missing {diff.missing_from_a}, extra {diff.missing_from_b}"


@pytest.mark.parametrize("seed", SEEDS[:50])
def test_scr_kept_within_car(seed):
    ds, params = random_case(seed)
    scr, _ = mine_scr_patterns(ds, params)
    car, _ = mine_car_rules(ds, params)
    assert set(scr.kept) <= set(car.condsets)
    assert scr.run_log.counted_total <= car.run_log.counted_total


@pytest.mark.parametrize("seed", SEEDS[:50])
def test_apriori_postfilter_equals_car(seed):
    ds, params = random_case(seed)
    frequent = mine_frequent_itemsets(ds, params)
    via_postfilter = classification_rules_via_postfilter(
        generate_rules(frequent, ds.n_total, params.min_conf), ds.schema
    )
    _, direct = mine_car_rules(ds, params)
    assert via_postfilter == direct


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=1000, max_value=2**32 - 1), threads=st.sampled_from([1, 2, 4]))
def test_scr_equals_oracle_any_seed(seed, threads):
    ds, params = random_case(seed)
    _, mined = mine_scr_patterns(ds, params, threads=threads)
    assert mined == oracle_scr_patterns(ds, params).patterns
