import io
import logging
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from scrminer.apriori.params import MiningParams
from scrminer.car.engine import mine_car_ruleitems
from scrminer.datagen import (
    GenSpec,
    PlantedPattern,
    attribute_names,
    build_schema,
    gen_planted,
    gen_random,
    make_planted,
    parse_items,
    planted_condsets,
)
from scrminer.dataset.loader import write_dataset
from scrminer.errors import GenSpecError
from scrminer.lattice.counting import count_supports
from scrminer.lattice.items import Item, make_condset
from scrminer.metrics import confidence
from scrminer.oracle import oracle_scr_patterns
from scrminer.scr.engine import mine_scr_ruleitems

PLANTED = GenSpec(planted=make_planted("A=1", "B=1", "B=2"))
WITH_DECOY = GenSpec(n_attributes=5, n_invariant=2, planted=make_planted("A=1", "C=1", "C=2"))


def test_same_seed_same_records():
    assert gen_random(GenSpec(seed=5)) == gen_random(GenSpec(seed=5))
    assert gen_random(GenSpec(seed=5)) != gen_random(GenSpec(seed=6))
    assert gen_planted(PLANTED) == gen_planted(PLANTED)


def test_random_shape_and_class_sizes():
    ds = gen_random(GenSpec(n_attributes=6, values_per_attribute=3, n_invariant=2, records_per_class=(30, 70)))
    assert ds.n_total == 100
    assert ds.n_class == (30, 70)
    assert ds.schema.names == ["A", "B", "C", "D", "E", "F", "Cl"]
    assert [ds.schema.is_invariant(i) for i in range(6)] == [True, True, False, False, False, False]
    assert ds.records[:, :6].max() <= 2


def test_one_value_per_attribute():
    ds = gen_random(GenSpec(values_per_attribute=1, records_per_class=(5, 7)))
    assert not ds.records[:, :4].any()
    assert ds.n_class == (5, 7)


def test_attribute_names_past_the_alphabet():
    names = attribute_names(28)
    assert names[:3] == ["A", "B", "C"]
    assert names[25:] == ["Z", "F27", "F28"]
    assert build_schema(GenSpec(n_attributes=28)).names[-1] == "Cl"


def test_planted_pattern_is_found():
    ds = gen_planted(PLANTED)
    xa, xb = planted_condsets(PLANTED)
    params = MiningParams.create(min_supp=0.1, min_conf=0.8)
    keys = {p.key() for p in oracle_scr_patterns(ds, params).patterns}
    assert (xa, xb) in keys
    assert confidence(xa, 0, ds) >= Fraction(4, 5)
    assert confidence(xb, 1, ds) >= Fraction(4, 5)


def test_planted_counts():
    ds = gen_planted(PLANTED)
    xa, xb = planted_condsets(PLANTED)
    rows = ds.records
    def count(items, label):
        mask = np.all(rows[:, [a for a, _ in items]] == [v for _, v in items], axis=1)
        return int((mask & (ds.classes == label)).sum())
    assert (count(xa, 0), count(xa, 1)) == (10, 2)
    assert (count(xb, 0), count(xb, 1)) == (2, 10)


def test_planted_condsets_are_lattice_condsets():
    ds = gen_planted(PLANTED)
    xa, xb = planted_condsets(PLANTED)
    assert all(isinstance(it, Item) for it in xa + xb)
    assert xa == make_condset([(0, 0), (1, 0)])
    assert count_supports([xa, xb], ds) == {xa: (10, 2), xb: (2, 10)}


def test_exact_confidence_one():
    spec = GenSpec(seed=3, planted=make_planted("A=1", "B=1", "B=2", confidence=1))
    ds = gen_planted(spec)
    xa, xb = planted_condsets(spec)
    assert confidence(xa, 0, ds) == 1
    assert confidence(xb, 1, ds) == 1


def test_planted_with_noise_still_meets_targets():
    spec = replace(PLANTED, noise=0.3, seed=9)
    ds = gen_planted(spec)
    xa, xb = planted_condsets(spec)
    assert confidence(xa, 0, ds) >= Fraction(4, 5)
    assert confidence(xb, 1, ds) >= Fraction(4, 5)


def test_full_noise_disables_planting(caplog):
    spec = replace(PLANTED, noise=1.0)
    with caplog.at_level(logging.WARNING, logger="scrminer.datagen.generator"):
        ds = gen_planted(spec)
    assert "planting disabled" in caplog.text
    assert ds == gen_random(replace(spec, planted=None))


def test_decoy_is_frequent_in_one_class_only():
    ds = gen_planted(WITH_DECOY)
    b = ds.schema.index_of("B")
    assert (ds.records[ds.classes == 0, b] == 0).all()
    assert not (ds.records[ds.classes == 1, b] == 0).any()


def test_scr_prunes_more_than_car_on_generated_data():
    params = MiningParams.create(min_supp=0.1, min_conf=0.8)
    smaller = 0
    for seed in range(20):
        ds = gen_planted(replace(WITH_DECOY, seed=seed))
        scr = mine_scr_ruleitems(ds, params)
        car = mine_car_ruleitems(ds, params)
        if scr.run_log.kept_total < car.run_log.kept_total:
            smaller += 1
    assert smaller >= 18


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec(n_attributes=0),
        GenSpec(values_per_attribute=0),
        GenSpec(n_invariant=5),
        GenSpec(records_per_class=(0, 10)),
        GenSpec(noise=1.5),
        replace(PLANTED, noise=0.2, planted=make_planted("A=1", "B=1", "B=2", confidence=1)),
        replace(PLANTED, planted=PlantedPattern(shared={}, rule_a={"B": "1"}, rule_b={"B": "2"})),
        replace(PLANTED, planted=make_planted("A=1", "B=1", "C=2")),
        replace(PLANTED, planted=make_planted("B=1", "A=1", "A=2")),
        replace(PLANTED, planted=make_planted("A=1", "B=1", "B=1")),
        replace(PLANTED, planted=make_planted("A=1", "A=1", "A=2")),
        replace(PLANTED, planted=make_planted("A=1", "Z=1", "Z=2")),
        replace(PLANTED, records_per_class=(10, 10), planted=make_planted("A=1", "B=1", "B=2", support=0.5)),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(GenSpecError):
        gen_planted(spec) if spec.planted is not None else gen_random(spec)


def test_parse_items():
    assert parse_items("A=1, B=2") == {"A": "1", "B": "2"}
    assert parse_items("") == {}
    with pytest.raises(GenSpecError):
        parse_items("A1")
    with pytest.raises(GenSpecError):
        parse_items("A=1,A=2")


def test_same_seed_same_csv():
    texts = []
    for _ in range(2):
        out = io.StringIO()
        write_dataset(gen_planted(replace(PLANTED, seed=42)), out)
        texts.append(out.getvalue())
    assert texts[0] == texts[1]
    assert texts[0].splitlines()[0] == "A,B,C,D,Cl"
