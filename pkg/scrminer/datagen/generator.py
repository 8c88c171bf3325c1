"""
Synthetic class-labeled categorical data.

All randomness comes from numpy's PCG64 bit generator seeded with the GenSpec
seed (numpy.random.Generator(PCG64(seed))); the same GenSpec always yields the
same records in the same order.

Attributes are named A, B, C, ... (F27, F28, ... past the alphabet) with
values "1".."v"; the first n_invariant attributes are invariant, the rest
varying. The class attribute Cl (values Cl1, Cl2) is the last column.

Planted generation builds two antecedents sharing the `shared` items:
Xa = shared + rule_a (stamped on class Cl1 records) and Xb = shared + rule_b
(stamped on class Cl2 records). Each is given at least the support-threshold
count in its own class and just enough contradicting records in the other
class to land at or above its target confidence. Remaining records are
random, with any accidental Xa/Xb match broken by changing its first shared
item. A decoy invariant attribute (if one is free) is pinned to its first
value in Cl1 records and kept off it in Cl2 records, which gives the data an
invariant-only condset frequent in one class only.
"""

from __future__ import annotations

import logging
import string
from dataclasses import dataclass, replace
from fractions import Fraction
from math import ceil, floor
from typing import Dict, List, Optional, Tuple

import numpy as np

from scrminer.apriori.params import MiningParams, Number, to_fraction
from scrminer.dataset.loader import Dataset, from_value_ids
from scrminer.dataset.schema import Attribute, AttributeRole, AttributeSchema
from scrminer.errors import ConfigError, GenSpecError, SchemaError
from scrminer.lattice.items import Condset, Item, make_condset

logger = logging.getLogger(__name__)

CLASS_NAME = "Cl"
CLASS_VALUES = ("Cl1", "Cl2")


@dataclass(frozen=True)
class PlantedPattern:
    """Two contrasting rule templates: shared + rule_a -> Cl1, shared + rule_b -> Cl2."""

    shared: Dict[str, str]
    rule_a: Dict[str, str]
    rule_b: Dict[str, str]
    confidence_a: Fraction = Fraction(4, 5)
    confidence_b: Fraction = Fraction(4, 5)
    support: Fraction = Fraction(1, 10)


@dataclass(frozen=True)
class GenSpec:
    n_attributes: int = 4
    values_per_attribute: int = 2
    n_invariant: int = 1
    records_per_class: Tuple[int, int] = (50, 50)
    seed: int = 0
    planted: Optional[PlantedPattern] = None
    noise: float = 0.0
    decoy: bool = True

    def validate(self) -> "GenSpec":
        if self.n_attributes < 1:
            raise GenSpecError(f"attribute count must be >= 1, got {self.n_attributes}")
        if self.values_per_attribute < 1:
            raise GenSpecError(f"values per attribute must be >= 1, got {self.values_per_attribute}")
        if not (0 <= self.n_invariant <= self.n_attributes):
            raise GenSpecError(f"invariant count must be in [0, {self.n_attributes}], got {self.n_invariant}")
        if len(self.records_per_class) != 2 or min(self.records_per_class) < 1:
            raise GenSpecError(f"records per class must be two counts >= 1, got {self.records_per_class}")
        if not (0.0 <= self.noise <= 1.0):
            raise GenSpecError(f"noise must be in [0, 1], got {self.noise}")
        return self


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def attribute_names(n: int) -> List[str]:
    letters = string.ascii_uppercase
    return [letters[i] if i < len(letters) else f"F{i + 1}" for i in range(n)]


def build_schema(spec: GenSpec) -> AttributeSchema:
    values = tuple(str(v) for v in range(1, spec.values_per_attribute + 1))
    attrs = [
        Attribute(
            name=name,
            role=AttributeRole.INVARIANT if i < spec.n_invariant else AttributeRole.VARYING,
            domain=values,
        )
        for i, name in enumerate(attribute_names(spec.n_attributes))
    ]
    attrs.append(Attribute(name=CLASS_NAME, role=AttributeRole.CLASS, domain=CLASS_VALUES))
    return AttributeSchema(tuple(attrs))


def parse_items(text: str) -> Dict[str, str]:
    """'A=1,B=2' -> {'A': '1', 'B': '2'}."""
    out: Dict[str, str] = {}
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise GenSpecError(f"expected name=value, got {part!r}")
        if name.strip() in out:
            raise GenSpecError(f"attribute {name.strip()!r} given twice in {text!r}")
        out[name.strip()] = value.strip()
    return out


def _random_rows(rng: np.random.Generator, count: int, spec: GenSpec) -> np.ndarray:
    return rng.integers(0, spec.values_per_attribute, size=(count, spec.n_attributes), dtype=np.int64)


def _assemble(schema: AttributeSchema, rng: np.random.Generator, per_class: List[np.ndarray]) -> Dataset:
    features = np.vstack(per_class)
    labels = np.concatenate([np.full(len(rows), k, dtype=np.int64) for k, rows in enumerate(per_class)])
    records = np.column_stack([features, labels])
    records = records[rng.permutation(len(records))]
    return from_value_ids(schema, records)


def gen_random(spec: GenSpec) -> Dataset:
    """Uniform values per attribute, exact class sizes, rows shuffled."""
    spec.validate()
    if spec.planted is not None:
        raise GenSpecError("gen_random takes a spec without a planted pattern")
    rng = make_rng(spec.seed)
    n1, n2 = spec.records_per_class
    ds = _assemble(build_schema(spec), rng, [_random_rows(rng, n1, spec), _random_rows(rng, n2, spec)])
    logger.debug("generated %d random records (seed %d)", ds.n_total, spec.seed)
    return ds


def _resolve(schema: AttributeSchema, items: Dict[str, str], what: str) -> Condset:
    out = []
    for name, value in items.items():
        try:
            idx = schema.index_of(name)
            out.append(Item(idx, schema.value_id(idx, value)))
        except SchemaError as e:
            raise GenSpecError(f"{what}: {e}") from None
    return tuple(sorted(out))


def resolve_template(planted: PlantedPattern, schema: AttributeSchema) -> Tuple[Condset, Condset]:
    """Antecedents (Xa, Xb) of the planted pair after checking its structure."""
    shared = _resolve(schema, planted.shared, "shared")
    a = _resolve(schema, planted.rule_a, "rule a")
    b = _resolve(schema, planted.rule_b, "rule b")
    if not shared:
        raise GenSpecError("planted pattern needs at least one shared item")
    if not a:
        raise GenSpecError("planted rules need at least one varying item each")
    if set(planted.rule_a) != set(planted.rule_b):
        raise GenSpecError("planted rules must use the same varying attributes")
    if set(planted.rule_a) & set(planted.shared):
        raise GenSpecError("an attribute cannot be both shared and varying in the planted pattern")
    for (attr, va), (_, vb) in zip(a, b):
        if not schema.is_varying(attr):
            raise GenSpecError(f"attribute {schema.attributes[attr].name!r} differs between the rules but is not varying")
        if va == vb:
            raise GenSpecError(f"attribute {schema.attributes[attr].name!r} has the same value in both rules")
    return make_condset(shared + a), make_condset(shared + b)


def _matches(rows: np.ndarray, items: Condset) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros(0, dtype=bool)
    attrs = [a for a, _ in items]
    values = np.asarray([v for _, v in items], dtype=np.int64)
    return np.all(rows[:, attrs] == values, axis=1)


def _stamp(rows: np.ndarray, items: Condset) -> np.ndarray:
    for a, v in items:
        rows[:, a] = v
    return rows


def _planted_counts(threshold: int, conf: Fraction, own_noise: int, other_noise: int) -> Tuple[int, int]:
    """(records in the rule's class, contradicting records in the other class) holding the antecedent."""
    if conf == 1:
        return max(threshold, own_noise), 0
    own = max(threshold, own_noise, ceil(conf * other_noise / (1 - conf)))
    return own, floor(own * (1 - conf) / conf)


def gen_planted(spec: GenSpec) -> Dataset:
    spec.validate()
    planted = spec.planted
    if planted is None:
        raise GenSpecError("gen_planted needs a planted pattern")
    conf_a, conf_b, supp = (to_fraction(v) for v in (planted.confidence_a, planted.confidence_b, planted.support))
    for name, value in (("confidence a", conf_a), ("confidence b", conf_b), ("support", supp)):
        if not (0 < value <= 1):
            raise GenSpecError(f"planted {name} must be in (0, 1], got {value}")
    schema = build_schema(spec)
    xa, xb = resolve_template(planted, schema)
    if spec.noise >= 1.0:
        logger.warning("noise 1.0 leaves no room for the planted pattern; planting disabled")
        return gen_random(replace(spec, planted=None))
    if spec.noise > 0 and 1 in (conf_a, conf_b):
        raise GenSpecError("confidence 1.0 cannot be planted with noise > 0: noise records may contradict the rule")

    rng = make_rng(spec.seed)
    sizes = spec.records_per_class
    try:
        threshold = MiningParams.create(min_supp=supp).count_threshold(sum(sizes))
    except ConfigError as e:
        raise GenSpecError(str(e)) from None

    noise = [_random_rows(rng, int(round(spec.noise * n)), spec) for n in sizes]
    na = [int(_matches(noise[k], xa).sum()) for k in (0, 1)]
    nb = [int(_matches(noise[k], xb).sum()) for k in (0, 1)]
    own_a, other_a = _planted_counts(threshold, conf_a, na[0], na[1])
    own_b, other_b = _planted_counts(threshold, conf_b, nb[1], nb[0])

    # per class: (antecedent, records to stamp)
    stamps = [
        [(xa, own_a - na[0]), (xb, other_b - nb[0])],
        [(xb, own_b - nb[1]), (xa, other_a - na[1])],
    ]
    first_shared = next(a for (a, va), (_, vb) in zip(xa, xb) if va == vb)

    per_class: List[np.ndarray] = []
    for k, n in enumerate(sizes):
        needed = len(noise[k]) + sum(c for _, c in stamps[k])
        if needed > n:
            raise GenSpecError(
                f"class {CLASS_VALUES[k]} needs {needed} records for noise and the planted rules, has {n}"
            )
        parts = [noise[k]]
        for items, count in stamps[k]:
            parts.append(_stamp(_random_rows(rng, count, spec), items))
        filler = _random_rows(rng, n - needed, spec)
        clash = _matches(filler, xa) | _matches(filler, xb)
        filler[clash, first_shared] = (filler[clash, first_shared] + 1) % spec.values_per_attribute
        parts.append(filler)
        per_class.append(np.vstack(parts))

    if spec.decoy:
        _pin_decoy(per_class, len(noise[0]), xa, spec, rng)

    ds = _assemble(schema, rng, per_class)
    logger.info(
        "planted %s -> %s (%d/%d) and %s -> %s (%d/%d), threshold %d, %d records",
        xa, CLASS_VALUES[0], own_a, own_a + other_a, xb, CLASS_VALUES[1], own_b, own_b + other_b,
        threshold, ds.n_total,
    )
    return ds


def _pin_decoy(per_class: List[np.ndarray], class0_noise: int, template: Condset, spec: GenSpec,
               rng: np.random.Generator) -> None:
    used = {a for a, _ in template}
    free = [i for i in range(spec.n_invariant) if i not in used]
    if not free or spec.values_per_attribute < 2:
        logger.debug("no free invariant attribute for a decoy")
        return
    d = free[0]
    per_class[0][class0_noise:, d] = 0
    hit = per_class[1][:, d] == 0
    per_class[1][hit, d] = rng.integers(1, spec.values_per_attribute, size=int(hit.sum()))


def planted_condsets(spec: GenSpec) -> Tuple[Condset, Condset]:
    """(Xa, Xb) as condsets over the GenSpec's schema."""
    if spec.planted is None:
        raise GenSpecError("spec has no planted pattern")
    return resolve_template(spec.planted, build_schema(spec))


def make_planted(shared: str, rule_a: str, rule_b: str, confidence: Number = Fraction(4, 5),
                 support: Number = Fraction(1, 10)) -> PlantedPattern:
    try:
        conf = to_fraction(confidence)
        supp = to_fraction(support)
    except (ValueError, ZeroDivisionError) as e:
        raise GenSpecError(f"invalid planted threshold: {e}") from None
    return PlantedPattern(
        shared=parse_items(shared),
        rule_a=parse_items(rule_a),
        rule_b=parse_items(rule_b),
        confidence_a=conf,
        confidence_b=conf,
        support=supp,
    )
