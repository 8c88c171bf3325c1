"""
Pattern and rule files.

Human form, one pattern per line:

    {A=1 / B=1 -> Cl1 (conf=0.6667, supp=0.1250) : B=2 -> Cl2 (conf=0.5000, supp=0.1875)}

Machine form is tab separated with a header row. Item lists are JSON arrays
of [attribute, value] pairs; the raw per-class counts and n_total make every
ratio exact again on read.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, TextIO, Union

import pandas as pd

from scrminer.apriori.engine import AssociationRule
from scrminer.car.rules import ClassificationRule, rule_from_counts
from scrminer.dataset.schema import AttributeSchema
from scrminer.errors import PatternFileError, SchemaError
from scrminer.lattice.items import Condset, Item
from scrminer.scr.patterns import SCRPattern, pattern_from_rules

logger = logging.getLogger(__name__)

TSV_COLUMNS = [
    "invariant",
    "varying1", "class1", "conf1", "supp1", "r1_count1", "r1_count2",
    "varying2", "class2", "conf2", "supp2", "r2_count1", "r2_count2",
    "n_total", "alpha",
]


def write_patterns(patterns: Iterable[SCRPattern], schema: AttributeSchema, stream: TextIO,
                   style: str = "keyed", decimals: int = 4) -> int:
    n = 0
    for p in patterns:
        stream.write(p.render(schema, style=style, decimals=decimals) + "\n")
        n += 1
    return n


def _items_json(items: Condset, schema: AttributeSchema) -> str:
    return json.dumps([[schema.attributes[it.attr].name, schema.attributes[it.attr].domain[it.value]] for it in items])


def _items_from_json(text: str, schema: AttributeSchema) -> Condset:
    out = []
    for name, value in json.loads(text):
        idx = schema.index_of(name)
        out.append(Item(idx, schema.value_id(idx, value)))
    return tuple(out)


def patterns_frame(patterns: Sequence[SCRPattern], schema: AttributeSchema, n_total: int,
                   decimals: int = 4) -> pd.DataFrame:
    rows = []
    for p in patterns:
        rows.append({
            "invariant": _items_json(p.invariant_part, schema),
            "varying1": _items_json(p.varying1, schema),
            "class1": schema.class_label(p.rule1.label),
            "conf1": f"{float(p.rule1.confidence):.{decimals}f}",
            "supp1": f"{float(p.rule1.support):.{decimals}f}",
            "r1_count1": p.counts1[0],
            "r1_count2": p.counts1[1],
            "varying2": _items_json(p.varying2, schema),
            "class2": schema.class_label(p.rule2.label),
            "conf2": f"{float(p.rule2.confidence):.{decimals}f}",
            "supp2": f"{float(p.rule2.support):.{decimals}f}",
            "r2_count1": p.counts2[0],
            "r2_count2": p.counts2[1],
            "n_total": n_total,
            "alpha": str(p.alpha),
        })
    return pd.DataFrame(rows, columns=TSV_COLUMNS)


def write_patterns_tsv(patterns: Sequence[SCRPattern], schema: AttributeSchema, n_total: int,
                       stream: TextIO, decimals: int = 4) -> int:
    frame = patterns_frame(patterns, schema, n_total, decimals)
    frame.to_csv(stream, sep="\t", index=False, lineterminator="\n")
    return len(frame)


def read_patterns_tsv(source: Union[str, TextIO], schema: AttributeSchema) -> List[SCRPattern]:
    """Rebuild canonical patterns from a tab-separated pattern file."""
    try:
        frame = pd.read_csv(source, sep="\t", dtype=str, keep_default_na=False, na_filter=False)
    except pd.errors.EmptyDataError as e:
        raise PatternFileError("empty pattern file: a header row is required") from e
    missing = [c for c in TSV_COLUMNS if c not in frame.columns]
    if missing:
        raise PatternFileError(f"pattern file lacks columns {missing}")

    cls_idx = schema.class_index
    patterns: List[SCRPattern] = []
    for i, row in enumerate(frame.itertuples(index=False), start=2):
        try:
            inv = _items_from_json(row.invariant, schema)
            n_total = int(row.n_total)
            alpha = Fraction(row.alpha)
            sides = []
            for varying, cls, c1, c2 in ((row.varying1, row.class1, row.r1_count1, row.r1_count2),
                                         (row.varying2, row.class2, row.r2_count1, row.r2_count2)):
                condset = tuple(sorted(inv + _items_from_json(varying, schema)))
                counts = (int(c1), int(c2))
                rule = rule_from_counts(condset, counts, schema.value_id(cls_idx, cls), n_total)
                sides.append((rule, counts))
        except (ValueError, TypeError, SchemaError) as e:
            raise PatternFileError(f"line {i}: {e}") from None
        (r1, k1), (r2, k2) = sides
        p = pattern_from_rules(r1, k1, r2, k2, schema, alpha) if r1 and r2 else None
        if p is None:
            raise PatternFileError(f"line {i}: rules do not form an alpha-contrasting pair")
        patterns.append(p)
    logger.debug("read %d patterns", len(patterns))
    return patterns


def render_rule(rule: Union[AssociationRule, ClassificationRule], schema: AttributeSchema,
                style: str = "keyed", decimals: int = 4) -> str:
    if isinstance(rule, AssociationRule):
        lhs = schema.label_items(rule.antecedent, style)
        rhs = schema.label_items(rule.consequent, style)
    else:
        lhs = schema.label_items(rule.condset, style)
        rhs = schema.class_label(rule.label)
    return f"{lhs} -> {rhs} (conf={float(rule.confidence):.{decimals}f}, supp={float(rule.support):.{decimals}f})"


def write_rules(rules: Iterable[Union[AssociationRule, ClassificationRule]], schema: AttributeSchema,
                stream: TextIO, style: str = "keyed", decimals: int = 4) -> int:
    n = 0
    for r in rules:
        stream.write(render_rule(r, schema, style, decimals) + "\n")
        n += 1
    return n
