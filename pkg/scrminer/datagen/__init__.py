from scrminer.datagen.generator import (
    CLASS_NAME,
    CLASS_VALUES,
    GenSpec,
    PlantedPattern,
    attribute_names,
    build_schema,
    gen_planted,
    gen_random,
    make_planted,
    make_rng,
    parse_items,
    planted_condsets,
    resolve_template,
)

__all__ = [
    "CLASS_NAME",
    "CLASS_VALUES",
    "GenSpec",
    "PlantedPattern",
    "attribute_names",
    "build_schema",
    "gen_planted",
    "gen_random",
    "make_planted",
    "make_rng",
    "parse_items",
    "planted_condsets",
    "resolve_template",
]
