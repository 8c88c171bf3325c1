from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Union

from scrminer.errors import ConfigError

Number = Union[int, float, str, Fraction]


def to_fraction(value: Number) -> Fraction:
    """Exact rational from user input; floats go through their shortest repr (0.07 -> 7/100)."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class MiningParams:
    """Support threshold (ratio or absolute count) and confidence threshold alpha."""

    min_conf: Fraction
    min_supp: Optional[Fraction] = None
    min_supp_count: Optional[int] = None

    @classmethod
    def create(cls, min_supp: Optional[Number] = None, min_supp_count: Optional[int] = None,
               min_conf: Number = Fraction(1, 2)) -> "MiningParams":
        if (min_supp is None) == (min_supp_count is None):
            raise ConfigError("exactly one of min_supp and min_supp_count must be given")
        supp = None
        if min_supp is not None:
            supp = to_fraction(min_supp)
            if not (0 < supp <= 1):
                raise ConfigError(f"min_supp must be in (0, 1], got {min_supp}")
        if min_supp_count is not None and int(min_supp_count) < 1:
            raise ConfigError(f"min_supp_count must be >= 1, got {min_supp_count}")
        conf = to_fraction(min_conf)
        if not (0 <= conf <= 1):
            raise ConfigError(f"min_conf must be in [0, 1], got {min_conf}")
        return cls(
            min_conf=conf,
            min_supp=supp,
            min_supp_count=int(min_supp_count) if min_supp_count is not None else None,
        )

    def count_threshold(self, n_total: int) -> int:
        """Support number a ruleitem (or itemset) needs: ceil(minSupp * n), at least 1."""
        if self.min_supp_count is not None:
            return self.min_supp_count
        return max(1, ceil(self.min_supp * n_total))

    def describe(self) -> str:
        supp = f"min_supp_count={self.min_supp_count}" if self.min_supp_count is not None else f"min_supp={float(self.min_supp):g}"
        return f"{supp}, min_conf={float(self.min_conf):g}"
