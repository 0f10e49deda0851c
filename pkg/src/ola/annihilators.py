"""Primitive-ideal labels ``I(x, y, Y_l, Y_r)`` for simple objects over sl(oo)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError, PreconditionError
from .partitions import Partition, as_partition, format_partition, parse_partition
from .weights import Flavor, Weight, is_b_dominant


@dataclass(frozen=True)
class PrimitiveIdealLabel:
    x: int
    y: int
    Yl: Partition
    Yr: Partition

    def __str__(self) -> str:
        return f"I(x={self.x}, y={self.y}, Yl={format_partition(self.Yl)}, Yr={format_partition(self.Yr)})"

    @classmethod
    def parse(cls, text: str) -> "PrimitiveIdealLabel":
        m = _LABEL.fullmatch(text.strip())
        if not m:
            raise ParseError(f"bad primitive-ideal label {text!r}")
        return cls(int(m["x"]), int(m["y"]), parse_partition(m["yl"]), parse_partition(m["yr"]))


_LABEL = re.compile(
    r"I\(\s*x\s*=\s*(?P<x>\d+)\s*,\s*y\s*=\s*(?P<y>\d+)\s*,"
    r"\s*Yl\s*=\s*(?P<yl>\[[\d,\s]*\])\s*,\s*Yr\s*=\s*(?P<yr>\[[\d,\s]*\])\s*\)"
)


def _require_sl(w: Weight) -> None:
    if w.flavor is not Flavor.SL:
        raise PreconditionError("primitive-ideal labels are only available for sl")


def annihilator_of_integrable(lam: Weight) -> PrimitiveIdealLabel:
    """Label of ``Ann L(lam)`` for a dominant (integrable) weight: ``I(0, 0, lam^1, lam^2)``."""
    _require_sl(lam)
    if not is_b_dominant(lam):
        raise PreconditionError("weight is not dominant, so L(lam) is not integrable")
    left, right = lam.chains()
    return PrimitiveIdealLabel(0, 0, as_partition(left), as_partition(right))


def weight_from_label(x: int, Yl: Sequence[int], Yr: Sequence[int], a: Sequence = ()) -> Weight:
    """A weight whose simple module has annihilator ``I(x, 0, Yl, Yr)``.

    The first ``x`` left coordinates are the parameters ``a`` (non-integral,
    with non-integral pairwise differences), followed by the rows of ``Yl``;
    the right chain carries ``Yr``, so ``x = 0`` reproduces the integrable case.

    >>> str(weight_from_label(1, [1], [], [Fraction(1, 2)]))
    '1:1/2,2:1'
    """
    x = int(x)
    if x < 0:
        raise PreconditionError("x must be nonnegative")
    Yl, Yr = as_partition(Yl), as_partition(Yr)
    a = [Fraction(v) for v in a]
    if len(a) != x:
        raise PreconditionError(f"expected {x} parameters a_i, got {len(a)}")
    for i, ai in enumerate(a):
        if ai.denominator == 1:
            raise PreconditionError(f"a_{i + 1} = {ai} must be non-integral")
        for j in range(i):
            if (ai - a[j]).denominator == 1:
                raise PreconditionError(f"a_{j + 1} - a_{i + 1} must be non-integral")
    return Weight.from_chains(Flavor.SL, list(a) + list(Yl), Yr)


def is_nonzero_annihilator_guaranteed(module_length: int) -> bool:
    """Every finite-length object of the category has nonzero annihilator."""
    if int(module_length) < 1:
        raise PreconditionError("module length must be positive")
    return True
