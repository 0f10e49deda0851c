"""Weights on the index chain and the data attached to them.

A weight is a finitely supported map from chain indices to rationals.  For
``sl`` the indices are the nonzero integers, with positive ones forming the
left chain ``1 < 2 < 3 < ...`` and negative ones the right chain
``... < -3 < -2 < -1``.  For ``o`` and ``sp`` only positive indices occur.

Most algorithms work in *chain coordinates*: the left chain reads
``(w[1], w[2], ...)`` and the right chain reads ``(-w[-1], -w[-2], ...)``.
In these coordinates every chain looks like a standard type-A chain, its
simple roots are ``e_j - e_{j+1}`` and rho is ``(-1, -2, -3, ...)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, PreconditionError


class Flavor(str, enum.Enum):
    SL = "sl"
    O = "o"
    SP = "sp"

    @classmethod
    def parse(cls, text) -> "Flavor":
        if isinstance(text, Flavor):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise ParseError(f"unknown flavor {text!r}; expected one of sl, o, sp") from None

    @property
    def sides(self) -> tuple[str, ...]:
        return ("L", "R") if self is Flavor.SL else ("L",)


def _index_key(index: int) -> tuple[int, int]:
    return (0, index) if index > 0 else (1, -index)


@dataclass(frozen=True)
class Weight:
    """Canonical sparse weight: ``coeffs`` holds nonzero entries in chain order."""

    flavor: Flavor
    coeffs: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, flavor, mapping: Mapping[int, object] | Iterable[tuple[int, object]] = ()) -> "Weight":
        flavor = Flavor.parse(flavor)
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[int, Fraction] = {}
        for index, value in items:
            index = int(index)
            _check_index(flavor, index)
            acc[index] = acc.get(index, Fraction(0)) + Fraction(value)
        entries = tuple(
            (i, v) for i, v in sorted(acc.items(), key=lambda kv: _index_key(kv[0])) if v != 0
        )
        return cls(flavor, entries)

    @classmethod
    def zero(cls, flavor) -> "Weight":
        return cls(Flavor.parse(flavor), ())

    @classmethod
    def from_chains(cls, flavor, left: Iterable = (), right: Iterable = ()) -> "Weight":
        """Build a weight from chain coordinates (see the module docstring)."""
        flavor = Flavor.parse(flavor)
        right = tuple(right)
        if right and flavor is not Flavor.SL:
            raise PreconditionError(f"flavor {flavor.value} has no right chain")
        items = [(i, v) for i, v in enumerate(left, start=1)]
        items += [(-j, -Fraction(v)) for j, v in enumerate(right, start=1)]
        return cls.of(flavor, items)

    def __getitem__(self, index: int) -> Fraction:
        for i, v in self.coeffs:
            if i == index:
                return v
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def _combine(self, other: "Weight", sign: int) -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        if other.flavor is not self.flavor:
            raise PreconditionError("cannot combine weights of different flavors")
        acc = dict(self.coeffs)
        for i, v in other.coeffs:
            acc[i] = acc.get(i, Fraction(0)) + sign * v
        return Weight.of(self.flavor, acc)

    def __add__(self, other: "Weight") -> "Weight":
        return self._combine(other, 1)

    def __sub__(self, other: "Weight") -> "Weight":
        return self._combine(other, -1)

    def __neg__(self) -> "Weight":
        return Weight(self.flavor, tuple((i, -v) for i, v in self.coeffs))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, v in self.coeffs)

    def support(self, side: str = "L") -> int:
        """Largest chain position carrying a nonzero coordinate on ``side``."""
        if side == "L":
            return max((i for i, _ in self.coeffs if i > 0), default=0)
        return max((-i for i, _ in self.coeffs if i < 0), default=0)

    def supports(self) -> tuple[int, ...]:
        return tuple(self.support(s) for s in self.flavor.sides)

    def chain(self, side: str = "L", n: int | None = None) -> tuple[Fraction, ...]:
        """Chain coordinates of one side, padded with zeros to length ``n``."""
        n = self.support(side) if n is None else n
        if side == "L":
            return tuple(self[i] for i in range(1, n + 1))
        return tuple(-self[-j] for j in range(1, n + 1))

    def chains(self, windows: Iterable[int] | None = None) -> tuple[tuple[Fraction, ...], ...]:
        sides = self.flavor.sides
        windows = self.supports() if windows is None else tuple(windows)
        return tuple(self.chain(s, n) for s, n in zip(sides, windows))

    def sort_key(self):
        """Canonical ordering: by total support, then by coefficients."""
        return (sum(self.supports()), tuple((_index_key(i), v) for i, v in self.coeffs))

    def __str__(self) -> str:
        return format_weight(self)


def _check_index(flavor: Flavor, index: int) -> None:
    if index == 0:
        raise PreconditionError("chain index 0 does not exist")
    if index < 0 and flavor is not Flavor.SL:
        raise PreconditionError(f"flavor {flavor.value} only has positive indices, got {index}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_weight(text: str, flavor) -> Weight:
    """Parse ``index:coeff`` pairs, e.g. ``"1:3,2:1,-1:-2"``; empty text or ``0`` is zero.

    >>> parse_weight("1:1/2,-1:-2", "sl")[-1]
    Fraction(-2, 1)
    """
    flavor = Flavor.parse(flavor)
    text = (text or "").strip()
    if text in ("", "0"):
        return Weight.zero(flavor)
    items = []
    seen = set()
    for chunk in text.split(","):
        if ":" not in chunk:
            raise ParseError(f"weight entry {chunk.strip()!r} is not of the form index:coefficient")
        idx_text, val_text = chunk.split(":", 1)
        try:
            index = int(idx_text.strip())
        except ValueError:
            raise ParseError(f"bad chain index {idx_text.strip()!r}") from None
        if index in seen:
            raise ParseError(f"index {index} given twice")
        seen.add(index)
        items.append((index, parse_rational(val_text)))
    try:
        return Weight.of(flavor, items)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def format_weight(w: Weight) -> str:
    return ",".join(f"{i}:{format_rational(v)}" for i, v in w.coeffs)


def sorted_weights(weights: Iterable[Weight]) -> list[Weight]:
    return sorted(weights, key=Weight.sort_key)


def rho(flavor, index: int) -> int:
    """Coordinate of rho at a chain index: ``-i`` on the left chain, ``+i`` at ``-i``."""
    flavor = Flavor.parse(flavor)
    _check_index(flavor, index)
    return -index


def degree(w: Weight) -> Fraction:
    """Half the signed coefficient sum; a layer of ``R(oo, k)`` has degree ``-k``."""
    left = sum((v for i, v in w.coeffs if i > 0), Fraction(0))
    right = sum((v for i, v in w.coeffs if i < 0), Fraction(0))
    return (left - right) / 2


def _is_partition(seq: Iterable[Fraction]) -> bool:
    prev = None
    for v in seq:
        if v.denominator != 1 or v < 0 or (prev is not None and v > prev):
            return False
        prev = v
    return True


def is_b_dominant(w: Weight) -> bool:
    return all(_is_partition(c) for c in w.chains())


def is_nonneg_simple_combination(diff: Weight) -> bool:
    """True iff every chain's prefix sums are nonnegative integers ending at 0."""
    for coords in diff.chains():
        running = Fraction(0)
        for v in coords:
            running += v
            if running.denominator != 1 or running < 0:
                return False
        if running != 0:
            return False
    return True


@dataclass(frozen=True)
class BlockLabel:
    """Coset of a weight modulo the root lattice.

    ``classes`` lists ``(index, fractional part)`` for the non-integral
    coordinates; ``total`` is the coefficient sum, reduced mod 2 for
    ``o``/``sp``.  Two weights differ by an element of the root lattice iff
    their labels are equal.
    """

    flavor: Flavor
    classes: tuple[tuple[int, Fraction], ...]
    total: Fraction

    def as_json(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "classes": [[i, format_rational(f)] for i, f in self.classes],
            "total": format_rational(self.total),
        }


def block_label(w: Weight) -> BlockLabel:
    classes = tuple((i, v - (v.numerator // v.denominator)) for i, v in w.coeffs if v.denominator != 1)
    total = sum((v for _, v in w.coeffs), Fraction(0))
    if w.flavor is not Flavor.SL:
        total = total - 2 * (total // 2)
    return BlockLabel(w.flavor, classes, total)


def same_block(a: Weight, b: Weight) -> bool:
    return a.flavor is b.flavor and block_label(a) == block_label(b)
