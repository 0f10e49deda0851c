"""Partitions, Kostka numbers and the weight multiplicities ``c_k`` of ``R(oo, k)``.

``R(oo, k)`` is ``S^k(V_* (x) V)`` for ``sl``, ``S^k(S^2 V_*)`` for ``o`` and
``S^k(L^2 V_*)`` for ``sp`` (up to the dual convention); its weights are the
set ``R_k`` below.  In chain coordinates every weight of ``R_k`` has
nonpositive entries, summing to ``-k`` on each chain for ``sl`` and to
``-2k`` for ``o``/``sp``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from ._memo import memoized
from .errors import ParseError, PreconditionError
from .weights import Flavor, Weight

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return the canonical tuple form (trailing zeros dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise PreconditionError(f"{list(parts)} is not a partition")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"[3,1,1]"``; ``"[]"`` is the empty partition."""
    body = (text or "").strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        parts = [int(t) for t in body.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad partition {text!r}") from None
    try:
        return as_partition(parts)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def format_partition(p: Partition) -> str:
    return "[" + ",".join(map(str, p)) + "]"


def parse_content(text: str) -> tuple[int, ...]:
    body = (text or "").strip().strip("[]")
    try:
        content = tuple(int(t) for t in body.split(",") if t.strip())
    except ValueError:
        raise ParseError(f"bad content vector {text!r}") from None
    if any(c < 0 for c in content):
        raise ParseError("content entries must be nonnegative")
    return content


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for part in p if part > j) for j in range(p[0])) if p else ()


def is_even(p: Partition) -> bool:
    return all(part % 2 == 0 for part in p)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    max_part = n if max_part is None else min(n, max_part)
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _horizontal_strips(shape: Partition, size: int) -> Iterator[Partition]:
    """Shapes ``inner`` with ``shape/inner`` a horizontal strip of ``size`` boxes."""
    bounds = [(shape[i + 1] if i + 1 < len(shape) else 0, shape[i]) for i in range(len(shape))]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(bounds):
            if left == 0:
                yield as_partition(acc)
            return
        lo, hi = bounds[i]
        for keep in range(hi, lo - 1, -1):
            removed = hi - keep
            if removed > left:
                break
            acc.append(keep)
            yield from rec(i + 1, left - removed, acc)
            acc.pop()

    yield from rec(0, size, [])


@memoized("kostka")
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    last, rest = content[-1], content[:-1]
    return sum(_kostka(inner, rest) for inner in _horizontal_strips(shape, last))


def kostka(mu: Iterable[int], gamma: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``gamma``.

    >>> kostka((2, 1), (1, 1, 1))
    2
    """
    mu = as_partition(mu)
    gamma = tuple(int(g) for g in gamma)
    if any(g < 0 for g in gamma):
        raise PreconditionError("content entries must be nonnegative")
    if sum(mu) != sum(gamma):
        return 0
    return _kostka(mu, tuple(sorted((g for g in gamma if g), reverse=True)))


def _has_even_columns(p: Partition) -> bool:
    return is_even(conjugate(p))


def _integral_chains(gamma: Weight) -> tuple[tuple[int, ...], ...]:
    if not gamma.is_integral():
        raise PreconditionError("c_k is only defined on integral weights")
    return tuple(tuple(int(v) for v in chain) for chain in gamma.chains())


def in_R_k(flavor, k: int, gamma: Weight) -> bool:
    """Sign and sum conditions of ``R_k``; necessary for ``c_k(gamma) > 0``."""
    flavor = Flavor.parse(flavor)
    if k < 0 or gamma.flavor is not flavor or not gamma.is_integral():
        return False
    chains = _integral_chains(gamma)
    if any(v > 0 for chain in chains for v in chain):
        return False
    return all(sum(chain) == -weight_mass(flavor, k) for chain in chains)


def c_coeff(flavor, k: int, gamma: Weight) -> int:
    """Multiplicity of ``gamma`` as a weight of ``R(oo, k)``."""
    flavor = Flavor.parse(flavor)
    if gamma.flavor is not flavor:
        raise PreconditionError("flavor mismatch")
    chains = _integral_chains(gamma)
    if not in_R_k(flavor, k, gamma):
        return 0
    return c_coeff_from_contents(flavor, k, [tuple(-v for v in chain) for chain in chains])


@memoized("c_coeff")
def _c_from_sorted(flavor: Flavor, k: int, contents: tuple) -> int:
    if flavor is Flavor.SL:
        left, right = contents
        return sum(kostka(mu, left) * kostka(mu, right) for mu in partitions_of(k))
    keep = is_even if flavor is Flavor.O else _has_even_columns
    return sum(kostka(mu, contents[0]) for mu in partitions_of(2 * k) if keep(mu))


def c_coeff_from_contents(flavor, k: int, contents) -> int:
    """``c_k`` from the per-chain contents ``-gamma`` (nonnegative chain coordinates)."""
    flavor = Flavor.parse(flavor)
    mass = weight_mass(flavor, k)
    key = []
    for content in contents:
        if any(c < 0 for c in content) or sum(content) != mass:
            return 0
        key.append(tuple(sorted((int(c) for c in content if c), reverse=True)))
    return _c_from_sorted(flavor, k, tuple(key))


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def enumerate_R_k_in_window(flavor, k: int, window) -> list[Weight]:
    """Every ``gamma`` with ``c_k(gamma) >= 1`` supported within ``window``.

    ``window`` is one bound for all chains or a tuple with one bound per chain.
    """
    flavor = Flavor.parse(flavor)
    sides = flavor.sides
    windows = (window,) * len(sides) if isinstance(window, int) else tuple(window)
    if len(windows) != len(sides) or any(n < 0 for n in windows):
        raise PreconditionError("window must be a nonnegative bound per chain")
    if k < 0:
        return []
    mass = weight_mass(flavor, k)
    per_chain = [[tuple(-c for c in comp) for comp in _compositions(mass, n)] for n in windows]
    out = []
    for chains in itertools.product(*per_chain):
        gamma = Weight.from_chains(flavor, *chains)
        if c_coeff(flavor, k, gamma) > 0:
            out.append(gamma)
    return out


def weight_mass(flavor, k: int) -> int:
    """Total absolute chain mass of any ``gamma`` in ``R_k`` on one chain."""
    return k if Flavor.parse(flavor) is Flavor.SL else 2 * k


__all__ = [
    "Partition",
    "as_partition",
    "c_coeff",
    "c_coeff_from_contents",
    "conjugate",
    "enumerate_R_k_in_window",
    "format_partition",
    "in_R_k",
    "is_even",
    "kostka",
    "parse_content",
    "parse_partition",
    "partitions_of",
    "weight_mass",
]
