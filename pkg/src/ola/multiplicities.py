"""Composition multiplicities: Verma-type ``m(lam, mu)`` and standard ``[W(lam):L(nu)]``.

Finite computations happen in a product of ``gl(n)`` factors, one per
chain, each with rho ``(-1, ..., -n)``.  The Weyl group acts on entry
vectors by ``(w v)_i = v_{w^-1(i)}``.  For a dot-orbit with dominant point
``a0`` (entries of ``lam + rho`` sorted weakly decreasing) write
``lam + rho = w(a0)`` and ``mu + rho = x(a0)`` with ``w``, ``x`` the
longest representatives of their cosets modulo the stabiliser of ``a0``.
Then ``[M(lam):L(mu)] = P_{w,x}(1)``, which vanishes unless ``w <= x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coxeter import Permutation, bruhat_leq, inverse, kl_poly, poly_eval
from .errors import PreconditionError
from .orders import fin_down_set_within, fin_up_set, leq_fin
from .partitions import c_coeff, enumerate_R_k_in_window, weight_mass
from .weights import (
    Flavor,
    Weight,
    degree,
    format_weight,
    parse_weight,
    same_block,
    sorted_weights,
)


@dataclass(frozen=True)
class OrbitDatum:
    """Dot-orbit bookkeeping for one ``gl(n)`` factor.

    ``perm`` applied to ``dominant`` gives ``shifted``; ``blocks`` lists the
    sizes of runs of equal entries in ``dominant``.
    """

    window: int
    shifted: tuple[Fraction, ...]
    dominant: tuple[Fraction, ...]
    blocks: tuple[int, ...]
    perm: Permutation

    @property
    def is_regular(self) -> bool:
        return all(b == 1 for b in self.blocks)


def orbit_datum(entries: Sequence) -> OrbitDatum:
    shifted = tuple(Fraction(v) - (i + 1) for i, v in enumerate(entries))
    dominant = tuple(sorted(shifted, reverse=True))
    blocks = []
    for i, v in enumerate(dominant):
        if i and v == dominant[i - 1]:
            blocks[-1] += 1
        else:
            blocks.append(1)
    # w^-1(i) = slot of shifted[i] in dominant; equal values fill their
    # slots from the right so that w is longest in its coset
    slots: dict[Fraction, list[int]] = {}
    for pos, v in enumerate(dominant, start=1):
        slots.setdefault(v, []).append(pos)
    w_inv = tuple(slots[v].pop() for v in shifted)
    return OrbitDatum(len(shifted), shifted, dominant, tuple(blocks), inverse(w_inv))


def gl_verma_mult(lam: Sequence, mu: Sequence) -> int:
    """``[M(lam):L(mu)]`` for ``gl(n)`` with integral entries."""
    if len(lam) != len(mu):
        raise PreconditionError("factor windows differ")
    lam = tuple(Fraction(v) for v in lam)
    mu = tuple(Fraction(v) for v in mu)
    if any(v.denominator != 1 for v in lam + mu):
        raise PreconditionError("finite Verma multiplicities need integral entries")
    if lam == mu:
        return 1
    top, bottom = orbit_datum(lam), orbit_datum(mu)
    if top.dominant != bottom.dominant:
        return 0
    if not bruhat_leq(top.perm, bottom.perm):
        return 0
    return poly_eval(kl_poly(top.perm, bottom.perm), 1)


def finite_verma_mult(lam_fin: Sequence[Sequence], mu_fin: Sequence[Sequence]) -> int:
    """Product of ``gl_verma_mult`` over the factors (two for ``sl``, one otherwise)."""
    if len(lam_fin) != len(mu_fin):
        raise PreconditionError("factor count mismatch")
    out = 1
    for lam, mu in zip(lam_fin, mu_fin):
        out *= gl_verma_mult(lam, mu)
        if not out:
            return 0
    return out


def _require_integral(*weights: Weight) -> None:
    for w in weights:
        if not w.is_integral():
            raise PreconditionError(f"weight {format_weight(w)!r} is not integral")
    if len({w.flavor for w in weights}) > 1:
        raise PreconditionError("weights of different flavors")


def stable_mult(lam: Weight, mu: Weight, extra: int = 0) -> int:
    """``m(lam, mu)``, the eventual value of ``[M_n(lam):L(mu)]``.

    ``extra`` enlarges each chain window beyond the minimal one; the result
    does not depend on it.
    """
    _require_integral(lam, mu)
    if not leq_fin(mu, lam):
        return 0
    windows = [max(a, b) + extra for a, b in zip(lam.supports(), mu.supports())]
    return finite_verma_mult(lam.chains(windows), mu.chains(windows))


def _degree_gap(lam: Weight, nu: Weight) -> int | None:
    gap = degree(lam) - degree(nu)
    if gap < 0 or gap.denominator != 1 or not same_block(lam, nu):
        return None
    return int(gap)


def standard_mult(lam: Weight, nu: Weight) -> int:
    """``[W(lam):L(nu)] = sum_gamma c_k(gamma) m(lam + gamma, nu)`` with ``k = d(lam) - d(nu)``.

    Only ``kappa = lam + gamma`` in the finite set ``nu^+_fin`` can contribute.
    """
    _require_integral(lam, nu)
    k = _degree_gap(lam, nu)
    if k is None:
        return 0
    total = 0
    for kappa in fin_up_set(nu):
        c = c_coeff(lam.flavor, k, kappa - lam)
        if c:
            total += c * stable_mult(kappa, nu)
    return total


def standard_mult_over_window(lam: Weight, nu: Weight, window) -> int:
    """Same sum, taken over every ``gamma`` of ``R_k`` supported in ``window``.

    Agrees with ``standard_mult`` once the window covers ``nu^+_fin``.
    """
    _require_integral(lam, nu)
    k = _degree_gap(lam, nu)
    if k is None:
        return 0
    return sum(
        c_coeff(lam.flavor, k, gamma) * stable_mult(lam + gamma, nu)
        for gamma in enumerate_R_k_in_window(lam.flavor, k, window)
    )


@dataclass(frozen=True)
class MultTable:
    base: Weight
    entries: tuple[tuple[Weight, int], ...]

    @classmethod
    def build(cls, base: Weight, mapping: dict) -> "MultTable":
        items = tuple((w, mapping[w]) for w in sorted_weights(mapping) if mapping[w])
        return cls(base, items)

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def as_json(self) -> dict:
        return {
            "flavor": self.base.flavor.value,
            "base": format_weight(self.base),
            "entries": {format_weight(w): m for w, m in self.entries},
        }

    def dumps(self) -> str:
        return json.dumps(self.as_json(), sort_keys=False)

    @classmethod
    def loads(cls, text: str) -> "MultTable":
        data = json.loads(text)
        flavor = Flavor.parse(data["flavor"])
        base = parse_weight(data["base"], flavor)
        mapping = {parse_weight(k, flavor): int(v) for k, v in data["entries"].items()}
        return cls.build(base, mapping)


def injective_filtration(mu: Weight) -> MultTable:
    """Standard-filtration multiplicities ``(I(mu):W(lam)) = m(lam, mu)``."""
    _require_integral(mu)
    return MultTable.build(mu, {lam: stable_mult(lam, mu) for lam in fin_up_set(mu)})


def layer_search_bound(lam: Weight, k: int, window: Iterable[int]) -> tuple[int, ...]:
    """Per-chain support bound for the shifts ``gamma`` that can feed a layer.

    A shifted value ``-J`` needed past the support of ``lam`` has to be
    supplied either by a position ``i`` of ``lam`` (``J <= i - lam_i``) or by
    a chain of shifted tail positions, each link paid for by mass of
    ``gamma``; so ``J`` exceeds ``max(window, i - lam_i)`` by at most the
    chain mass of ``gamma``.
    """
    mass = weight_mass(lam.flavor, k)
    out = []
    for side, n in zip(lam.flavor.sides, window):
        chain = lam.chain(side)
        reach = max([n, len(chain)] + [i - int(v) for i, v in enumerate(chain, start=1)])
        out.append(reach + mass)
    return tuple(out)


def layer_mults(lam: Weight, k: int, window) -> MultTable:
    """Simple constituents ``L(nu)`` of degree ``d(lam) - k`` in ``W(lam)``.

    The layer is infinite, so only ``nu`` supported within ``window``
    (one bound, or one per chain) are listed.
    """
    _require_integral(lam)
    if k < 0:
        raise PreconditionError("layer index must be nonnegative")
    sides = lam.flavor.sides
    window = (window,) * len(sides) if isinstance(window, int) else tuple(window)
    candidates = set()
    for gamma in enumerate_R_k_in_window(lam.flavor, k, layer_search_bound(lam, k, window)):
        candidates |= fin_down_set_within(lam + gamma, window)
    table = {nu: standard_mult(lam, nu) for nu in candidates}
    return MultTable.build(lam, table)
