"""The orders ``<=_fin`` and ``<=_inf`` on eligible weights.

Everything is done chain by chain in chain coordinates (see
``ola.weights``).  Writing ``~w = w + rho`` for the shifted coordinates,
``mu <=_fin lam`` means that ``~lam`` is a rearrangement of ``~mu`` and that
``lam - mu`` has nonnegative prefix sums on every chain.  ``<=_inf`` is
generated by ``<=_fin`` and by the shifts ``mu = nu + gamma`` with
``gamma`` a weight of some ``R(oo, k)``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ._memo import memoized
from .config import SETTINGS
from .errors import PreconditionError, ResourceBoundError
from .partitions import c_coeff, c_coeff_from_contents, weight_mass
from .weights import Flavor, Weight, degree, format_weight, is_nonneg_simple_combination, same_block

IntChain = tuple[int, ...]
State = tuple[IntChain, ...]


def _shift(coords: Sequence[int], n: int) -> list[int]:
    """``coords + rho`` on the first ``n`` positions (``coords`` zero-padded)."""
    return [(coords[p] if p < len(coords) else 0) - (p + 1) for p in range(n)]


def _unshift(values: Sequence[int]) -> IntChain:
    out = [v + p + 1 for p, v in enumerate(values)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _check_window(n: int) -> None:
    if n > SETTINGS.max_window:
        raise ResourceBoundError(f"a chain window of {n} positions exceeds max_window={SETTINGS.max_window}")


def _state(w: Weight) -> State:
    return tuple(tuple(int(v) for v in chain) for chain in w.chains())


def chain_up_window(coords: Sequence[int]) -> int:
    """Positions that can be nonzero in any ``lam >=_fin`` the given chain.

    Past the support the shifted values are ``-p``; a lower value ``b`` may
    travel right at most to position ``-b - 1``.
    """
    n = len(coords)
    return max([n] + [-b - 1 for b in _shift(coords, n)])


def _arrangements(base: Sequence[int], sign: int, frozen_from: int | None = None) -> Iterator[tuple]:
    """Rearrangements ``u`` of ``base`` with ``sign * prefix(u - base) >= 0``.

    With ``frozen_from = N`` positions ``p > N`` (1-based) must keep
    ``u_p = -p``; such a value must be available in the multiset.
    """
    n = len(base)
    pool = Counter(base)
    fixed_tail = []
    free = n
    if frozen_from is not None and frozen_from < n:
        for p in range(frozen_from + 1, n + 1):
            if pool[-p] == 0:
                return
            pool[-p] -= 1
            fixed_tail.append(-p)
        free = frozen_from
    prefix_base = list(itertools.accumulate(base))
    acc: list[int] = []

    def rec(p: int, running: int):
        if p == free:
            total = running
            for q, v in enumerate(fixed_tail, start=free):
                total += v
                if sign * (total - prefix_base[q]) < 0:
                    return
            yield tuple(acc) + tuple(fixed_tail)
            return
        for value in sorted(v for v, c in pool.items() if c > 0):
            nxt = running + value
            if sign * (nxt - prefix_base[p]) < 0:
                continue
            pool[value] -= 1
            acc.append(value)
            yield from rec(p + 1, nxt)
            acc.pop()
            pool[value] += 1

    yield from rec(0, 0)


@memoized("chain_up_set")
def _cached_up_set(coords: IntChain) -> tuple[IntChain, ...]:
    return tuple(_unshift(u) for u in _arrangements(_shift(coords, chain_up_window(coords)), +1))


def _chain_up_set(coords: IntChain) -> tuple[IntChain, ...]:
    # the guard runs before the cache so that a lowered max_window is honoured
    _check_window(chain_up_window(coords))
    return _cached_up_set(coords)


def chain_up_set(coords: Sequence[int]) -> tuple[IntChain, ...]:
    """Chains ``>=_fin coords`` (integral chain coordinates)."""
    return _chain_up_set(tuple(int(v) for v in coords))


def chain_down_set(coords: Sequence[int], bound: int) -> tuple[IntChain, ...]:
    """Chains ``nu <=_fin coords`` whose support lies within ``bound``."""
    coords = [int(v) for v in coords]
    m = max(len(coords), bound)
    _check_window(m)
    return tuple(_unshift(u) for u in _arrangements(_shift(coords, m), -1, frozen_from=bound))


def _check_integral(*weights: Weight) -> None:
    for w in weights:
        if not w.is_integral():
            raise PreconditionError(f"weight {format_weight(w)!r} is not integral")


def _same_flavor(a: Weight, b: Weight) -> None:
    if a.flavor is not b.flavor:
        raise PreconditionError("weights of different flavors")


def leq_fin(mu: Weight, lam: Weight) -> bool:
    """``mu <=_fin lam``; pairs with non-integral difference compare as False."""
    _same_flavor(mu, lam)
    if mu == lam:
        return True
    diff = lam - mu
    if not diff.is_integral() or not is_nonneg_simple_combination(diff):
        return False
    for side in mu.flavor.sides:
        n = max(mu.support(side), lam.support(side))
        if sorted(_shift(mu.chain(side, n), n)) != sorted(_shift(lam.chain(side, n), n)):
            return False
    return True


def _assemble(flavor: Flavor, chains: Sequence[Sequence[int]]) -> Weight:
    return Weight.from_chains(flavor, *chains)


def _fin_up_states(state: State) -> Iterator[State]:
    return itertools.product(*(_chain_up_set(chain) for chain in state))


def fin_up_set(mu: Weight) -> frozenset:
    """The finite set ``{lam : mu <=_fin lam}``."""
    _check_integral(mu)
    return frozenset(_assemble(mu.flavor, s) for s in _fin_up_states(_state(mu)))


def fin_down_set_within(kappa: Weight, bounds: Sequence[int]) -> frozenset:
    """``{nu <=_fin kappa}`` restricted to per-chain support within ``bounds``.

    The full down-set is infinite; its restriction to a bounded support is not.
    """
    _check_integral(kappa)
    per_chain = [chain_down_set(chain, b) for chain, b in zip(_state(kappa), bounds)]
    return frozenset(_assemble(kappa.flavor, combo) for combo in itertools.product(*per_chain))


# ------------------------------------------------------------------ <=_inf


@dataclass(frozen=True)
class OrderStep:
    weight: Weight
    tag: str  # "start", "fin" or "gamma"
    k: int = 0

    def as_json(self) -> dict:
        out = {"weight": format_weight(self.weight), "step": self.tag}
        if self.tag == "gamma":
            out["k"] = self.k
        return out


@dataclass(frozen=True)
class OrderCert:
    """Witness chain from the smaller weight up to the larger one."""

    kind: str
    steps: tuple[OrderStep, ...] = field(default_factory=tuple)

    def as_json(self) -> dict:
        return {"kind": self.kind, "chain": [s.as_json() for s in self.steps]}


def verify_cert(cert: OrderCert) -> bool:
    """Check every consecutive pair of the witness chain against its tag."""
    if not cert.steps or cert.steps[0].tag != "start":
        return False
    for prev, step in zip(cert.steps, cert.steps[1:]):
        if step.tag == "fin":
            if not leq_fin(prev.weight, step.weight):
                return False
        elif step.tag == "gamma":
            gamma = prev.weight - step.weight
            if step.k < 1 or c_coeff(gamma.flavor, step.k, gamma) == 0:
                return False
        else:
            return False
    return cert.kind != "fin" or all(s.tag != "gamma" for s in cert.steps)


def _prefix(chain: Sequence[int], n: int) -> list[int]:
    return list(itertools.accumulate(chain[p] if p < len(chain) else 0 for p in range(n)))


def _lower_reach(w: Weight) -> tuple[int, ...]:
    """Per chain, the least ``n`` with ``min_{j<=i} ~w_j >= -i`` for every ``i > n``."""
    out = []
    for chain in w.chains():
        shifted = _shift(chain, len(chain))
        out.append(max([len(chain)] + [math.ceil(-b) - 1 for b in shifted]))
    return tuple(out)


def inf_envelope(mu: Weight, lam: Weight, widen: int = 0) -> tuple[int, ...]:
    """Per-chain support bound used when searching ``[mu, lam]`` for ``<=_inf``."""
    reach = _lower_reach(mu)
    return tuple(
        max(r + 1, mu.support(s), lam.support(s)) + 1 + widen
        for r, s in zip(reach, mu.flavor.sides)
    )


class _Envelope:
    """Support bounds and prefix-sum sandwich containing ``[mu, lam]`` for ``<=_inf``.

    Every upward step weakly raises all chain prefix sums, so each weight of
    the interval sits between the prefix sums of its endpoints.  States are
    tuples of integral chains.  All constraints except the degree act chain
    by chain, and the degree is controlled by the size of the gamma-steps,
    so moves are generated and filtered per chain and then combined.
    """

    def __init__(self, low: Weight, high: Weight, bounds: tuple[int, ...]):
        self.flavor = low.flavor
        self.bounds = bounds
        self.width = max(bounds)
        self.lo = [_prefix(c, self.width) for c in _state(low)]
        self.hi = [_prefix(c, self.width) for c in _state(high)]
        self.top_twice_degree = sum(map(sum, _state(high)))
        self.low_chains, self.high_chains = _state(low), _state(high)
        self._chain_ok: dict = {}
        self._fin_moves: dict = {}
        self._gamma_moves: dict = {}
        self._coeffs: dict = {}

    def chain_ok(self, side: int, chain: IntChain) -> bool:
        key = (side, chain)
        if key not in self._chain_ok:
            self._chain_ok[key] = self._check_chain(side, chain)
        return self._chain_ok[key]

    def _check_chain(self, side: int, chain: IntChain) -> bool:
        if len(chain) > self.bounds[side]:
            return False
        lo, hi = self.lo[side], self.hi[side]
        if not all(a <= x <= c for a, x, c in zip(lo, _prefix(chain, self.width), hi)):
            return False
        # a fin-step permutes the shifted values and a gamma-step raises some
        # of them, so every order statistic of the shifted chain is monotone
        below, above = self.low_chains[side], self.high_chains[side]
        n = max(self.width, *(_value_reach(c) for c in (chain, below, above)))
        mine = _order_statistics(chain, n)
        return all(a <= x <= c for a, x, c in zip(_order_statistics(below, n), mine, _order_statistics(above, n)))

    def admits(self, state: State) -> bool:
        if sum(map(sum, state)) > self.top_twice_degree:
            return False
        return all(self.chain_ok(side, chain) for side, chain in enumerate(state))

    def _fin(self, side: int, chain: IntChain) -> list[IntChain]:
        key = (side, chain)
        if key not in self._fin_moves:
            self._fin_moves[key] = [up for up in _chain_up_set(chain) if self.chain_ok(side, up)]
        return self._fin_moves[key]

    def _gamma(self, side: int, chain: IntChain, k: int) -> list[tuple[tuple, IntChain]]:
        """Admissible ``(content, raised chain)`` pairs for one chain and one ``k``."""
        key = (side, chain, k)
        if key not in self._gamma_moves:
            caps = [h - x for h, x in zip(self.hi[side], _prefix(chain, self.width))][: self.bounds[side]]
            moves = []
            for lift in _capped_vectors(weight_mass(self.flavor, k), caps):
                up = _lift(chain, lift)
                if self.chain_ok(side, up):
                    moves.append((lift, up))
            self._gamma_moves[key] = moves
        return self._gamma_moves[key]

    def _coeff(self, k: int, lifts: tuple) -> int:
        key = (k, tuple(tuple(sorted((v for v in lift if v), reverse=True)) for lift in lifts))
        if key not in self._coeffs:
            self._coeffs[key] = c_coeff_from_contents(self.flavor, k, key[1])
        return self._coeffs[key]

    def neighbours(self, state: State) -> Iterator[tuple[State, str, int]]:
        per_chain = [self._fin(side, chain) for side, chain in enumerate(state)]
        for up in itertools.product(*per_chain):
            if up != state:
                yield up, "fin", 0
        room = (self.top_twice_degree - sum(map(sum, state))) // 2
        for k in range(1, room + 1):
            per_chain = [self._gamma(side, chain, k) for side, chain in enumerate(state)]
            for moves in itertools.product(*per_chain):
                if self._coeff(k, tuple(lift for lift, _ in moves)):
                    yield tuple(up for _, up in moves), "gamma", k


def _value_reach(chain: IntChain) -> int:
    """Window past which every shifted tail value lies below all shifted entries."""
    return max([len(chain)] + [-v for v in _shift(chain, len(chain))])


def _order_statistics(chain: IntChain, n: int) -> list[int]:
    return sorted(_shift(chain, n), reverse=True)


def _lift(chain: IntChain, lift: Sequence[int]) -> IntChain:
    n = max(len(chain), len(lift))
    out = [(chain[p] if p < len(chain) else 0) + (lift[p] if p < len(lift) else 0) for p in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _capped_vectors(mass: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of total ``mass`` whose prefix sums stay below ``caps``."""
    n = len(caps)

    def rec(p: int, used: int, acc: list[int]):
        if p == n:
            if used == mass:
                yield tuple(acc)
            return
        for v in range(min(mass, caps[p]) - used, -1, -1):
            acc.append(v)
            yield from rec(p + 1, used + v, acc)
            acc.pop()

    yield from rec(0, 0, [])


def _comparable_bounds(mu: Weight, lam: Weight) -> bool:
    _same_flavor(mu, lam)
    diff = lam - mu
    if not diff.is_integral() or not same_block(mu, lam):
        return False
    gap = degree(lam) - degree(mu)
    if gap < 0 or gap.denominator != 1:
        return False
    n = max(max(mu.supports()), max(lam.supports()))
    for lo, hi in zip(_state(mu), _state(lam)):
        lo, hi = _prefix(lo, n), _prefix(hi, n)
        if any(a > b for a, b in zip(lo, hi)):
            return False
    return True


def _walk_up(env: _Envelope, start: State, depth: int | None):
    """0-1 BFS over upward moves; gamma-steps cost one, fin-steps nothing."""
    best = {start: 0}
    parent: dict[State, tuple[State, str, int]] = {}
    below: dict[State, set] = {start: set()}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        cost = best[state]
        for up, tag, k in env.neighbours(state):
            below.setdefault(up, set()).add(state)
            c = cost + (tag == "gamma")
            if (depth is not None and c > depth) or best.get(up, c + 1) <= c:
                continue
            best[up] = c
            parent[up] = (state, tag, k)
            if tag == "gamma":
                queue.append(up)
            else:
                queue.appendleft(up)
    return parent, below


def leq_inf(mu: Weight, lam: Weight, max_depth: int | None = None, widen: int = 0):
    """Decide ``mu <=_inf lam``; returns ``(holds, certificate or None)``.

    ``max_depth`` caps the number of gamma-steps and defaults to the degree
    gap, which no witness chain can exceed.
    """
    _check_integral(mu, lam)
    if mu == lam:
        return True, OrderCert("inf", (OrderStep(mu, "start"),))
    if not _comparable_bounds(mu, lam):
        return False, None
    gap = int(degree(lam) - degree(mu))
    depth = gap if max_depth is None else min(max_depth, gap)
    env = _Envelope(mu, lam, inf_envelope(mu, lam, widen))
    start, goal = _state(mu), _state(lam)
    parent, _ = _walk_up(env, start, depth)
    if goal not in parent:
        return False, None
    path = [goal]
    while path[-1] in parent:
        path.append(parent[path[-1]][0])
    path.reverse()
    steps = [OrderStep(mu, "start")]
    steps += [OrderStep(_assemble(mu.flavor, s), *parent[s][1:]) for s in path[1:]]
    return True, OrderCert("inf", tuple(steps))


def inf_interval(mu: Weight, lam: Weight, widen: int = 0) -> frozenset:
    """``{kappa : mu <=_inf kappa <=_inf lam}``, empty for incomparable pairs."""
    _check_integral(mu, lam)
    if mu == lam:
        return frozenset({mu})
    if not _comparable_bounds(mu, lam):
        return frozenset()
    env = _Envelope(mu, lam, inf_envelope(mu, lam, widen))
    goal = _state(lam)
    _, below = _walk_up(env, _state(mu), None)
    if goal not in below:
        return frozenset()
    found = {goal}
    queue = deque([goal])
    while queue:
        for down in below[queue.popleft()]:
            if down not in found:
                found.add(down)
                queue.append(down)
    return frozenset(_assemble(mu.flavor, s) for s in found)
