"""Symmetric groups: length, Bruhat order and Kazhdan-Lusztig polynomials.

Permutations are one-line tuples ``w = (w(1), ..., w(n))``.  Products act
on the left: ``(u * v)(i) = u(v(i))``, so ``s_i * w`` swaps the *values*
``i`` and ``i + 1`` in the one-line word.  Polynomials in ``q`` are tuples
of integer coefficients in increasing degree with no trailing zeros; the
zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from ._memo import memoized
from .config import SETTINGS
from .errors import ParseError, PreconditionError, ResourceBoundError

Permutation = tuple[int, ...]
Poly = tuple[int, ...]


def as_permutation(values: Iterable[int]) -> Permutation:
    w = tuple(int(v) for v in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PreconditionError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def parse_permutation(text: str) -> Permutation:
    body = (text or "").strip().strip("[]")
    try:
        values = [int(t) for t in body.split(",") if t.strip()]
        return as_permutation(values)
    except (ValueError, PreconditionError):
        raise ParseError(f"bad permutation {text!r}") from None


def format_permutation(w: Permutation) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise PreconditionError(f"s_{i} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Permutation, v: Permutation) -> Permutation:
    _same_window(u, v)
    return tuple(u[v[i] - 1] for i in range(len(v)))


def from_word(word: Sequence[int], n: int) -> Permutation:
    """Product ``s_{word[0]} s_{word[1]} ...`` as a permutation."""
    w = identity(n)
    for i in reversed(word):
        w = left_mult(i, w)
    return w


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w: Permutation) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def left_mult(i: int, w: Permutation) -> Permutation:
    """``s_i * w``: swap the values ``i`` and ``i + 1``."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def is_left_descent(i: int, w: Permutation) -> bool:
    return w.index(i + 1) < w.index(i)


def left_descents(w: Permutation) -> list[int]:
    return [i for i in range(1, len(w)) if is_left_descent(i, w)]


def _same_window(x: Permutation, w: Permutation) -> None:
    if len(x) != len(w):
        raise PreconditionError(f"window mismatch: S_{len(x)} vs S_{len(w)}")


def _rank_table(w: Permutation) -> list[list[int]]:
    """``r[i][j] = #{a <= i : w(a) > j}``."""
    n = len(w)
    table = [[0] * (n + 1)]
    for a in range(n):
        prev = table[-1]
        table.append([prev[j] + (1 if w[a] > j else 0) for j in range(n + 1)])
    return table


def bruhat_leq(x: Permutation, w: Permutation) -> bool:
    """Bruhat comparison by the rank-matrix criterion."""
    _same_window(x, w)
    if x == w:
        return True
    rx, rw = _rank_table(x), _rank_table(w)
    return all(a <= b for row_x, row_w in zip(rx, rw) for a, b in zip(row_x, row_w))


def _down_covers(w: Permutation) -> Iterable[Permutation]:
    n = len(w)
    for a in range(n):
        for b in range(a + 1, n):
            if w[a] > w[b] and not any(w[b] < w[c] < w[a] for c in range(a + 1, b)):
                z = list(w)
                z[a], z[b] = z[b], z[a]
                yield tuple(z)


@memoized("lower_interval")
def lower_interval(w: Permutation) -> frozenset:
    """All ``z <= w`` in Bruhat order."""
    seen = {w}
    queue = deque([w])
    while queue:
        for z in _down_covers(queue.popleft()):
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return frozenset(seen)


def _trim(p: list[int]) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(*polys: Poly) -> Poly:
    out = [0] * max((len(p) for p in polys), default=0)
    for p in polys:
        for i, c in enumerate(p):
            out[i] += c
    return _trim(out)


def poly_shift(p: Poly, k: int, scale: int = 1) -> Poly:
    return _trim([0] * k + [scale * c for c in p]) if p else ()


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_eval(p: Poly, q: int = 1) -> int:
    return sum(c * q**i for i, c in enumerate(p))


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else "q" if i == 1 else f"q^{i}"
        coef = str(c) if (c != 1 or i == 0) else ""
        terms.append(coef + mono)
    return " + ".join(terms)


def _kl_or_zero(x: Permutation, w: Permutation) -> Poly:
    return _kl(x, w) if bruhat_leq(x, w) else ()


def mu_coeff(z: Permutation, w: Permutation) -> int:
    """Coefficient of ``q^((l(w)-l(z)-1)/2)`` in ``P_{z,w}`` (0 when the gap is even)."""
    gap = length(w) - length(z)
    if gap <= 0 or gap % 2 == 0:
        return 0
    p = _kl_or_zero(z, w)
    top = (gap - 1) // 2
    return p[top] if top < len(p) else 0


def _kl_step(x: Permutation, w: Permutation, s: int) -> Poly:
    v = left_mult(s, w)
    sx = left_mult(s, x)
    c = 1 if is_left_descent(s, x) else 0
    total = poly_add(poly_shift(_kl_or_zero(sx, v), 1 - c), poly_shift(_kl_or_zero(x, v), c))
    lw = length(w)
    for z in lower_interval(v):
        if z == v or not is_left_descent(s, z):
            continue
        m = mu_coeff(z, v)
        if m and bruhat_leq(x, z):
            total = poly_add(total, poly_shift(_kl(x, z), (lw - length(z)) // 2, -m))
    return total


@memoized("kl")
def _kl(x: Permutation, w: Permutation) -> Poly:
    if x == w:
        return (1,)
    return _kl_step(x, w, left_descents(w)[0])


def _check_window(n: int) -> None:
    if n > SETTINGS.max_window:
        raise ResourceBoundError(f"window {n} exceeds max_window={SETTINGS.max_window}")


def kl_poly(x: Permutation, w: Permutation, descent: int | None = None) -> Poly:
    """Kazhdan-Lusztig polynomial ``P_{x,w}``; zero unless ``x <= w``.

    ``descent`` forces the left descent used at the top recursion step
    (deeper steps always use the smallest one).

    >>> kl_poly((1, 3, 2, 4), (3, 4, 1, 2))
    (1, 1)
    """
    x, w = as_permutation(x), as_permutation(w)
    _same_window(x, w)
    _check_window(len(w))
    if not bruhat_leq(x, w):
        return ()
    if descent is None or x == w:
        return _kl(x, w)
    if not is_left_descent(descent, w):
        raise PreconditionError(f"s_{descent} is not a left descent of {list(w)}")
    return _kl_step(x, w, descent)


def product_kl(xs: Sequence[Permutation], ws: Sequence[Permutation]) -> Poly:
    if len(xs) != len(ws):
        raise PreconditionError("factor count mismatch")
    out: Poly = (1,)
    for x, w in zip(xs, ws):
        out = poly_mul(out, kl_poly(x, w))
    return out


def all_permutations(n: int) -> list[Permutation]:
    return list(itertools.permutations(range(1, n + 1)))
