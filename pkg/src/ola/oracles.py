"""Slow, independent reference implementations used to validate the fast paths.

Nothing here imports the fast-path modules (``partitions``, ``coxeter``,
``orders``, ``multiplicities``) or their memo tables; each oracle follows
a different algorithm from its fast counterpart:

* Kostka numbers by listing semistandard tableaux row by row.
* KL polynomials from R-polynomials through the defining inversion identity.
* Verma multiplicities for sl(2)/sl(3) from closed forms, and for gl(n),
  n <= 4, from ranks of the Shapovalov form on words in the lowering
  generators.
* Weight multiplicities of ``R(oo, k)`` by counting multisets of basis pairs.
* Root-lattice membership by integer row reduction of the root vectors.
* Finite up-sets by scanning every rearrangement of a generous window.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import PreconditionError, ResourceBoundError
from .weights import Flavor, Weight

# ---------------------------------------------------------------- tableaux


def _rows_with_content(row_len, prev_row, counts, n_letters):
    """Weakly increasing rows of ``row_len`` letters strictly below ``prev_row``."""

    def rec(pos, low, acc):
        if pos == row_len:
            yield tuple(acc)
            return
        for letter in range(low, n_letters + 1):
            if counts[letter] == 0:
                continue
            if prev_row is not None and prev_row[pos] >= letter:
                continue
            counts[letter] -= 1
            acc.append(letter)
            yield from rec(pos + 1, letter, acc)
            acc.pop()
            counts[letter] += 1

    yield from rec(0, 1, [])


def ssyt(shape, content):
    """Yield every semistandard tableau (tuple of rows) with given shape and content."""
    shape = tuple(shape)
    counts = [0] + list(content)
    n_letters = len(content)

    def rec(r, prev_row, rows):
        if r == len(shape):
            if all(c == 0 for c in counts):
                yield tuple(rows)
            return
        # the row generator keeps its letters removed from ``counts`` while suspended
        for row in _rows_with_content(shape[r], prev_row, counts, n_letters):
            rows.append(row)
            yield from rec(r + 1, row, rows)
            rows.pop()

    if sum(shape) != sum(content):
        return
    yield from rec(0, None, [])


def kostka_oracle(mu, gamma) -> int:
    if sum(gamma) > 12:
        raise ResourceBoundError("kostka_oracle is limited to |mu| <= 12")
    return sum(1 for _ in ssyt(mu, gamma))


# ------------------------------------------------------- KL via R-polynomials


def _inv_count(w):
    # bubble sort swap count
    arr, swaps = list(w), 0
    for end in range(len(arr) - 1, 0, -1):
        for i in range(end):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps += 1
    return swaps


def _tableau_leq(x, w):
    """Bruhat order via sorted prefixes (Ehresmann's tableau criterion)."""
    for i in range(1, len(w)):
        if any(a > b for a, b in zip(sorted(x[:i]), sorted(w[:i]))):
            return False
    return True


def _right_swap(w, i):
    w = list(w)
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def r_polynomial(x, w):
    if not _tableau_leq(x, w):
        return ()
    if x == w:
        return (1,)
    i = next(i for i in range(len(w) - 1) if w[i] > w[i + 1])
    ws, xs = _right_swap(w, i), _right_swap(x, i)
    if x[i] > x[i + 1]:
        return r_polynomial(xs, ws)
    return _strip(_padd(_pmul([-1, 1], r_polynomial(x, ws)), _pmul([0, 1], r_polynomial(xs, ws))))


@lru_cache(maxsize=None)
def _kl_column(w):
    """``{y: P_{y,w}}`` for every ``y <= w``, solved from the top down."""
    n = len(w)
    below = [y for y in itertools.permutations(range(1, n + 1)) if _tableau_leq(y, w)]
    below.sort(key=_inv_count, reverse=True)
    lw = _inv_count(w)
    column = {}
    for x in below:
        if x == w:
            column[x] = (1,)
            continue
        rhs = []
        for y in below:
            if y != x and y in column and _tableau_leq(x, y):
                rhs = _padd(rhs, _pmul(list(r_polynomial(x, y)), list(column[y])))
        gap = lw - _inv_count(x)
        column[x] = _strip([-c for i, c in enumerate(rhs) if 2 * i < gap])
    return column


def kl_oracle(x, w):
    x, w = tuple(x), tuple(w)
    if len(x) != len(w):
        raise PreconditionError("window mismatch")
    if len(w) > 5:
        raise ResourceBoundError("kl_oracle is limited to S_5")
    return _kl_column(w).get(x, ())


# --------------------------------------------------------- low-rank Verma


def _shifted(entries):
    return [Fraction(v) - (i + 1) for i, v in enumerate(entries)]


def low_rank_verma_oracle(rank: int, lam_fin, mu_fin) -> int:
    """``[M(lam):L(mu)]`` for gl(rank + 1) by closed forms (rank 1 or 2)."""
    if rank not in (1, 2):
        raise PreconditionError("low_rank_verma_oracle handles rank 1 or 2")
    if len(lam_fin) != rank + 1 or len(mu_fin) != rank + 1:
        raise PreconditionError("entry count must be rank + 1")
    lam = [Fraction(v) for v in lam_fin]
    mu = [Fraction(v) for v in mu_fin]
    if lam == mu:
        return 1
    a, b = _shifted(lam), _shifted(mu)
    if rank == 1:
        h = a[0] - a[1]
        return int(h.denominator == 1 and h > 0 and b == [a[1], a[0]])
    if any(v.denominator != 1 for v in lam + mu):
        raise PreconditionError("the sl(3) closed form is only used for integral weights")
    if sorted(a) != sorted(b):
        return 0
    d = [x - y for x, y in zip(lam, mu)]
    return int(d[0] >= 0 and d[0] + d[1] >= 0 and sum(d) == 0)


# ------------------------------------------------ Shapovalov-form oracle


def _bareiss_rank(rows):
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, n_cols):
                row_r[c] = (row_r[c] * piv - factor * row_p[c]) // prev
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def _words(content):
    letters = [a for a, c in enumerate(content) for _ in range(c)]
    return sorted(set(itertools.permutations(letters)))


def _lowering_rank(top, depth):
    """Rank of the contravariant form on ``M(top)`` at weight ``top - depth``.

    ``top`` holds the values ``<top, alpha_a^vee>`` for the simple roots and
    ``depth`` the simple-root coordinates.  The rank is the dimension of the
    corresponding weight space of the simple quotient.
    """
    n_simple = len(top)
    if any(c < 0 for c in depth):
        return 0
    if not any(depth):
        return 1
    words = _words(depth)

    def coroot_pairing(a, word):
        # <top - sum of roots in word, alpha_a^vee> in the Cartan matrix of type A
        val = top[a]
        for j in word:
            val -= 2 if j == a else (-1 if abs(j - a) == 1 else 0)
        return val

    @lru_cache(maxsize=None)
    def pairing(raising, word):
        # <v0, e_{raising[-1]} ... e_{raising[0]} f_word v0>
        if not raising:
            return Fraction(1) if not word else Fraction(0)
        a, rest = raising[0], raising[1:]
        total = Fraction(0)
        for t, j in enumerate(word):
            if j == a:
                coeff = coroot_pairing(a, word[t + 1:])
                if coeff:
                    total += coeff * pairing(rest, word[:t] + word[t + 1:])
        return total

    gram = [[pairing(tuple(u), tuple(v)) for v in words] for u in words]
    denom = 1
    for row in gram:
        for entry in row:
            denom = denom * entry.denominator // gcd(denom, entry.denominator)
    return _bareiss_rank([[int(e * denom) for e in row] for row in gram])


def _kostant(depth, n):
    roots = [tuple(1 if i <= k < j else 0 for k in range(n - 1)) for i in range(n - 1) for j in range(i + 1, n)]

    @lru_cache(maxsize=None)
    def count(rest, start):
        if not any(rest):
            return 1
        total = 0
        for r in range(start, len(roots)):
            nxt = tuple(x - y for x, y in zip(rest, roots[r]))
            if min(nxt) >= 0:
                total += count(nxt, r)
        return total

    return count(tuple(depth), 0)


def shapovalov_verma_oracle(lam_fin, mu_fin) -> int:
    """``[M(lam):L(mu)]`` for gl(n), n <= 4, by peeling characters.

    Rational (also non-integral) entries are accepted.
    """
    lam = [Fraction(v) for v in lam_fin]
    mu = [Fraction(v) for v in mu_fin]
    n = len(lam)
    if len(mu) != n:
        raise PreconditionError("entry count mismatch")
    if n > 4:
        raise ResourceBoundError("shapovalov_verma_oracle is limited to gl(4)")
    diff = [x - y for x, y in zip(lam, mu)]
    if any(d.denominator != 1 for d in diff) or sum(diff) != 0:
        return 0
    target = []
    running = Fraction(0)
    for d in diff[:-1]:
        running += d
        target.append(int(running))
    if any(t < 0 for t in target):
        return 0

    def pairings(depth):
        w = list(lam)
        for a, c in enumerate(depth):
            w[a] -= c
            w[a + 1] += c
        return tuple(w[a] - w[a + 1] for a in range(n - 1))

    box = sorted(itertools.product(*(range(t + 1) for t in target)), key=sum)
    mult = {}
    for eta in box:
        inner = 0
        for theta, m in mult.items():
            if m and all(t <= e for t, e in zip(theta, eta)):
                inner += m * _lowering_rank(pairings(theta), tuple(e - t for e, t in zip(eta, theta)))
        mult[eta] = _kostant(eta, n) - inner
    return mult[tuple(target)]


# ------------------------------------------------ R(oo, k) by pair counting


def pair_model_multiplicity(flavor, k: int, gamma: Weight) -> int:
    """Multiplicity of ``gamma`` in ``S^k`` of the pair module, by counting multisets.

    For ``sl`` a pair ``(i, -j)`` has weight ``-e_i + e_{-j}``; for ``o`` the
    pairs are ``{i <= j}`` and for ``sp`` they are ``{i < j}``, each of weight
    ``-e_i - e_j``.
    """
    flavor = Flavor.parse(flavor)
    demand = {}
    for i, v in gamma.coeffs:
        if v.denominator != 1:
            return 0
        demand[i] = int(v) if i < 0 else -int(v)
    if any(c < 0 for c in demand.values()):
        return 0
    idx = sorted(demand)
    if flavor is Flavor.SL:
        pairs = [(i, j) for i in idx if i > 0 for j in idx if j < 0]
    elif flavor is Flavor.O:
        pairs = [(i, j) for a, i in enumerate(idx) for j in idx[a:]]
    else:
        pairs = [(i, j) for a, i in enumerate(idx) for j in idx[a + 1:]]
    count = 0
    for multiset in itertools.combinations_with_replacement(pairs, k):
        acc = Counter()
        for i, j in multiset:
            acc[i] += 1
            acc[j] += 1
        if acc == Counter(demand):
            count += 1
    return count


# ------------------------------------------------ root lattice membership


def _roots(flavor, indices):
    out = []
    for a, b in itertools.permutations(indices, 2):
        if flavor is Flavor.SL:
            out.append({a: 1, b: -1})
        else:
            out.append({a: 1, b: -1})
            out.append({a: 1, b: 1})
    if flavor is Flavor.SP:
        out.extend({a: 2} for a in indices)
    return out


def in_root_lattice(flavor, vec: Weight) -> bool:
    """Decide ``vec in Q`` by integer row reduction of the root vectors."""
    flavor = Flavor.parse(flavor)
    if any(v.denominator != 1 for _, v in vec.coeffs):
        return False
    support = [i for i, _ in vec.coeffs]
    spare = [i for i in range(1, 100) if i not in support][:2]
    if flavor is Flavor.SL:
        spare += [i for i in range(-1, -100, -1) if i not in support][:1]
    indices = sorted(set(support) | set(spare))
    cols = {i: c for c, i in enumerate(indices)}
    rows = []
    for r in _roots(flavor, indices):
        row = [0] * len(indices)
        for i, v in r.items():
            row[cols[i]] = v
        rows.append(row)
    # Hermite-style echelon form by repeated gcd steps
    basis = []
    for col in range(len(indices)):
        pivot_rows = [r for r in rows if r[col] != 0]
        rows = [r for r in rows if r[col] == 0]
        while len(pivot_rows) > 1:
            pivot_rows.sort(key=lambda r: abs(r[col]))
            p = pivot_rows[0]
            rest = []
            for r in pivot_rows[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                (rest if r[col] != 0 else rows).append(r)
            pivot_rows = [p] + rest
        if pivot_rows:
            basis.append((col, pivot_rows[0]))
    target = [0] * len(indices)
    for i, v in vec.coeffs:
        target[cols[i]] = int(v)
    for col, row in basis:
        if target[col] % row[col]:
            return False
        q = target[col] // row[col]
        target = [x - q * y for x, y in zip(target, row)]
    return not any(target)


# ------------------------------------------------ finite up-sets by scanning


def up_set_oracle(mu: Weight, window: int) -> set:
    """``mu^+_fin`` by trying every rearrangement of ``mu + rho`` on ``window`` positions per chain."""
    if window > 7:
        raise ResourceBoundError("up_set_oracle is limited to 7 positions per chain")
    flavor = mu.flavor
    per_chain = []
    for side in flavor.sides:
        if side == "L":
            vals = [mu[i] for i in range(1, window + 1)]
        else:
            vals = [-mu[-j] for j in range(1, window + 1)]
        shifted = [v - (p + 1) for p, v in enumerate(vals)]
        found = set()
        for arrangement in set(itertools.permutations(shifted)):
            cand = [a + (p + 1) for p, a in enumerate(arrangement)]
            running, ok = Fraction(0), True
            for c, v in zip(cand, vals):
                running += c - v
                if running < 0:
                    ok = False
                    break
            if ok:
                found.add(tuple(cand))
        per_chain.append(found)
    out = set()
    for combo in itertools.product(*per_chain):
        items = []
        for side, coords in zip(flavor.sides, combo):
            for p, c in enumerate(coords, start=1):
                items.append((p, c) if side == "L" else (-p, -c))
        out.add(Weight.of(flavor, items))
    return out
