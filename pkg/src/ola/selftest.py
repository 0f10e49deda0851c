"""Oracle-agreement checks bundled for the ``selftest`` subcommand."""

from __future__ import annotations

import itertools
import random

from . import oracles
from .coxeter import all_permutations, bruhat_leq, kl_poly
from .multiplicities import finite_verma_mult
from .orders import fin_up_set
from .partitions import c_coeff, enumerate_R_k_in_window, kostka, partitions_of
from .weights import Flavor, Weight


def _compositions(total, parts):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cuts + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


def check_kostka(max_size):
    checked = failed = 0
    for n in range(max_size + 1):
        contents = list(_compositions(n, max(n, 1)))
        for mu in partitions_of(n):
            for gamma in contents:
                checked += 1
                failed += kostka(mu, gamma) != oracles.kostka_oracle(mu, gamma)
    return checked, failed


def check_kl(n):
    checked = failed = 0
    perms = all_permutations(n)
    for x, w in itertools.product(perms, repeat=2):
        if bruhat_leq(x, w):
            checked += 1
            failed += kl_poly(x, w) != oracles.kl_oracle(x, w)
    return checked, failed


def check_low_rank_verma(bound):
    checked = failed = 0
    for rank in (1, 2):
        entries = range(-bound, bound + 1)
        for lam in itertools.product(entries, repeat=rank + 1):
            shifted = [v - i - 1 for i, v in enumerate(lam)]
            for perm in set(itertools.permutations(shifted)):
                mu = tuple(v + i + 1 for i, v in enumerate(perm))
                checked += 1
                failed += finite_verma_mult([lam], [mu]) != oracles.low_rank_verma_oracle(rank, lam, mu)
    return checked, failed


def check_r_k(max_k, window):
    checked = failed = 0
    for flavor in Flavor:
        for k in range(max_k + 1):
            for gamma in enumerate_R_k_in_window(flavor, k, window):
                checked += 1
                failed += c_coeff(flavor, k, gamma) != oracles.pair_model_multiplicity(flavor, k, gamma)
    return checked, failed


def check_up_sets(samples, seed=0):
    rng = random.Random(seed)
    checked = failed = 0
    for _ in range(samples):
        flavor = rng.choice(list(Flavor))
        left = [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]
        right = [rng.randint(-2, 2) for _ in range(rng.randint(0, 2))] if flavor is Flavor.SL else []
        mu = Weight.from_chains(flavor, left, right)
        checked += 1
        failed += fin_up_set(mu) != oracles.up_set_oracle(mu, 6)
    return checked, failed


def run_selftest(quick: bool = True) -> dict:
    suites = {
        "kostka": check_kostka(5 if quick else 6),
        "kl": check_kl(4),
        "low_rank_verma": check_low_rank_verma(2 if quick else 4),
        "r_k_weights": check_r_k(2, 3),
        "fin_up_sets": check_up_sets(20 if quick else 60),
    }
    report = {name: {"checked": c, "failed": f} for name, (c, f) in suites.items()}
    return {"passed": all(f == 0 for _, f in suites.values()), "suites": report}
