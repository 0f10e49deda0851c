"""Check that [M_n(lam):L(mu)] stops changing as the window n grows."""

import argparse
import random
import time
from collections import Counter

from ola.multiplicities import stable_mult
from ola.orders import fin_up_set
from ola.weights import Flavor, Weight, format_weight


def random_weight(rng, flavor, support):
    left = [rng.randint(-3, 3) for _ in range(rng.randint(0, support))]
    right = [rng.randint(-3, 3) for _ in range(rng.randint(0, support))] if flavor is Flavor.SL else []
    return Weight.from_chains(flavor, left, right)


def rearranged_orbit(rng, flavor, support):
    """A dot-rearrangement of a dominant weight; these carry multiplicities above 1."""
    chains = []
    for _ in flavor.sides:
        shifted = sorted((rng.randint(0, 3) for _ in range(support)), reverse=True)
        shifted = [v - i - 1 for i, v in enumerate(shifted)]
        rng.shuffle(shifted)
        chains.append([v + i + 1 for i, v in enumerate(shifted)])
    return Weight.from_chains(flavor, *chains)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--support", type=int, default=4)
    parser.add_argument("--extra", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    values, unstable = Counter(), []
    start = time.perf_counter()
    for _ in range(args.pairs):
        flavor = rng.choice(list(Flavor))
        make = rearranged_orbit if rng.random() < 0.5 else random_weight
        mu = make(rng, flavor, args.support)
        lam = rng.choice(sorted(fin_up_set(mu), key=Weight.sort_key))
        series = [stable_mult(lam, mu, extra=e) for e in range(args.extra + 1)]
        values[series[0]] += 1
        if len(set(series)) > 1:
            unstable.append((format_weight(lam), format_weight(mu), series))
    print(f"{args.pairs} pairs in {time.perf_counter() - start:.1f}s, values {dict(sorted(values.items()))}")
    print(f"unstable: {unstable or 'none'}")


if __name__ == "__main__":
    main()
