"""Degree layers of the standard object W(lam) for each flavor.

Prints [W(lam):L(lam + gamma)] for gamma in R_k within a window, and the
histogram of values per layer.
"""

import argparse
from collections import Counter

from ola.multiplicities import layer_mults
from ola.weights import Flavor, format_weight, parse_weight


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lam", default="0")
    parser.add_argument("--max-k", type=int, default=2)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()
    for flavor in Flavor:
        lam = parse_weight(args.lam, flavor) if flavor is Flavor.SL or ":-" not in args.lam else None
        if lam is None:
            continue
        for k in range(args.max_k + 1):
            table = layer_mults(lam, k, args.window).as_dict()
            hist = Counter(table.values())
            print(f"{flavor.value} k={k}: {len(table)} simples, values {dict(sorted(hist.items()))}")
            if args.verbose:
                for nu, m in sorted(table.items(), key=lambda kv: kv[0].sort_key()):
                    print(f"    L({format_weight(nu) or 0}) x{m}")


if __name__ == "__main__":
    main()
