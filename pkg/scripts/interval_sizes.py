"""Sizes of intervals [-k e_1, 0] in the infinite order, with search timing."""

import argparse
import time

from ola.orders import inf_interval
from ola.weights import Flavor, Weight


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=4)
    parser.add_argument("--widen", type=int, default=0)
    args = parser.parse_args()
    for flavor in Flavor:
        top = Weight.zero(flavor)
        for k in range(1, args.max_k + 1):
            step = 1 if flavor is Flavor.SL else 2
            bottom = Weight.of(flavor, {1: -k, -1: k} if flavor is Flavor.SL else {1: -step * k})
            start = time.perf_counter()
            size = len(inf_interval(bottom, top, widen=args.widen))
            print(f"{flavor.value} k={k}: |[{bottom}, 0]| = {size} ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
