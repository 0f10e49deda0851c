"""Print every nontrivial Kazhdan-Lusztig polynomial P_{x,w} in S_n."""

import argparse

from ola.coxeter import all_permutations, bruhat_leq, format_permutation, format_poly, kl_poly


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    args = parser.parse_args()
    perms = all_permutations(args.n)
    comparable = nontrivial = 0
    for w in perms:
        for x in perms:
            if not bruhat_leq(x, w):
                continue
            comparable += 1
            p = kl_poly(x, w)
            if p != (1,):
                nontrivial += 1
                print(f"P[{format_permutation(x)}, {format_permutation(w)}] = {format_poly(p)}")
    print(f"S_{args.n}: {comparable} comparable pairs, {nontrivial} nontrivial polynomials")


if __name__ == "__main__":
    main()
