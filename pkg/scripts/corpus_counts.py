"""Tabulate poset counts, downset-lattice sizes and free distributive lattice sizes.

Each count from the library is printed next to its brute-force oracle.

    python scripts/corpus_counts.py --max-poset 5 --max-vars 4
"""

import argparse
from collections import Counter

from latticemed.oracles import free_dl_count_bruteforce, posets_naive
from latticemed.posets import corpus, enumerate_posets
from latticemed.terms import free_dl_count


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-poset", type=int, default=5)
    parser.add_argument("--max-vars", type=int, default=4)
    args = parser.parse_args()

    print("p  posets  naive")
    for p in range(args.max_poset + 1):
        print(f"{p}  {len(enumerate_posets(p)):6d}  {len(posets_naive(p)):5d}")

    sizes = Counter(L.size for _, L in corpus(args.max_poset))
    print("\nlattice size  count")
    for size in sorted(sizes):
        print(f"{size:12d}  {sizes[size]:5d}")

    print("\nv  free DL  monotone functions")
    for v in range(1, args.max_vars + 1):
        print(f"{v}  {free_dl_count(v):7d}  {free_dl_count_bruteforce(v):7d}")


if __name__ == "__main__":
    main()
