#!/usr/bin/env python3
"""Isomorphism class counts of 3-uniform hypergraphs on n labeled vertices.

Counts orbits of edge sets under vertex permutations with Burnside's lemma:
each permutation fixes 2^(number of cycles it induces on triples) edge sets.
Writes `n count` lines; the test fixture tests/data/class_counts.txt is the
output of `scripts/class_counts.py 7`.
"""
import itertools
import math
import sys


def triple_cycles(perm):
    seen = set()
    cycles = 0
    for t in itertools.combinations(range(len(perm)), 3):
        if t in seen:
            continue
        cycles += 1
        cur = t
        while cur not in seen:
            seen.add(cur)
            cur = tuple(sorted(perm[v] for v in cur))
    return cycles


def class_count(n):
    total = sum(2 ** triple_cycles(p) for p in itertools.permutations(range(n)))
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    for n in range(top + 1):
        print(n, class_count(n))


if __name__ == "__main__":
    main()
