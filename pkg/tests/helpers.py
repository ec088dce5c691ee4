"""Brute-force reference helpers shared by the tests.

These deliberately avoid the package's Apéry/Dijkstra machinery.
"""

from math import gcd
from functools import reduce


def sieve(gens, bound):
    """Elements of <gens> up to ``bound`` by a plain reachability sieve."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for x in range(1, bound + 1):
        reach[x] = any(x >= a and reach[x - a] for a in gens)
    return reach


def brute_gaps(gens):
    gens = sorted(gens)
    assert reduce(gcd, gens) == 1
    bound = gens[0] * gens[-1]
    reach = sieve(gens, bound)
    return tuple(x for x in range(bound + 1) if not reach[x])


def brute_min_generators(gaps):
    gapset = set(gaps)
    top = (max(gaps) if gaps else 0) + 1
    top = top + min(x for x in range(1, top + 2) if x not in gapset)
    elems = [x for x in range(1, top + 1) if x not in gapset]
    inS = lambda x: x >= 0 and x not in gapset
    return tuple(s for s in elems if not any(inS(s - t) for t in elems if 0 < t < s))
