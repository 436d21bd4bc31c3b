"""Numerical semigroups: membership, factorizations, Frobenius numbers."""

import heapq
from functools import reduce
from math import gcd

from mohlab.errors import NoGaps


class NumericalSemigroup:
    """The additive monoid generated by coprime positive integers."""

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise ValueError(f"gcd of {gens} is not 1")
        self.generators = tuple(gens)
        self._apery = None

    def __repr__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def apery(self):
        """Apery set w.r.t. the smallest generator: least element per residue class."""
        if self._apery is None:
            n = self.generators[0]
            best = [None] * n
            best[0] = 0
            heap = [(0, 0)]
            while heap:
                w, res = heapq.heappop(heap)
                if w > best[res]:
                    continue
                for g in self.generators[1:]:
                    nw = w + g
                    nr = nw % n
                    if best[nr] is None or nw < best[nr]:
                        best[nr] = nw
                        heapq.heappush(heap, (nw, nr))
            self._apery = tuple(best)
        return self._apery

    def __contains__(self, r):
        return contains(self, r)


def contains(S, r):
    if r < 0:
        return False
    return r >= S.apery()[r % S.generators[0]]


def factorizations(S, r):
    """All exponent vectors a with sum(a_i * n_i) == r, in lexicographic order.

    The vectors follow the order of ``S.generators`` (ascending).
    """
    if r < 0:
        return []
    gens = S.generators
    out = []

    def rec(i, rest, prefix):
        if i == len(gens) - 1:
            if rest % gens[i] == 0:
                out.append(tuple(prefix) + (rest // gens[i],))
            return
        for a in range(rest // gens[i] + 1):
            rec(i + 1, rest - a * gens[i], prefix + [a])

    rec(0, r, [])
    return out


def frobenius(S):
    """Largest integer outside S."""
    if S.generators[0] == 1:
        raise NoGaps(f"{S} contains 1 and has no gaps")
    return max(S.apery()) - S.generators[0]


def gaps(S):
    if S.generators[0] == 1:
        return []
    return [r for r in range(1, frobenius(S) + 1) if not contains(S, r)]
