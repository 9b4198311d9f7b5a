"""Finite posets and Moebius inversion over exact rationals."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotAPosetError


def poset_violation(leq):
    """First partial-order axiom violated by a boolean relation matrix, or None.

    Returns ("reflexive", (x,)), ("antisymmetric", (x, y)) or
    ("transitive", (x, y)) where y witnesses a missing x <= y.
    """
    m = len(leq)
    a = np.asarray(leq, dtype=bool)
    for x in range(m):
        if not a[x, x]:
            return ("reflexive", (x,))
    sym = a & a.T & ~np.eye(m, dtype=bool)
    if sym.any():
        x, y = np.argwhere(sym)[0]
        return ("antisymmetric", (int(x), int(y)))
    closure = (a.astype(np.int64) @ a.astype(np.int64)) > 0
    missing = closure & ~a
    if missing.any():
        x, y = np.argwhere(missing)[0]
        return ("transitive", (int(x), int(y)))
    return None


@dataclass(frozen=True)
class FinitePoset:
    m: int
    leq: tuple  # leq[x][y] is True iff x <= y

    def __post_init__(self):
        bad = poset_violation(self.leq)
        if bad is not None:
            raise NotAPosetError(*bad)

    def below(self, x):
        return [y for y in range(self.m) if self.leq[y][x]]

    def interval(self, x, y):
        return [z for z in range(self.m) if self.leq[x][z] and self.leq[z][y]]


def poset_from_matrix(leq) -> FinitePoset:
    return FinitePoset(len(leq), tuple(tuple(bool(v) for v in row) for row in leq))


@dataclass(frozen=True)
class MoebiusCache:
    values: dict  # (x, y) with x <= y -> Fraction

    def __call__(self, x, y):
        return self.values[(x, y)]


def moebius(P) -> MoebiusCache:
    """Moebius function of a finite poset.

    mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y, computed
    over comparable pairs in order of interval size.  Values are integers,
    stored as exact rationals.
    """
    values = {}
    for x in range(P.m):
        above = [y for y in range(P.m) if P.leq[x][y]]
        above.sort(key=lambda y: (len(P.interval(x, y)), y))
        for y in above:
            if y == x:
                values[(x, y)] = Fraction(1)
            else:
                values[(x, y)] = -sum(
                    (values[(x, z)] for z in P.interval(x, y) if z != y),
                    Fraction(0),
                )
    return MoebiusCache(values)


def sum_down(P, f):
    """g(x) = sum of f(y) over y <= x."""
    f = [Fraction(v) for v in f]
    return [sum((f[y] for y in P.below(x)), Fraction(0)) for x in range(P.m)]


def invert(P, g, cache=None):
    """Moebius inversion: recover f with f(x) = sum of mu(y, x) g(y) over y <= x."""
    if cache is None:
        cache = moebius(P)
    g = [Fraction(v) for v in g]
    return [
        sum((cache(y, x) * g[y] for y in P.below(x)), Fraction(0))
        for x in range(P.m)
    ]


def order_poset(structure, order="r") -> FinitePoset:
    """The natural order of an Ehresmann structure or category as a poset."""
    if order not in ("r", "l"):
        raise ValueError("order must be 'r' or 'l'")
    leq = structure.leq_r if order == "r" else structure.leq_l
    return poset_from_matrix(leq)
