"""Distinguished-semilattice structure on a finite semigroup.

Given a subsemilattice E of a semigroup S, two equivalences are defined by
identity sets: a is tilde-R related to b when a and b have the same set of
left identities from E, and dually tilde-L via right identities.  When every
tilde-R (tilde-L) class meets E exactly once, the unique representatives give
unary maps a -> a+ and a -> a*; if additionally (ab)+ = (ab+)+ and
(ab)* = (a*b)* hold for all a, b, the semigroup is Ehresmann with respect
to E and carries two natural partial orders:

    a <=_r b  iff  a = a+ b      (equivalently a = eb for some e in E)
    a <=_l b  iff  a = b a*      (equivalently a = be for some e in E)
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    ClassWithTwoIdempotentsError,
    ClassWithoutIdempotentError,
    CongruenceError,
    NotSubsemilatticeError,
)
from .reports import VerificationReport
from .semigroups import FiniteSemigroup, idempotents


@dataclass(frozen=True)
class EhresmannStructure:
    S: FiniteSemigroup
    E: tuple            # sorted indices of the distinguished semilattice
    plus: tuple         # a -> a+
    star: tuple         # a -> a*
    leq_r: tuple        # leq_r[a][b] iff a <=_r b
    leq_l: tuple

    @property
    def n(self):
        return self.S.n

    def __repr__(self):
        return f"EhresmannStructure(n={self.S.n}, |E|={len(self.E)})"


@dataclass(frozen=True)
class TildeClasses:
    r_classes: tuple    # tuples of element indices, sorted by least member
    l_classes: tuple
    h_classes: tuple
    r_index: tuple      # element -> position of its class in r_classes
    l_index: tuple
    h_index: tuple


def _group(keys):
    by_key = {}
    for x, k in enumerate(keys):
        by_key.setdefault(k, []).append(x)
    classes = sorted((tuple(v) for v in by_key.values()), key=lambda c: c[0])
    index = [0] * len(keys)
    for i, cls in enumerate(classes):
        for x in cls:
            index[x] = i
    return tuple(classes), tuple(index)


def tilde_relations(S, E) -> TildeClasses:
    """Partitions by equality of left / right identity sets from E."""
    t = S.table
    E = tuple(sorted(set(E)))
    left_ids = [frozenset(e for e in E if t[e][a] == a) for a in range(S.n)]
    right_ids = [frozenset(e for e in E if t[a][e] == a) for a in range(S.n)]
    r_classes, r_index = _group(left_ids)
    l_classes, l_index = _group(right_ids)
    h_classes, h_index = _group(list(zip(left_ids, right_ids)))
    return TildeClasses(r_classes, l_classes, h_classes, r_index, l_index, h_index)


def _subsemilattice_witness(S, E):
    t = S.table
    eset = set(E)
    for e in E:
        if t[e][e] != e:
            return ("not idempotent", (e,))
        for f in E:
            if t[e][f] != t[f][e]:
                return ("products do not commute", (e, f))
            if t[e][f] not in eset:
                return ("not closed", (e, f))
    return None


def derive_structure(S, E) -> EhresmannStructure:
    """Derive the +/* maps and both natural orders, or reject with a certificate.

    Requires each tilde-R and tilde-L class to meet E exactly once and the
    one-sided congruence identities (ab)+ = (ab+)+ and (ab)* = (a*b)* to hold.
    """
    E = tuple(sorted(set(E)))
    bad = _subsemilattice_witness(S, E)
    if bad is not None:
        raise NotSubsemilatticeError(*bad)
    tilde = tilde_relations(S, E)
    eset = set(E)
    n, t = S.n, S.table

    plus = [None] * n
    for cls in tilde.r_classes:
        reps = [e for e in cls if e in eset]
        if not reps:
            raise ClassWithoutIdempotentError("tilde-R", cls)
        if len(reps) > 1:
            raise ClassWithTwoIdempotentsError("tilde-R", cls, reps[0], reps[1])
        for a in cls:
            plus[a] = reps[0]
    star = [None] * n
    for cls in tilde.l_classes:
        reps = [e for e in cls if e in eset]
        if not reps:
            raise ClassWithoutIdempotentError("tilde-L", cls)
        if len(reps) > 1:
            raise ClassWithTwoIdempotentsError("tilde-L", cls, reps[0], reps[1])
        for a in cls:
            star[a] = reps[0]

    for a in range(n):
        for b in range(n):
            if plus[t[a][b]] != plus[t[a][plus[b]]]:
                raise CongruenceError("plus", a, b)
            if star[t[a][b]] != star[t[star[a]][b]]:
                raise CongruenceError("star", a, b)

    leq_r = tuple(tuple(a == t[plus[a]][b] for b in range(n)) for a in range(n))
    leq_l = tuple(tuple(a == t[b][star[a]] for b in range(n)) for a in range(n))
    return EhresmannStructure(S, E, tuple(plus), tuple(star), leq_r, leq_l)


# The thirteen identities characterizing the structures accepted by
# derive_structure, as (name, arity, check) with check returning bool.
def _variety_identities(t, plus, star):
    def p(x):
        return plus[x]

    def s(x):
        return star[x]

    return [
        ("x+ x = x", 1, lambda x: t[p(x)][x] == x),
        ("(x+ y+)+ = x+ y+", 2, lambda x, y: p(t[p(x)][p(y)]) == t[p(x)][p(y)]),
        ("x+ y+ = y+ x+", 2, lambda x, y: t[p(x)][p(y)] == t[p(y)][p(x)]),
        ("x+ (xy)+ = (xy)+", 2, lambda x, y: t[p(x)][p(t[x][y])] == p(t[x][y])),
        ("(xy)+ = (x y+)+", 2, lambda x, y: p(t[x][y]) == p(t[x][p(y)])),
        ("x x* = x", 1, lambda x: t[x][s(x)] == x),
        ("(x* y*)* = x* y*", 2, lambda x, y: s(t[s(x)][s(y)]) == t[s(x)][s(y)]),
        ("x* y* = y* x*", 2, lambda x, y: t[s(x)][s(y)] == t[s(y)][s(x)]),
        ("(xy)* y* = (xy)*", 2, lambda x, y: t[s(t[x][y])][s(y)] == s(t[x][y])),
        ("(xy)* = (x* y)*", 2, lambda x, y: s(t[x][y]) == s(t[s(x)][y])),
        ("x(yz) = (xy)z", 3, None),
        ("(x+)* = x+", 1, lambda x: s(p(x)) == p(x)),
        ("(x*)+ = x*", 1, lambda x: p(s(x)) == s(x)),
    ]


def check_variety(S, plus, star) -> VerificationReport:
    """Exhaustively sweep the thirteen defining identities for given +/* maps.

    The maps may be arbitrary assignments; each identity is reported with its
    lexicographically first failing instance.
    """
    n, t = S.n, S.table
    plus = tuple(plus)
    star = tuple(star)
    report = VerificationReport()
    for name, arity, check in _variety_identities(t, plus, star):
        witness = None
        if arity == 1:
            for x in range(n):
                if not check(x):
                    witness = {"x": x}
                    break
        elif arity == 2:
            for x in range(n):
                if witness:
                    break
                for y in range(n):
                    if not check(x, y):
                        witness = {"x": x, "y": y}
                        break
        else:
            a = np.asarray(t, dtype=np.int64)
            for x in range(n):
                left = a[a[x]]
                right = a[x][a]
                if not np.array_equal(left, right):
                    y, z = np.argwhere(left != right)[0]
                    witness = {"x": x, "y": int(y), "z": int(z)}
                    break
        report.add(name, witness is None, witness)
    return report


def is_left_restriction(ES):
    """Check ae = (ae)+ a for all a in S, e in E; returns (ok, witness)."""
    t = ES.S.table
    for a in range(ES.n):
        for e in ES.E:
            ae = t[a][e]
            if ae != t[ES.plus[ae]][a]:
                return False, (a, e)
    return True, None


def is_right_restriction(ES):
    """Check ea = a (ea)* for all a in S, e in E; returns (ok, witness)."""
    t = ES.S.table
    for a in range(ES.n):
        for e in ES.E:
            ea = t[e][a]
            if ea != t[a][ES.star[ea]]:
                return False, (a, e)
    return True, None


@dataclass(frozen=True)
class OrderContainment:
    l_in_r: bool
    l_in_r_witness: tuple | None
    r_in_l: bool
    r_in_l_witness: tuple | None
    left_restriction: bool
    right_restriction: bool

    @property
    def consistent(self):
        # left restriction forces <=_l inside <=_r, and dually
        ok = True
        if self.left_restriction:
            ok = ok and self.l_in_r
        if self.right_restriction:
            ok = ok and self.r_in_l
        return ok


def _containment(inner, outer):
    for a in range(len(inner)):
        for b in range(len(inner)):
            if inner[a][b] and not outer[a][b]:
                return False, (a, b)
    return True, None


def order_containment(ES) -> OrderContainment:
    """Containment status of the two natural orders, with witnesses."""
    l_in_r, w1 = _containment(ES.leq_l, ES.leq_r)
    r_in_l, w2 = _containment(ES.leq_r, ES.leq_l)
    left, _ = is_left_restriction(ES)
    right, _ = is_right_restriction(ES)
    return OrderContainment(l_in_r, w1, r_in_l, w2, left, right)


def maximal_subsemilattices(S, limit=24):
    """All maximal subsemilattices, as sorted tuples of idempotent indices.

    A maximal set of pairwise-commuting idempotents is automatically closed
    under the product, so these are the maximal cliques of the commuting
    graph on E(S).  Intended for small inputs only.
    """
    elems = sorted(idempotents(S))
    if len(elems) > limit:
        raise ValueError(f"too many idempotents ({len(elems)}) for enumeration")
    t = S.table
    adj = {e: {f for f in elems if f != e and t[e][f] == t[f][e]} for e in elems}
    cliques = []

    def extend(r, p, x):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p), default=None)
        for v in sorted(p - adj[pivot]):
            extend(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    extend(set(), set(elems), set())
    return sorted(cliques)
