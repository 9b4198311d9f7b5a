"""Generators for the worked examples, each emitting a ready Ehresmann structure.

Conventions, fixed so that element indices in golden files stay stable:

* Functions and morphisms compose left to right: (f*g)(x) = g(f(x)), and
  relations compose as R*Q = {(i,k) : (i,j) in R, (j,k) in Q}.
* Partial maps on n points are image vectors over {0..n-1, undefined}; the
  vector is encoded as a base-(n+1) integer with digit n meaning "undefined",
  which orders elements lexicographically by image vector with undefined last.
* Binary relations on n points are bitmasks over pairs, bit (i*n + j) for
  (i, j); the mask itself is the element index.
* Strong-semilattice elements are (component, member) pairs flattened in
  component-major order.
"""

from itertools import product as iproduct

from .ehresmann import EhresmannStructure, derive_structure
from .errors import IncompatibleMapsError, NotClosedError
from .semigroups import (
    FiniteSemigroup,
    identity_of,
    opposite,
    product,
    subsemigroup,
    validate,
)

PT_MAX = 5
B_MAX = 3  # a dense table for all binary relations on 4 points would need 2^32 entries
T_MAX = 5


def _pt_name(vec, n):
    return "(" + ",".join("-" if v == n else str(v + 1) for v in vec) + ")"


def _pt_table(n, vectors):
    index = {v: i for i, v in enumerate(vectors)}
    table = []
    for f in vectors:
        row = []
        for g in vectors:
            fg = tuple(g[f[x]] if f[x] != n else n for x in range(n))
            row.append(index[fg])
        table.append(row)
    return table, index


def pt_n(n) -> EhresmannStructure:
    """All partial functions on n points; E is the partial identities."""
    if not 1 <= n <= PT_MAX:
        raise ValueError(f"pt_n supports 1 <= n <= {PT_MAX}")
    vectors = list(iproduct(range(n + 1), repeat=n))
    table, index = _pt_table(n, vectors)
    names = tuple(_pt_name(v, n) for v in vectors)
    S = validate(table, names)
    identities = [
        index[tuple(x if x in A else n for x in range(n))]
        for A in _subsets(range(n))
    ]
    return derive_structure(S, identities)


def t_n(n) -> FiniteSemigroup:
    """All total functions on n points; a building block, no distinguished E."""
    if not 1 <= n <= T_MAX:
        raise ValueError(f"t_n supports 1 <= n <= {T_MAX}")
    vectors = list(iproduct(range(n), repeat=n))
    index = {v: i for i, v in enumerate(vectors)}
    table = [
        [index[tuple(g[f[x]] for x in range(n))] for g in vectors]
        for f in vectors
    ]
    names = tuple(_pt_name(v, n) for v in vectors)
    return validate(table, names)


def _subsets(points):
    points = list(points)
    out = [frozenset()]
    for p in points:
        out += [s | {p} for s in out]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _relation_name(mask, n):
    pairs = [(i + 1, j + 1) for i in range(n) for j in range(n) if mask >> (i * n + j) & 1]
    if not pairs:
        return "{}"
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(pairs)) + "}"


def b_n(n) -> EhresmannStructure:
    """All binary relations on n points; E is the partial identities."""
    if not 1 <= n <= B_MAX:
        raise ValueError(f"b_n supports 1 <= n <= {B_MAX}")
    size = 1 << (n * n)
    rows = [
        [(mask >> (i * n)) & ((1 << n) - 1) for i in range(n)]
        for mask in range(size)
    ]
    table = []
    for r in rows:
        row = []
        for q_mask in range(size):
            qrows = rows[q_mask]
            out = 0
            for i in range(n):
                acc = 0
                bits = r[i]
                j = 0
                while bits:
                    if bits & 1:
                        acc |= qrows[j]
                    bits >>= 1
                    j += 1
                out |= acc << (i * n)
            row.append(out)
        table.append(row)
    names = tuple(_relation_name(m, n) for m in range(size))
    S = validate(table, names)
    identities = [sum(1 << (i * n + i) for i in A) for A in _subsets(range(n))]
    return derive_structure(S, identities)


def relation_mask(pairs, n) -> int:
    """Index of a relation given as 1-based pairs, e.g. [(1,1),(1,2)]."""
    mask = 0
    for i, j in pairs:
        mask |= 1 << ((i - 1) * n + (j - 1))
    return mask


def strong_semilattice(Y, monoids, maps) -> EhresmannStructure:
    """Strong semilattice of monoids over the semilattice Y.

    Y is a finite semigroup that must be a commutative band; monoids[k] is the
    monoid sitting at element k of Y; maps[(a, b)] lists the image of each
    member of monoids[a] in monoids[b], for every strictly comparable a > b.
    The maps must be monoid homomorphisms compatible along chains; the product
    pushes both factors down to the meet component.
    """
    ny = Y.n
    if any(Y.table[a][a] != a or Y.table[a][b] != Y.table[b][a]
           for a in range(ny) for b in range(ny)):
        raise ValueError("Y is not a semilattice")
    if len(monoids) != ny:
        raise ValueError("need one monoid per element of Y")
    units = []
    for k, M in enumerate(monoids):
        e = identity_of(M)
        if e is None:
            raise ValueError(f"component {k} has no identity")
        units.append(e)

    def connecting(a, b):
        if a == b:
            return list(range(monoids[a].n))
        m = maps.get((a, b))
        if m is None:
            raise IncompatibleMapsError("missing map", (a, b))
        return m

    for (a, b), m in maps.items():
        if Y.table[a][b] != b or a == b:
            raise IncompatibleMapsError("map given for incomparable pair", (a, b))
        if len(m) != monoids[a].n or any(not 0 <= v < monoids[b].n for v in m):
            raise IncompatibleMapsError("map has wrong shape", (a, b))
        if m[units[a]] != units[b]:
            raise IncompatibleMapsError("map does not preserve the identity", (a, b))
        for x in range(monoids[a].n):
            for y in range(monoids[a].n):
                if m[monoids[a].table[x][y]] != monoids[b].table[m[x]][m[y]]:
                    raise IncompatibleMapsError("map is not a homomorphism", (a, b, x, y))
    for a in range(ny):
        for b in range(ny):
            for c in range(ny):
                if Y.table[a][b] == b and Y.table[b][c] == c and a != b and b != c:
                    mab, mbc, mac = connecting(a, b), connecting(b, c), connecting(a, c)
                    for x in range(monoids[a].n):
                        if mbc[mab[x]] != mac[x]:
                            raise IncompatibleMapsError("maps do not compose", (a, b, c))

    offsets = []
    total = 0
    for M in monoids:
        offsets.append(total)
        total += M.n
    table = [[0] * total for _ in range(total)]
    names = []
    for a in range(ny):
        for x in range(monoids[a].n):
            names.append(f"({a},{monoids[a].name(x)})")
            for b in range(ny):
                mab = connecting(a, Y.table[a][b])
                for y in range(monoids[b].n):
                    c = Y.table[a][b]
                    mbc = connecting(b, c)
                    val = monoids[c].table[mab[x]][mbc[y]]
                    table[offsets[a] + x][offsets[b] + y] = offsets[c] + val
    S = validate(table, names)
    return derive_structure(S, [offsets[a] + units[a] for a in range(ny)])


def cyclic_group(k) -> FiniteSemigroup:
    if k < 1:
        raise ValueError("k must be positive")
    names = tuple(f"g{i}" for i in range(k))
    return validate([[(i + j) % k for j in range(k)] for i in range(k)], names)


def six_element_example() -> EhresmannStructure:
    """The six-element subsemigroup of T2 x T2-op built from constants and identities.

    Elements, in order: (1,1), (2,1), (1,2), (2,2), (1,id), (id,1) where a
    digit stands for the constant map to that point.  E is the first, fifth
    and sixth; the first four form a rectangular band.
    """
    t2 = t_n(2)
    both = product(t2, opposite(t2))
    const1, ident, const2 = 0, 1, 3  # image vectors (0,0), (0,1), (1,1)
    pairs = [
        (const1, const1), (const2, const1), (const1, const2),
        (const2, const2), (const1, ident), (ident, const1),
    ]
    elems = [i * 4 + j for i, j in pairs]
    S = subsemigroup(both, elems)
    labels = ("(1,1)", "(2,1)", "(1,2)", "(2,2)", "(1,id)", "(id,1)")
    S = FiniteSemigroup(S.n, S.table, labels)
    return derive_structure(S, [0, 4, 5])


def order_preserving_pt(n, leq=None) -> EhresmannStructure:
    """Order-preserving partial maps on n points, by default along the chain.

    The subset is validated to be closed under the product and both unary
    maps before the structure is derived.
    """
    if not 1 <= n <= PT_MAX:
        raise ValueError(f"order_preserving_pt supports 1 <= n <= {PT_MAX}")
    if leq is None:
        leq = [[x <= y for y in range(n)] for x in range(n)]
    full = pt_n(n)
    vectors = list(iproduct(range(n + 1), repeat=n))

    def preserves(vec):
        dom = [x for x in range(n) if vec[x] != n]
        return all(
            leq[vec[x]][vec[y]]
            for x in dom for y in dom
            if leq[x][y]
        )

    keep = [i for i, v in enumerate(vectors) if preserves(v)]
    kept = set(keep)
    for op, mapping in (("plus", full.plus), ("star", full.star)):
        for a in keep:
            if mapping[a] not in kept:
                raise NotClosedError(op, a)
    S = subsemigroup(full.S, keep)  # raises NotClosedError("product", ...) if open
    E = [keep.index(e) for e in full.E if e in kept]
    return derive_structure(S, E)


def monoid_as_trivial_e(M) -> EhresmannStructure:
    """Any monoid with E = {1}: one object, every element an endomorphism."""
    e = identity_of(M)
    if e is None:
        raise ValueError("not a monoid: no identity element")
    return derive_structure(M, [e])


def parse_zoo_spec(spec):
    """Build a zoo member from a compact string.

    Accepted forms: pt:N, b:N, t:N (total functions with E = {id}), op:N,
    z:N, six, and ssl:chainK:z2,z3,... (a K-chain of cyclic groups listed
    top to bottom, with the trivial connecting homomorphisms).
    """
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "six" and len(parts) == 1:
            return six_element_example()
        if kind == "pt" and len(parts) == 2:
            return pt_n(int(parts[1]))
        if kind == "b" and len(parts) == 2:
            return b_n(int(parts[1]))
        if kind == "t" and len(parts) == 2:
            return monoid_as_trivial_e(t_n(int(parts[1])))
        if kind == "op" and len(parts) == 2:
            return order_preserving_pt(int(parts[1]))
        if kind == "z" and len(parts) == 2:
            return monoid_as_trivial_e(cyclic_group(int(parts[1])))
        if kind == "ssl" and len(parts) == 3:
            chain = parts[1]
            if not chain.startswith("chain"):
                raise ValueError(f"unknown semilattice {chain!r}")
            k = int(chain[len("chain"):])
            groups = parts[2].split(",")
            if len(groups) != k:
                raise ValueError(f"chain{k} needs {k} monoids, got {len(groups)}")
            monoids = []
            for g in groups:
                if not g.startswith("z"):
                    raise ValueError(f"unknown monoid {g!r}")
                monoids.append(cyclic_group(int(g[1:])))
            # chain element i covers i+1; product = max index (lower in the order)
            table = [[max(a, b) for b in range(k)] for a in range(k)]
            Y = validate(table)
            maps = {
                (a, b): [identity_of(monoids[b])] * monoids[a].n
                for a in range(k) for b in range(k) if a < b
            }
            return strong_semilattice(Y, monoids, maps)
    except ValueError as err:
        raise ValueError(f"bad zoo spec {spec!r}: {err}") from err
    raise ValueError(f"unknown zoo spec {spec!r}")
