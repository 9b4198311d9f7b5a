import random

import pytest

from semicat import (
    from_interchange,
    green,
    idempotents,
    identity_of,
    is_inverse,
    is_subsemilattice,
    opposite,
    product,
    subsemigroup,
    to_interchange,
    validate,
)
from semicat import zoo
from semicat.errors import NotAssociativeError, NotClosedError, OutOfRangeError

Z2 = [[0, 1], [1, 0]]
LEFT_ZERO = [[0, 0], [1, 1]]


def test_validate_trivial():
    S = validate([[0]])
    assert S.n == 1 and S.mul(0, 0) == 0


def test_validate_left_zero():
    S = validate(LEFT_ZERO)
    assert all(S.mul(a, b) == a for a in range(2) for b in range(2))


def test_validate_z2_group():
    S = validate(Z2)
    assert identity_of(S) == 0
    assert is_inverse(S)


def test_validate_rejects_out_of_range():
    with pytest.raises(OutOfRangeError) as exc:
        validate([[0, 2], [1, 0]])
    assert exc.value.entry == 2


def test_validate_rejects_non_square():
    with pytest.raises(ValueError):
        validate([[0, 1], [0]])


def test_validate_rejects_non_associative_with_genuine_triple():
    rng = random.Random(20240917)
    failures = 0
    for _ in range(200):
        n = rng.randrange(2, 6)
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        try:
            validate(table)
        except NotAssociativeError as err:
            failures += 1
            i, j, k = err.triple
            assert table[table[i][j]][k] != table[i][table[j][k]]
    assert failures > 100  # random tables are almost never associative


def test_idempotents_z2():
    assert idempotents(validate(Z2)) == {0}


def test_idempotents_left_zero_all():
    for k in (2, 3, 4):
        table = [[a] * k for a in range(k)]
        assert idempotents(validate(table)) == set(range(k))


def test_idempotents_b2_by_direct_scan(b2):
    # oracle: scan the table for e*e = e, independent of idempotents()
    scan = {e for e in range(b2.n) if b2.S.table[e][e] == e}
    assert idempotents(b2.S) == scan
    assert len(scan) == 11


def test_green_group_single_class():
    g = green(validate(Z2))
    for which in ("r", "l", "h", "d"):
        assert len(g.classes(which)) == 1


def test_green_pt2_against_principal_ideal_oracle(pt2):
    S = pt2.S
    n, t = S.n, S.table
    right = [frozenset([a]) | {t[a][x] for x in range(n)} for a in range(n)]
    left = [frozenset([a]) | {t[x][a] for x in range(n)} for a in range(n)]
    g = green(S)
    for a in range(n):
        for b in range(n):
            assert (g.r_class[a] == g.r_class[b]) == (right[a] == right[b])
            assert (g.l_class[a] == g.l_class[b]) == (left[a] == left[b])
            assert (g.h_class[a] == g.h_class[b]) == (
                right[a] == right[b] and left[a] == left[b]
            )


def test_green_d_is_r_compose_l(zoo_members):
    for es in zoo_members.values():
        g = green(es.S)
        n = es.n
        for a in range(n):
            for b in range(n):
                composed = any(
                    g.r_class[a] == g.r_class[c] and g.l_class[c] == g.l_class[b]
                    for c in range(n)
                )
                assert (g.d_class[a] == g.d_class[b]) == composed


def test_green_left_zero():
    # xy = x: right ideals aS^1 = {a} are singletons, left ideals S^1 a = S
    g = green(validate([[0, 0, 0], [1, 1, 1], [2, 2, 2]]))
    assert len(g.classes("r")) == 3
    assert len(g.classes("l")) == 1


def test_green_invariant_under_relabeling(pt2):
    rng = random.Random(5)
    n = pt2.n
    perm = list(range(n))
    rng.shuffle(perm)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    relabeled = validate(
        [[perm[pt2.S.table[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    )
    g0, g1 = green(pt2.S), green(relabeled)

    def as_sets(g, which):
        return {frozenset(c) for c in g.classes(which)}

    for which in ("r", "l", "h", "d"):
        mapped = {frozenset(perm[x] for x in c) for c in as_sets(g0, which)}
        assert mapped == as_sets(g1, which)


def test_green_on_commutative_band_is_equality():
    # meet-semilattice of subsets of {0,1}: indices are bitmasks, product = AND
    table = [[a & b for b in range(4)] for a in range(4)]
    g = green(validate(table))
    for which in ("r", "l", "h", "d"):
        assert len(g.classes(which)) == 4


def test_is_subsemilattice():
    S = validate(Z2)
    assert is_subsemilattice(S, [0])
    assert not is_subsemilattice(S, [0, 1])  # 1 is not idempotent


def test_is_subsemilattice_b2_partial_identities(b2):
    assert is_subsemilattice(b2.S, b2.E)
    assert len(b2.E) == 4


def test_opposite_is_involution(pt2):
    assert opposite(opposite(pt2.S)) == pt2.S


def test_product_size():
    S, T = validate(Z2), validate(LEFT_ZERO)
    assert product(S, T).n == 4


def test_t2_times_t2op_six_pairs_closed():
    both = product(zoo.t_n(2), opposite(zoo.t_n(2)))
    assert both.n == 16
    elems = [0, 12, 3, 15, 1, 4]  # (1,1),(2,1),(1,2),(2,2),(1,id),(id,1)
    closed = {both.table[a][b] for a in elems for b in elems}
    assert closed <= set(elems)
    sub = subsemigroup(both, elems)
    assert sub.n == 6


def test_subsemigroup_rejects_open_subset(pt2):
    # {swap} is not closed: swap*swap = id
    with pytest.raises(NotClosedError):
        subsemigroup(pt2.S, [3])


def test_interchange_roundtrip(b2):
    obj = to_interchange(b2.S, b2.E)
    S, E = from_interchange(obj)
    assert S == b2.S and E == b2.E


def test_interchange_rejects_bad_e(pt2):
    obj = to_interchange(pt2.S, [99])
    with pytest.raises(ValueError):
        from_interchange(obj)
