import dataclasses

import pytest

from semicat import (
    build_category,
    corestriction,
    rebuild_semigroup,
    restriction,
    verify_axioms,
)
from semicat import zoo
from semicat.errors import (
    NotBelowDomainError,
    NotBelowRangeError,
    NotComposableError,
)


def test_monoid_category_has_one_object():
    m = zoo.monoid_as_trivial_e(zoo.cyclic_group(3))
    C = build_category(m)
    assert len(C.objects) == 1
    e = C.objects[0]
    assert all(C.dom[a] == e and C.cod[a] == e for a in range(C.n))
    assert all(C.composable(a, b) for a in range(C.n) for b in range(C.n))


def test_pt2_category_shape(pt2):
    C = build_category(pt2)
    assert set(C.objects) == set(pt2.E)
    # C(t) runs from the identity on dom(t) to the identity on im(t)
    assert C.dom[5] == 2 and C.cod[5] == 7  # 1 -> 2 as a partial map
    # composition agrees with the semigroup product on composable pairs
    for x in range(C.n):
        for y in range(C.n):
            if C.composable(x, y):
                assert C.compose(x, y) == pt2.S.table[x][y]


def test_compose_rejects_noncomposable(pt2):
    C = build_category(pt2)
    assert not C.composable(0, 0)  # total const-0 has cod 1_{1}, dom 1_{1,2}
    with pytest.raises(NotComposableError):
        C.compose(0, 0)


def test_restriction_and_corestriction_at_endpoints(zoo_members):
    for es in zoo_members.values():
        C = build_category(es)
        for x in range(C.n):
            assert restriction(C, C.dom[x], x) == x
            assert corestriction(C, x, C.cod[x]) == x


def test_restriction_b2_to_empty_object(b2):
    C = build_category(b2)
    x = 3  # {(1,1),(1,2)}
    assert restriction(C, 0, x) == 0  # the empty relation is below every domain


def test_restriction_uniqueness_sweep(pt2, b2, six):
    for es in (pt2, b2, six):
        C = build_category(es)
        for x in range(C.n):
            for e in C.objects:
                if not C.object_leq(e, C.dom[x]):
                    continue
                below = [y for y in range(C.n) if C.leq_r[y][x] and C.dom[y] == e]
                assert below == [restriction(C, e, x)]


def test_restriction_rejects_object_not_below(pt2):
    C = build_category(pt2)
    # object 1 (the full identity) is not below dom of 1_{1} (object 7)
    with pytest.raises(NotBelowDomainError):
        restriction(C, 1, 7)
    with pytest.raises(NotBelowRangeError):
        corestriction(C, 7, 1)


def test_axioms_pass_for_all_zoo_members(zoo_members):
    for name, es in zoo_members.items():
        report = verify_axioms(build_category(es))
        assert report.passed, (name, report.failures())


def test_axioms_detect_corrupted_order(b2):
    C = build_category(b2)
    # drop one non-reflexive pair from leq_r
    pairs = [
        (x, y)
        for x in range(C.n)
        for y in range(C.n)
        if x != y and C.leq_r[x][y]
    ]
    x0, y0 = pairs[0]
    corrupted = [list(row) for row in C.leq_r]
    corrupted[x0][y0] = False
    bad = dataclasses.replace(C, leq_r=tuple(tuple(r) for r in corrupted))
    report = verify_axioms(bad)
    assert not report.passed
    assert any(c.witness is not None for c in report.failures())


def test_dom_cod_fix_objects(zoo_members):
    for es in zoo_members.values():
        C = build_category(es)
        for e in C.objects:
            assert C.dom[e] == e and C.cod[e] == e


def test_restriction_outputs(zoo_members):
    for es in zoo_members.values():
        C = build_category(es)
        for x in range(C.n):
            for e in C.objects:
                if C.object_leq(e, C.dom[x]):
                    y = restriction(C, e, x)
                    assert C.dom[y] == e and C.leq_r[y][x]
                if C.object_leq(e, C.cod[x]):
                    y = corestriction(C, x, e)
                    assert C.cod[y] == e and C.leq_l[y][x]


def test_roundtrip_reproduces_table(zoo_members):
    for name, es in zoo_members.items():
        rebuilt = rebuild_semigroup(build_category(es))
        assert rebuilt.S.table == es.S.table, name
        assert rebuilt.E == es.E
        assert rebuilt.plus == es.plus and rebuilt.star == es.star


def test_pseudo_product_agrees_with_composition(pt2):
    C = build_category(pt2)
    rebuilt = rebuild_semigroup(C)
    for x in range(C.n):
        for y in range(C.n):
            if C.composable(x, y):
                assert rebuilt.S.table[x][y] == C.compose(x, y)


def test_monoid_pseudo_product_is_monoid_product():
    m = zoo.monoid_as_trivial_e(zoo.cyclic_group(5))
    rebuilt = rebuild_semigroup(build_category(m))
    assert rebuilt.S.table == m.S.table
