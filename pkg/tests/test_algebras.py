import random
from fractions import Fraction

import pytest

from semicat import (
    basis_element,
    build_category,
    element,
    format_element,
    mul_category,
    mul_semigroup,
    phi,
    psi,
    unit,
    verify_isomorphism,
)
from semicat.errors import BasisMismatchError

A, B, EMPTY = 3, 1, 0  # in B_2: {(1,1),(1,2)}, {(1,1)}, {}


def rand_element(rng, basis, n, terms=3):
    coeffs = {}
    for _ in range(terms):
        coeffs[rng.randrange(n)] = Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))
    return element(basis, coeffs)


def test_element_canonical_form():
    e = element("semigroup", {2: Fraction(0), 1: 2})
    assert e.coeffs == {1: Fraction(2)}
    assert element("semigroup", {}).is_zero()


def test_addition_and_scaling():
    u = element("semigroup", {0: 1, 1: 2})
    v = element("semigroup", {1: -2, 2: 5})
    assert (u + v).coeffs == {0: 1, 2: 5}
    assert (u - u).is_zero()
    assert u.scale(Fraction(1, 2)).coeffs == {0: Fraction(1, 2), 1: 1}


def test_basis_mismatch_rejected(pt2):
    u = basis_element("semigroup", 0)
    v = basis_element("category", 0)
    with pytest.raises(BasisMismatchError):
        u + v
    with pytest.raises(BasisMismatchError):
        mul_semigroup(pt2, u, v)
    with pytest.raises(BasisMismatchError):
        mul_category(build_category(pt2), v, u)


def test_mul_semigroup_on_basis_is_table(pt2):
    for a in range(pt2.n):
        for b in range(pt2.n):
            got = mul_semigroup(
                pt2, basis_element("semigroup", a), basis_element("semigroup", b)
            )
            assert got.coeffs == {pt2.S.table[a][b]: 1}


def test_bilinearity_on_random_triples(pt2, b2):
    rng = random.Random(17)
    C_pt2 = build_category(pt2)
    for es, C in ((pt2, C_pt2), (b2, build_category(b2))):
        for _ in range(25):
            u = rand_element(rng, "semigroup", es.n)
            v = rand_element(rng, "semigroup", es.n)
            w = rand_element(rng, "semigroup", es.n)
            lhs = mul_semigroup(es, u + v, w)
            rhs = mul_semigroup(es, u, w) + mul_semigroup(es, v, w)
            assert lhs == rhs
            lhs = mul_semigroup(es, w, u + v)
            rhs = mul_semigroup(es, w, u) + mul_semigroup(es, w, v)
            assert lhs == rhs


def test_algebra_products_associative_on_random_triples(pt2, b2):
    rng = random.Random(99)
    for es in (pt2, b2):
        C = build_category(es)
        for _ in range(20):
            u = rand_element(rng, "semigroup", es.n)
            v = rand_element(rng, "semigroup", es.n)
            w = rand_element(rng, "semigroup", es.n)
            assert mul_semigroup(es, mul_semigroup(es, u, v), w) == \
                mul_semigroup(es, u, mul_semigroup(es, v, w))
            x = rand_element(rng, "category", es.n)
            y = rand_element(rng, "category", es.n)
            z = rand_element(rng, "category", es.n)
            assert mul_category(C, mul_category(C, x, y), z) == \
                mul_category(C, x, mul_category(C, y, z))


def test_b2_semigroup_product_of_counterexample_pair(b2):
    got = mul_semigroup(b2, basis_element("semigroup", A), basis_element("semigroup", B))
    assert got.coeffs == {B: 1}  # ab = {(1,1)}


def test_mul_category_noncomposable_is_zero(pt2):
    C = build_category(pt2)
    assert mul_category(C, basis_element("category", 0), basis_element("category", 0)).is_zero()


def test_category_product_of_counterexample_images(b2):
    C = build_category(b2)
    lhs = element("category", {A: 1, EMPTY: 1})
    rhs = element("category", {B: 1, EMPTY: 1})
    assert mul_category(C, lhs, rhs).coeffs == {EMPTY: 1}


def test_phi_on_counterexample_pair(b2):
    C = build_category(b2)
    assert phi(b2, C, basis_element("semigroup", EMPTY)).coeffs == {EMPTY: 1}
    assert phi(b2, C, basis_element("semigroup", A)).coeffs == {A: 1, EMPTY: 1}
    ab = b2.S.table[A][B]
    expect = {B: 1, EMPTY: 1}
    assert phi(b2, C, basis_element("semigroup", B)).coeffs == expect
    assert phi(b2, C, basis_element("semigroup", ab)).coeffs == expect


def test_phi_is_linear(b2):
    C = build_category(b2)
    u = element("semigroup", {A: Fraction(2), B: Fraction(-1, 3)})
    expanded = phi(b2, C, basis_element("semigroup", A)).scale(2) + \
        phi(b2, C, basis_element("semigroup", B)).scale(Fraction(-1, 3))
    assert phi(b2, C, u) == expanded


def test_psi_on_bottom_and_two_chain(b2):
    C = build_category(b2)
    assert psi(b2, C, basis_element("category", EMPTY)).coeffs == {EMPTY: 1}
    # the down-set of a is the 2-chain {empty < a}, so mu weights are -1, 1
    assert psi(b2, C, basis_element("category", A)).coeffs == {A: 1, EMPTY: -1}


def test_psi_phi_identity_on_all_basis_elements(b2):
    C = build_category(b2)
    for a in range(b2.n):
        assert psi(b2, C, phi(b2, C, basis_element("semigroup", a))).coeffs == {a: 1}
        assert phi(b2, C, psi(b2, C, basis_element("category", a))).coeffs == {a: 1}


def test_verify_isomorphism_pt2_pt3(pt2, pt3):
    for es in (pt2, pt3):
        report = verify_isomorphism(es)
        assert report.passed
        assert report.pairs_checked == es.n * es.n
        assert report.witness_expansion is None


def test_verify_isomorphism_b2_separates_halves(b2):
    report = verify_isomorphism(b2)
    assert report.bijection
    assert not report.case1_failures  # composable pairs never fail
    assert (A, B) in report.case2_failures
    assert not report.passed
    w = report.witness_expansion
    assert (w["a"], w["b"]) == (A, B)  # lexicographically first failure
    assert w["phi_a"] == {A: 1, EMPTY: 1}
    assert w["phi_b"] == {B: 1, EMPTY: 1}
    assert w["phi_ab"] == {B: 1, EMPTY: 1}
    assert w["phi_a_phi_b"] == {EMPTY: 1}


def test_verify_isomorphism_case1_never_fails(zoo_members):
    for es in zoo_members.values():
        assert verify_isomorphism(es).case1_failures == []


def test_verify_isomorphism_bijection_for_all_members(zoo_members):
    for es in zoo_members.values():
        for order in ("r", "l"):
            assert verify_isomorphism(es, order=order).bijection


def test_left_order_variant(pt2, ssl, i2):
    # right restriction makes the left-order map multiplicative
    assert verify_isomorphism(ssl, order="l").passed
    assert verify_isomorphism(i2, order="l").passed
    # for PT_2 the left-order sweep is informational: it fails multiplicativity
    report = verify_isomorphism(pt2, order="l")
    assert report.bijection and not report.homomorphism


def test_workers_give_identical_reports(b2):
    serial = verify_isomorphism(b2, workers=1)
    parallel = verify_isomorphism(b2, workers=3)
    assert serial.to_json() == parallel.to_json()


def test_unit_is_two_sided_identity(pt2):
    C = build_category(pt2)
    u = unit(pt2)
    assert u.coeffs == {e: 1 for e in pt2.E}
    for x in range(pt2.n):
        bx = basis_element("category", x)
        assert mul_category(C, u, bx) == bx
        assert mul_category(C, bx, u) == bx


def test_unit_of_monoid_is_its_identity():
    from semicat import zoo

    m = zoo.monoid_as_trivial_e(zoo.cyclic_group(3))
    assert unit(m).coeffs == {m.E[0]: 1}


def test_psi_of_unit_is_identity_of_semigroup_algebra(pt2):
    C = build_category(pt2)
    pu = psi(pt2, C, unit(pt2))
    for x in range(pt2.n):
        bx = basis_element("semigroup", x)
        assert mul_semigroup(pt2, pu, bx) == bx
        assert mul_semigroup(pt2, bx, pu) == bx


def test_format_element_matches_exhibit_style(b2):
    el = element("category", {A: 1, EMPTY: 1})
    text = format_element(el, b2.S.names)
    assert text == "C({}) + C({(1,1),(1,2)})"
    assert format_element(element("category", {}), b2.S.names) == "0"
    assert format_element(element("semigroup", {0: -1, 2: Fraction(3, 2)})) == "-S(0) + 3/2*S(2)"
