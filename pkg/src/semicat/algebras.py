"""Semigroup and category algebras over the rationals, and the maps between them.

The only supported coefficient ring is the exact rationals: every verification
here is a zero-tolerance identity check, and exact characteristic-zero
arithmetic is also what makes the radical computations downstream valid.

The two linear maps realized here, on basis elements and extended linearly:

    phi(a) = sum of C(b) over b <= a
    psi(x) = sum of mu(y, x) S(y) over y <= x

with <= one of the two natural orders (the right order by default) and mu its
Moebius function.  phi and psi are mutually inverse bijections for every
Ehresmann structure; phi is multiplicative whenever the left-restriction
identity holds (dually for the left order), and verify_isomorphism separates
the composable-pair half of the sweep from the rest so a failure certificate
pins down exactly which half broke.
"""

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

from .categories import build_category
from .errors import BasisMismatchError
from .posets import moebius, order_poset
from .reports import jsonable

SEMIGROUP = "semigroup"
CATEGORY = "category"


@dataclass(frozen=True)
class AlgebraElement:
    basis: str
    coeffs: dict  # basis index -> nonzero Fraction

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return element(self.basis, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - v
        return element(self.basis, out)

    def __neg__(self):
        return element(self.basis, {k: -v for k, v in self.coeffs.items()})

    def scale(self, k):
        return element(self.basis, {i: Fraction(k) * v for i, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.basis != other.basis:
            raise BasisMismatchError(self.basis, other.basis)

    def __repr__(self):
        sym = "S" if self.basis == SEMIGROUP else "C"
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            parts.append(f"{sym}({i})" if c == 1 else f"{c}*{sym}({i})")
        return " + ".join(parts)


def element(basis, coeffs) -> AlgebraElement:
    """Canonical form: rational coefficients with zeros dropped."""
    clean = {}
    for k, v in coeffs.items():
        v = Fraction(v)
        if v != 0:
            clean[int(k)] = v
    return AlgebraElement(basis, clean)


def basis_element(basis, i) -> AlgebraElement:
    return AlgebraElement(basis, {int(i): Fraction(1)})


def zero(basis) -> AlgebraElement:
    return AlgebraElement(basis, {})


def _mul_table(table, u, v):
    acc = {}
    for i, ci in u.items():
        row = table[i]
        for j, cj in v.items():
            k = row[j]
            acc[k] = acc.get(k, Fraction(0)) + ci * cj
    return {k: c for k, c in acc.items() if c != 0}


def _mul_partial(table, cod, dom, u, v):
    acc = {}
    for i, ci in u.items():
        row = table[i]
        ci_cod = cod[i]
        for j, cj in v.items():
            if ci_cod != dom[j]:
                continue
            k = row[j]
            acc[k] = acc.get(k, Fraction(0)) + ci * cj
    return {k: c for k, c in acc.items() if c != 0}


def mul_semigroup(ES, u, v) -> AlgebraElement:
    """Bilinear extension of the semigroup product."""
    if u.basis != SEMIGROUP:
        raise BasisMismatchError(SEMIGROUP, u.basis)
    u._check(v)
    return element(SEMIGROUP, _mul_table(ES.S.table, u.coeffs, v.coeffs))


def mul_category(C, u, v) -> AlgebraElement:
    """Bilinear extension of composition, with non-composable pairs mapped to 0."""
    if u.basis != CATEGORY:
        raise BasisMismatchError(CATEGORY, u.basis)
    u._check(v)
    return element(CATEGORY, _mul_partial(C.table, C.cod, C.dom, u.coeffs, v.coeffs))


def _down_sets(ES, order):
    leq = ES.leq_r if order == "r" else ES.leq_l
    n = ES.n
    return [[b for b in range(n) if leq[b][a]] for a in range(n)]


def phi(ES, C, u, order="r") -> AlgebraElement:
    """Down-set sum into the category algebra, extended linearly."""
    if u.basis != SEMIGROUP:
        raise BasisMismatchError(SEMIGROUP, u.basis)
    down = _down_sets(ES, order)
    acc = {}
    for a, ca in u.coeffs.items():
        for b in down[a]:
            acc[b] = acc.get(b, Fraction(0)) + ca
    return element(CATEGORY, acc)


def psi(ES, C, u, order="r") -> AlgebraElement:
    """Moebius-weighted down-set sum into the semigroup algebra."""
    if u.basis != CATEGORY:
        raise BasisMismatchError(CATEGORY, u.basis)
    down = _down_sets(ES, order)
    mu = moebius(order_poset(ES, order))
    acc = {}
    for x, cx in u.coeffs.items():
        for y in down[x]:
            acc[y] = acc.get(y, Fraction(0)) + cx * mu(y, x)
    return element(SEMIGROUP, acc)


def unit(ES) -> AlgebraElement:
    """Sum of the object identities: the two-sided unit of the category algebra."""
    return element(CATEGORY, {e: Fraction(1) for e in ES.E})


@dataclass
class IsoReport:
    order: str
    n: int
    bijection: bool
    bijection_witness: dict | None
    case1_failures: list      # composable pairs (a* = b+) where phi broke
    case2_failures: list
    pairs_checked: int
    case1_count: int
    witness_expansion: dict | None

    @property
    def homomorphism(self):
        return not self.case1_failures and not self.case2_failures

    @property
    def passed(self):
        return self.bijection and self.homomorphism

    def to_json(self):
        return {
            "order": self.order,
            "n": self.n,
            "bijection": self.bijection,
            "bijection_witness": jsonable(self.bijection_witness),
            "hom_case1_failures": [list(p) for p in self.case1_failures],
            "hom_case2_failures": [list(p) for p in self.case2_failures],
            "pairs_checked": self.pairs_checked,
            "case1_count": self.case1_count,
            "passed": self.passed,
            "witness_expansion": jsonable(self.witness_expansion),
        }


def _hom_sweep(table, cod, dom, phis, a_range):
    case1, case2 = [], []
    n = len(table)
    for a in a_range:
        pa = phis[a]
        for b in range(n):
            lhs = phis[table[a][b]]
            rhs = _mul_partial(table, cod, dom, pa, phis[b])
            if lhs != rhs:
                (case1 if cod[a] == dom[b] else case2).append((a, b))
    return case1, case2


_POOL_ARGS = None


def _pool_worker(chunk):
    table, cod, dom, phis = _POOL_ARGS
    return _hom_sweep(table, cod, dom, phis, chunk)


def verify_isomorphism(ES, order="r", workers=1) -> IsoReport:
    """Check that phi and psi are mutually inverse and that phi is multiplicative.

    Bijectivity is checked on every basis element; multiplicativity on every
    basis pair, which suffices by bilinearity.  Pairs are split by whether the
    corresponding morphisms compose (a* = b+); the first failing pair in
    lexicographic order is expanded into a printable certificate.
    """
    if order not in ("r", "l"):
        raise ValueError("order must be 'r' or 'l'")
    n = ES.n
    C = build_category(ES)
    table, cod, dom = ES.S.table, C.cod, C.dom
    down = _down_sets(ES, order)
    mu = moebius(order_poset(ES, order))
    phis = [{b: Fraction(1) for b in down[a]} for a in range(n)]
    psis = [
        {y: mu(y, x) for y in down[x] if mu(y, x) != 0}
        for x in range(n)
    ]

    bijection_witness = None
    for a in range(n):
        acc = {}
        for x, cx in phis[a].items():
            for y, cy in psis[x].items():
                acc[y] = acc.get(y, Fraction(0)) + cx * cy
        acc = {k: v for k, v in acc.items() if v != 0}
        if acc != {a: Fraction(1)}:
            bijection_witness = {"direction": "psi(phi(a))", "a": a, "got": acc}
            break
    if bijection_witness is None:
        for x in range(n):
            acc = {}
            for y, cy in psis[x].items():
                for b, cb in phis[y].items():
                    acc[b] = acc.get(b, Fraction(0)) + cy * cb
            acc = {k: v for k, v in acc.items() if v != 0}
            if acc != {x: Fraction(1)}:
                bijection_witness = {"direction": "phi(psi(x))", "x": x, "got": acc}
                break

    if workers > 1:
        case1, case2 = _parallel_sweep(table, cod, dom, phis, workers)
    else:
        case1, case2 = _hom_sweep(table, cod, dom, phis, range(n))
    case1.sort()
    case2.sort()

    expansion = None
    failures = sorted(case1 + case2)
    if failures:
        a, b = failures[0]
        expansion = {
            "a": a,
            "b": b,
            "ab": table[a][b],
            "phi_a": phis[a],
            "phi_b": phis[b],
            "phi_ab": phis[table[a][b]],
            "phi_a_phi_b": _mul_partial(table, cod, dom, phis[a], phis[b]),
        }

    case1_count = sum(1 for a in range(n) for b in range(n) if cod[a] == dom[b])
    return IsoReport(
        order=order,
        n=n,
        bijection=bijection_witness is None,
        bijection_witness=bijection_witness,
        case1_failures=case1,
        case2_failures=case2,
        pairs_checked=n * n,
        case1_count=case1_count,
        witness_expansion=expansion,
    )


def _parallel_sweep(table, cod, dom, phis, workers):
    global _POOL_ARGS
    n = len(table)
    chunks = [range(w, n, workers) for w in range(min(workers, n))]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return _hom_sweep(table, cod, dom, phis, range(n))
    _POOL_ARGS = (table, cod, dom, phis)
    try:
        with ctx.Pool(len(chunks)) as pool:
            parts = pool.map(_pool_worker, chunks)
    finally:
        _POOL_ARGS = None
    case1, case2 = [], []
    for c1, c2 in parts:
        case1.extend(c1)
        case2.extend(c2)
    return case1, case2


def format_element(el, names=None, symbol=None) -> str:
    """Render a combination like 'C({(1,1)}) + C({})' using element names."""
    if el.is_zero():
        return "0"
    sym = symbol or ("S" if el.basis == SEMIGROUP else "C")
    parts = []
    for i in sorted(el.coeffs):
        c = el.coeffs[i]
        label = f"{sym}({names[i] if names else i})"
        if c == 1:
            parts.append(("+", label))
        elif c == -1:
            parts.append(("-", label))
        else:
            parts.append(("+" if c > 0 else "-", f"{abs(c)}*{label}"))
    sign, first = parts[0]
    text = first if sign == "+" else f"-{first}"
    for sign, part in parts[1:]:
        text += f" {sign} {part}"
    return text
