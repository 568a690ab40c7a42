import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossed_forge.algebra import (
    CyclicGroup,
    DirectProduct,
    FiniteField,
    FunctionRing,
    IntegerGroup,
    LaurentRing,
    MatrixRing,
    ModularRing,
    PolyQuotientRing,
    SymmetricGroup,
    TruncatedPolyRing,
    annihilator,
    cyclic_subgroup,
    group_center,
    is_ideal,
    is_normal,
    quotient_group,
    ring_from_params,
    zero_divisor_set,
)
from crossed_forge.errors import (
    DomainMismatchError,
    NormalityError,
    ParseError,
    UnsupportedEnumerationError,
)

SMALL_RINGS = [
    ModularRing(4),
    ModularRing(5),
    ModularRing(6),
    PolyQuotientRing(3, [0, 0, 0, 1]),
    PolyQuotientRing(2, [1, 0, 1]),
    FiniteField(2, 2),
    FiniteField(3, 2),
    TruncatedPolyRing(2, 2, 1),
    FunctionRing(2, 3),
    MatrixRing(2),
]


# ----- frozen examples -----

def test_modular_addition():
    r = ModularRing(4)
    assert r(3) + r(2) == r(1)  # [TRIVIAL]


def test_truncation_kills_x_cubed(f3):
    assert (f3("x^2") * f3("x")).is_zero()  # [TRIVIAL]


def test_laurent_exponent_addition():
    L = LaurentRing()
    assert L("x + x^-1") * L("x") == L("x^2 + 1")  # [TRIVIAL]


def test_units():
    assert ModularRing(4)(3).is_unit()  # [TRIVIAL]
    assert not PolyQuotientRing(3, [0, 0, 0, 1])("x").is_unit()  # [TRIVIAL]
    L = LaurentRing()
    assert L("2x^-5").is_unit() and L("2x^-5").inverse() == L("1/2 x^5")  # [TRIVIAL]
    assert not L("1 + x").is_unit()


def test_annihilator_of_x_squared(f3):
    # [DERIVED] ann(x^2) in F_3[x]/(x^3) is the ideal (x): constant term zero
    expected = {f3.elem((0, b, c)) for b in range(3) for c in range(3)}
    assert annihilator(f3("x^2")) == expected
    assert len(expected) == 9


def test_annihilator_small_cases(z4):
    assert annihilator(z4(2)) == {z4(0), z4(2)}  # [TRIVIAL]
    for ring in SMALL_RINGS[:7]:
        assert annihilator(ring.one) == {ring.zero}  # [TRIVIAL]


def test_annihilator_rejects_laurent():
    with pytest.raises(UnsupportedEnumerationError):
        annihilator(LaurentRing()("x"))


def test_zero_divisors_of_truncated_ring(f3):
    # [PAPER] zero-divisors are exactly the polynomials with zero constant term
    assert zero_divisor_set(f3) == {a for a in f3.elements() if a.value[0] == 0}


def test_zero_divisor_sets(z4):
    assert zero_divisor_set(ModularRing(5)) == {ModularRing(5).zero}  # [TRIVIAL]
    assert zero_divisor_set(z4) == {z4(0), z4(2)}  # [DERIVED: 16 products]
    with pytest.raises(UnsupportedEnumerationError):
        zero_divisor_set(LaurentRing())


def test_domain_mismatch():
    with pytest.raises(DomainMismatchError):
        ModularRing(4)(1) + ModularRing(5)(1)


def test_automorphism_examples(f3, f4):
    phi = f3.automorphism([f3("2x")])
    assert phi(f3("1 + x^2")) == f3("1 + x^2")  # [DERIVED: (2x)^2 = x^2]
    assert f3.identity_automorphism()(f3("2 + x")) == f3("2 + x")  # [TRIVIAL]
    w = f4("x")
    assert f4.frobenius()(w) == w * w == f4("1 + x")  # [DERIVED: w^2 = w + 1]


def test_automorphism_rejects_non_homomorphism(f3):
    with pytest.raises(Exception):
        f3.automorphism([f3("1 + x")])  # x^3 = 0 is not respected


def test_ring_params_round_trip():
    for ring in SMALL_RINGS + [LaurentRing()]:
        assert ring_from_params(ring.params()) == ring


def test_ring_parse_errors():
    with pytest.raises(ParseError):
        ModularRing(4)("y")


def test_enumeration_orders():
    assert [e.value for e in ModularRing(4).elements()] == [0, 1, 2, 3]
    assert [str(g) for g in SymmetricGroup(3).elements()] == ["123", "132", "213", "231", "312", "321"]


# ----- group examples -----

def test_group_examples():
    S = SymmetricGroup(3)
    assert group_center(S) == {S.identity}  # [DERIVED: brute force over 6]
    C6 = CyclicGroup(6)
    Q = quotient_group(C6, [C6(0), C6(2), C6(4)])
    assert Q.order == 2  # [TRIVIAL: index 2]
    assert not is_normal(S, [S("123"), S("213")])  # [DERIVED: conjugate by a 3-cycle]
    with pytest.raises(NormalityError):
        quotient_group(S, [S("123"), S("213")])


def test_integers_group():
    Z = IntegerGroup()
    assert Z(3) * Z(-5) == Z(-2)
    assert cyclic_subgroup(Z(0)) == {Z(0)}
    with pytest.raises(UnsupportedEnumerationError):
        cyclic_subgroup(Z(2))
    with pytest.raises(UnsupportedEnumerationError):
        Z.elements()


def test_direct_product_order():
    G = DirectProduct([CyclicGroup(2), SymmetricGroup(3)])
    assert G.order == 12 == len(G.elements())


# ----- invariants -----

def _triples(ring, rng):
    els = ring.elements()
    if len(els) <= 27:
        return product(els, repeat=3)
    return [(rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(1000)]


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_ring_axioms(ring):
    rng = random.Random(1)
    one, zero = ring.one, ring.zero
    for a, b, c in _triples(ring, rng):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a + b == b + a
        if ring.is_commutative:
            assert a * b == b * a
    for a in ring.elements():
        assert a * one == one * a == a
        assert a + zero == a and a - a == zero


@pytest.mark.parametrize("ring", [r for r in SMALL_RINGS if r.is_commutative], ids=str)
def test_unit_xor_zero_divisor(ring):
    zd = zero_divisor_set(ring)
    for a in ring.elements():
        assert a.is_unit() != (a in zd)


@pytest.mark.parametrize("ring", [r for r in SMALL_RINGS if r.is_commutative], ids=str)
def test_annihilator_is_ideal(ring):
    for a in ring.elements():
        assert is_ideal(ring, annihilator(a))


def _automorphisms(ring):
    out = [ring.identity_automorphism()]
    if hasattr(ring, "frobenius") and ring.is_integral_domain:
        out.append(ring.frobenius())
    if isinstance(ring, PolyQuotientRing) and ring.p == 3:
        out.append(ring.automorphism([ring("2x")]))
    if isinstance(ring, FunctionRing):
        out.append(ring.precomposition((1, 2, 0)))
    if isinstance(ring, TruncatedPolyRing):
        out.append(ring.variable_permutation((1, 0)))
    if isinstance(ring, MatrixRing):
        out.append(ring.conjugation(ring("((0,1),(1,1))")))
    return out


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_automorphisms_are_ring_maps(ring):
    els = ring.elements()
    assert len(els) <= 81
    for phi in _automorphisms(ring):
        assert phi(ring.zero) == ring.zero and phi(ring.one) == ring.one
        for a, b in product(els, repeat=2):
            assert phi(a + b) == phi(a) + phi(b)
            assert phi(a * b) == phi(a) * phi(b)
        assert len({phi(a) for a in els}) == len(els)
        assert phi.compose(phi.inverse()).is_identity()


@pytest.mark.parametrize("G,N", [
    (CyclicGroup(6), [0, 3]),
    (CyclicGroup(6), [0, 2, 4]),
    (SymmetricGroup(3), ["123", "231", "312"]),
])
def test_quotient_well_defined(G, N):
    N = [G(n) for n in N]
    Q = quotient_group(G, N)
    assert Q.order == G.order // len(N)
    # coset product independent of representatives
    for x, y in product(G.elements(), repeat=2):
        expected = Q.project(x * y)
        for n1, n2 in product(N, repeat=2):
            assert Q.project((x * n1) * (y * n2)) == expected
        assert Q.project(x) * Q.project(y) == expected


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5), max_size=3),
       st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5), max_size=3),
       st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5), max_size=3))
def test_laurent_ring_axioms(a, b, c):
    L = LaurentRing()
    a, b, c = (sum((L.monomial(v, k) for k, v in d.items()), L.zero) for d in (a, b, c))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert L(str(a)) == a
