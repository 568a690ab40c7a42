from itertools import product

import pytest

from conftest import finite_catalog
from crossed_forge.algebra import CyclicGroup, FiniteField, IntegerGroup, LaurentRing, ModularRing, SymmetricGroup
from crossed_forge.algebra import is_normal
from crossed_forge.catalog import corrupted_systems, make_truncated_quantum_torus
from crossed_forge.errors import PreconditionError, UnsupportedError, ValidationError
from crossed_forge.system import (
    CrossedSystem,
    build_standard,
    fixed_ring,
    kernel_is_trivial,
    sigma_kernel,
    verify_crossed_system,
)


def test_group_ring_is_valid():
    for ring in (ModularRing(4), FiniteField(2, 2)):
        sys = build_standard("group_ring", ring, CyclicGroup(3))
        assert verify_crossed_system(sys).ok  # [TRIVIAL]
    sys = build_standard("group_ring", ModularRing(3), SymmetricGroup(3))
    assert sys.sigma_is_trivial and sys.alpha_is_trivial


def test_torus_model_is_valid():
    assert verify_crossed_system(make_truncated_quantum_torus(3, 2, 3, 2).system).ok  # [DERIVED]


def test_frobenius_action_valid(f4, c2):
    sys = build_standard("action_only", f4, c2, sigma=f4.frobenius())
    assert verify_crossed_system(sys).ok  # [DERIVED: Frobenius has order 2]


def test_frobenius_on_c3_rejected(f4):
    with pytest.raises(ValidationError) as info:
        build_standard("action_only", f4, CyclicGroup(3), sigma=f4.frobenius())
    assert "(i)" in info.value.report.conditions()


def test_twisted_z5_cocycle_valid():
    sys = build_standard("twisted_group_ring", ModularRing(5), CyclicGroup(2), alpha={(1, 1): 2})
    assert verify_crossed_system(sys).ok  # [DERIVED: condition (ii) over 8 triples]


def test_zero_cocycle_value_rejected():
    z5 = ModularRing(5)
    sys = CrossedSystem(z5, CyclicGroup(2), {0: z5.identity_automorphism(), 1: z5.identity_automorphism()},
                        alpha={(1, 1): 0})
    report = verify_crossed_system(sys)
    assert not report.ok
    v = report.first("unit")
    assert v.witness == ("1", "1", "0")  # [TRIVIAL: 0 is not a unit]
    with pytest.raises(ValidationError):
        build_standard("twisted_group_ring", z5, CyclicGroup(2), alpha={(1, 1): 0})


@pytest.mark.parametrize("label,system,condition", corrupted_systems(), ids=lambda x: x if isinstance(x, str) else "")
def test_corrupted_corpus(label, system, condition):
    report = verify_crossed_system(system)
    assert not report.ok
    assert condition in report.conditions()
    assert report.first(condition).witness


def test_witness_cap():
    # alpha = 0 off the identity row and column: 16 non-unit values, the report keeps 10
    z5 = ModularRing(5)
    alpha = {(s, t): 0 for s in range(1, 5) for t in range(1, 5)}
    sys = CrossedSystem(z5, CyclicGroup(5), {g: z5.identity_automorphism() for g in range(5)}, alpha=alpha)
    report = verify_crossed_system(sys)
    assert len([v for v in report.violations if v.condition == "unit"]) == 10


def test_condition_i_one_witness_per_pair(f3):
    # x -> 2x has order 2, so (i) fails exactly on the pairs (1,2), (2,1), (2,2) of C3
    sys = CrossedSystem(f3, CyclicGroup(3), f3.automorphism([f3("2x")]))
    bad = {v.witness[:2] for v in verify_crossed_system(sys).violations if v.condition == "(i)"}
    assert bad == {("1", "2"), ("2", "1"), ("2", "2")}


def test_missing_sigma_entry():
    z5 = ModularRing(5)
    with pytest.raises(PreconditionError):
        CrossedSystem(z5, CyclicGroup(2), {0: z5.identity_automorphism()})


def test_integers_with_cocycle_rejected():
    L = LaurentRing()
    with pytest.raises(UnsupportedError):
        CrossedSystem(L, IntegerGroup(), L.scaling(2), alpha={(1, 1): 2})


def test_fixed_ring_examples(f4, c2, f3):
    z4 = ModularRing(4)
    assert fixed_ring(build_standard("group_ring", z4, c2)) == set(z4.elements())  # [TRIVIAL]
    assert fixed_ring(build_standard("action_only", f4, c2, sigma=f4.frobenius())) == {f4.zero, f4.one}  # [DERIVED]
    torus = make_truncated_quantum_torus(3, 2, 3, 2).system
    assert fixed_ring(torus) == {f3.elem((a, 0, c)) for a in range(3) for c in range(3)}  # [DERIVED]


def test_sigma_kernel_examples(f3):
    z4 = ModularRing(4)
    C4 = CyclicGroup(4)
    assert sigma_kernel(build_standard("group_ring", z4, C4)) == set(C4.elements())  # [TRIVIAL]
    L = LaurentRing()
    q2 = build_standard("action_only", L, IntegerGroup(), sigma=L.scaling(2))
    assert sigma_kernel(q2) == 0 and kernel_is_trivial(q2)  # [PAPER: q = 2 is not a root of unity]
    qm1 = build_standard("action_only", L, IntegerGroup(), sigma=L.scaling(-1))
    assert sigma_kernel(qm1) == 2
    torus4 = make_truncated_quantum_torus(3, 2, 3, 4).system
    assert sigma_kernel(torus4) == {C4(0), C4(2)}  # [DERIVED: iterate x -> 2x]


# ----- invariants over the finite catalog -----

@pytest.mark.parametrize("entry", finite_catalog(10**5), ids=lambda e: e.system.name)
def test_catalog_system_invariants(entry):
    sys = entry.system
    assert verify_crossed_system(sys).ok
    G = sys.group.elements()
    if sys.ring.is_commutative or sys.alpha_is_trivial:
        for x, y in product(G, repeat=2):
            assert sys.sigma(x).compose(sys.sigma(y)) == sys.sigma(x * y)
    fixed = fixed_ring(sys)
    assert sys.ring.zero in fixed and sys.ring.one in fixed
    for a, b in product(fixed, repeat=2):
        assert a + b in fixed and a * b in fixed and -a in fixed
    if sys.sigma_is_homomorphism():
        assert is_normal(sys.group, sigma_kernel(sys))
