import pytest

from conftest import catalog
from crossed_forge.catalog import (
    CONSTRUCTORS,
    build_entry,
    catalog_listing,
    corrupted_systems,
    make_function_dynamics,
    make_rational_quantum_torus,
    make_symmetric_action,
    make_truncated_quantum_torus,
    make_twisted_group_ring,
    separation_sets,
)
from crossed_forge.errors import ParseError, PreconditionError
from crossed_forge.ideals import lift_ideal, zero_divisor_obstruction
from crossed_forge.structure import (
    commutant_constraints,
    is_commutative,
    is_maximal_commutative,
)
from crossed_forge.system import fixed_ring, sigma_kernel, verify_crossed_system


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.system.name)
def test_entry_is_valid(entry):
    assert verify_crossed_system(entry.system).ok


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.system.name)
def test_annotations_rederived(entry):
    sys = entry.system
    exp = entry.expected
    if "commutative" in exp:
        assert is_commutative(sys).value == exp["commutative"]
    if "maximal_commutative" in exp:
        assert is_maximal_commutative(sys).value == exp["maximal_commutative"]
    if "commutant_witness" in exp and sys.group.is_finite:
        g, r = is_maximal_commutative(sys).witness
        assert {"degree": g.value, "coefficient": str(r)} == exp["commutant_witness"]
    if "kernel_generator" in exp:
        assert sigma_kernel(sys) == exp["kernel_generator"]
    if "sigma_order" in exp:
        assert sys.sigma(1).order() == exp["sigma_order"]
    if "fixed_ring_size" in exp:
        assert len(fixed_ring(sys)) == exp["fixed_ring_size"]
    if "integral_domain" in exp:
        assert sys.ring.is_integral_domain == exp["integral_domain"]
    if "sigma_homomorphism" in exp:
        assert sys.sigma_is_homomorphism() == exp["sigma_homomorphism"]
    if "sigma_injective" in exp:
        assert all(not sys.sigma(g).is_identity() for g in sys.group.elements() if not g.is_identity())
    if exp.get("commutant_is_everything"):
        cons = commutant_constraints(sys)
        assert all(cons.degree_set(g) == set(sys.ring.elements()) for g in sys.group.elements())
    if "separation_sets" in exp:
        perm = entry.params["perm"]
        assert {str(n): s for n, s in separation_sets(perm, sys.group.order).items()} == exp["separation_sets"]
    if exp.get("obstruction") and sys.is_finite and sys.size <= 729:
        o = exp["obstruction"]
        assert zero_divisor_obstruction(sys, o["c"], o["d"], o["g"]).empty


@pytest.mark.parametrize("entry", [e for e in catalog() if e.name == "truncated_quantum_torus"
                                   and e.system.is_finite and e.system.size <= 10**6],
                         ids=lambda e: e.system.name)
def test_truncated_torus_chain_strict(entry):
    sys = entry.system
    R = sys.ring
    sizes = []
    for text in entry.expected["ideal_chain"]:
        gen = R(text)
        base = {gen * a for a in R.elements()}
        J = lift_ideal(sys, base)
        assert J.two_sided
        sizes.append(len(J))
    sizes.append(1)
    assert all(a > b for a, b in zip(sizes, sizes[1:]))


def test_function_dynamics_separation():
    # a 3-cycle moves every point under every nontrivial power
    assert separation_sets((1, 2, 0), 3) == {1: [0, 1, 2], 2: [0, 1, 2]}
    assert separation_sets((1, 0, 2), 2) == {1: [0, 1]}
    assert make_function_dynamics(3, (1, 2, 0), 2).expected["maximal_commutative"]
    # identity bijection: k defaults to 2
    assert make_function_dynamics(2, (0, 1), 2).system.group.order == 2


def test_constructor_preconditions():
    with pytest.raises(PreconditionError):
        make_truncated_quantum_torus(4, 2, 3)  # p not prime
    with pytest.raises(PreconditionError):
        make_truncated_quantum_torus(3, 2, 3, 3)  # 2^3 != 1 mod 3
    with pytest.raises(PreconditionError):
        make_rational_quantum_torus(1)
    with pytest.raises(PreconditionError):
        make_function_dynamics(3, (0, 0, 1), 2)
    with pytest.raises(PreconditionError):
        make_function_dynamics(3, (1, 2, 0), 2, k=2)
    with pytest.raises(PreconditionError):
        make_symmetric_action(3, 4)


def test_build_entry_and_listing():
    e = build_entry("truncated_quantum_torus", p=3, q=2, m=3, k=2)
    assert e.params == {"p": 3, "q": 2, "m": 3, "k": 2}
    with pytest.raises(ParseError):
        build_entry("no_such_entry")
    with pytest.raises(ParseError):
        build_entry("galois_action", nonsense=1)
    assert [name for name, _ in catalog_listing()] == sorted(CONSTRUCTORS)


def test_twisted_alpha_round_trip():
    e = make_twisted_group_ring({"kind": "modular", "n": 5}, {"kind": "cyclic", "k": 2}, [[1, 1, 2]])
    assert e.params["alpha"] == [[1, 1, "2"]]


def test_corrupted_corpus_size():
    assert len(corrupted_systems()) >= 5
