"""Named example systems with the properties they are expected to have.

Complex-coefficient examples are modelled over F_p (finite, exact) or over
Q[x, x^-1]; each entry's ``model`` field says which substitution was made.
Expected properties are claims the test-suite re-derives with the structure
and ideal oracles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.groups import CyclicGroup, Group, IntegerGroup, SymmetricGroup, group_from_params
from .algebra.rings import (
    FiniteField,
    FunctionRing,
    LaurentRing,
    MatrixRing,
    ModularRing,
    PolyQuotientRing,
    Ring,
    TruncatedPolyRing,
    is_prime,
    ring_from_params,
)
from .errors import ParseError, PreconditionError
from .system import CrossedSystem, build_standard


@dataclass
class CatalogEntry:
    name: str
    params: dict
    system: CrossedSystem
    expected: dict = field(default_factory=dict)
    model: str = ""

    def to_dict(self):
        d = {"name": self.name, "params": self.params, "system": self.system.name,
             "expected": self.expected}
        if self.model:
            d["model"] = self.model
        return d


def _multiplicative_order(q, p):
    q %= p
    n, cur = 1, q
    while cur != 1:
        cur = cur * q % p
        n += 1
    return n


def _perm_order(perm):
    seen, order = set(), 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def make_truncated_quantum_torus(p, q, m, k=None, group="cyclic"):
    """F_p[x]/(x^m) with the group acting by x -> q^n x and trivial cocycle.

    ``group="cyclic"`` uses C_k (q^k = 1 required); ``group="integers"`` uses Z.
    """
    p, q, m = int(p), int(q), int(m)
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if q % p == 0:
        raise PreconditionError("q must be a unit of F_p")
    if m < 2:
        raise PreconditionError("the truncation degree m must be at least 2")
    ring = PolyQuotientRing(p, [0] * m + [1])
    sigma1 = ring.automorphism([ring.elem(tuple([0, q % p] + [0] * (m - 2)))])
    n = _multiplicative_order(q, p)
    if group == "cyclic":
        if k is None:
            k = n
        k = int(k)
        if k < 2:
            raise PreconditionError("the group must be nontrivial (k >= 2)")
        if pow(q, k, p) != 1:
            raise PreconditionError(f"q^k = {pow(q, k, p)} != 1 in F_{p}; sigma does not factor through C_{k}")
        G = CyclicGroup(k)
        params = {"p": p, "q": q % p, "m": m, "k": k}
        name = f"truncated_quantum_torus(p={p}, q={q % p}, m={m}, k={k})"
    elif group == "integers":
        G = IntegerGroup()
        params = {"p": p, "q": q % p, "m": m, "group": "integers"}
        name = f"truncated_quantum_torus(p={p}, q={q % p}, m={m}, Z)"
    else:
        raise PreconditionError(f"unknown group variant {group!r}")
    system = build_standard("action_only", ring, G, sigma=sigma1, name=name)
    top = f"x^{m - 1}" if m > 2 else "x"
    expected = {
        "maximal_commutative": False,
        "commutant_witness": {"degree": 1, "coefficient": top},
        "commutative": q % p == 1 and group == "cyclic",
        "ideal_chain": [f"x^{j}" if j > 1 else "x" for j in range(1, m)],
        "sigma_order": n,
    }
    if n < m:
        c = f"x^{n}" if n > 1 else "x"
        d = f"x^{m - n}" if m - n > 1 else "x"
        expected["obstruction"] = {"c": c, "d": d, "g": 1}
    else:
        expected["obstruction"] = None
    return CatalogEntry("truncated_quantum_torus", params, system, expected,
                        model="F_p coefficients in place of C" + ("; C_k in place of Z" if group == "cyclic" else ""))


def make_rational_quantum_torus(q):
    """Q[x, x^-1] with Z acting by x -> q^n x."""
    q = Fraction(q) if not isinstance(q, str) else Fraction(q.strip())
    if q in (0, 1):
        raise PreconditionError("q must differ from 0 and 1")
    ring = LaurentRing()
    system = build_standard("action_only", ring, IntegerGroup(), sigma=ring.scaling(q),
                            name=f"rational_quantum_torus(q={q})")
    expected = {"maximal_commutative": q != -1, "kernel_generator": 2 if q == -1 else 0, "commutative": False}
    return CatalogEntry("rational_quantum_torus", {"q": str(q)}, system, expected,
                        model="rational coefficients in place of C")


def make_symmetric_action(p, n, degree=2, truncation="total"):
    """S_n permuting the variables of a truncated polynomial ring over F_p."""
    p, n, degree = int(p), int(n), int(degree)
    if n not in (2, 3):
        raise PreconditionError("n must be 2 or 3")
    ring = TruncatedPolyRing(p, n, degree, truncation)
    G = SymmetricGroup(n)
    sigma = {g: ring.variable_permutation(g.value) for g in G.elements()}
    system = build_standard("action_only", ring, G, sigma=sigma,
                            name=f"symmetric_action(p={p}, n={n}, degree={degree}, {truncation})")
    faithful = all(not sigma[g].is_identity() for g in G.elements() if not g.is_identity())
    if not faithful:
        raise PreconditionError("the truncation kills the permutation action")
    # with total degree 2 a product of two linear forms vanishes, so a nonzero
    # linear r satisfies r (sigma_s(a) - a) = 0 for every a and s
    expected = {"integral_domain": False, "commutative": False, "sigma_injective": True}
    if degree == 2 and truncation == "total":
        expected["maximal_commutative"] = False
    return CatalogEntry("symmetric_action", {"p": p, "n": n, "degree": degree, "truncation": truncation},
                        system, expected, model="F_p coefficients and a truncated quotient in place of C[x_1..x_n]")


def separation_sets(perm, k):
    """Sep^n = {x : pi^-n(x) != x} for n = 1..k-1."""
    out = {}
    size = len(perm)
    for n in range(1, k):
        cur = list(range(size))
        for _ in range(n):
            cur = [perm[c] for c in cur]
        out[n] = sorted(x for x in range(size) if cur[x] != x)
    return out


def make_function_dynamics(size, perm, p, k=None):
    """Functions X -> F_p with C_k acting by f -> f o pi^-n.

    ``k`` defaults to the order of pi, raised to 2 when pi is the identity so
    that the group is nontrivial.  Maximality comes from the commutant
    criterion; the separation sets give a second route, maximal iff every
    Sep^n is all of X.  This set equality stands in for the domain-of-uniqueness
    notion of the topological setting, which is not modelled here.
    """
    size, p = int(size), int(p)
    perm = tuple(int(x) for x in perm)
    if size < 1 or size > 8:
        raise PreconditionError("X must have between 1 and 8 points")
    if sorted(perm) != list(range(size)):
        raise PreconditionError(f"{list(perm)} is not a bijection of {{0..{size - 1}}}")
    order = _perm_order(perm)
    if k is None:
        k = max(order, 2)
    k = int(k)
    if k % order:
        raise PreconditionError(f"k = {k} is not a multiple of the order {order} of pi")
    ring = FunctionRing(p, size)
    system = build_standard("action_only", ring, CyclicGroup(k), sigma=ring.precomposition(perm),
                            name=f"function_dynamics(X={size}, pi={list(perm)}, p={p}, k={k})")
    seps = separation_sets(perm, k)
    expected = {
        "separation_sets": {str(n): s for n, s in seps.items()},
        "maximal_commutative": all(len(s) == size for s in seps.values()),
        "commutative": all(not s for s in seps.values()),
    }
    return CatalogEntry("function_dynamics", {"size": size, "perm": list(perm), "p": p, "k": k}, system, expected,
                        model="functions on a finite set with F_p values")


def make_galois_action(p=2, degree=2):
    """F_{p^d} with C_d acting through powers of the Frobenius map."""
    p, degree = int(p), int(degree)
    ring = FiniteField(p, degree)
    system = build_standard("action_only", ring, CyclicGroup(degree), sigma=ring.frobenius(),
                            name=f"galois_action(F_{p ** degree}, C{degree})")
    expected = {"maximal_commutative": True, "integral_domain": True, "commutative": False,
                "fixed_ring_size": p}
    return CatalogEntry("galois_action", {"p": p, "degree": degree}, system, expected)


def _as_ring(ring):
    if isinstance(ring, Ring):
        return ring
    if isinstance(ring, dict):
        return ring_from_params(ring)
    raise ParseError(f"cannot read a ring from {ring!r}")


def _as_group(group):
    if isinstance(group, Group):
        return group
    if isinstance(group, dict):
        return group_from_params(group)
    raise ParseError(f"cannot read a group from {group!r}")


def _group_expectations(ring, G, alpha_symmetric=True):
    comm = ring.is_commutative and G.is_abelian and alpha_symmetric
    exp = {"commutative": comm}
    if ring.is_commutative and G.order > 1:
        exp["maximal_commutative"] = False
    return exp


def make_group_ring(ring, group):
    ring, G = _as_ring(ring), _as_group(group)
    system = build_standard("group_ring", ring, G, name=f"{ring}[{G}]")
    expected = _group_expectations(ring, G)
    expected["commutant_is_everything"] = ring.is_commutative
    return CatalogEntry("group_ring", {"ring": ring.params(), "group": G.params()}, system, expected)


def alpha_from_rows(ring, group, rows):
    """[[x, y, value], ...] -> {(x, y): value}."""
    table = {}
    for row in rows:
        if len(row) != 3:
            raise ParseError(f"alpha rows are [x, y, value], got {row!r}")
        x, y, v = row
        table[group(x), group(y)] = ring(v)
    return table


def alpha_to_rows(system):
    """Nontrivial alpha values as [[x, y, value], ...] in canonical order."""
    from .structure import group_json

    if system.alpha_is_trivial:
        return []
    els = system.group.elements()
    rows = []
    for s in els:
        for t in els:
            a = system.alpha(s, t)
            if not a.is_one():
                rows.append([group_json(s), group_json(t), str(a)])
    return rows


def make_twisted_group_ring(ring, group, alpha):
    ring, G = _as_ring(ring), _as_group(group)
    table = alpha if isinstance(alpha, dict) else alpha_from_rows(ring, G, alpha)
    system = build_standard("twisted_group_ring", ring, G, alpha=table, name=f"{ring}[{G}] twisted")
    expected = _group_expectations(ring, G, system.alpha_is_symmetric())
    return CatalogEntry("twisted_group_ring",
                        {"ring": ring.params(), "group": G.params(), "alpha": alpha_to_rows(system)},
                        system, expected)


def make_matrix_conjugation(n=2):
    """M_2(Z/n) with C_2 acting by conjugation with u of order 3 and alpha(1,1) = u^2.

    A non-commutative base where sigma is not a homomorphism (sigma_1^2 = Ad(u^2) != id).
    """
    n = int(n)
    ring = MatrixRing(n)
    u = ring("((0,1),(1,1))")
    if not u.is_unit():
        raise PreconditionError("u is not invertible")
    G = CyclicGroup(2)
    sigma = {0: ring.identity_automorphism(), 1: ring.conjugation(u)}
    system = build_standard("full", ring, G, sigma=sigma, alpha={(1, 1): u * u},
                            name=f"matrix_conjugation(M_2(Z/{n}), C2)")
    expected = {"commutative": False, "sigma_homomorphism": False}
    return CatalogEntry("matrix_conjugation", {"n": n}, system, expected)


CONSTRUCTORS = {
    "truncated_quantum_torus": (make_truncated_quantum_torus, "F_p[x]/(x^m), x -> q x, group C_k or Z"),
    "rational_quantum_torus": (make_rational_quantum_torus, "Q[x,x^-1], Z acting by x -> q x"),
    "symmetric_action": (make_symmetric_action, "S_n permuting variables of a truncated polynomial ring"),
    "function_dynamics": (make_function_dynamics, "functions X -> F_p, C_k acting through a bijection"),
    "galois_action": (make_galois_action, "F_{p^d} with the Frobenius action of C_d"),
    "group_ring": (make_group_ring, "group ring A[G]"),
    "twisted_group_ring": (make_twisted_group_ring, "twisted group ring with sigma = id"),
    "matrix_conjugation": (make_matrix_conjugation, "M_2(Z/n), C_2 by conjugation, non-trivial alpha"),
}


def build_entry(name, **params):
    try:
        ctor, _ = CONSTRUCTORS[name]
    except KeyError:
        raise ParseError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CONSTRUCTORS))}") from None
    try:
        return ctor(**params)
    except TypeError as exc:
        raise ParseError(f"bad parameters for {name}: {exc}") from None


def standard_entries():
    """The parameter choices exercised by the test-suite and the scenario corpus."""
    z4, z3, z2, z5 = ({"kind": "modular", "n": n} for n in (4, 3, 2, 5))
    c2 = {"kind": "cyclic", "k": 2}
    return [
        make_truncated_quantum_torus(3, 2, 3, 2),
        make_truncated_quantum_torus(3, 2, 3, 4),
        make_truncated_quantum_torus(5, 2, 3, 4),
        make_truncated_quantum_torus(3, 2, 3, group="integers"),
        make_rational_quantum_torus(2),
        make_rational_quantum_torus(-1),
        make_rational_quantum_torus(Fraction(1, 3)),
        make_symmetric_action(3, 2, 2),
        make_function_dynamics(3, (1, 2, 0), 2),
        make_function_dynamics(3, (1, 0, 2), 2),
        make_function_dynamics(2, (0, 1), 2),
        make_galois_action(2, 2),
        make_group_ring(z4, c2),
        make_group_ring(z2, c2),
        make_group_ring(z3, {"kind": "symmetric", "n": 3}),
        make_twisted_group_ring(z5, c2, [[1, 1, 2]]),
        make_matrix_conjugation(2),
    ]


def catalog_listing():
    """(name, description) pairs for ``crossed-forge catalog list``."""
    return [(name, desc) for name, (_, desc) in sorted(CONSTRUCTORS.items())]


def corrupted_systems():
    """Systems whose tables break one condition each: (label, system, condition)."""
    out = []
    z5 = ModularRing(5)
    c2, c3 = CyclicGroup(2), CyclicGroup(3)
    ident5 = z5.identity_automorphism()
    out.append(("alpha(g,g) = 0", CrossedSystem(z5, c2, {0: ident5, 1: ident5}, alpha={(1, 1): 0},
                                                name="Z/5[C2] with alpha(1,1) = 0"), "unit"))
    out.append(("alpha(e,g) = 2", CrossedSystem(z5, c2, {0: ident5, 1: ident5}, alpha={(0, 1): 2},
                                                name="Z/5[C2] with alpha(0,1) = 2"), "(iii)"))
    f4 = FiniteField(2, 2)
    frob = f4.frobenius()
    out.append(("sigma_1 = sigma_2 = Frobenius on C3",
                CrossedSystem(f4, c3, {0: f4.identity_automorphism(), 1: frob, 2: frob},
                              name="F_4 x C3 with Frobenius on both generators"), "(i)"))
    out.append(("alpha(1,1) = 2 only, on C3",
                CrossedSystem(z5, c3, {g: ident5 for g in range(3)}, alpha={(1, 1): 2},
                              name="Z/5[C3] with alpha(1,1) = 2"), "(ii)"))
    out.append(("sigma_e = Frobenius",
                CrossedSystem(f4, c2, {0: frob, 1: frob}, name="F_4 x C2 with sigma_0 = Frobenius"), "sigma_e"))
    f3 = PolyQuotientRing(3, [0, 0, 0, 1])
    out.append(("x -> 2x on C3 (order mismatch)",
                CrossedSystem(f3, c3, f3.automorphism([f3("2x")]), name="F_3[x]/(x^3) x C3, x -> 2x"), "(i)"))
    return out
