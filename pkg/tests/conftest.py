import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracle  # noqa: E402
from crossed_forge.algebra import CyclicGroup, FiniteField, ModularRing, PolyQuotientRing  # noqa: E402
from crossed_forge.catalog import (  # noqa: E402
    make_galois_action,
    make_group_ring,
    make_truncated_quantum_torus,
    make_twisted_group_ring,
    standard_entries,
)

REPO = Path(__file__).resolve().parent.parent
SCENARIOS = REPO / "scenarios"


def _pad(v, n):
    v = tuple(v) if isinstance(v, tuple) else (v,)
    return v + (0,) * (n - len(v))


class Pair:
    """A library system together with its independent oracle model."""

    def __init__(self, system, naive, coeff_to_naive, group_to_naive):
        self.system = system
        self.naive = naive
        self.c2n = coeff_to_naive
        self.g2n = group_to_naive

    def to_naive(self, u):
        out = [self.naive.zero] * len(self.naive.group)
        for g, a in u.terms():
            out[self.naive.index[self.g2n(g.value)]] = self.c2n(a.value)
        return tuple(out)

    def set_to_naive(self, elems):
        return {self.to_naive(u) for u in elems}


@functools.lru_cache(maxsize=None)
def torus_pair(k=2):
    entry = make_truncated_quantum_torus(3, 2, 3, k)
    return Pair(entry.system, oracle.truncated_torus_f3(k), lambda v: _pad(v, 3), lambda g: g)


@functools.lru_cache(maxsize=None)
def s3_pair():
    entry = make_group_ring({"kind": "modular", "n": 3}, {"kind": "symmetric", "n": 3})
    S, mul = oracle.s3()
    return Pair(entry.system, oracle.group_ring_mod(3, S, mul), lambda v: v, lambda g: g)


@functools.lru_cache(maxsize=None)
def f4_pair():
    entry = make_galois_action(2, 2)
    return Pair(entry.system, oracle.f4_frobenius(), lambda v: _pad(v, 2), lambda g: g)


@functools.lru_cache(maxsize=None)
def z4_pair():
    entry = make_group_ring({"kind": "modular", "n": 4}, {"kind": "cyclic", "k": 2})
    naive = oracle.group_ring_mod(4, range(2), lambda s, t: (s + t) % 2)
    return Pair(entry.system, naive, lambda v: v, lambda g: g)


@functools.lru_cache(maxsize=None)
def twisted_pair():
    entry = make_twisted_group_ring({"kind": "modular", "n": 5}, {"kind": "cyclic", "k": 2}, [[1, 1, 2]])
    return Pair(entry.system, oracle.twisted_z5_c2(2), lambda v: v, lambda g: g)


ORACLE_PAIRS = {
    "torus_f3_c2": torus_pair,
    "z3_s3": s3_pair,
    "f4_frobenius": f4_pair,
    "z4_c2": z4_pair,
    "twisted_z5_c2": twisted_pair,
}


@functools.lru_cache(maxsize=None)
def catalog():
    return standard_entries()


def finite_catalog(max_size=729):
    return [e for e in catalog() if e.system.is_finite and e.system.size <= max_size]


@pytest.fixture(params=sorted(ORACLE_PAIRS))
def pair(request):
    return ORACLE_PAIRS[request.param]()


@pytest.fixture
def f3():
    return PolyQuotientRing(3, [0, 0, 0, 1])


@pytest.fixture
def z4():
    return ModularRing(4)


@pytest.fixture
def f4():
    return FiniteField(2, 2)


@pytest.fixture
def c2():
    return CyclicGroup(2)
