"""Centers, commutants, commutativity and maximal commutativity of the base ring.

Each computation has a characterization path (per-degree conditions on
coefficients) and a definition-level brute-force path; the test-suite checks
that the two agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import limits
from .algebra.rings import ring_is_commutative
from .errors import PreconditionError, SizeGuardError, UnsupportedEnumerationError, UnsupportedError
from .product import CrossedElem, all_elements, commutes, embed, single_terms
from .system import sigma_kernel


@dataclass(frozen=True)
class Verdict:
    """A boolean answer with an optional witness for the negative case."""

    value: bool
    witness: object = None
    method: str = ""

    def __bool__(self):
        return self.value


def group_json(g):
    """Group elements as JSON: ints for cyclic/integer groups, strings otherwise."""
    return g.value if isinstance(g.value, int) else str(g)


def extend_span(span, v, add):
    """Smallest additive subgroup containing the subgroup ``span`` and ``v``."""
    if v in span:
        return span
    out = set(span)
    cur = v
    while cur not in span:
        out.update(add(x, cur) for x in span)
        cur = add(cur, v)
    return frozenset(out)


def additive_basis(elems, zero):
    """A greedy generating set (canonical order) of the additive group spanned by ``elems``."""
    span = frozenset([zero])
    gens = []
    for e in sorted(elems):
        if e not in span:
            gens.append(e)
            span = extend_span(span, e, lambda a, b: a + b)
    return gens, span


def _probe(ring):
    """Elements whose commuting behaviour determines it on all of A."""
    seen = []
    for a in tuple(ring.generators()) + tuple(ring.additive_generators()):
        if a not in seen:
            seen.append(a)
    return seen


def _in_R(system, s, r, probe=None):
    """r sigma_s(a) = a r for all a (checked on a generating set)."""
    sig = system.sigma(s)
    if probe is None:
        probe = _probe(system.ring) if system.ring.is_finite else list(system.ring.generators())
    return all(r * sig(a) == a * r for a in probe)


class CoefficientConstraintSet:
    """The per-degree sets R_s = {r : r sigma_s(a) = a r for all a}.

    ``kind`` is ``"explicit"`` (finite rings: each R_s stored as a set; over
    the integers the sets repeat with ``period``) or ``"dichotomy"``
    (integral domains: R_s = A when sigma_s = id and {0} otherwise).
    """

    def __init__(self, system, kind, sets=None, period=None, kernel=None):
        self.system = system
        self.kind = kind
        self._sets = sets or {}
        self.period = period
        self.kernel = kernel

    def _reduce(self, gv):
        if self.period:
            return gv % self.period
        return gv

    def in_kernel(self, g):
        gv = self.system.group(g).value
        if isinstance(self.kernel, int):
            return gv == 0 if self.kernel == 0 else gv % self.kernel == 0
        return gv in self.kernel

    def contains(self, g, r):
        r = self.system.ring(r)
        if r.is_zero():
            return True
        if self.kind == "dichotomy":
            return self.in_kernel(g)
        gv = self.system.group(g).value
        return r in self._sets[self._reduce(gv)]

    def degree_set(self, g):
        """R_g as a frozenset of ring elements (explicit kind, or dichotomy over a finite ring)."""
        if self.kind == "dichotomy":
            ring = self.system.ring
            if not ring.is_finite:
                raise UnsupportedEnumerationError(f"R_{g} is all of {ring}")
            return frozenset(ring.elements()) if self.in_kernel(g) else frozenset([ring.zero])
        gv = self.system.group(g).value
        return self._sets[self._reduce(gv)]

    def is_zero_at(self, g):
        if self.kind == "dichotomy":
            return not self.in_kernel(g)
        return len(self.degree_set(g)) == 1

    def elements(self):
        """All commutant elements sum r_s [s] (finite systems)."""
        sys = self.system
        if not sys.group.is_finite:
            raise UnsupportedEnumerationError("the commutant over an infinite group is infinite")
        els = sys.group.elements()
        sets = [sorted(self.degree_set(g)) for g in els]
        total = 1
        for s in sets:
            total *= len(s)
        limits.check_product_size(total, "commutant")
        out = []
        for combo in itertools.product(*sets):
            out.append(CrossedElem(sys, {g: r for g, r in zip(els, combo) if not r.is_zero()}))
        return frozenset(out)

    def to_dict(self):
        sys = self.system
        if self.kind == "dichotomy":
            if isinstance(self.kernel, int):
                kern = f"{self.kernel}Z" if self.kernel else "{0}"
            else:
                kern = [group_json(g) for g in sorted(sys.group.elem(v) for v in self.kernel)]
            return {"kind": "dichotomy", "kernel": kern, "rule": "R_s = A on the kernel of sigma, {0} elsewhere"}
        degrees = {}
        for gv in sorted(self._sets, key=sys.group.sort_key):
            g = sys.group.elem(gv)
            degrees[str(g)] = [str(r) for r in sorted(self._sets[gv])]
        d = {"kind": "explicit", "degrees": degrees}
        if self.period:
            d["period"] = self.period
        return d


def commutant_constraints(system):
    ring, group = system.ring, system.group
    if ring.is_finite:
        limits.check_ring_size(ring.size, str(ring))
        candidates = ring.elements()
        probe = _probe(ring)
        if group.is_finite:
            degrees = [g.value for g in group.elements()]
            period = None
        else:
            m = sigma_kernel(system)
            if m == 0:
                if ring.is_integral_domain:
                    return CoefficientConstraintSet(system, "dichotomy", kernel=0)
                raise UnsupportedError("sigma_1 has infinite order over a non-domain; R_s has no finite description")
            degrees = list(range(m))
            period = m
        sets = {}
        for gv in degrees:
            sets[gv] = frozenset(r for r in candidates if _in_R(system, gv, r, probe))
        return CoefficientConstraintSet(system, "explicit", sets=sets, period=period)
    if ring.is_integral_domain and ring.is_commutative:
        if group.is_finite:
            kernel = frozenset(g.value for g in group.elements() if system.sigma(g).is_identity())
        else:
            kernel = sigma_kernel(system)
        return CoefficientConstraintSet(system, "dichotomy", kernel=kernel)
    raise UnsupportedError(f"no finite description of the commutant over {ring}")


def commutant_membership(u, cross_check=False):
    """Every coefficient r_s of u lies in R_s; optionally compared with ua = au for all a."""
    sys = u.system
    ring = sys.ring
    if ring.is_finite:
        probe = _probe(ring)
        result = all(_in_R(sys, g, r, probe) for g, r in u.terms())
    elif ring.is_integral_domain and ring.is_commutative:
        result = all(sys.sigma(g).is_identity() for g, _ in u.terms())
    else:
        raise UnsupportedError(f"commutant membership over {ring} is not supported")
    if cross_check:
        if not ring.is_finite:
            raise UnsupportedEnumerationError("the brute-force cross-check needs a finite ring")
        brute = all(commutes(u, embed(a, sys)) for a in ring.elements())
        if brute != result:
            raise AssertionError(f"commutant membership paths disagree on {u}")
    return result


def commutant_bruteforce(system):
    """{u : u (a[e]) = (a[e]) u for all a in A} by enumerating the whole crossed product."""
    base = [embed(a, system) for a in system.ring.elements()]
    return frozenset(u for u in all_elements(system) if all(commutes(u, b) for b in base))


def _center_condition(system, u):
    """r_{ts^-1} alpha(ts^-1, s) = sigma_s(r_{s^-1 t}) alpha(s, s^-1 t) for all s, t."""
    G = system.group
    if G.is_finite:
        els = G.elements()
        for s in els:
            si = s.inverse()
            for t in els:
                lhs = u.coefficient(t * si) * system.alpha(t * si, s)
                rhs = system.sigma(s)(u.coefficient(si * t)) * system.alpha(s, si * t)
                if lhs != rhs:
                    return False
        return True
    if not system.alpha_is_trivial:
        raise UnsupportedError("only trivial cocycles are supported over Z")
    # alpha = 1 and sigma_n = sigma_1^n: the condition says each coefficient is sigma_1-fixed
    sig = system.sigma(1)
    return all(sig(r) == r for _, r in u.terms())


def center_membership(u, cross_check=False):
    sys = u.system
    result = _center_condition(sys, u) and commutant_membership(u)
    if cross_check:
        if not sys.is_finite:
            raise UnsupportedEnumerationError("the brute-force cross-check needs a finite system")
        brute = all(commutes(u, v) for v in single_terms(sys))
        if brute != result:
            raise AssertionError(f"center membership paths disagree on {u}")
    return result


def center_compute(system, method="characterization"):
    """The center as a set of elements.

    ``characterization`` filters the commutant by the degree-shift condition;
    ``bruteforce`` keeps every element commuting with all single terms a[s].
    """
    if not system.is_finite:
        raise UnsupportedEnumerationError("the center of an infinite crossed product is not enumerable; "
                                          "use center_membership")
    if method == "characterization":
        candidates = commutant_constraints(system).elements()
        return frozenset(u for u in candidates if _center_condition(system, u))
    if method == "bruteforce":
        return center_bruteforce(system)
    raise ValueError(f"unknown method {method!r}")


def center_bruteforce(system):
    singles = single_terms(system)
    return frozenset(u for u in all_elements(system) if all(commutes(u, v) for v in singles))


def is_commutative(system, cross_check=False):
    """Four-condition test: A commutative, sigma trivial, G abelian, alpha symmetric.

    The witness names the first failing condition with its offending data.
    """
    ring, group = system.ring, system.group
    verdict = None
    if not _ring_commutative(ring):
        verdict = Verdict(False, {"condition": "(i)", "reason": "A is not commutative"}, "criterion")
    if verdict is None:
        if group.is_finite:
            for g in group.elements():
                if not system.sigma(g).is_identity():
                    verdict = Verdict(False, {"condition": "(ii)", "degree": group_json(g),
                                              "sigma": str(system.sigma(g))}, "criterion")
                    break
        elif not system.sigma(1).is_identity():
            verdict = Verdict(False, {"condition": "(ii)", "degree": 1, "sigma": str(system.sigma(1))}, "criterion")
    if verdict is None and group.is_finite:
        els = group.elements()
        for a, b in itertools.product(els, els):
            if a * b != b * a:
                verdict = Verdict(False, {"condition": "(iii)", "pair": [group_json(a), group_json(b)]}, "criterion")
                break
    if verdict is None and group.is_finite:
        els = group.elements()
        for a, b in itertools.product(els, els):
            if system.alpha(a, b) != system.alpha(b, a):
                verdict = Verdict(False, {"condition": "(iv)", "pair": [group_json(a), group_json(b)]}, "criterion")
                break
    if verdict is None:
        verdict = Verdict(True, None, "criterion")
    if cross_check:
        brute = is_commutative_bruteforce(system)
        if brute.value != verdict.value:
            raise AssertionError(f"commutativity paths disagree on {system.name}")
    return verdict


def _ring_commutative(ring):
    if ring.is_finite:
        return ring_is_commutative(ring)
    return ring.is_commutative


def is_commutative_bruteforce(system):
    """Pairwise commuting of all single-term elements a[s] (enough by bilinearity)."""
    if not system.is_finite:
        raise UnsupportedEnumerationError("the brute-force commutativity test needs a finite system")
    singles = single_terms(system)
    for u, v in itertools.combinations(singles, 2):
        if not commutes(u, v):
            return Verdict(False, (str(u), str(v)), "bruteforce")
    return Verdict(True, None, "bruteforce")


def _require_commutative_base(system):
    if not _ring_commutative(system.ring):
        raise UnsupportedError("maximal commutativity of the base ring is defined here for commutative A only")


def is_maximal_commutative(system, method="auto"):
    """Is the embedded base ring its own commutant?

    ``auto`` uses the kernel test for integral domains (maximal iff sigma_g != id
    for every g != e) and otherwise R_s = {0} for every s != e.  The witness of a
    negative answer is ``(s, r)`` with r a minimal nonzero element of R_s.
    """
    _require_commutative_base(system)
    ring, group = system.ring, system.group
    domain = (not ring.is_finite) or ring.is_integral_domain
    if method == "auto":
        method = "domain" if domain else "general"
    if method == "domain":
        if not domain:
            raise PreconditionError(f"{ring} is not an integral domain")
        kernel = sigma_kernel(system)
        if isinstance(kernel, int):
            if kernel == 0:
                return Verdict(True, None, "domain")
            return Verdict(False, (group.elem(kernel), ring.one), "domain")
        nontrivial = sorted(g for g in kernel if not g.is_identity())
        if not nontrivial:
            return Verdict(True, None, "domain")
        return Verdict(False, (nontrivial[0], ring.one), "domain")
    if method != "general":
        raise ValueError(f"unknown method {method!r}")
    if group.is_finite:
        degrees = [g for g in group.elements() if not g.is_identity()]
    else:
        # sigma_1 of finite order m makes R_s periodic, and R_m = A; infinite order is rejected
        m = sigma_kernel(system)
        if m == 0:
            raise UnsupportedError("over Z with sigma_1 of infinite order, maximal commutativity is decided "
                                   "only for integral domains")
        degrees = [group(s) for s in range(1, m + 1)]
    cons = commutant_constraints(system)
    for g in degrees:
        nonzero = sorted(r for r in cons.degree_set(g) if not r.is_zero())
        if nonzero:
            return Verdict(False, (g, nonzero[0]), "general")
    return Verdict(True, None, "general")


def commutant_is_commutative(system, exhaustive=False):
    """Do all elements of the commutant commute with each other?

    By default the test runs on additive generators of each R_s placed in
    degree s (enough by bilinearity); ``exhaustive`` compares every pair.
    The witness of a negative answer is a pair of single-term elements.
    """
    if not system.is_finite:
        raise UnsupportedEnumerationError("commutant pairwise check needs a finite system")
    cons = commutant_constraints(system)
    if exhaustive:
        elems = sorted(cons.elements())
        for i, u in enumerate(elems):
            for v in elems[i + 1:]:
                if not commutes(u, v):
                    return Verdict(False, (u, v), "exhaustive")
        return Verdict(True, None, "exhaustive")
    ring = system.ring
    gens = []
    for g in system.group.elements():
        basis, _ = additive_basis(cons.degree_set(g), ring.zero)
        gens.extend(CrossedElem(system, {g: r}) for r in basis)
    for u, v in itertools.combinations(gens, 2):
        if not commutes(u, v):
            return Verdict(False, (u, v), "generators")
    return Verdict(True, None, "generators")


def commutant_theorem_applies(system):
    """A commutative, G abelian, alpha symmetric: the commutant must be commutative."""
    return _ring_commutative(system.ring) and system.group.is_abelian and system.alpha_is_symmetric()


@dataclass
class StructureReport:
    system: object
    commutant: CoefficientConstraintSet
    center: object = None
    is_commutative: Verdict = None
    is_maximal_commutative: Verdict = None
    commutant_commutative: Verdict = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        d = {"commutant": self.commutant.to_dict()}
        if self.center is not None:
            d["center"] = sorted(str(u) for u in self.center)
        for name in ("is_commutative", "is_maximal_commutative", "commutant_commutative"):
            v = getattr(self, name)
            if v is not None:
                d[name] = v.value
                if not v.value and v.witness is not None:
                    d[name + "_witness"] = witness_json(v.witness)
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def witness_json(w):
    if isinstance(w, dict):
        return w
    if isinstance(w, tuple):
        return [witness_json(x) for x in w]
    if hasattr(w, "group") and hasattr(w, "value"):
        return group_json(w)
    return str(w)


def analyze(system):
    """Everything computable about the system's center and commutant."""
    cons = commutant_constraints(system)
    report = StructureReport(system, cons)
    if system.is_finite:
        try:
            report.center = center_compute(system)
        except (SizeGuardError, UnsupportedEnumerationError) as exc:
            report.notes.append(f"center not enumerated: {exc}")
    report.is_commutative = is_commutative(system)
    if _ring_commutative(system.ring):
        try:
            report.is_maximal_commutative = is_maximal_commutative(system)
        except UnsupportedError as exc:
            report.notes.append(str(exc))
    if system.is_finite:
        report.commutant_commutative = commutant_is_commutative(system)
    return report
