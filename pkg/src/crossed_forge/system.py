"""Crossed systems {A, G, sigma, alpha}: storage, validation, standard builders."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import limits
from .algebra.groups import GroupElem, is_subgroup
from .algebra.rings import RingAutomorphism
from .errors import PreconditionError, UnsupportedEnumerationError, UnsupportedError, ValidationError

MAX_WITNESSES = 10


class CrossedSystem:
    """The data of a crossed product A x_{sigma,alpha} G.

    For a finite group ``sigma`` is a total mapping ``g -> RingAutomorphism``
    and ``alpha`` a mapping ``(g, h) -> unit`` (missing pairs read as 1, and
    ``alpha=None`` means the trivial cocycle).  For the integers ``sigma`` is
    the single automorphism attached to 1 and ``alpha`` must be trivial.

    The constructor does not validate; use :func:`build_standard` or
    :func:`verify_crossed_system`.
    """

    def __init__(self, ring, group, sigma, alpha=None, name=None, note=None):
        self.ring = ring
        self.group = group
        self.name = name or f"{ring} x {group}"
        self.note = note
        if group.is_finite:
            if isinstance(sigma, RingAutomorphism):
                sigma = {g: sigma.power(g.value) for g in group.elements()} if group.kind == "cyclic" else None
                if sigma is None:
                    raise PreconditionError("a single generator automorphism only determines sigma on a cyclic group")
            table = {}
            for g, aut in sigma.items():
                g = group(g)
                if aut.ring != ring:
                    raise PreconditionError(f"sigma({g}) acts on {aut.ring}, not {ring}")
                table[g.value] = aut
            missing = [g for g in group.elements() if g.value not in table]
            if missing:
                raise PreconditionError(f"sigma is not defined on {missing[0]}", witness=str(missing[0]))
            self._sigma = table
            self._sigma_gen = None
        else:
            if not isinstance(sigma, RingAutomorphism):
                raise PreconditionError("over Z, sigma is given by the automorphism attached to 1")
            if sigma.ring != ring:
                raise PreconditionError(f"sigma acts on {sigma.ring}, not {ring}")
            if alpha is not None:
                raise UnsupportedError("only the trivial cocycle is supported over Z")
            self._sigma_gen = sigma
            self._sigma = {0: ring.identity_automorphism(), 1: sigma}
        self._alpha = None
        if alpha is not None:
            one = ring._one
            tab = {}
            for (s, t), a in alpha.items():
                a = ring(a)
                if a.value != one:
                    tab[group(s).value, group(t).value] = a.value
            self._alpha = tab or None

    # -- accessors ------------------------------------------------------------
    @property
    def is_finite(self):
        return self.ring.is_finite and self.group.is_finite

    @property
    def size(self):
        """Number of elements of the crossed product (finite systems)."""
        if not self.is_finite:
            raise UnsupportedEnumerationError(f"{self.name} is infinite")
        return self.ring.size ** self.group.order

    def sigma(self, g):
        return self._sigma_value(self.group(g).value)

    def _sigma_value(self, gv):
        aut = self._sigma.get(gv)
        if aut is None:
            if self._sigma_gen is None:
                raise PreconditionError(f"sigma is not defined on {gv!r}")
            aut = self._sigma_gen.power(gv)
            self._sigma[gv] = aut
        return aut

    def alpha(self, s, t):
        g = self.group
        return self.ring.elem(self._alpha_value(g(s).value, g(t).value))

    def _alpha_value(self, sv, tv):
        if self._alpha is None:
            return self.ring._one
        return self._alpha.get((sv, tv), self.ring._one)

    @property
    def alpha_is_trivial(self):
        return self._alpha is None

    @property
    def sigma_is_trivial(self):
        if self._sigma_gen is not None:
            return self._sigma_gen.is_identity()
        return all(a.is_identity() for a in self._sigma.values())

    def alpha_is_symmetric(self):
        if self._alpha is None:
            return True
        return all(self._alpha_value(t, s) == v for (s, t), v in self._alpha.items())

    def sigma_is_homomorphism(self):
        """sigma_x o sigma_y == sigma_xy for all pairs (finite groups)."""
        if not self.group.is_finite:
            return True
        els = self.group.elements()
        return all(self.sigma(x).compose(self.sigma(y)) == self.sigma(x * y) for x in els for y in els)

    def alpha_table(self):
        """Full table {(s, t): alpha(s, t)} over a finite group."""
        els = self.group.elements()
        return {(s, t): self.alpha(s, t) for s in els for t in els}

    def __repr__(self):
        return f"<CrossedSystem {self.name}>"


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple
    message: str

    def to_dict(self):
        return {"condition": self.condition, "witness": list(self.witness), "message": self.message}


@dataclass
class ValidationReport:
    system: str
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def conditions(self):
        return {v.condition for v in self.violations}

    def first(self, condition):
        for v in self.violations:
            if v.condition == condition:
                return v
        return None

    def _add(self, condition, witness, message):
        if sum(1 for v in self.violations if v.condition == condition) < MAX_WITNESSES:
            self.violations.append(Violation(condition, tuple(str(w) for w in witness), message))

    def to_dict(self):
        return {"valid": self.ok, "violations": [v.to_dict() for v in self.violations]}

    def __str__(self):
        if self.ok:
            return f"{self.system}: valid crossed system"
        lines = [f"{self.system}: {len(self.violations)} violation(s)"]
        lines += [f"  {v.condition}: {v.message} at {', '.join(v.witness)}" for v in self.violations]
        return "\n".join(lines)


def verify_crossed_system(system):
    """Check unit values and conditions (i)-(iii) exhaustively.

    Condition (i) is checked on every ring element for finite rings and on the
    ring generators otherwise (two automorphisms agreeing on generators agree).
    """
    report = ValidationReport(system.name)
    ring, group = system.ring, system.group
    if not group.is_finite:
        # sigma_n := sigma_1^n is a homomorphism by construction, alpha is trivial
        return report
    els = group.elements()
    if ring.is_finite:
        limits.check_ring_size(ring.size, str(ring))
        probe = ring.elements()
    else:
        probe = list(ring.generators())
    e = group.identity

    for s in els:
        for t in els:
            a = system.alpha(s, t)
            if not a.is_unit():
                report._add("unit", (s, t, a), "alpha value is not a unit")

    if not system.sigma(e).is_identity():
        report._add("sigma_e", (e,), "sigma_e is not the identity")

    for x in els:
        if not system.alpha(x, e).is_one():
            report._add("(iii)", (x, e), "alpha(x, e) != 1")
        if not system.alpha(e, x).is_one():
            report._add("(iii)", (e, x), "alpha(e, x) != 1")

    for x in els:
        sx = system.sigma(x)
        for y in els:
            sy = system.sigma(y)
            sxy = system.sigma(x * y)
            u = system.alpha(x, y)
            if not u.is_unit():
                continue
            ui = u.inverse()
            for a in probe:
                if sx(sy(a)) != u * sxy(a) * ui:
                    report._add("(i)", (x, y, a), "sigma_x(sigma_y(a)) != alpha(x,y) sigma_xy(a) alpha(x,y)^-1")
                    break

    for x in els:
        sx = system.sigma(x)
        for y in els:
            for z in els:
                lhs = system.alpha(x, y) * system.alpha(x * y, z)
                rhs = sx(system.alpha(y, z)) * system.alpha(x, y * z)
                if lhs != rhs:
                    report._add("(ii)", (x, y, z), "alpha(x,y) alpha(xy,z) != sigma_x(alpha(y,z)) alpha(x,yz)")
    return report


BUILD_KINDS = ("group_ring", "twisted_group_ring", "action_only", "full")


def build_standard(kind, ring, group, sigma=None, alpha=None, name=None, note=None):
    """Build and validate one of the standard kinds of crossed system.

    Raises :class:`ValidationError` carrying the report when the tables
    violate the crossed-system conditions.
    """
    if kind not in BUILD_KINDS:
        raise PreconditionError(f"unknown system kind {kind!r}; expected one of {BUILD_KINDS}")
    if kind in ("group_ring", "twisted_group_ring"):
        if sigma is not None:
            raise PreconditionError(f"{kind} has trivial sigma")
        sigma = ring.identity_automorphism()
        if group.is_finite:
            sigma = {g: sigma for g in group.elements()}
    if kind in ("group_ring", "action_only") and alpha is not None:
        raise PreconditionError(f"{kind} has trivial alpha")
    if kind in ("twisted_group_ring", "full") and alpha is None and kind == "twisted_group_ring":
        raise PreconditionError("twisted_group_ring needs an alpha table")
    if sigma is None:
        raise PreconditionError(f"{kind} needs a sigma table")
    system = CrossedSystem(ring, group, sigma, alpha, name=name, note=note)
    report = verify_crossed_system(system)
    if not report.ok:
        raise ValidationError(report)
    return system


def fixed_ring(system):
    """A^G = {a : sigma_s(a) = a for every s}; over Z only sigma_1 matters."""
    ring = system.ring
    if not ring.is_finite:
        raise UnsupportedEnumerationError(f"the fixed ring of {ring} is not enumerable")
    if system.group.is_finite:
        auts = [system.sigma(g) for g in system.group.elements()]
    else:
        auts = [system.sigma(1)]
    auts = [a for a in auts if not a.is_identity()]
    return frozenset(a for a in ring.elements() if all(s(a) == a for s in auts))


def sigma_kernel(system):
    """{g : sigma_g = id} for finite groups; for Z the m with kernel mZ (0 if trivial)."""
    group = system.group
    if not group.is_finite:
        return system.sigma(1).order()
    kernel = frozenset(g for g in group.elements() if system.sigma(g).is_identity())
    if not is_subgroup(group, kernel):
        raise PreconditionError("sigma^-1(id) is not a subgroup; sigma is not a homomorphism")
    return kernel


def kernel_is_trivial(system):
    k = sigma_kernel(system)
    if isinstance(k, int):
        return k == 0
    return len(k) == 1


def is_group_element(x):
    return isinstance(x, GroupElem)
