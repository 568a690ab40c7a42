"""Finite groups (cyclic, symmetric, direct products, quotients) and Z.

As with rings, group elements are hashable payloads wrapped in
:class:`GroupElem`; the payload doubles as the canonical sort key.
Permutations are 0-based one-line tuples composed right to left,
``(s*t)(i) = s(t(i))``, and printed 1-based.
"""
from __future__ import annotations

import itertools
import math
import re

from .. import limits
from ..errors import (
    DomainMismatchError,
    NormalityError,
    ParseError,
    PreconditionError,
    UnsupportedEnumerationError,
)
from ..textual import split_top_level, strip_parens


class GroupElem:
    __slots__ = ("group", "value")

    def __init__(self, group, value):
        self.group = group
        self.value = value

    def _check(self, other):
        if not isinstance(other, GroupElem):
            raise TypeError(f"{other!r} is not a group element")
        if other.group is not self.group and other.group != self.group:
            raise DomainMismatchError(f"cannot combine elements of {self.group} and {other.group}")

    def __mul__(self, other):
        self._check(other)
        return GroupElem(self.group, self.group._mul(self.value, other.value))

    def inverse(self):
        return GroupElem(self.group, self.group._inv(self.value))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.group.identity
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self):
        return self.value == self.group._identity

    def __eq__(self, other):
        if not isinstance(other, GroupElem):
            return NotImplemented
        return self.value == other.value and (other.group is self.group or other.group == self.group)

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.group.sort_key(self.value) < self.group.sort_key(other.value)

    def __str__(self):
        return self.group.format(self.value)

    def __repr__(self):
        return f"<{self.group.name}: {self}>"


class Group:
    kind = "abstract"
    is_finite = True

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __str__(self):
        return self.name

    __repr__ = __str__

    @property
    def identity(self):
        return GroupElem(self, self._identity)

    def __call__(self, x):
        if isinstance(x, GroupElem):
            if x.group is not self and x.group != self:
                raise DomainMismatchError(f"{x!r} is not an element of {self}")
            return x
        if isinstance(x, str):
            return GroupElem(self, self.parse_value(x))
        return GroupElem(self, self._coerce(x))

    def _coerce(self, x):
        raise ParseError(f"cannot convert {x!r} into an element of {self}")

    def elem(self, value):
        return GroupElem(self, value)

    def sort_key(self, value):
        return value

    @property
    def order(self):
        raise NotImplementedError

    def elements(self):
        if not self.is_finite:
            raise UnsupportedEnumerationError(f"{self} is infinite and cannot be enumerated")
        limits.check_group_order(self.order, str(self))
        return [GroupElem(self, v) for v in self._iter_values()]

    def _iter_values(self):
        raise NotImplementedError

    @property
    def is_abelian(self):
        els = self.elements()
        return all(a * b == b * a for a in els for b in els)

    def element_order(self, g):
        g = self(g)
        cur, n = g, 1
        while not cur.is_identity():
            cur = cur * g
            n += 1
        return n


class CyclicGroup(Group):
    kind = "cyclic"

    def __init__(self, k):
        if k < 1:
            raise PreconditionError("cyclic group order must be positive")
        self.k = k
        self.name = f"C{k}"
        self._identity = 0

    def _key(self):
        return (self.k,)

    def params(self):
        return {"kind": "cyclic", "k": self.k}

    @property
    def order(self):
        return self.k

    def _iter_values(self):
        return iter(range(self.k))

    @property
    def is_abelian(self):
        return True

    def generator(self):
        return self.elem(1 % self.k)

    def _mul(self, a, b):
        return (a + b) % self.k

    def _inv(self, a):
        return -a % self.k

    def _coerce(self, x):
        if isinstance(x, int) and not isinstance(x, bool):
            return x % self.k
        return super()._coerce(x)

    def format(self, v):
        return str(v)

    def parse_value(self, text):
        t = text.strip()
        if not re.fullmatch(r"-?\d+", t):
            raise ParseError(f"bad element {text!r} of {self}")
        return int(t) % self.k


class IntegerGroup(Group):
    """(Z, +); arithmetic only, enumeration is refused."""

    kind = "integers"
    is_finite = False
    name = "Z"

    def __init__(self):
        self._identity = 0

    def _key(self):
        return ()

    def params(self):
        return {"kind": "integers"}

    @property
    def order(self):
        return None

    @property
    def is_abelian(self):
        return True

    def generator(self):
        return self.elem(1)

    def _mul(self, a, b):
        return a + b

    def _inv(self, a):
        return -a

    def element_order(self, g):
        return 1 if self(g).value == 0 else 0

    def _coerce(self, x):
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        return super()._coerce(x)

    def format(self, v):
        return str(v)

    def parse_value(self, text):
        t = text.strip()
        if not re.fullmatch(r"-?\d+", t):
            raise ParseError(f"bad element {text!r} of Z")
        return int(t)


class SymmetricGroup(Group):
    kind = "symmetric"

    def __init__(self, n):
        if n < 1:
            raise PreconditionError("S_n needs n >= 1")
        self.n = n
        self.name = f"S{n}"
        self._identity = tuple(range(n))
        self._products = {}

    def _key(self):
        return (self.n,)

    def params(self):
        return {"kind": "symmetric", "n": self.n}

    @property
    def order(self):
        return math.factorial(self.n)

    def _iter_values(self):
        return itertools.permutations(range(self.n))

    @property
    def is_abelian(self):
        return self.n <= 2

    def _mul(self, a, b):
        key = (a, b)
        r = self._products.get(key)
        if r is None:
            r = tuple(a[i] for i in b)
            if len(self._products) < 1 << 16:
                self._products[key] = r
        return r

    def _inv(self, a):
        out = [0] * self.n
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    def _coerce(self, x):
        t = tuple(x)
        if sorted(t) != list(range(self.n)):
            raise ParseError(f"{x!r} is not a permutation of 0..{self.n - 1}")
        return t

    def format(self, v):
        return "".join(str(i + 1) for i in v)

    def parse_value(self, text):
        t = text.strip()
        if t in ("e", "()", "id"):
            return self._identity
        if t.startswith("("):
            perm = list(range(self.n))
            for cyc in re.findall(r"\(([^()]*)\)", t):
                pts = [int(s) - 1 for s in re.split(r"[\s,]+", cyc.strip()) if s]
                if any(not 0 <= p < self.n for p in pts):
                    raise ParseError(f"cycle {cyc!r} out of range for {self}")
                step = {a: b for a, b in zip(pts, pts[1:] + pts[:1])}
                perm = [step.get(perm[i], perm[i]) for i in range(self.n)]
            return tuple(perm)
        if len(t) == self.n and t.isdigit():
            v = tuple(int(c) - 1 for c in t)
            if sorted(v) == list(range(self.n)):
                return v
        raise ParseError(f"bad permutation {text!r} for {self}")


class DirectProduct(Group):
    kind = "direct_product"

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors or not all(f.is_finite for f in factors):
            raise PreconditionError("direct products need at least one finite factor")
        self.factors = factors
        self.name = " x ".join(str(f) for f in factors)
        self._identity = tuple(f._identity for f in factors)

    def _key(self):
        return self.factors

    def params(self):
        return {"kind": "direct_product", "factors": [f.params() for f in self.factors]}

    @property
    def order(self):
        return math.prod(f.order for f in self.factors)

    def _iter_values(self):
        return itertools.product(*(list(f._iter_values()) for f in self.factors))

    @property
    def is_abelian(self):
        return all(f.is_abelian for f in self.factors)

    def sort_key(self, v):
        return tuple(f.sort_key(x) for f, x in zip(self.factors, v))

    def _mul(self, a, b):
        return tuple(f._mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _inv(self, a):
        return tuple(f._inv(x) for f, x in zip(self.factors, a))

    def _coerce(self, x):
        return tuple(f(y).value for f, y in zip(self.factors, x))

    def format(self, v):
        return "(" + ",".join(f.format(x) for f, x in zip(self.factors, v)) + ")"

    def parse_value(self, text):
        parts = split_top_level(strip_parens(text))
        if len(parts) != len(self.factors):
            raise ParseError(f"bad element {text!r} of {self}")
        return tuple(f.parse_value(s) for f, s in zip(self.factors, parts))


class QuotientGroup(Group):
    """G/N with cosets represented by their minimal member."""

    kind = "quotient"

    def __init__(self, parent, normal):
        normal = frozenset(parent(n) for n in normal)
        if not is_normal(parent, normal):
            raise NormalityError(f"subset of size {len(normal)} is not a normal subgroup of {parent}")
        self.parent = parent
        self.normal = normal
        rep = {}
        for g in parent.elements():
            if g.value in rep:
                continue
            coset = [g * n for n in normal]
            r = min(coset)
            for h in coset:
                rep[h.value] = r.value
        self._rep = rep
        self._reps = sorted(set(rep.values()), key=parent.sort_key)
        self._identity = rep[parent._identity]
        self.name = f"{parent.name}/N{len(normal)}"

    def _key(self):
        return (self.parent, self.normal)

    def params(self):
        return {"kind": "quotient", "parent": self.parent.params(),
                "normal": [str(n) for n in sorted(self.normal)]}

    @property
    def order(self):
        return len(self._reps)

    def _iter_values(self):
        return iter(self._reps)

    @property
    def is_abelian(self):
        els = self.elements()
        return all(a * b == b * a for a in els for b in els)

    def sort_key(self, v):
        return self.parent.sort_key(v)

    def project(self, g):
        return self.elem(self._rep[self.parent(g).value])

    def _mul(self, a, b):
        return self._rep[self.parent._mul(a, b)]

    def _inv(self, a):
        return self._rep[self.parent._inv(a)]

    def _coerce(self, x):
        return self._rep[self.parent(x).value]

    def format(self, v):
        return self.parent.format(v)

    def parse_value(self, text):
        return self._rep[self.parent.parse_value(text)]


def group_center(group):
    els = group.elements()
    return frozenset(z for z in els if all(z * g == g * z for g in els))


def cyclic_subgroup(g):
    group = g.group
    if not group.is_finite:
        if g.value == 0:
            return frozenset({g})
        raise UnsupportedEnumerationError(f"<{g}> is infinite in {group}")
    out = {group.identity}
    cur = g
    while not cur.is_identity():
        out.add(cur)
        cur = cur * g
    return frozenset(out)


def is_subgroup(group, subset):
    subset = frozenset(group(s) for s in subset)
    if group.identity not in subset:
        return False
    return all(a * b.inverse() in subset for a in subset for b in subset)


def is_normal(group, subset):
    """True when ``subset`` is a normal subgroup of the finite ``group``."""
    if not group.is_finite:
        raise UnsupportedEnumerationError("normality over Z: every subgroup mZ is normal; pass m to quotient_group")
    subset = frozenset(group(s) for s in subset)
    if not is_subgroup(group, subset):
        return False
    els = group.elements()
    return all(g * n * g.inverse() in subset for g in els for n in subset)


def quotient_group(group, normal):
    """G/N; for G = Z pass ``normal`` as the integer m >= 1 (N = mZ), giving C_m."""
    if not group.is_finite:
        if isinstance(normal, int) and normal >= 1:
            return CyclicGroup(normal)
        raise NormalityError("quotients of Z are taken by an integer m >= 1")
    return QuotientGroup(group, normal)


def group_from_params(params):
    kind = params.get("kind")
    try:
        if kind == "cyclic":
            return CyclicGroup(int(params["k"]))
        if kind == "symmetric":
            return SymmetricGroup(int(params["n"]))
        if kind == "direct_product":
            return DirectProduct([group_from_params(f) for f in params["factors"]])
        if kind == "quotient":
            parent = group_from_params(params["parent"])
            return QuotientGroup(parent, [parent(s) for s in params["normal"]])
        if kind == "integers":
            return IntegerGroup()
    except KeyError as exc:
        raise ParseError(f"group descriptor {params!r} is missing {exc}") from None
    raise ParseError(f"unknown group kind {kind!r}")
