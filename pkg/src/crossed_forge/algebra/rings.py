"""Exact coefficient rings and their automorphisms.

Every ring stores its elements as plain hashable payloads (ints, tuples) and
wraps them in :class:`RingElem` for the public API.  Payloads are always
canonical, so structural equality of payloads is ring equality, and for the
finite kinds the payload itself is the canonical sort key.
"""
from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction

from .. import limits
from ..errors import (
    DomainMismatchError,
    ParseError,
    PreconditionError,
    UnsupportedEnumerationError,
    UnsupportedError,
)
from ..textual import split_signed_terms, split_top_level, strip_parens

# products are memoised for rings up to this size
_MUL_CACHE_LIMIT = 729


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RingElem:
    """An element of a :class:`Ring`; immutable."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, RingElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DomainMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring._from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElem(self.ring, self.ring._add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElem(self.ring, self.ring._add(self.value, self.ring._neg(v)))

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElem(self.ring, self.ring._add(v, self.ring._neg(self.value)))

    def __neg__(self):
        return RingElem(self.ring, self.ring._neg(self.value))

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElem(self.ring, self.ring._mul(self.value, v))

    def __rmul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElem(self.ring, self.ring._mul(v, self.value))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.value == other.value and (other.ring is self.ring or other.ring == self.ring)
        if isinstance(other, int):
            return self.value == self.ring._from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.ring.sort_key(self.value) < self.ring.sort_key(other.value)

    def __bool__(self):
        return self.value != self.ring._zero

    def is_zero(self):
        return self.value == self.ring._zero

    def is_one(self):
        return self.value == self.ring._one

    def is_unit(self):
        return self.ring.is_unit(self)

    def inverse(self):
        return self.ring.inverse(self)

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"<{self.ring.name}: {self}>"


class Ring:
    """Base class for the catalog of coefficient rings."""

    kind = "abstract"
    is_finite = True
    is_commutative = True

    def __init__(self):
        self._mul_cache = None
        self._zero = self._zero_value()
        self._one = self._from_int(1)

    # -- identity and equality ------------------------------------------------
    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __str__(self):
        return self.name

    __repr__ = __str__

    def params(self):
        """JSON-able descriptor, the inverse of :func:`ring_from_params`."""
        raise NotImplementedError

    # -- elements -------------------------------------------------------------
    @property
    def zero(self):
        return RingElem(self, self._zero)

    @property
    def one(self):
        return RingElem(self, self._one)

    def __call__(self, x):
        if isinstance(x, RingElem):
            if x.ring is not self and x.ring != self:
                raise DomainMismatchError(f"{x!r} is not an element of {self}")
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, int):
            return RingElem(self, self._from_int(x))
        if isinstance(x, str):
            return RingElem(self, self.parse_value(x))
        raise TypeError(f"cannot convert {x!r} into {self}")

    def elem(self, value):
        return RingElem(self, value)

    def sort_key(self, value):
        return value

    def format(self, value):
        raise NotImplementedError

    def parse_value(self, text):
        terms = split_signed_terms(text)
        if not terms:
            raise ParseError(f"empty ring element for {self}")
        acc = self._zero
        for sign, term in terms:
            inner = strip_parens(term)
            if inner != term and not self._is_atom(term):
                v = self.parse_value(inner)
            else:
                v = self._parse_term(term)
            if sign < 0:
                v = self._neg(v)
            acc = self._add(acc, v)
        return acc

    def _parse_term(self, term):
        raise NotImplementedError

    def _is_atom(self, term):
        return False

    # -- enumeration ----------------------------------------------------------
    @property
    def size(self):
        raise UnsupportedEnumerationError(f"{self} is infinite")

    def elements(self):
        """All elements in canonical order (guarded)."""
        if not self.is_finite:
            raise UnsupportedEnumerationError(f"{self} is infinite and cannot be enumerated")
        limits.check_ring_size(self.size, str(self))
        return [RingElem(self, v) for v in self._iter_values()]

    def _iter_values(self):
        raise NotImplementedError

    def generators(self):
        """Ring generators used to pin down automorphisms."""
        raise NotImplementedError

    def additive_generators(self):
        """Generators of the additive group (finite kinds only)."""
        raise UnsupportedEnumerationError(f"{self} has no finite additive generating set")

    # -- arithmetic on payloads ----------------------------------------------
    def _zero_value(self):
        raise NotImplementedError

    def _from_int(self, n):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        cache = self._mul_cache
        if cache is None:
            if self.is_finite and self.size <= _MUL_CACHE_LIMIT:
                cache = self._mul_cache = {}
            else:
                return self._mul_raw(a, b)
        key = (a, b)
        r = cache.get(key)
        if r is None:
            r = cache[key] = self._mul_raw(a, b)
        return r

    def _mul_raw(self, a, b):
        raise NotImplementedError

    # -- units ----------------------------------------------------------------
    def is_unit(self, a):
        return self._inverse_value(self(a).value) is not None

    def inverse(self, a):
        inv = self._inverse_value(self(a).value)
        if inv is None:
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return RingElem(self, inv)

    def _inverse_value(self, v):
        # generic search; subclasses override with something smarter
        one = self._one
        for w in self._iter_values():
            if self._mul(v, w) == one and self._mul(w, v) == one:
                return w
        return None

    @property
    def is_integral_domain(self):
        if not self.is_commutative:
            return False
        return all(self._inverse_value(v) is not None for v in self._iter_values() if v != self._zero)

    # -- automorphism support -------------------------------------------------
    def _extend(self, images, value):
        """Image of ``value`` under the homomorphism fixed by generator images."""
        raise NotImplementedError

    def identity_automorphism(self):
        return RingAutomorphism(self, self.generators(), verify=False)

    def automorphism(self, images):
        return RingAutomorphism(self, images)


class ModularRing(Ring):
    """Z/n."""

    kind = "modular"

    def __init__(self, n):
        if n < 2:
            raise PreconditionError("Z/n needs n >= 2 so that 0 != 1")
        self.n = n
        self.name = f"Z/{n}"
        super().__init__()

    def _key(self):
        return (self.n,)

    def params(self):
        return {"kind": "modular", "n": self.n}

    @property
    def size(self):
        return self.n

    def _iter_values(self):
        return iter(range(self.n))

    def generators(self):
        return ()

    def additive_generators(self):
        return (self.one,)

    def _zero_value(self):
        return 0

    def _from_int(self, n):
        return n % self.n

    def _add(self, a, b):
        return (a + b) % self.n

    def _neg(self, a):
        return -a % self.n

    def _mul(self, a, b):
        return a * b % self.n

    def _inverse_value(self, v):
        if math.gcd(v, self.n) != 1:
            return None
        return pow(v, -1, self.n)

    @property
    def is_integral_domain(self):
        return is_prime(self.n)

    def format(self, value):
        return str(value)

    def _parse_term(self, term):
        if not re.fullmatch(r"\d+", term):
            raise ParseError(f"bad element {term!r} of {self}")
        return int(term) % self.n

    def _extend(self, images, value):
        return value


# -- polynomial helpers over F_p (ascending coefficient lists) ----------------
def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a, b, p):
    a = _ptrim(a)
    b = _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a = _ptrim(a)
    return q, a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([c % p for c in out])


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pinverse_mod(a, m, p):
    """Inverse of ``a`` modulo ``m`` over F_p, or None."""
    r0, r1 = _ptrim(m), _ptrim(a)
    s0, s1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        return None
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


def _is_irreducible(modulus, p):
    d = len(modulus) - 1
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            _, r = _pdivmod(modulus, list(tail) + [1], p)
            if not r:
                return False
    return True


def _format_poly(coeffs, var="x"):
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) if parts else "0"


_TUPLE = re.compile(r"\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)")
_INT = r"\s*(-?\d+)\s*"
_MATRIX = re.compile(rf"\(\s*\({_INT},{_INT}\)\s*,\s*\({_INT},{_INT}\)\s*\)")
_POLY_TERM = re.compile(r"(\d+)?\s*\*?\s*(x(?:\^(\d+))?)?")


class PolyQuotientRing(Ring):
    """F_p[x]/(m(x)) for a monic modulus m."""

    kind = "poly_quotient"

    def __init__(self, p, modulus):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        modulus = [c % p for c in modulus]
        if len(modulus) < 2 or modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree >= 1")
        self.p = p
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.name = f"F_{p}[x]/({_format_poly(modulus)})"
        super().__init__()

    def _key(self):
        return (self.p, self.modulus)

    def params(self):
        return {"kind": "poly_quotient", "p": self.p, "modulus": list(self.modulus)}

    @property
    def size(self):
        return self.p**self.degree

    def _iter_values(self):
        return itertools.product(range(self.p), repeat=self.degree)

    @property
    def x(self):
        return self.elem(self._reduce([0, 1]))

    def generators(self):
        return (self.x,)

    def additive_generators(self):
        return tuple(self.x**k for k in range(self.degree))

    def _zero_value(self):
        return (0,) * self.degree

    def _from_int(self, n):
        return self._reduce([n])

    def _reduce(self, coeffs):
        p, d, m = self.p, self.degree, self.modulus
        c = [x % p for x in coeffs]
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead:
                base = k - d
                for i in range(d):
                    c[base + i] = (c[base + i] - lead * m[i]) % p
                c[k] = 0
        c = c[:d] + [0] * max(0, d - len(c))
        return tuple(c)

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul_raw(self, a, b):
        d = self.degree
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def _inverse_value(self, v):
        inv = _pinverse_mod(list(v), list(self.modulus), self.p)
        if inv is None:
            return None
        return self._reduce(inv)

    @property
    def is_integral_domain(self):
        return _is_irreducible(list(self.modulus), self.p)

    def format(self, value):
        return _format_poly(value)

    def _parse_term(self, term):
        m = _POLY_TERM.fullmatch(term)
        if not m or not term:
            raise ParseError(f"bad element {term!r} of {self}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            k = int(m.group(3)) if m.group(3) else 1
        else:
            k = 0
        return (self.elem(self._from_int(coeff)) * self.x**k).value

    def _extend(self, images, value):
        (img,) = images
        acc = self._zero
        for c in reversed(value):
            acc = self._add(self._mul(acc, img), self._from_int(c))
        return acc

    def frobenius(self):
        return RingAutomorphism(self, (self.x**self.p,))


class FiniteField(PolyQuotientRing):
    """F_{p^k} realised as F_p[x]/(m) with m the first irreducible monic of degree k."""

    kind = "finite_field"

    def __init__(self, p, degree, modulus=None):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if modulus is None:
            modulus = self._first_irreducible(p, degree)
        elif not _is_irreducible([c % p for c in modulus], p):
            raise PreconditionError(f"modulus {modulus} is reducible over F_{p}")
        super().__init__(p, modulus)
        if self.degree != degree:
            raise PreconditionError("modulus degree does not match the field degree")
        self.name = f"F_{p**degree}" if degree > 1 else f"F_{p}"

    @staticmethod
    def _first_irreducible(p, degree):
        for tail in itertools.product(range(p), repeat=degree):
            cand = list(tail) + [1]
            if degree == 1 or (cand[0] != 0 and _is_irreducible(cand, p)):
                return cand
        raise AssertionError("irreducible polynomials exist in every degree")

    def params(self):
        return {"kind": "finite_field", "p": self.p, "degree": self.degree, "modulus": list(self.modulus)}

    @property
    def is_integral_domain(self):
        return True


_LAURENT_TERM = re.compile(r"(\d+(?:/\d+)?)?\s*\*?\s*(x(?:\^\(?(-?\d+)\)?)?)?")


class LaurentRing(Ring):
    """Q[x, x^-1]; payloads are tuples of (exponent, Fraction) sorted by exponent."""

    kind = "laurent_rational"
    is_finite = False
    name = "Q[x,x^-1]"

    def _key(self):
        return ()

    def params(self):
        return {"kind": "laurent_rational"}

    @property
    def x(self):
        return self.elem(((1, Fraction(1)),))

    def monomial(self, coeff, exp):
        coeff = Fraction(coeff)
        return self.elem(((exp, coeff),) if coeff else ())

    def generators(self):
        return (self.x,)

    def _zero_value(self):
        return ()

    def _from_int(self, n):
        return ((0, Fraction(n)),) if n else ()

    @staticmethod
    def _norm(d):
        return tuple(sorted((k, c) for k, c in d.items() if c))

    def _add(self, a, b):
        d = dict(a)
        for k, c in b:
            d[k] = d.get(k, 0) + c
        return self._norm(d)

    def _neg(self, a):
        return tuple((k, -c) for k, c in a)

    def _mul_raw(self, a, b):
        d = {}
        for i, x in a:
            for j, y in b:
                d[i + j] = d.get(i + j, 0) + x * y
        return self._norm(d)

    def _inverse_value(self, v):
        if len(v) != 1:
            return None
        (k, c), = v
        return ((-k, 1 / c),)

    @property
    def is_integral_domain(self):
        return True

    def sort_key(self, value):
        return value

    def format(self, value):
        if not value:
            return "0"
        out = []
        for i, (k, c) in enumerate(value):
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def _parse_term(self, term):
        m = _LAURENT_TERM.fullmatch(term)
        if not m or not term:
            raise ParseError(f"bad element {term!r} of {self}")
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2):
            k = int(m.group(3)) if m.group(3) else 1
        else:
            k = 0
        return ((k, coeff),) if coeff else ()

    def _extend(self, images, value):
        (img,) = images
        # the verified image is c*x^e with e = +-1
        (e, c), = img
        return self._norm({e * k: a * c**k for k, a in value})

    def scaling(self, q):
        """The automorphism P(x) -> P(q x)."""
        return RingAutomorphism(self, (self.monomial(q, 1),))


class TruncatedPolyRing(Ring):
    """F_p[x_1..x_n] modulo all monomials of total degree >= d
    (``truncation="total"``) or with some exponent >= d (``"per_variable"``)."""

    kind = "truncated_multivariate"

    def __init__(self, p, nvars, degree, truncation="total"):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if nvars < 1 or degree < 1:
            raise PreconditionError("need at least one variable and degree bound >= 1")
        if truncation not in ("total", "per_variable"):
            raise PreconditionError(f"unknown truncation {truncation!r}")
        self.p, self.nvars, self.degree, self.truncation = p, nvars, degree, truncation
        ranges = [range(degree)] * nvars
        monos = [m for m in itertools.product(*ranges) if truncation == "per_variable" or sum(m) < degree]
        monos.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
        self.monomials = tuple(monos)
        self._mono_index = {m: i for i, m in enumerate(monos)}
        self._mono_mul = {}
        for i, a in enumerate(monos):
            for j, b in enumerate(monos):
                c = tuple(x + y for x, y in zip(a, b))
                self._mono_mul[i, j] = self._mono_index.get(c)
        cut = "deg" if truncation == "total" else "each deg"
        self.name = f"F_{p}[x1..x{nvars}]/({cut} >= {degree})"
        super().__init__()

    def _key(self):
        return (self.p, self.nvars, self.degree, self.truncation)

    def params(self):
        return {"kind": "truncated_multivariate", "p": self.p, "nvars": self.nvars,
                "degree": self.degree, "truncation": self.truncation}

    @property
    def size(self):
        return self.p ** len(self.monomials)

    def _iter_values(self):
        return itertools.product(range(self.p), repeat=len(self.monomials))

    def variable(self, i):
        """x_i with 1-based index."""
        m = tuple(1 if j == i - 1 else 0 for j in range(self.nvars))
        v = [0] * len(self.monomials)
        if m in self._mono_index:
            v[self._mono_index[m]] = 1
        return self.elem(tuple(v))

    def generators(self):
        return tuple(self.variable(i) for i in range(1, self.nvars + 1))

    def additive_generators(self):
        out = []
        for k in range(len(self.monomials)):
            v = [0] * len(self.monomials)
            v[k] = 1
            out.append(self.elem(tuple(v)))
        return tuple(out)

    def _zero_value(self):
        return (0,) * len(self.monomials)

    def _from_int(self, n):
        v = [0] * len(self.monomials)
        v[0] = n % self.p
        return tuple(v)

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul_raw(self, a, b):
        out = [0] * len(self.monomials)
        mm = self._mono_mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        k = mm[i, j]
                        if k is not None:
                            out[k] += x * y
        p = self.p
        return tuple(c % p for c in out)

    def _inverse_value(self, v):
        # local ring: units are exactly the elements with nonzero constant term
        if v[0] == 0:
            return None
        c = pow(v[0], -1, self.p)
        scaled = self.elem(tuple(x * c % self.p for x in v))
        nil = self.one - scaled
        acc, term = self.one, self.one
        for _ in range(self.nvars * self.degree + 1):
            term = term * nil
            acc = acc + term
        return tuple(x * c % self.p for x in acc.value)

    @property
    def is_integral_domain(self):
        return len(self.monomials) == 1

    def _mono_str(self, m):
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def format(self, value):
        parts = []
        for c, m in zip(value, self.monomials):
            if not c:
                continue
            ms = self._mono_str(m)
            if not ms:
                parts.append(str(c))
            else:
                parts.append(ms if c == 1 else f"{c}{ms}")
        return " + ".join(parts) if parts else "0"

    def _parse_term(self, term):
        m = re.fullmatch(r"(\d+)?\s*\*?\s*(.*)", term)
        coeff = int(m.group(1)) if m.group(1) else 1
        rest = m.group(2).strip()
        acc = self.elem(self._from_int(coeff))
        if not rest:
            if not m.group(1):
                raise ParseError(f"bad element {term!r} of {self}")
            return acc.value
        for factor in re.split(r"\s*\*\s*|(?<=\d)(?=x)", rest):
            fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if not fm or not 1 <= int(fm.group(1)) <= self.nvars:
                raise ParseError(f"bad monomial {factor!r} in {term!r}")
            acc = acc * self.variable(int(fm.group(1))) ** (int(fm.group(2)) if fm.group(2) else 1)
        return acc.value

    def _extend(self, images, value):
        imgs = [self.elem(v) for v in images]
        acc = self.zero
        for c, m in zip(value, self.monomials):
            if c:
                term = self.elem(self._from_int(c))
                for img, e in zip(imgs, m):
                    if e:
                        term = term * img**e
                acc = acc + term
        return acc.value

    def variable_permutation(self, perm):
        """x_i -> x_{perm(i)}; ``perm`` is a 0-based one-line tuple."""
        return RingAutomorphism(self, tuple(self.variable(perm[i] + 1) for i in range(self.nvars)))


class FunctionRing(Ring):
    """All functions {0..size-1} -> F_p with pointwise operations."""

    kind = "functions"

    def __init__(self, p, size):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if size < 1:
            raise PreconditionError("the point set must be non-empty")
        self.p, self.points = p, size
        self.name = f"F_{p}^{size}"
        super().__init__()

    def _key(self):
        return (self.p, self.points)

    def params(self):
        return {"kind": "functions", "p": self.p, "size": self.points}

    @property
    def size(self):
        return self.p**self.points

    def _iter_values(self):
        return itertools.product(range(self.p), repeat=self.points)

    def indicator(self, x):
        return self.elem(tuple(1 if i == x else 0 for i in range(self.points)))

    def generators(self):
        return tuple(self.indicator(i) for i in range(self.points))

    additive_generators = generators

    def _zero_value(self):
        return (0,) * self.points

    def _from_int(self, n):
        return (n % self.p,) * self.points

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul_raw(self, a, b):
        p = self.p
        return tuple(x * y % p for x, y in zip(a, b))

    def _inverse_value(self, v):
        if any(x == 0 for x in v):
            return None
        return tuple(pow(x, -1, self.p) for x in v)

    @property
    def is_integral_domain(self):
        return self.points == 1

    def format(self, value):
        return "(" + ",".join(map(str, value)) + ")"

    def parse_value(self, text):
        t = text.strip()
        if _TUPLE.fullmatch(t):
            parts = split_top_level(t[1:-1])
            if len(parts) != self.points:
                raise ParseError(f"bad function literal {text!r} for {self}")
            return tuple(int(s) % self.p for s in parts)
        return super().parse_value(text)

    def _is_atom(self, term):
        return bool(_TUPLE.fullmatch(term))

    def _parse_term(self, term):
        if re.fullmatch(r"\d+", term):
            return self._from_int(int(term))
        if _TUPLE.fullmatch(term):
            return self.parse_value(term)
        raise ParseError(f"bad element {term!r} of {self}")

    def _extend(self, images, value):
        p = self.p
        out = [0] * self.points
        for c, img in zip(value, images):
            if c:
                for i, y in enumerate(img):
                    out[i] += c * y
        return tuple(x % p for x in out)

    def precomposition(self, perm):
        """f -> f o perm^{-1}, i.e. indicator(x) -> indicator(perm[x])."""
        return RingAutomorphism(self, tuple(self.indicator(perm[x]) for x in range(self.points)))


class MatrixRing(Ring):
    """2x2 matrices over Z/n; the one non-commutative kind."""

    kind = "matrix"
    is_commutative = False

    def __init__(self, n):
        if n < 2:
            raise PreconditionError("need n >= 2")
        self.n = n
        self.name = f"M_2(Z/{n})"
        super().__init__()

    def _key(self):
        return (self.n,)

    def params(self):
        return {"kind": "matrix", "n": self.n}

    @property
    def size(self):
        return self.n**4

    def _iter_values(self):
        return itertools.product(range(self.n), repeat=4)

    def unit_matrix(self, i, j):
        v = [0, 0, 0, 0]
        v[2 * i + j] = 1
        return self.elem(tuple(v))

    def generators(self):
        return tuple(self.unit_matrix(i, j) for i in range(2) for j in range(2))

    additive_generators = generators

    def _zero_value(self):
        return (0, 0, 0, 0)

    def _from_int(self, k):
        k %= self.n
        return (k, 0, 0, k)

    def _add(self, a, b):
        n = self.n
        return tuple((x + y) % n for x, y in zip(a, b))

    def _neg(self, a):
        n = self.n
        return tuple(-x % n for x in a)

    def _mul_raw(self, a, b):
        n = self.n
        return ((a[0] * b[0] + a[1] * b[2]) % n, (a[0] * b[1] + a[1] * b[3]) % n,
                (a[2] * b[0] + a[3] * b[2]) % n, (a[2] * b[1] + a[3] * b[3]) % n)

    def _inverse_value(self, v):
        n = self.n
        det = (v[0] * v[3] - v[1] * v[2]) % n
        if math.gcd(det, n) != 1:
            return None
        di = pow(det, -1, n)
        return (v[3] * di % n, -v[1] * di % n, -v[2] * di % n, v[0] * di % n)

    @property
    def is_integral_domain(self):
        return False

    def format(self, value):
        a, b, c, d = value
        return f"(({a},{b}),({c},{d}))"

    def parse_value(self, text):
        t = text.strip()
        m = _MATRIX.fullmatch(t)
        if m:
            return tuple(int(c) % self.n for c in m.groups())
        return super().parse_value(text)

    def _is_atom(self, term):
        return bool(_MATRIX.fullmatch(term))

    def _parse_term(self, term):
        if re.fullmatch(r"\d+", term):
            return self._from_int(int(term))
        if _MATRIX.fullmatch(term):
            return self.parse_value(term)
        raise ParseError(f"bad element {term!r} of {self}")

    def _extend(self, images, value):
        acc = self._zero
        for c, img in zip(value, images):
            if c:
                acc = self._add(acc, self._mul((c, 0, 0, c), img))
        return acc

    def conjugation(self, u):
        """a -> u a u^{-1} for an invertible matrix u."""
        u = self(u)
        ui = u.inverse()
        return RingAutomorphism(self, tuple(u * g * ui for g in self.generators()))


class IdealQuotientRing(Ring):
    """A/J for a finite commutative ring A and an ideal J given as an element set.

    Cosets are represented by their minimal element in A's canonical order.
    """

    kind = "ideal_quotient"

    def __init__(self, parent, ideal):
        if not parent.is_finite or not parent.is_commutative:
            raise UnsupportedError("ideal quotients are built for finite commutative rings only")
        ideal = frozenset(parent(a).value for a in ideal)
        self.parent = parent
        self.ideal = ideal
        _check_ideal(parent, ideal)
        if parent._one in ideal:
            raise PreconditionError("the ideal is the whole ring; the quotient would have 0 = 1")
        rep = {}
        for v in parent._iter_values():
            if v in rep:
                continue
            coset = [parent._add(v, j) for j in ideal]
            r = min(coset, key=parent.sort_key)
            for w in coset:
                rep[w] = r
        self._rep = rep
        self._reps = sorted(set(rep.values()), key=parent.sort_key)
        self.name = f"{parent.name}/<{len(ideal)} elts>"
        super().__init__()

    def _key(self):
        return (self.parent, self.ideal)

    def params(self):
        return {"kind": "ideal_quotient", "parent": self.parent.params(),
                "ideal": [self.parent.format(v) for v in sorted(self.ideal, key=self.parent.sort_key)]}

    @property
    def size(self):
        return len(self._reps)

    def _iter_values(self):
        return iter(self._reps)

    def project(self, a):
        """The quotient map A -> A/J."""
        return self.elem(self._rep[self.parent(a).value])

    def lift(self, a):
        return self.parent.elem(self(a).value)

    def generators(self):
        return tuple(self.project(g) for g in self.parent.generators())

    def additive_generators(self):
        return tuple(self.project(g) for g in self.parent.additive_generators())

    def _zero_value(self):
        return self._rep[self.parent._zero]

    def _from_int(self, n):
        return self._rep[self.parent._from_int(n)]

    def _add(self, a, b):
        return self._rep[self.parent._add(a, b)]

    def _neg(self, a):
        return self._rep[self.parent._neg(a)]

    def _mul_raw(self, a, b):
        return self._rep[self.parent._mul(a, b)]

    def format(self, value):
        return self.parent.format(value)

    def parse_value(self, text):
        return self._rep[self.parent.parse_value(text)]

    def _extend(self, images, value):
        return self._rep[self.parent._extend(images, value)]

    def induced(self, aut):
        """The automorphism a + J -> aut(a) + J of the quotient."""
        if aut.ring != self.parent:
            raise DomainMismatchError("automorphism lives on a different ring")
        for j in self.ideal:
            if aut.apply(self.parent.elem(j)).value not in self.ideal:
                raise PreconditionError("ideal is not invariant under the automorphism",
                                        witness=self.parent.format(j))
        return RingAutomorphism(self, tuple(self.project(img) for img in aut.images))


def _check_ideal(ring, ideal_values, side="two"):
    """Raise PreconditionError unless the value set is a (one- or two-sided) ideal."""
    if ring._zero not in ideal_values:
        raise PreconditionError("an ideal must contain 0")
    gens = ring.additive_generators()
    for j in ideal_values:
        for k in ideal_values:
            if ring._add(j, ring._neg(k)) not in ideal_values:
                raise PreconditionError("not closed under subtraction",
                                        witness=(ring.format(j), ring.format(k)))
        for g in gens:
            if side in ("two", "right") and ring._mul(j, g.value) not in ideal_values:
                raise PreconditionError("not closed under right multiplication",
                                        witness=(ring.format(j), str(g)))
            if side in ("two", "left") and ring._mul(g.value, j) not in ideal_values:
                raise PreconditionError("not closed under left multiplication",
                                        witness=(str(g), ring.format(j)))


def is_ideal(ring, subset, side="two"):
    """True when ``subset`` is an ideal of ``ring`` on the requested side."""
    try:
        _check_ideal(ring, frozenset(ring(a).value for a in subset), side)
    except PreconditionError:
        return False
    return True


class RingAutomorphism:
    """A unital ring automorphism, stored by the images of ``ring.generators()``.

    Construction verifies that the images extend to a bijective unital ring
    homomorphism (exhaustively on finite rings, symbolically on Q[x,x^-1]).
    """

    __slots__ = ("ring", "images", "_table", "_identity")

    def __init__(self, ring, images, verify=True):
        images = tuple(ring(i) for i in images)
        gens = ring.generators()
        if len(images) != len(gens):
            raise PreconditionError(f"{ring} needs {len(gens)} generator images, got {len(images)}")
        self.ring = ring
        self.images = images
        self._identity = all(i == g for i, g in zip(images, gens))
        self._table = {} if ring.is_finite else None
        if verify and not self._identity:
            self._verify()

    def _verify(self):
        ring = self.ring
        if not ring.is_finite:
            (img,) = self.images
            if len(img.value) != 1 or img.value[0][0] not in (1, -1):
                raise PreconditionError(f"x -> {img} does not extend to an automorphism of {ring}",
                                        witness=str(img))
            return
        limits.check_ring_size(ring.size, str(ring))
        table = {v: ring._extend(tuple(i.value for i in self.images), v) for v in ring._iter_values()}
        self._table = table
        if table[ring._one] != ring._one:
            raise PreconditionError("automorphism does not fix 1")
        if len(set(table.values())) != len(table):
            raise PreconditionError("generator images do not give a bijection")
        mult_checks = tuple(ring.generators()) + tuple(ring.additive_generators())
        for v, fv in table.items():
            for g in ring.additive_generators():
                if table[ring._add(v, g.value)] != ring._add(fv, table[g.value]):
                    raise PreconditionError("map is not additive",
                                            witness=(ring.format(v), str(g)))
            for g in mult_checks:
                fg = table[g.value]
                if table[ring._mul(v, g.value)] != ring._mul(fv, fg) or table[ring._mul(g.value, v)] != ring._mul(fg, fv):
                    raise PreconditionError("map does not respect the ring relations",
                                            witness=(ring.format(v), str(g)))

    def apply(self, a):
        a = self.ring(a)
        if self._identity:
            return a
        return RingElem(self.ring, self.apply_value(a.value))

    __call__ = apply

    def apply_value(self, v):
        if self._identity:
            return v
        table = self._table
        if table is None:
            return self.ring._extend(tuple(i.value for i in self.images), v)
        r = table.get(v)
        if r is None:
            r = table[v] = self.ring._extend(tuple(i.value for i in self.images), v)
        return r

    def is_identity(self):
        return self._identity

    def compose(self, other):
        """self o other."""
        if other.ring != self.ring:
            raise DomainMismatchError("automorphisms of different rings")
        return RingAutomorphism(self.ring, tuple(self.apply(i) for i in other.images), verify=False)

    def inverse(self):
        ring = self.ring
        if self._identity:
            return self
        if not ring.is_finite:
            (img,) = self.images
            (e, c), = img.value
            # x -> c x^e; inverse is x -> c^{-e} x  (e = 1)  or itself up to scaling (e = -1)
            if e == 1:
                return RingAutomorphism(ring, (ring.monomial(1 / c, 1),), verify=False)
            return RingAutomorphism(ring, (ring.monomial(c, -1),), verify=False)
        pre = {}
        for v in ring._iter_values():
            pre[self.apply_value(v)] = v
        return RingAutomorphism(ring, tuple(ring.elem(pre[g.value]) for g in ring.generators()), verify=False)

    def power(self, n):
        if n < 0:
            return self.inverse().power(-n)
        result = self.ring.identity_automorphism()
        base = self
        while n:
            if n & 1:
                result = base.compose(result)
            base = base.compose(base)
            n >>= 1
        return result

    def order(self, limit=None):
        """Smallest n >= 1 with self^n = id, or 0 if there is none."""
        ring = self.ring
        if not ring.is_finite:
            (img,) = self.images
            (e, c), = img.value
            if e == -1:
                return 2
            if c == 1:
                return 1
            return 2 if c == -1 else 0
        cur = self
        bound = limit or math.factorial(min(ring.size, 12)) + ring.size
        for n in range(1, bound + 1):
            if cur.is_identity():
                return n
            cur = self.compose(cur)
        return 0

    def __eq__(self, other):
        if not isinstance(other, RingAutomorphism):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        if self._identity:
            return "id"
        gens = self.ring.generators()
        return ", ".join(f"{g} -> {i}" for g, i in zip(gens, self.images))

    def __repr__(self):
        return f"<automorphism of {self.ring}: {self}>"


def ring_from_params(params):
    """Inverse of ``Ring.params()``."""
    kind = params.get("kind")
    try:
        if kind == "modular":
            return ModularRing(int(params["n"]))
        if kind == "poly_quotient":
            return PolyQuotientRing(int(params["p"]), [int(c) for c in params["modulus"]])
        if kind == "finite_field":
            mod = params.get("modulus")
            return FiniteField(int(params["p"]), int(params["degree"]), [int(c) for c in mod] if mod else None)
        if kind == "laurent_rational":
            return LaurentRing()
        if kind == "truncated_multivariate":
            return TruncatedPolyRing(int(params["p"]), int(params["nvars"]), int(params["degree"]),
                                     params.get("truncation", "total"))
        if kind == "functions":
            return FunctionRing(int(params["p"]), int(params["size"]))
        if kind == "matrix":
            return MatrixRing(int(params["n"]))
        if kind == "ideal_quotient":
            parent = ring_from_params(params["parent"])
            return IdealQuotientRing(parent, [parent(s) for s in params["ideal"]])
    except KeyError as exc:
        raise ParseError(f"ring descriptor {params!r} is missing {exc}") from None
    raise ParseError(f"unknown ring kind {kind!r}")


def annihilator(a):
    """{c : a c = 0} by exhaustive enumeration (finite commutative rings)."""
    ring = a.ring
    if not ring.is_finite:
        raise UnsupportedEnumerationError(f"annihilators in {ring} are not enumerable")
    if not ring.is_commutative:
        raise UnsupportedError("annihilator is defined here for commutative rings only")
    return frozenset(c for c in ring.elements() if (a * c).is_zero())


def zero_divisor_set(ring):
    """D = {a : a b = 0 or b a = 0 for some b != 0}; always contains 0."""
    if not ring.is_finite:
        raise UnsupportedEnumerationError(f"{ring} is infinite")
    elems = ring.elements()
    nonzero = [b for b in elems if not b.is_zero()]
    return frozenset(a for a in elems if any((a * b).is_zero() or (b * a).is_zero() for b in nonzero))


def center_of_ring(ring):
    elems = ring.elements()
    gens = ring.additive_generators()
    return frozenset(a for a in elems if all(a * g == g * a for g in gens))


def ring_is_commutative(ring):
    """Exhaustive check on additive generators (bilinearity does the rest)."""
    gens = ring.additive_generators()
    return all(a * b == b * a for a in gens for b in gens)
