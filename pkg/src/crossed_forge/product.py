"""Elements of a crossed product: formal sums sum_g a_g [g].

Text syntax: terms ``coeff*[g]`` joined by ``+`` (or ``-``), e.g.
``1*[0] + 2x*[1]``.  A coefficient with a top-level sign is parenthesized,
``(1 + x)*[1]``.  A term without ``*[g]`` sits in degree e, and ``[g]`` alone
means ``1*[g]``.  The zero element prints as ``0``.
"""
from __future__ import annotations

from .algebra.rings import RingElem
from .errors import DomainMismatchError, ParseError, UnsupportedError
from .textual import needs_parens, split_signed_terms


class CrossedElem:
    """Immutable element of ``system``; ``_c`` maps group payloads to nonzero ring payloads."""

    __slots__ = ("system", "_c", "_hash")

    def __init__(self, system, coeffs=None):
        self.system = system
        ring, group = system.ring, system.group
        c = {}
        if coeffs:
            for g, a in coeffs.items():
                gv = group(g).value
                av = ring(a).value
                if gv in c:
                    av = ring._add(c[gv], av)
                if av == ring._zero:
                    c.pop(gv, None)
                else:
                    c[gv] = av
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, system, c):
        """Wrap an already normalized payload dict."""
        obj = cls.__new__(cls)
        obj.system = system
        obj._c = c
        obj._hash = None
        return obj

    # -- views ----------------------------------------------------------------
    @property
    def coeffs(self):
        """{GroupElem: RingElem}, nonzero entries only."""
        G, R = self.system.group, self.system.ring
        return {G.elem(g): R.elem(a) for g, a in self._c.items()}

    def coefficient(self, g):
        gv = self.system.group(g).value
        return self.system.ring.elem(self._c.get(gv, self.system.ring._zero))

    def support(self):
        """Support in canonical group order."""
        G = self.system.group
        return [G.elem(g) for g in sorted(self._c, key=G.sort_key)]

    def terms(self):
        """(GroupElem, RingElem) pairs in canonical group order."""
        R = self.system.ring
        return [(g, R.elem(self._c[g.value])) for g in self.support()]

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, CrossedElem):
            other = self._coerce(other)
        elif other.system is not self.system:
            raise DomainMismatchError("elements belong to different crossed systems")
        return other

    def _coerce(self, x):
        if isinstance(x, (int, RingElem)):
            return embed(self.system.ring(x), self.system)
        raise TypeError(f"cannot combine {x!r} with a crossed-product element")

    def __add__(self, other):
        return cp_add(self, self._check(other))

    __radd__ = __add__

    def __neg__(self):
        R = self.system.ring
        return CrossedElem._raw(self.system, {g: R._neg(a) for g, a in self._c.items()})

    def __sub__(self, other):
        return cp_add(self, -self._check(other))

    def __rsub__(self, other):
        return cp_add(self._check(other), -self)

    def __mul__(self, other):
        return cp_mul(self, self._check(other))

    def __rmul__(self, other):
        return cp_mul(self._check(other), self)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = one(self.system)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, CrossedElem):
            return NotImplemented
        return self.system is other.system and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def sort_key(self):
        """Canonical order: fewer terms first, then degrees, then coefficients."""
        G, R = self.system.group, self.system.ring
        keys = sorted(self._c, key=G.sort_key)
        return (len(keys), tuple(G.sort_key(g) for g in keys), tuple(R.sort_key(self._c[g]) for g in keys))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"<{self.system.name}: {self}>"


# -- constructors ---------------------------------------------------------------
def zero(system):
    return CrossedElem._raw(system, {})


def one(system):
    return CrossedElem._raw(system, {system.group._identity: system.ring._one})


def term(system, a, g):
    """The single-term element a*[g]."""
    return CrossedElem(system, {g: a})


def embed(a, system):
    """iota(a) = a*[e]."""
    a = system.ring(a)
    if a.value == system.ring._zero:
        return zero(system)
    return CrossedElem._raw(system, {system.group._identity: a.value})


def is_in_base(u):
    return all(g == u.system.group._identity for g in u._c)


def base_part(u):
    """The coefficient of e as a ring element."""
    return u.system.ring.elem(u._c.get(u.system.group._identity, u.system.ring._zero))


def _same_system(u, v):
    if u.system is not v.system:
        raise DomainMismatchError("elements belong to different crossed systems")


# -- arithmetic -----------------------------------------------------------------
def cp_add(u, v):
    _same_system(u, v)
    R = u.system.ring
    zero_v = R._zero
    out = dict(u._c)
    for g, b in v._c.items():
        a = out.get(g)
        if a is None:
            out[g] = b
        else:
            s = R._add(a, b)
            if s == zero_v:
                del out[g]
            else:
                out[g] = s
    return CrossedElem._raw(u.system, out)


def cp_mul(u, v):
    """sum_{s,t} a_s sigma_s(b_t) alpha(s,t) [st], over support pairs."""
    _same_system(u, v)
    sys = u.system
    return CrossedElem._raw(sys, _mul_payload(sys, u._c, v._c))


def _mul_payload(sys, uc, vc):
    R, G = sys.ring, sys.group
    mul, add = R._mul, R._add
    zero_v, one_v = R._zero, R._one
    out = {}
    for s, a in uc.items():
        sig = sys._sigma_value(s)
        for t, b in vc.items():
            c = mul(a, sig.apply_value(b))
            if c == zero_v:
                continue
            al = sys._alpha_value(s, t)
            if al != one_v:
                c = mul(c, al)
            st = G._mul(s, t)
            prev = out.get(st)
            out[st] = c if prev is None else add(prev, c)
    return {g: c for g, c in out.items() if c != zero_v}


def commutator(u, v):
    return cp_add(cp_mul(u, v), -cp_mul(v, u))


def commutes(u, v, check=False):
    """uv == vu.

    The default path compares the two products.  ``check=True`` also runs the
    per-degree test (for each degree g, sum over st = g of
    a_s sigma_s(b_t) alpha(s,t) against the same sum with a and b swapped) and
    raises if the two disagree.
    """
    _same_system(u, v)
    direct = cp_mul(u, v) == cp_mul(v, u)
    if check:
        per_degree = commutes_per_degree(u, v)
        if per_degree != direct:
            raise AssertionError(f"commuting tests disagree on ({u}, {v})")
    return direct


def commutes_per_degree(u, v):
    """Degree-by-degree comparison of the coefficients of uv and vu.

    For each degree g the sums over st = g of a_s sigma_s(b_t) alpha(s,t) and
    of b_s sigma_s(a_t) alpha(s,t) are accumulated separately and compared.
    """
    _same_system(u, v)
    sys = u.system
    R, G = sys.ring, sys.group
    zero_v = R._zero
    left, right = {}, {}
    for s, a in u._c.items():
        sig_s = sys._sigma_value(s)
        for t, b in v._c.items():
            g = G._mul(s, t)
            left[g] = R._add(left.get(g, zero_v), R._mul(R._mul(a, sig_s.apply_value(b)), sys._alpha_value(s, t)))
            h = G._mul(t, s)
            term_ = R._mul(R._mul(b, sys._sigma_value(t).apply_value(a)), sys._alpha_value(t, s))
            right[h] = R._add(right.get(h, zero_v), term_)
    return all(left.get(g, zero_v) == right.get(g, zero_v) for g in left.keys() | right.keys())


# -- the operators of the intersection argument -----------------------------------
def translate_deform(u, g):
    """T_g(u) = u * (1 [g]) = sum a_s alpha(s,g) [sg]."""
    sys = u.system
    R, G = sys.ring, sys.group
    gv = G(g).value
    out = {}
    for s, a in u._c.items():
        al = sys._alpha_value(s, gv)
        out[G._mul(s, gv)] = a if al == R._one else R._mul(a, al)
    return CrossedElem._raw(sys, out)


def kill(u, a):
    """D_a(u) = (a[e]) u - u (a[e]) = sum_{s != e} a_s (a - sigma_s(a)) [s] for commutative A."""
    sys = u.system
    R = sys.ring
    if not R.is_commutative:
        raise UnsupportedError("the kill operator needs a commutative coefficient ring")
    a = R(a)
    e = sys.group._identity
    out = {}
    for s, c in u._c.items():
        if s == e:
            continue
        diff = R._add(a.value, R._neg(sys._sigma_value(s).apply_value(a.value)))
        v = R._mul(c, diff)
        if v != R._zero:
            out[s] = v
    return CrossedElem._raw(sys, out)


# -- enumeration ----------------------------------------------------------------
def all_elements(system):
    """Every element of a finite crossed product, in canonical order (guarded)."""
    from itertools import product as cartesian

    from . import limits

    limits.check_product_size(system.size, system.name)
    ring_vals = [a.value for a in system.ring.elements()]
    group_vals = [g.value for g in system.group.elements()]
    zero_v = system.ring._zero
    out = []
    for combo in cartesian(ring_vals, repeat=len(group_vals)):
        out.append(CrossedElem._raw(system, {g: a for g, a in zip(group_vals, combo) if a != zero_v}))
    return out


def single_terms(system, ring_elems=None):
    """All a*[s] with a != 0 from ``ring_elems`` (default: the whole ring)."""
    if ring_elems is None:
        ring_elems = system.ring.elements()
    out = []
    for s in system.group.elements():
        for a in ring_elems:
            if not a.is_zero():
                out.append(CrossedElem._raw(system, {s.value: a.value}))
    return out


# -- text -------------------------------------------------------------------------
def format_elem(u):
    if not u._c:
        return "0"
    G, R = u.system.group, u.system.ring
    parts = []
    for g in sorted(u._c, key=G.sort_key):
        c = R.format(u._c[g])
        if needs_parens(c):
            c = f"({c})"
        parts.append(f"{c}*[{G.format(g)}]")
    return " + ".join(parts)


def parse_elem(text, system):
    """Inverse of :func:`format_elem`; also accepts ``-`` between terms."""
    R, G = system.ring, system.group
    text = text.strip()
    if not text:
        raise ParseError("empty crossed-product element")
    if text == "0":
        return zero(system)
    out = {}
    for sign, t in split_signed_terms(text):
        coeff_text, g = _split_term(t, G)
        coeff = R.one.value if coeff_text is None else _parse_coeff(R, coeff_text)
        if sign < 0:
            coeff = R._neg(coeff)
        prev = out.get(g.value)
        out[g.value] = coeff if prev is None else R._add(prev, coeff)
    return CrossedElem._raw(system, {g: a for g, a in out.items() if a != R._zero})


def _parse_coeff(ring, text):
    try:
        return ring.parse_value(text)
    except ParseError:
        raise
    except (ValueError, KeyError, IndexError) as exc:
        raise ParseError(f"bad coefficient {text!r} for {ring}: {exc}") from None


def _split_term(t, G):
    t = t.strip()
    if t.endswith("]"):
        depth = 0
        for i in range(len(t) - 1, -1, -1):
            ch = t[i]
            if ch == "]":
                depth += 1
            elif ch == "[":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise ParseError(f"unbalanced brackets in {t!r}")
        g = G(t[i + 1:-1].strip())
        head = t[:i].rstrip()
        if not head:
            return None, g
        if not head.endswith("*"):
            raise ParseError(f"expected '*' before [{t[i + 1:-1]}] in {t!r}")
        return head[:-1].strip(), g
    return t, G.identity
