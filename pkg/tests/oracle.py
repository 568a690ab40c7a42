"""Independent brute-force oracle for small crossed products.

Nothing here imports the package: rings and groups are plain Python values
with hand-written tables, and a crossed-product element is a tuple of
coefficients indexed by the group element list.
"""
from itertools import product as cartesian


class NaiveSystem:
    def __init__(self, ring, add, mul, zero, one, group, gmul, sigma, alpha=None):
        self.ring = list(ring)
        self.add, self.mul, self.zero, self.one = add, mul, zero, one
        self.group = list(group)
        self.gmul = gmul
        self.sigma = sigma
        self.alpha = alpha or (lambda s, t: one)
        self.index = {g: i for i, g in enumerate(self.group)}
        self.e = next(g for g in self.group if all(gmul(g, h) == h for h in self.group))

    # elements: tuples of coefficients ordered like self.group
    def elements(self):
        return [tuple(c) for c in cartesian(self.ring, repeat=len(self.group))]

    def term(self, a, g):
        c = [self.zero] * len(self.group)
        c[self.index[g]] = a
        return tuple(c)

    def embed(self, a):
        return self.term(a, self.e)

    def plus(self, u, v):
        return tuple(self.add(a, b) for a, b in zip(u, v))

    def times(self, u, v):
        out = [self.zero] * len(self.group)
        for s, a in zip(self.group, u):
            if a == self.zero:
                continue
            for t, b in zip(self.group, v):
                if b == self.zero:
                    continue
                st = self.index[self.gmul(s, t)]
                c = self.mul(self.mul(a, self.sigma(s, b)), self.alpha(s, t))
                out[st] = self.add(out[st], c)
        return tuple(out)

    def center(self):
        els = self.elements()
        return {u for u in els if all(self.times(u, v) == self.times(v, u) for v in els)}

    def commutant(self):
        base = [self.embed(a) for a in self.ring]
        return {u for u in self.elements() if all(self.times(u, b) == self.times(b, u) for b in base)}

    def is_commutative(self):
        els = self.elements()
        return all(self.times(u, v) == self.times(v, u) for u in els for v in els)

    def ideal(self, gens):
        """Two-sided ideal: saturate under + and products with every single term a[s]."""
        zero = tuple([self.zero] * len(self.group))
        singles = [self.term(a, g) for g in self.group for a in self.ring if a != self.zero]
        ideal = {zero}
        frontier = list(gens)
        while frontier:
            u = frontier.pop()
            if u in ideal:
                continue
            sums = {self.plus(w, u) for w in ideal}
            ideal.add(u)
            frontier.extend(sums - ideal)
            for m in singles:
                for v in (self.times(m, u), self.times(u, m)):
                    if v not in ideal:
                        frontier.append(v)
        return ideal


def truncated_torus_f3(k):
    """F_3[x]/(x^3) as (c0, c1, c2); C_k acts by x -> 2^n x."""
    ring = list(cartesian(range(3), repeat=3))

    def add(a, b):
        return tuple((x + y) % 3 for x, y in zip(a, b))

    def mul(a, b):
        c = [0, 0, 0]
        for i in range(3):
            for j in range(3 - i):
                c[i + j] += a[i] * b[j]
        return tuple(x % 3 for x in c)

    def sigma(n, a):
        q = pow(2, n, 3)
        return (a[0], a[1] * q % 3, a[2] * q * q % 3)

    return NaiveSystem(ring, add, mul, (0, 0, 0), (1, 0, 0), range(k), lambda s, t: (s + t) % k, sigma)


def group_ring_mod(n, group, gmul):
    return NaiveSystem(range(n), lambda a, b: (a + b) % n, lambda a, b: a * b % n, 0, 1,
                       group, gmul, lambda s, a: a)


def s3():
    from itertools import permutations
    return sorted(permutations(range(3))), lambda a, b: tuple(a[i] for i in b)


def f4_frobenius():
    """F_4 = F_2[w]/(w^2 + w + 1) as (c0, c1); C_2 acts by squaring."""
    ring = [(0, 0), (0, 1), (1, 0), (1, 1)]

    def add(a, b):
        return ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)

    def mul(a, b):
        c0 = a[0] * b[0]
        c1 = a[0] * b[1] + a[1] * b[0]
        c2 = a[1] * b[1]
        # w^2 = w + 1
        return ((c0 + c2) % 2, (c1 + c2) % 2)

    def sigma(g, a):
        return mul(a, a) if g == 1 else a

    return NaiveSystem(ring, add, mul, (0, 0), (1, 0), range(2), lambda s, t: (s + t) % 2, sigma)


def twisted_z5_c2(a11=2):
    return NaiveSystem(range(5), lambda a, b: (a + b) % 5, lambda a, b: a * b % 5, 0, 1,
                       range(2), lambda s, t: (s + t) % 2, lambda s, a: a,
                       lambda s, t: a11 if (s, t) == (1, 1) else 1)
