#!/usr/bin/env python3
"""Independent reference computations for the frozen test values.

Everything here is written from the definitions with plain Python integers:
polynomial arithmetic mod p for the field, the trace as a sum of Frobenius
powers, codewords from the trace map, and GHWs by walking every subspace of
the message space. Nothing is shared with the C++ library except the field
convention (smallest irreducible polynomial, smallest primitive element).

Usage: ghw_oracle.py [--quick]   prints a JSON object of reference values.
"""

import cmath
import itertools
import json
import math
import sys
from functools import reduce


class Field:
    """F_{p^d}; elements are ints whose base-p digits are the coefficients."""

    def __init__(self, p, d):
        self.p, self.d, self.order = p, d, p**d
        self.poly = next(c for c in range(self.order) if self._irreducible(self._digits(c) + [1]))
        self.mod = self._digits(self.poly) + [1]
        self.gamma = next(x for x in range(1, self.order) if self._primitive(x))
        self.exp = [1]
        for _ in range(self.order - 2):
            self.exp.append(self.mul_slow(self.exp[-1], self.gamma))
        self.log = {v: i for i, v in enumerate(self.exp)}

    def _digits(self, c, n=None):
        n = self.d if n is None else n
        out = []
        for _ in range(n):
            out.append(c % self.p)
            c //= self.p
        return out

    def _encode(self, coeffs):
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _polymulmod(self, a, b, mod):
        p = self.p
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        deg = len(mod) - 1
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i]
            if c:
                for j in range(deg + 1):
                    prod[i - deg + j] = (prod[i - deg + j] - c * mod[j]) % p
        return (prod + [0] * deg)[:deg]

    def _irreducible(self, f):
        # No monic factor of degree 1..d/2, by trial division.
        p, d = self.p, len(f) - 1
        for k in range(1, d // 2 + 1):
            for c in range(p**k):
                g = self._digits(c, k) + [1]
                r = list(f)
                for i in range(len(r) - 1, k - 1, -1):
                    t = r[i]
                    if t:
                        for j in range(k + 1):
                            r[i - k + j] = (r[i - k + j] - t * g[j]) % p
                if not any(r[:k]):
                    return False
        return True

    def mul_slow(self, a, b):
        return self._encode(self._polymulmod(self._digits(a), self._digits(b), self.mod))

    def _pow_slow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul_slow(r, a)
            a = self.mul_slow(a, a)
            e >>= 1
        return r

    def _primitive(self, x):
        n = self.order - 1
        return all(self._pow_slow(x, n // ell) != 1 for ell in prime_factors(n))

    def add(self, a, b):
        return self._encode([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a):
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def gpow(self, k):
        return self.exp[k % (self.order - 1)]

    def trace(self, x, q, m):
        acc = 0
        for i in range(m):
            acc = self.add(acc, self.pow(x, q**i))
        return acc


def prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def coset(a, q, n):
    c, x = set(), a % n
    while x not in c:
        c.add(x)
        x = x * q % n
    return frozenset(c)


class Code:
    def __init__(self, p, s, m, e, t, a, delta):
        self.F = F = Field(p, s * m)
        self.p, self.s, self.m, self.e, self.t = p, s, m, e, t
        self.q, self.Q = p**s, p ** (s * m)
        G = self.Q - 1
        self.a = [(a + G // e * d) % G for d in delta]
        self.delta = reduce(math.gcd, self.a, G)
        self.n = G // self.delta
        self.N = math.gcd(G // (self.q - 1), a * e)
        assert all(len(coset(ai, self.q, G)) == m for ai in self.a)
        assert len({coset(ai, self.q, G) for ai in self.a}) == t
        self.sub = [0] + [F.gpow(k * G // (self.q - 1)) for k in range(self.q - 1)]
        self.k = t * m
        # Message basis: gamma^l in slot j.
        self.rows = []
        for j in range(t):
            for l in range(m):
                x = [0] * t
                x[j] = F.gpow(l)
                self.rows.append(self.codeword(x))

    def codeword(self, x):
        F, out = self.F, []
        for i in range(self.n):
            acc = 0
            for xj, aj in zip(x, self.a):
                acc = F.add(acc, F.mul(xj, F.gpow(aj * i)))
            out.append(F.trace(acc, self.q, self.m))
        return out

    def combine(self, coeffs):
        F, out = self.F, [0] * self.n
        for c, row in zip(coeffs, self.rows):
            if c:
                out = [F.add(o, F.mul(c, v)) for o, v in zip(out, row)]
        return out


def rref_subspaces(F, sub, k, r):
    """Every r-dimensional subspace of F_q^k as an RREF basis."""
    for pivots in itertools.combinations(range(k), r):
        free = [(i, c) for i in range(r) for c in range(pivots[i] + 1, k) if c not in pivots]
        for vals in itertools.product(sub, repeat=len(free)):
            rows = [[0] * k for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), v in zip(free, vals):
                rows[i][c] = v
            yield rows


def hierarchy(code):
    F, out = code.F, []
    for r in range(1, code.k + 1):
        best = 0
        for basis in rref_subspaces(F, code.sub, code.k, r):
            words = [code.combine(row) for row in basis]
            zeros = sum(1 for i in range(code.n) if all(w[i] == 0 for w in words))
            best = max(best, zeros)
        out.append(code.n - best)
    return out


def gauss_periods(p, d, N):
    F = Field(p, d)
    G = F.order - 1
    zeta = cmath.exp(2j * math.pi / p)

    def psi(x):
        tr = F.trace(x, p, d)
        return zeta ** (tr % p)

    periods = []
    for i in range(N):
        total = sum(psi(F.gpow(i + N * k)) for k in range(G // N))
        periods.append(round(total.real))
        assert abs(total.imag) < 1e-9 and abs(total.real - round(total.real)) < 1e-9
    return periods


def max_intersection(p, s, m, N, i, l):
    """max over l-dim F_q-subspaces V of F_Q of |V ∩ C_i^(N)|."""
    F = Field(p, s * m)
    q, G = p**s, F.order - 1
    sub = [0] + [F.gpow(k * G // (q - 1)) for k in range(q - 1)]
    basis = [F.gpow(j) for j in range(m)]
    best = 0
    for rows in rref_subspaces(F, sub, m, l):
        gens = [reduce(F.add, (F.mul(c, b) for c, b in zip(row, basis)), 0) for row in rows]
        elems = {0}
        for g in gens:
            elems = {F.add(x, F.mul(c, g)) for x in elems for c in sub}
        best = max(best, sum(1 for x in elems if x and F.log[x] % N == i))
    return best


def subspace_count(k, r, q):
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def scan_simplex_q2m3():
    """All valid (q=2, m=3, e=t=1, a) tuples, a in 0..6."""
    out = []
    G = 7
    for a in range(G):
        if a == 0:
            continue
        if len(coset(a, 2, G)) != 3:
            continue
        out.append(a)
    return out


def scan_e4_t3():
    """(q=3, m=2, e=4, t=3): valid tuples and their N."""
    G, q, e, t = 8, 3, 4, 3
    found = []
    for rest in itertools.combinations(range(1, e), t - 1):
        delta = (0,) + rest
        if reduce(math.gcd, [d for d in rest] + [e]) != 1:
            continue
        for a in range(1, G):
            ai = [(a + G // e * d) % G for d in delta]
            cos = [coset(x, q, G) for x in ai]
            if any(len(c) != 2 for c in cos) or len(set(cos)) != t:
                continue
            found.append({"a": a, "delta": list(delta), "N": math.gcd(G // (q - 1), a * e)})
    return found


def main():
    quick = "--quick" in sys.argv
    out = {}
    instances = {
        "simplex": (2, 1, 3, 1, 1, 1, [0]),
        "q3m2_N2": (3, 1, 2, 2, 2, 1, [0, 1]),
        "q7m2_e3": (7, 1, 2, 3, 2, 1, [0, 1]),
    }
    if not quick:
        instances["q3m3_t2"] = (3, 1, 3, 2, 2, 1, [0, 1])
    for name, args in instances.items():
        c = Code(*args)
        out[name] = {"a": c.a, "delta": c.delta, "n": c.n, "N": c.N, "hierarchy": hierarchy(c)}
    simplex = Code(2, 1, 3, 1, 1, 1, [0])
    weights = sorted(
        sum(1 for v in simplex.combine(list(coeffs)) if v)
        for coeffs in itertools.product([0, 1], repeat=3)
        if any(coeffs)
    )
    out["simplex"]["weights"] = weights
    out["primitive_root_5"] = Field(5, 1).gamma
    out["periods_Q9_N2"] = gauss_periods(3, 2, 2)
    out["max_intersection"] = {
        "Q9_l1": [max_intersection(3, 1, 2, 2, i, 1) for i in range(2)],
        "Q9_l2": [max_intersection(3, 1, 2, 2, i, 2) for i in range(2)],
        "Q81_q3_l3": [max_intersection(3, 1, 4, 2, i, 3) for i in range(2)],
        "Q81_q9_l1": [max_intersection(3, 2, 2, 2, i, 1) for i in range(2)],
    }
    out["subspace_counts"] = {"3_1_2": subspace_count(3, 1, 2), "4_2_3": subspace_count(4, 2, 3),
                              "4_3_3": subspace_count(4, 3, 3), "6_3_3": subspace_count(6, 3, 3)}
    out["scan_simplex_q2m3"] = scan_simplex_q2m3()
    out["scan_e4_t3"] = scan_e4_t3()
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
