"""Exact polynomial arithmetic over Z and over prime fields F_p.

Integer polynomials are immutable coefficient tuples, lowest degree first,
with arbitrary-precision coefficients throughout (discriminants overflow 64
bits even for modest cubics). Mod-p polynomials carry their modulus and keep
every coefficient reduced.

Factorization over F_p runs the classical pipeline: squarefree decomposition,
then distinct-degree splitting, then equal-degree splitting with a
deterministically seeded generator, so identical inputs always produce
identical factor lists. Factors are emitted sorted by degree, then
lexicographically on the coefficient tuple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CompositeModulus, ZeroPolynomial

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# ---------------------------------------------------------------------------
# Integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Polynomial over Z; coeffs[k] multiplies x^k, no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs) -> "IntPoly":
        return IntPoly(_trim(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def derivative(self) -> "IntPoly":
        return IntPoly(_trim(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def reduce_mod(self, p: int) -> "ModPoly":
        return ModPoly(p, _trim(c % p for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                xs = "x" if k == 1 else f"x^{k}"
                terms.append(xs if c == 1 else f"-{xs}" if c == -1 else f"{c}*{xs}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def _sylvester_resultant(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Resultant of two integer polynomials via Bareiss elimination."""
    da, db = len(a) - 1, len(b) - 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    n = da + db
    m = [[0] * n for _ in range(n)]
    for i in range(db):
        for j, c in enumerate(reversed(a)):
            m[i][i + j] = c
    for i in range(da):
        for j, c in enumerate(reversed(b)):
            m[db + i][i + j] = c
    # fraction-free Gaussian elimination (Bareiss)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def poly_discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') for monic f, exactly."""
    if f.is_zero:
        raise ZeroPolynomial("discriminant of the zero polynomial")
    if not f.is_monic or f.degree < 1:
        raise ValueError("discriminant requires a monic polynomial of degree >= 1")
    d = f.degree
    res = _sylvester_resultant(f.coeffs, f.derivative().coeffs)
    return (-1) ** (d * (d - 1) // 2) * res


# ---------------------------------------------------------------------------
# Polynomials over F_p: raw-tuple kernels (hot path) plus the ModPoly wrapper.
# All kernels take and return trimmed coefficient tuples.


def _padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, v in enumerate(b):
        c[i] = (c[i] + v) % p
    return _trim(c)


def _psub(a, b, p):
    n = max(len(a), len(b))
    c = [0] * n
    for i, v in enumerate(a):
        c[i] = v
    for i, v in enumerate(b):
        c[i] = (c[i] - v) % p
    return _trim(c)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    return _trim(v % p for v in c)


def _pscale(a, s, p):
    s %= p
    if s == 0:
        return ()
    return _trim(v * s % p for v in a)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j, bj in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * bj) % p
    return _trim(q), _trim(r)


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pmonic(a, p):
    if not a or a[-1] == 1:
        return a
    return _pscale(a, pow(a[-1], p - 2, p), p)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return _pmonic(a, p)


def _pderiv(a, p):
    return _trim(k * c % p for k, c in enumerate(a) if k)


def _ppowmod(base, e, mod, p):
    result = (1,)
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


_X = (0, 1)


def _frobenius(h, f, p):
    """h^p mod f."""
    return _ppowmod(h, p, f, p)


def _xpow_p_mod_monic(fc: tuple[int, ...], p: int) -> tuple[int, ...]:
    """x^p mod f for monic f, tuned for the per-prime hot path.

    Square-and-multiply with base x: the multiply step is a coefficient
    shift, so each exponent bit costs one squaring plus an O(deg f) fixup.
    """
    d = len(fc) - 1
    if p < d:
        out = [0] * (p + 1)
        out[p] = 1
        return tuple(out)
    neg = [(-c) % p for c in fc[:d]]
    r = [0] * d
    r[0] = 1
    for bit in bin(p)[2:]:
        s = [0] * (2 * d - 1)
        for i in range(d):
            ri = r[i]
            if ri:
                s[2 * i] += ri * ri
                two_ri = 2 * ri
                for j in range(i + 1, d):
                    s[i + j] += two_ri * r[j]
        for k in range(2 * d - 2, d - 1, -1):
            c = s[k] % p
            if c:
                base = k - d
                for t in range(d):
                    s[base + t] += c * neg[t]
        r = [v % p for v in s[:d]]
        if bit == "1":
            top = r[d - 1]
            r = [0] + r[: d - 1]
            if top:
                for t in range(d):
                    r[t] = (r[t] + top * neg[t]) % p
    return _trim(r)


def _compose_mod(g, h, f, p):
    """g(h) mod f by Horner."""
    out = ()
    for c in reversed(g):
        out = _pmod(_pmul(out, h, p), f, p)
        if c:
            out = _padd(out, (c,), p)
    return out


def _pth_root(a, p):
    # in F_p[x], a polynomial with zero derivative is b(x^p); coefficients
    # are fixed by Frobenius, so the root just reindexes them
    return _trim(a[i] for i in range(0, len(a), p))


def _squarefree_parts(f, p):
    """f monic -> list of (g, m): f = prod g^m, g monic squarefree, coprime."""
    parts = []

    def run(f, mult):
        df = _pderiv(f, p)
        if not df:
            run(_pth_root(f, p), mult * p)
            return
        c = _pgcd(f, df, p)
        w = _pdivmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _pgcd(w, c, p)
            fac = _pdivmod(w, y, p)[0]
            if len(fac) > 1:
                parts.append((fac, i * mult))
            w = y
            c = _pdivmod(c, y, p)[0]
            i += 1
        if len(c) > 1:
            run(_pth_root(c, p), mult * p)

    run(_pmonic(f, p), 1)
    parts.sort(key=lambda gm: (gm[1], len(gm[0]), gm[0]))
    return parts


def _distinct_degree_parts(g, p):
    """g monic squarefree -> list of (product of irreducibles of degree d, d)."""
    parts = []
    h = _X
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _frobenius(h, g, p)
        gd = _pgcd(_psub(h, _X, p), g, p)
        if len(gd) > 1:
            parts.append((gd, d))
            g = _pdivmod(g, gd, p)[0]
            h = _pmod(h, g, p)
    if len(g) > 1:
        parts.append((g, len(g) - 1))
    return parts


def _content_seed(p: int, coeffs: tuple[int, ...], seed: int) -> int:
    h = 0x9E3779B97F4A7C15 ^ (seed & 0xFFFFFFFFFFFFFFFF)
    for v in (p, len(coeffs), *coeffs):
        h = (h ^ (v & 0xFFFFFFFFFFFFFFFF)) * 0x100000001B3 % (1 << 64)
    return h


def _equal_degree_split(g, d, p, rng):
    """g monic squarefree, all irreducible factors of degree d -> factor list."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        r = _trim(rng.randrange(p) for _ in range(n))
        if len(r) < 2:
            continue
        if p == 2:
            # trace map over F_2: r + r^2 + ... + r^(2^(d-1))
            t = r
            s = r
            for _ in range(d - 1):
                s = _pmod(_pmul(s, s, p), g, p)
                t = _padd(t, s, p)
            cand = _pgcd(t, g, p)
        else:
            cand = _pgcd(r, g, p)
            if len(cand) - 1 in (0, n):
                s = _ppowmod(r, (p ** d - 1) // 2, g, p)
                cand = _pgcd(_psub(s, (1,), p), g, p)
        if 0 < len(cand) - 1 < n:
            rest = _pdivmod(g, cand, p)[0]
            return _equal_degree_split(cand, d, p, rng) + _equal_degree_split(rest, d, p, rng)


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p; coeffs[k] in [0, p) multiplies x^k."""

    p: int
    coeffs: tuple[int, ...]

    @staticmethod
    def of(p: int, coeffs) -> "ModPoly":
        return ModPoly(p, _trim(int(c) % p for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _wrap(self, coeffs) -> "ModPoly":
        return ModPoly(self.p, coeffs)

    def __add__(self, other: "ModPoly") -> "ModPoly":
        return self._wrap(_padd(self.coeffs, other.coeffs, self.p))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self._wrap(_psub(self.coeffs, other.coeffs, self.p))

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        return self._wrap(_pmul(self.coeffs, other.coeffs, self.p))

    def __divmod__(self, other: "ModPoly"):
        q, r = _pdivmod(self.coeffs, other.coeffs, self.p)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def monic(self) -> "ModPoly":
        return self._wrap(_pmonic(self.coeffs, self.p))

    def gcd(self, other: "ModPoly") -> "ModPoly":
        return self._wrap(_pgcd(self.coeffs, other.coeffs, self.p))

    def pow_mod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        return self._wrap(_ppowmod(self.coeffs, e, modulus.coeffs, self.p))

    def lift(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __str__(self) -> str:
        return f"{IntPoly(self.coeffs)} (mod {self.p})"


def factor_mod_p(f: ModPoly, seed: int = 0) -> tuple[tuple[ModPoly, int], ...]:
    """Factor f into monic irreducibles over F_p with multiplicities.

    The product of the factors, raised to their multiplicities and scaled by
    the leading coefficient of f, reconstructs f exactly. Output order is
    canonical: by degree, then lexicographic on the coefficient tuple. The
    equal-degree stage draws from a generator seeded by (p, f, seed), so
    repeated calls are reproducible.
    """
    p = f.p
    if not is_prime(p):
        raise CompositeModulus(f"modulus {p} is not prime")
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        return ()
    rng = random.Random(_content_seed(p, f.coeffs, seed))
    out = []
    for g, mult in _squarefree_parts(f.coeffs, p):
        for prod, d in _distinct_degree_parts(g, p):
            for irr in _equal_degree_split(prod, d, p, rng):
                out.append((ModPoly(p, irr), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return tuple(out)


def _dedekind_from_parts(f: IntPoly, p: int, parts) -> bool:
    """Dedekind criterion given the squarefree decomposition of f mod p."""
    if all(m == 1 for _, m in parts):
        return True
    gbar = (1,)
    hbar = (1,)
    for g, m in parts:
        gbar = _pmul(gbar, g, p)
        for _ in range(m - 1):
            hbar = _pmul(hbar, g, p)
    glift = gbar
    hlift = hbar
    # T = (lift(g) * lift(h) - f) / p, then reduced mod p
    prod = [0] * (len(glift) + len(hlift) - 1)
    for i, gi in enumerate(glift):
        if gi:
            for j, hj in enumerate(hlift):
                prod[i + j] += gi * hj
    n = max(len(prod), len(f.coeffs))
    diff = [0] * n
    for i, v in enumerate(prod):
        diff[i] = v
    for i, v in enumerate(f.coeffs):
        diff[i] -= v
    tbar = _trim(v // p % p for v in diff)
    g1 = _pgcd(tbar, gbar, p)
    g2 = _pgcd(g1, hbar, p)
    return len(g2) == 1


def dedekind_index_test(f: IntPoly, p: int) -> bool:
    """True iff p does not divide the index of Z[x]/(f) in the maximal order.

    When true, the splitting of p can be read directly from the factorization
    of f mod p.
    """
    if not is_prime(p):
        raise CompositeModulus(f"modulus {p} is not prime")
    if not f.is_monic:
        raise ValueError("Dedekind criterion requires a monic polynomial")
    fbar = f.reduce_mod(p)
    if fbar.degree != f.degree:
        raise ValueError("leading coefficient vanished mod p")
    return _dedekind_from_parts(f, p, _squarefree_parts(fbar.coeffs, p))
