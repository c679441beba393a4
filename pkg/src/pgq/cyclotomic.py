"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is a finite rational combination sum_a c_a * zeta_n^a, stored
sparsely as a map exponent -> Fraction together with its level n (the field
Q(zeta_n) the element is considered to live in; always written after '@' in
the textual form).  Mixed-level arithmetic lifts both operands to the lcm of
their levels; levels are never reduced.

Canonical form: write n = prod_p P with P = p^v the p-part.  Under the
tensor decomposition Q(zeta_n) = tensor_p Q(zeta_P) the exponent a has
p-coordinate e_p(a) = a * (n/P)^-1 mod P, and the products of power-basis
monomials zeta_P^i with 0 <= i < phi(P) form a Q-basis.  Any term whose
p-coordinate lands outside that range is rewritten once per prime via
sum_{j=0..p-1} zeta_P^{i + j*P/p} = 0, which leaves all other coordinates
untouched.  Equality and zero-testing read off the reduced support.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    """Factor a small positive integer (levels stay tiny) by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorint(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    mu = 1
    for _, e in factorint(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be an int or Fraction, got {type(c).__name__}")


@lru_cache(maxsize=None)
def _reduction_data(n: int):
    """Per-prime rewrite data for level n: (p, P, phiP, step, modulus_shift)."""
    data = []
    for p, e in factorint(n):
        P = p ** e
        m = n // P
        inv = pow(m, -1, P)
        data.append((p, P, P - P // p, P // p, m, inv))
    return data


def _canonicalize(n: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    cur = {}
    for a, c in coeffs.items():
        if c:
            a %= n
            cur[a] = cur.get(a, Fraction(0)) + c
    for p, P, phiP, step, m, inv in _reduction_data(n):
        nxt: dict[int, Fraction] = {}
        for a, c in cur.items():
            if not c:
                continue
            e = (a * inv) % P
            if e < phiP:
                nxt[a] = nxt.get(a, Fraction(0)) + c
            else:
                r = e - phiP
                for j in range(p - 1):
                    a2 = (a + (r + j * step - e) * m) % n
                    nxt[a2] = nxt.get(a2, Fraction(0)) - c
        cur = nxt
    return {a: c for a, c in cur.items() if c}


class CyclotomicElement:
    """An exact element of Q(zeta_n), kept in canonical form."""

    __slots__ = ("n", "coeffs")
    __hash__ = None  # equality crosses levels; values are meant for dicts' values, not keys

    def __init__(self, n: int, coeffs: dict[int, Fraction], _canonical: bool = False):
        if n < 1:
            raise ValueError(f"level must be a positive integer, got {n}")
        self.n = n
        self.coeffs = coeffs if _canonical else _canonicalize(n, coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def make(cls, n: int, terms) -> "CyclotomicElement":
        """Build sum c * zeta_n^a from (exponent, coefficient) pairs."""
        if n < 1:
            raise ValueError(f"level must be a positive integer, got {n}")
        coeffs: dict[int, Fraction] = {}
        for a, c in terms:
            a = a % n
            coeffs[a] = coeffs.get(a, Fraction(0)) + _as_fraction(c)
        return cls(n, coeffs)

    @classmethod
    def rational(cls, c, n: int = 1) -> "CyclotomicElement":
        return cls(n, {0: _as_fraction(c)})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicElement":
        return cls(n, {k % n: Fraction(1)})

    # -- level handling ------------------------------------------------

    def lift(self, m: int) -> "CyclotomicElement":
        """Re-express at level m (self.n must divide m): zeta_n = zeta_m^(m/n)."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift level {self.n} to non-multiple {m}")
        s = m // self.n
        return CyclotomicElement(m, {a * s: c for a, c in self.coeffs.items()})

    @staticmethod
    def _common(x: "CyclotomicElement", y: "CyclotomicElement"):
        m = lcm(x.n, y.n)
        return x.lift(m), y.lift(m)

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self._common(self, other)
        coeffs = dict(a.coeffs)
        for k, c in b.coeffs.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        return CyclotomicElement(a.n, coeffs)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CyclotomicElement(self.n, {a: -c for a, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_fraction(other)
            return CyclotomicElement(
                self.n, {a: c * c0 for a, c in self.coeffs.items()} if c0 else {}
            )
        a, b = self._common(self, self._coerce(other))
        coeffs: dict[int, Fraction] = {}
        for i, ci in a.coeffs.items():
            for j, cj in b.coeffs.items():
                k = (i + j) % a.n
                coeffs[k] = coeffs.get(k, Fraction(0)) + ci * cj
        return CyclotomicElement(a.n, coeffs)

    def __rmul__(self, other):
        return self.__mul__(other)

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, CyclotomicElement):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot mix CyclotomicElement with {type(x).__name__}")

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __repr__(self):
        return f"CyclotomicElement({self.to_string()!r})"

    # -- predicates and extraction --------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if self.is_rational():
            return self.coeffs[0]
        raise ValueError(f"{self.to_string()} is not rational")

    # -- Galois action and traces ---------------------------------------

    def galois(self, k: int) -> "CyclotomicElement":
        """Apply zeta_n -> zeta_n^k; k must be invertible mod the level."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"galois exponent {k} is not coprime to level {self.n}")
        return CyclotomicElement(self.n, {(a * k) % self.n: c for a, c in self.coeffs.items()})

    def trace_to_Q(self) -> Fraction:
        """Trace from Q(zeta_n) down to Q via the closed single-root formula.

        Tr(zeta_n^a) = mu(n/g) * phi(n) / phi(n/g) with g = gcd(a, n); the
        full Galois-sum computation is kept alongside as an oracle.
        """
        n = self.n
        total = Fraction(0)
        phi_n = euler_phi(n)
        for a, c in self.coeffs.items():
            g = gcd(a, n)
            d = n // g
            total += c * moebius(d) * (phi_n // euler_phi(d))
        return total

    def trace_via_galois_sum(self) -> Fraction:
        """Independent trace path: literally sum the Galois conjugates."""
        acc = CyclotomicElement(self.n, {})
        for k in range(1, self.n + 1):
            if gcd(k, self.n) == 1:
                acc = acc + self.galois(k)
        return acc.to_rational()

    def trace_over(self, m: int) -> Fraction:
        """Trace over Q(zeta_m)/Q of a value that lies in Q(zeta_m).

        The element may be represented at any level; the trace at the joint
        level L overshoots by the relative degree [Q(zeta_L):Q(zeta_m)].
        """
        L = lcm(self.n, m)
        t = self.lift(L).trace_to_Q()
        return t * euler_phi(m) / euler_phi(L)

    def fixed_by(self, m: int) -> bool:
        """True iff the value lies in Q(zeta_m), tested by Galois stability."""
        L = lcm(self.n, m)
        x = self.lift(L)
        for k in range(1, L):
            if k % m == 1 and gcd(k, L) == 1 and x.galois(k) != x:
                return False
        return True

    # -- float shadow ----------------------------------------------------

    def complex_value(self) -> complex:
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * a / self.n) for a, c in self.coeffs.items()),
            complex(0),
        )

    # -- serialization -----------------------------------------------------

    def to_string(self) -> str:
        """Textual form 'c0 + c1*z^1 + ... @ n' with exact fractions."""
        if not self.coeffs:
            return f"0 @ {self.n}"
        parts = []
        for a in sorted(self.coeffs):
            c = self.coeffs[a]
            parts.append(str(c) if a == 0 else f"{c}*z^{a}")
        return " + ".join(parts) + f" @ {self.n}"

    def to_json_map(self) -> dict:
        return {"n": self.n, "coeffs": {str(a): str(c) for a, c in sorted(self.coeffs.items())}}


_TERM_RE = re.compile(r"^(?P<c>[+-]?\d+(?:/\d+)?)(?:\*z\^(?P<a>\d+))?$")


def parse_cyclotomic(text) -> CyclotomicElement:
    """Parse the textual 'c0 + c1*z^1 + ... @ n' form or a JSON coeff map.

    A bare rational like '-2' or '1/3' is the constant at level 1.
    """
    if isinstance(text, dict):
        n = int(text["n"])
        terms = [(int(a), Fraction(c)) for a, c in text["coeffs"].items()]
        return CyclotomicElement.make(n, terms)
    if isinstance(text, int):
        return CyclotomicElement.rational(text)
    s = text.strip()
    if "@" in s:
        body, level = s.rsplit("@", 1)
        n = int(level.strip())
    else:
        body, n = s, 1
    body = body.strip()
    if body in ("", "0"):
        return CyclotomicElement(n, {})
    terms = []
    for tok in body.replace("- ", "+ -").split("+"):
        tok = tok.strip().replace(" ", "")
        if not tok:
            continue
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError(f"cannot parse cyclotomic term {tok!r} in {text!r}")
        a = int(m.group("a") or 0)
        terms.append((a, Fraction(m.group("c"))))
    return CyclotomicElement.make(n, terms)


# module-level conveniences mirroring the element API

def make(n: int, terms) -> CyclotomicElement:
    return CyclotomicElement.make(n, terms)


def zeta(n: int, k: int = 1) -> CyclotomicElement:
    return CyclotomicElement.zeta(n, k)


def rational(c, n: int = 1) -> CyclotomicElement:
    return CyclotomicElement.rational(c, n)


def add(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x + y


def mul(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x * y


def galois(x: CyclotomicElement, k: int) -> CyclotomicElement:
    return x.galois(k)


def trace_to_Q(x: CyclotomicElement) -> Fraction:
    return x.trace_to_Q()
