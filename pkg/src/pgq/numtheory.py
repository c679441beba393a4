"""Squarefree analysis of cyclotomic-polynomial values at primes.

The driving objects: F(X) = (X^2+1)(X^6-1), the product of the cyclotomic
polynomials Phi_k for k in {1,2,3,4,6}; rho(d), the number of residues a
mod d^2 with F(a) = 0 mod d^2; the Euler-product constant built from rho;
the census N(x) of primes p <= x whose F(p) has no square divisor q^2 with
q > 3; the logarithmic integral; the biggest-divisor-coprime-to-6 map; and
the order formulas plus squarefreeness verdicts for seven families of
groups of Lie type.

N(x) is computed by independent routes: factoring each Phi_k(p) value,
sieving the residue classes cut out by the roots of Phi_k mod q^2, or
factoring the full product F(p); any two must agree exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, log

import numpy as np
from scipy.integrate import quad

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981  # Sorenson-Webster bound


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by an Eratosthenes sieve over a numpy bool array."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return [int(p) for p in np.flatnonzero(sieve)]


@lru_cache(maxsize=1)
def _small_primes() -> list[int]:
    return primes_up_to(4096)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set, deterministic below ~3.3e24 (all
    intermediates in scope stay within 128 bits)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n; deterministic parameter ladder so
    repeated runs are byte-identical."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def factorize(n: int) -> dict[int, int]:
    """Complete prime factorization of a non-negative integer (0 rejected)."""
    if n <= 0:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return out


@dataclass(frozen=True)
class FactoredInteger:
    """A non-negative integer with its complete prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def from_value(cls, n: int) -> "FactoredInteger":
        return cls(n, tuple(sorted(factorize(n).items())))

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prod *= p**e
        if prod != self.value:
            raise ValueError("factorization does not multiply back to the value")

    def is_squarefree(self) -> bool:
        return all(e < 2 for _, e in self.factors)

    def is_squarefree_above3(self) -> bool:
        return all(e < 2 for p, e in self.factors if p > 3)


def is_squarefree(n: FactoredInteger) -> bool:
    return n.is_squarefree()


def is_squarefree_above3(n: FactoredInteger) -> bool:
    return n.is_squarefree_above3()


def alpha(n: int) -> int:
    """Biggest divisor of n coprime to 6: strip every factor of 2 and 3."""
    if n < 1:
        raise ValueError("alpha is defined on positive integers")
    for p in (2, 3):
        while n % p == 0:
            n //= p
    return n


_CYCLOTOMIC = {
    1: lambda q: q - 1,
    2: lambda q: q + 1,
    3: lambda q: q * q + q + 1,
    4: lambda q: q * q + 1,
    6: lambda q: q * q - q + 1,
}

#: coefficient lists (constant first) of the degree <= 2 cyclotomics in play
_PHI_COEFFS = {1: (-1, 1), 2: (1, 1), 3: (1, 1, 1), 4: (1, 0, 1), 6: (1, -1, 1)}


def cyclotomic_value(k: int, q: int) -> int:
    """Phi_k(q) for k in {1, 2, 3, 4, 6} and q >= 2."""
    if k not in _CYCLOTOMIC:
        raise ValueError(f"only k in {{1,2,3,4,6}} is supported, got {k}")
    if q < 2:
        raise ValueError("q must be at least 2")
    return _CYCLOTOMIC[k](q)


def F_value(q: int) -> int:
    """F(q) = (q^2+1)(q^6-1), the product of the five cyclotomic values."""
    return (q * q + 1) * (q**6 - 1)


# -- squarefree testing of a single value ------------------------------------


def _squarefree_witness(value: int, above: int = 1) -> int | None:
    """Smallest prime q > above with q^2 | value, or None.

    Trial division strips primes <= 4096; a surviving cofactor below 4096^3
    is prime, a prime square, or a product of two distinct primes, which
    decides the question without full factorization.  Larger survivors fall
    back to the complete factorizer.
    """
    if value == 0:
        raise ValueError("0 is divisible by every square")
    v = abs(value)
    for q in _small_primes():
        if q * q > v:
            break
        if v % q == 0:
            e = 0
            while v % q == 0:
                v //= q
                e += 1
            if e >= 2 and q > above:
                return q
    if v == 1 or v < 4097:
        return None
    r = isqrt(v)
    if r * r == v:
        return r if is_prime(r) else _fallback_witness(v, above)
    if v < 4096**3:
        return None  # prime or a product of two distinct primes > 4096
    return _fallback_witness(v, above)


def _fallback_witness(v: int, above: int) -> int | None:
    for p, e in sorted(factorize(v).items()):
        if e >= 2 and p > above:
            return p
    return None


# -- rho and the Euler-product constant ---------------------------------------


_RHO_ENUM_CAP = 1450  # d^2 stays within comfortable int64 vectorized range


def rho(d: int, method: str = "auto") -> int:
    """Number of residues a mod d^2 with F(a) = 0 mod d^2.

    'enumerate' scans all d^2 residues (the oracle); 'roots' counts the
    simple roots of the five cyclotomic factors mod a prime q > 3, each of
    which lifts uniquely mod q^2; 'auto' enumerates when feasible and falls
    back to root counting combined multiplicatively over prime factors.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return 1
    if method == "enumerate" or (method == "auto" and d <= _RHO_ENUM_CAP):
        return _rho_enumerate(d)
    if method == "roots" or method == "auto":
        out = 1
        for p, e in sorted(factorize(d).items()):
            if e == 1 and p > 3:
                out *= _rho_prime_by_roots(p)
            else:
                pe = p**e
                if pe > _RHO_ENUM_CAP:
                    raise ValueError(f"prime-power part {pe} too large to enumerate")
                out *= _rho_enumerate(pe)
        return out
    raise ValueError(f"unknown method {method!r}")


def _rho_enumerate(d: int) -> int:
    m = d * d
    a = np.arange(m, dtype=np.int64)
    a2 = (a * a) % m
    a6 = (a2 * a2 % m) * a2 % m
    f = ((a2 + 1) % m) * ((a6 - 1) % m) % m
    return int(np.count_nonzero(f == 0))


def _rho_prime_by_roots(q: int) -> int:
    """For q > 3 every root of F mod q is simple, so roots mod q^2 biject
    with roots mod q: one each from Phi_1, Phi_2, two from Phi_4 iff
    q = 1 mod 4, and two each from Phi_3 and Phi_6 iff q = 1 mod 3."""
    count = 2
    if q % 4 == 1:
        count += 2
    if q % 3 == 1:
        count += 4
    return count


def constant_c(truncation: int) -> tuple[Fraction, float]:
    """Exact partial product of (1 - rho(q)/phi(q^2)) over primes 3 < q <= Q,
    with a float shadow; strictly positive and non-increasing in Q."""
    if truncation < 5:
        raise ValueError("truncation bound must be at least 5")
    exact = Fraction(1)
    for q in primes_up_to(truncation):
        if q <= 3:
            continue
        r = _rho_prime_by_roots(q)
        exact *= 1 - Fraction(r, q * (q - 1))
    return exact, float(exact)


def constant_c_tail_bound(truncation: int) -> Fraction:
    """All later factors change the product by less than sum_{q>Q} 16/q^2 < 16/Q."""
    return Fraction(16, truncation)


# -- the logarithmic integral ---------------------------------------------------


def li(x: float) -> float:
    """Li(x) = integral from 2 to x of dt/log t by adaptive quadrature."""
    if x < 2:
        raise ValueError("Li is defined for x >= 2")
    if x == 2:
        return 0.0
    val, _ = quad(lambda t: 1.0 / log(t), 2.0, float(x), epsabs=0.0, epsrel=1e-13, limit=400)
    return val


def li_series(x: float) -> float:
    """Independent oracle: the offset logarithmic integral via mpmath's
    series evaluation."""
    import mpmath

    if x < 2:
        raise ValueError("Li is defined for x >= 2")
    return float(mpmath.li(x, offset=True))


# -- the census N(x) -------------------------------------------------------------


#: condition name -> (polynomial indices, witness threshold: ignore q <= threshold)
CONDITIONS = {
    "thm51": ((1, 2, 3, 4, 6), 3),
    "cor13": ((3, 4, 6), 1),
}


@dataclass
class SieveResult:
    x: int
    condition: str
    method: str
    count: int
    total_primes: int
    rows: list[tuple[int, bool, int | None]]  # (p, qualifies, smallest witness q)

    @property
    def ratio(self) -> float:
        return self.count / self.total_primes if self.total_primes else 0.0

    def summary(self, c_truncation: int = 10_000) -> dict:
        li_x = li(self.x) if self.x >= 2 else 0.0
        return {
            "x": self.x,
            "condition": self.condition,
            "method": self.method,
            "count": self.count,
            "total_primes": self.total_primes,
            "ratio": self.ratio,
            "li_x": li_x,
            "count_over_li": self.count / li_x if li_x else None,
            "c_truncated": float(constant_c(c_truncation)[0]),
        }


def _phi_witness_row(p: int, ks, above: int) -> tuple[int, bool, int | None]:
    best = None
    for k in ks:
        w = _squarefree_witness(cyclotomic_value(k, p), above)
        if w is not None and (best is None or w < best):
            best = w
    return (p, best is None, best)


def _count_phi_factor(x: int, ks, above: int, threads: int) -> list:
    ps = primes_up_to(x)
    if threads > 1:
        chunk = max(1, len(ps) // threads)
        blocks = [ps[i: i + chunk] for i in range(0, len(ps), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(
                lambda blk: [_phi_witness_row(p, ks, above) for p in blk], blocks
            )
        rows = [row for part in parts for row in part]
    else:
        rows = [_phi_witness_row(p, ks, above) for p in ps]
    return rows


def _sqrt_mod_prime(a: int, q: int) -> int:
    """Tonelli-Shanks; a is assumed to be a quadratic residue mod prime q."""
    a %= q
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    s, d = 0, q - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1
    m, c, t, r = s, pow(z, d, q), pow(a, d, q), pow(a, (d + 1) // 2, q)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        m, c = i, b * b % q
        t, r = t * c % q, r * b % q
    return r


def _poly_eval(coeffs, x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def _phi_roots_mod_prime(k: int, q: int) -> list[int]:
    if q <= 3:
        return [a for a in range(q) if _poly_eval(_PHI_COEFFS[k], a, q) == 0]
    if k == 1:
        return [1]
    if k == 2:
        return [q - 1]
    if k == 4:
        if q % 4 != 1:
            return []
        s = _sqrt_mod_prime(q - 1, q)
        return sorted({s, q - s})
    if k in (3, 6):
        if q % 3 != 1:
            return []
        s = _sqrt_mod_prime(q - 3, q)  # sqrt(-3)
        inv2 = pow(2, -1, q)
        if k == 3:
            return sorted({(-1 + s) * inv2 % q, (-1 - s) * inv2 % q})
        return sorted({(1 + s) * inv2 % q, (1 - s) * inv2 % q})
    raise ValueError(f"unsupported index {k}")


def phi_roots_mod_q2(k: int, q: int) -> list[int]:
    """Roots of Phi_k mod q^2.  For q > 3 every root mod q is simple and
    lifts uniquely; for q in {2, 3} the residues are scanned directly."""
    m = q * q
    if q <= 3:
        return [a for a in range(m) if _poly_eval(_PHI_COEFFS[k], a, m) == 0]
    coeffs = _PHI_COEFFS[k]
    deriv = tuple(i * c for i, c in enumerate(coeffs))[1:]
    out = []
    for r in _phi_roots_mod_prime(k, q):
        fp = _poly_eval(deriv, r, q)
        lift = (r - _poly_eval(coeffs, r, m) * pow(fp, -1, q)) % m
        out.append(lift)
    return sorted(out)


def _count_root_sieve(x: int, ks, above: int) -> list:
    ps = primes_up_to(x)
    prime_set = set(ps)
    witness: dict[int, int] = {}
    qmax = isqrt(x * x + x + 1)
    for q in primes_up_to(qmax):
        if q <= above:
            continue
        m = q * q
        for k in ks:
            for r in phi_roots_mod_q2(k, q):
                start = r if r >= 2 else r + m
                for p in range(start, x + 1, m):
                    if p in prime_set and (p not in witness or q < witness[p]):
                        witness[p] = q
    return [(p, p not in witness, witness.get(p)) for p in ps]


def _count_full_product(x: int, ks, above: int) -> list:
    rows = []
    for p in primes_up_to(x):
        value = 1
        for k in ks:
            value *= cyclotomic_value(k, p)
        best = None
        for prime, e in sorted(factorize(value).items()):
            if e >= 2 and prime > above:
                best = prime
                break
        rows.append((p, best is None, best))
    return rows


def count_N(
    x: int, condition: str = "thm51", method: str = "phi-factor", threads: int = 1
) -> SieveResult:
    """Census of primes p <= x whose polynomial values pass the squarefree
    condition, with a per-prime witness log.

    Methods: 'phi-factor' factors each cyclotomic value; 'root-sieve' marks
    residue classes from polynomial roots mod q^2 without ever factoring;
    'full-F' factors the whole product.  All must agree row by row.
    """
    if x < 2:
        raise ValueError("bound must be at least 2")
    if condition not in CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}")
    ks, above = CONDITIONS[condition]
    if method == "phi-factor":
        rows = _count_phi_factor(x, ks, above, max(1, threads))
    elif method == "root-sieve":
        rows = _count_root_sieve(x, ks, above)
    elif method == "full-F":
        rows = _count_full_product(x, ks, above)
    else:
        raise ValueError(f"unknown method {method!r}")
    rows.sort()
    return SieveResult(
        x=x,
        condition=condition,
        method=method,
        count=sum(1 for _, ok, _ in rows if ok),
        total_primes=len(rows),
        rows=rows,
    )


# -- Lie-type series ---------------------------------------------------------------


LIE_FAMILIES = ("PSL4", "PSU4", "PSp4", "PSp6", "POmega7", "POmega8plus", "G2")

#: family -> cyclotomic indices whose product at q must have squarefree alpha
_LIE_POLYS = {
    "PSL4": (3, 4),
    "PSU4": (4, 6),
    "PSp4": (4,),
    "PSp6": (3, 6),
    "POmega7": (3, 6),
    "POmega8plus": (3, 6),
    "G2": (3, 6),
}


@dataclass(frozen=True)
class LieSeriesSpec:
    family: str
    p: int
    f: int

    def __post_init__(self):
        if self.family not in LIE_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {LIE_FAMILIES}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.f < 1:
            raise ValueError("field exponent must be at least 1")

    @property
    def q(self) -> int:
        return self.p**self.f


@dataclass
class LieVerdict:
    spec: LieSeriesSpec
    settled: bool
    c: int
    poly_value: int
    alpha_of_poly: int
    conditions: dict[str, bool]
    tested: dict[str, FactoredInteger]

    def to_json(self) -> dict:
        return {
            "family": self.spec.family,
            "q": self.spec.q,
            "settled": self.settled,
            "c": self.c,
            "poly_value": self.poly_value,
            "alpha_of_poly": self.alpha_of_poly,
            "conditions": self.conditions,
            "tested": {k: {str(p): e for p, e in v.factors} for k, v in self.tested.items()},
        }


def lie_series_verdict(spec: LieSeriesSpec) -> LieVerdict:
    """Squarefreeness/coprimality verdict: with c = alpha(f), the family is
    settled when c is squarefree and coprime to the family's cyclotomic
    product at q, and alpha of that product is squarefree."""
    q = spec.q
    c = alpha(spec.f)
    poly = 1
    for k in _LIE_POLYS[spec.family]:
        poly *= cyclotomic_value(k, q)
    a = alpha(poly)
    fc = FactoredInteger.from_value(c)
    fa = FactoredInteger.from_value(a)
    conditions = {
        "c_squarefree": fc.is_squarefree(),
        "c_coprime_to_poly": gcd(c, poly) == 1,
        "alpha_poly_squarefree": fa.is_squarefree(),
    }
    return LieVerdict(
        spec=spec,
        settled=all(conditions.values()),
        c=c,
        poly_value=poly,
        alpha_of_poly=a,
        conditions=conditions,
        tested={"c": fc, "alpha_of_poly": fa},
    )


def lie_order(spec: LieSeriesSpec) -> tuple[FactoredInteger, list[tuple[str, int]]]:
    """Exact group order from the displayed formula, with the cyclotomic
    breakdown retained alongside the prime factorization."""
    q = spec.q
    phi1, phi2 = q - 1, q + 1
    phi3, phi4, phi6 = cyclotomic_value(3, q), cyclotomic_value(4, q), cyclotomic_value(6, q)
    fam = spec.family
    if fam == "PSL4":
        d = gcd(4, q - 1)
        parts = [("q^6", q**6), ("(q-1)^3", phi1**3), ("(q+1)^2", phi2**2),
                 ("q^2+q+1", phi3), ("q^2+1", phi4)]
    elif fam == "PSU4":
        d = gcd(4, q + 1)
        parts = [("q^6", q**6), ("(q-1)^2", phi1**2), ("(q+1)^3", phi2**3),
                 ("q^2+1", phi4), ("q^2-q+1", phi6)]
    elif fam == "PSp4":
        d = gcd(2, q - 1)
        parts = [("q^4", q**4), ("(q-1)^2", phi1**2), ("(q+1)^2", phi2**2), ("q^2+1", phi4)]
    elif fam == "PSp6":
        d = gcd(2, q - 1)
        parts = [("q^9", q**9), ("(q-1)^3", phi1**3), ("(q+1)^3", phi2**3),
                 ("q^2+1", phi4), ("q^2+q+1", phi3), ("q^2-q+1", phi6)]
    elif fam == "POmega7":
        d = gcd(2, q + 1)
        parts = [("q^9", q**9), ("(q-1)^3", phi1**3), ("(q+1)^3", phi2**3),
                 ("q^2+1", phi4), ("q^2+q+1", phi3), ("q^2-q+1", phi6)]
    elif fam == "POmega8plus":
        d = gcd(4, q**4 - 1)
        parts = [("q^12", q**12), ("(q-1)^4", phi1**4), ("(q+1)^4", phi2**4),
                 ("(q^2+1)^2", phi4**2), ("q^2+q+1", phi3), ("q^2-q+1", phi6)]
    else:  # G2
        d = 1
        parts = [("q^6", q**6), ("(q-1)^2", phi1**2), ("(q+1)^2", phi2**2),
                 ("q^2+q+1", phi3), ("q^2-q+1", phi6)]
    raw = 1
    for _, v in parts:
        raw *= v
    if raw % d:
        raise ArithmeticError("order formula did not divide evenly; formula data corrupt")
    return FactoredInteger.from_value(raw // d), parts
