"""Eigenvalue-multiplicity constraints on torsion units of integral group rings.

Given a slice of a character table, a hypothetical normalized unit u of
order n is described by one integer per conjugacy class of order dividing n
(its partial augmentations) together with the class distributions of its
proper powers.  Each character chi and each n-th root of unity zeta^l then
yield an exact rational multiplicity

    mu(zeta^l, u, chi) = (1/n) sum_{d | n} Tr_{Q(zeta_{n/d})/Q}(chi(u^d) zeta^{-dl})

which for an actual unit is a non-negative integer bounded by chi(1).  The
feasibility engine turns these conditions, the vanishing and congruence
constraints on partial augmentations, and augmentation one into an exact
integer search: variable bounds come from Fourier-Motzkin elimination over
the rational relaxation, and the engine refuses (rather than truncating)
when that relaxation leaves a variable unbounded.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CyclotomicElement, factorint, parse_cyclotomic


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorint(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


# -- character table slices ---------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClassInfo:
    name: str
    order: int
    power_map: dict[int, str] = field(default_factory=dict)  # prime -> class of g^p
    size: int | None = None


@dataclass(frozen=True)
class Character:
    name: str
    degree: int
    values: dict[str, CyclotomicElement]

    def value(self, class_name: str) -> CyclotomicElement:
        try:
            return self.values[class_name]
        except KeyError:
            raise KeyError(f"character {self.name} has no value on class {class_name}") from None


class CharacterTableSlice:
    """Conjugacy classes with orders and power maps plus some characters.

    For unit-order n computations the slice must contain every class of the
    group whose element order divides n.
    """

    def __init__(self, group_name: str, group_order: int, classes, characters):
        self.group_name = group_name
        self.group_order = group_order
        self.classes = list(classes)
        self.characters = list(characters)
        self._by_name = {c.name: c for c in self.classes}
        self._chars = {c.name: c for c in self.characters}
        self.validate()

    def validate(self):
        if len(self._by_name) != len(self.classes):
            raise ValueError("duplicate class names")
        identities = [c for c in self.classes if c.order == 1]
        if len(identities) != 1:
            raise ValueError("exactly one identity class is required")
        self.identity = identities[0]
        for c in self.classes:
            for p, target in c.power_map.items():
                if target not in self._by_name:
                    raise ValueError(f"power map of {c.name} leaves the slice: {target}")
                expected = c.order // (p if c.order % p == 0 else 1)
                if self._by_name[target].order != expected:
                    raise ValueError(
                        f"class {c.name}^{p} should have order {expected}, "
                        f"got {self._by_name[target].order}"
                    )
        for chi in self.characters:
            val = chi.value(self.identity.name)
            if val.to_rational() != chi.degree:
                raise ValueError(f"character {chi.name}: value at identity != degree")
            for c in self.classes:
                if c.name in chi.values and not chi.values[c.name].fixed_by(c.order):
                    raise ValueError(
                        f"character {chi.name} value on {c.name} is not in Q(zeta_{c.order})"
                    )

    def cls(self, name: str) -> ConjugacyClassInfo:
        return self._by_name[name]

    def character(self, name: str) -> Character:
        return self._chars[name]

    def power_class(self, name: str, k: int) -> str:
        """Name of the class of g^k for g in the named class."""
        c = self.cls(name)
        k %= c.order
        if k == 0:
            return self.identity.name
        cur = name
        for p, e in factorint(k):
            for _ in range(e):
                cc = self.cls(cur)
                if p not in cc.power_map:
                    raise KeyError(f"class {cur} is missing the power map at prime {p}")
                cur = cc.power_map[p]
        return cur

    def variable_classes(self, n: int) -> list[ConjugacyClassInfo]:
        """Classes that may carry a nonzero partial augmentation for a unit of
        order n > 1: order divides n and is not 1 (Berman-Higman)."""
        return [c for c in self.classes if c.order > 1 and n % c.order == 0]

    @classmethod
    def from_json(cls, doc: dict) -> "CharacterTableSlice":
        classes = [
            ConjugacyClassInfo(
                name=c["name"],
                order=int(c["order"]),
                power_map={int(p): t for p, t in c.get("powers", {}).items()},
                size=c.get("size"),
            )
            for c in doc["classes"]
        ]
        chars = [
            Character(
                name=ch["name"],
                degree=int(ch["degree"]),
                values={k: parse_cyclotomic(v) for k, v in ch["values"].items()},
            )
            for ch in doc["characters"]
        ]
        return cls(doc["group"], int(doc["order"]), classes, chars)


# -- partial augmentation vectors ---------------------------------------------


@dataclass
class PartialAugmentationVector:
    """Partial augmentations of a hypothetical normalized unit of the given
    order, plus the class distributions of its proper powers (u^d of order
    n/d for each divisor 1 < d < n)."""

    order: int
    entries: dict[str, int]
    powers: dict[int, "PartialAugmentationVector"] = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, PartialAugmentationVector)
            and self.order == other.order
            and {k: v for k, v in self.entries.items() if v}
            == {k: v for k, v in other.entries.items() if v}
            and self.powers == other.powers
        )

    def power(self, d: int) -> "PartialAugmentationVector":
        if self.order % d:
            raise ValueError(f"{d} does not divide the unit order {self.order}")
        if d == 1:
            return self
        if d == self.order:
            raise ValueError("u^n is the identity; its distribution is not stored")
        try:
            return self.powers[d]
        except KeyError:
            raise KeyError(f"missing class distribution for the {d}-th power") from None

    def validate(self, slice_: CharacterTableSlice):
        if self.order < 2:
            raise ValueError("unit order must be at least 2")
        if sum(self.entries.values()) != 1:
            raise ValueError("partial augmentations must sum to 1 (augmentation one)")
        for name, v in self.entries.items():
            c = slice_.cls(name)
            if v and c.order == 1:
                raise ValueError("identity class must have partial augmentation 0")
            if v and self.order % c.order:
                raise ValueError(
                    f"class {name} of order {c.order} cannot support a unit of order {self.order}"
                )
        for d, pa in self.powers.items():
            if d <= 1 or d >= self.order or self.order % d:
                raise ValueError(f"stored power {d} is not a proper divisor of {self.order}")
            if pa.order != self.order // d:
                raise ValueError(f"u^{d} must have order {self.order // d}")
            pa.validate(slice_)
        for d, pa in self.powers.items():
            for e, sub in pa.powers.items():
                if sub != self.powers.get(d * e):
                    raise ValueError(f"incoherent power tower at u^{d * e}")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "entries": {k: v for k, v in sorted(self.entries.items()) if v},
            "powers": {str(d): pa.to_json() for d, pa in sorted(self.powers.items())},
        }


def trivial_pa(slice_: CharacterTableSlice, class_name: str) -> PartialAugmentationVector:
    """The distribution of an actual group element: epsilon = 1 at its class."""
    n = slice_.cls(class_name).order
    powers = {}
    for d in divisors(n):
        if 1 < d < n:
            powers[d] = trivial_pa(slice_, slice_.power_class(class_name, d))
    return PartialAugmentationVector(n, {class_name: 1}, powers)


def chi_of_pa(slice_: CharacterTableSlice, chi: Character, pa: PartialAugmentationVector):
    """chi(u) = sum_g eps_g(u) chi(g)."""
    acc = CyclotomicElement.rational(0)
    for name, e in pa.entries.items():
        if e:
            acc = acc + chi.value(name) * e
    return acc


# -- the multiplicity formula --------------------------------------------------


@dataclass
class LinearForm:
    """const + sum coeffs[v] * v with exact rational coefficients."""

    const: Fraction
    coeffs: dict[str, Fraction]

    def evaluate(self, env: dict[str, int | Fraction]) -> Fraction:
        return self.const + sum(
            (c * Fraction(env.get(v, 0)) for v, c in self.coeffs.items()), Fraction(0)
        )

    def substitute(self, var: str, replacement: "LinearForm") -> "LinearForm":
        if var not in self.coeffs:
            return self
        c = self.coeffs[var]
        coeffs = {v: x for v, x in self.coeffs.items() if v != var}
        for v, x in replacement.coeffs.items():
            coeffs[v] = coeffs.get(v, Fraction(0)) + c * x
        return LinearForm(self.const + c * replacement.const, {v: x for v, x in coeffs.items() if x})

    def scaled(self, f) -> "LinearForm":
        f = Fraction(f)
        return LinearForm(self.const * f, {v: c * f for v, c in self.coeffs.items()})

    def __str__(self):
        parts = [str(self.const)] if self.const or not self.coeffs else []
        for v in sorted(self.coeffs):
            parts.append(f"{self.coeffs[v]}*{v}")
        return " + ".join(parts) if parts else "0"


def multiplicity_form(
    slice_: CharacterTableSlice,
    chi: Character,
    n: int,
    zeta_exponent: int,
    powers: dict[int, PartialAugmentationVector],
) -> LinearForm:
    """mu(zeta_n^l, u, chi) as an affine form in the order-n partial
    augmentations, with the proper-power distributions fixed.

    The divisor-d trace is taken over Q(zeta_{n/d}), where both chi(u^d) and
    zeta^{-d} = zeta_{n/d}^{-l} live.
    """
    l = zeta_exponent % n
    const = Fraction(0)
    for d in divisors(n):
        r = n // d
        if d == n:
            val = CyclotomicElement.rational(chi.degree)
        elif d == 1:
            continue  # the chi(u) term carries the symbolic coefficients below
        else:
            if d not in powers:
                raise KeyError(f"missing class distribution for the {d}-th power")
            val = chi_of_pa(slice_, chi, powers[d])
        const += (val * CyclotomicElement.zeta(r, -l)).trace_over(r)
    coeffs = {}
    for c in slice_.variable_classes(n):
        t = (chi.value(c.name) * CyclotomicElement.zeta(n, -l)).trace_over(n)
        if t:
            coeffs[c.name] = t / n
    return LinearForm(const / n, coeffs)


def lupa_multiplicity(
    slice_: CharacterTableSlice,
    chi_name: str,
    pa: PartialAugmentationVector,
    zeta_exponent: int,
) -> Fraction:
    """Exact multiplicity of zeta_n^zeta_exponent as an eigenvalue of u under
    a representation with the named character; a non-negative integer for a
    genuine unit."""
    chi = slice_.character(chi_name)
    form = multiplicity_form(slice_, chi, pa.order, zeta_exponent, pa.powers)
    return form.evaluate(pa.entries)


# -- congruence constraints -----------------------------------------------------


@dataclass(frozen=True)
class Congruence:
    """sum of the listed partial augmentations == residue (mod modulus)."""

    classes: tuple[str, ...]
    modulus: int
    residue: int

    def satisfied(self, env: dict[str, int]) -> bool:
        return sum(env.get(c, 0) for c in self.classes) % self.modulus == self.residue

    def __str__(self):
        body = " + ".join(f"e_{c}" for c in self.classes) or "0"
        return f"{body} == {self.residue} (mod {self.modulus})"


def congruence_constraints(slice_: CharacterTableSlice, n: int) -> list[Congruence]:
    """For each prime p dividing the group order with p != n: the order-p
    partial augmentations sum to 0 mod p, and the remaining ones to 1 mod p.
    No constraint is emitted at p = n (the congruence requires the unit order
    to differ from p)."""
    out = []
    scope = slice_.variable_classes(n)
    for p, _ in factorint(slice_.group_order):
        if p == n:
            continue
        at_p = tuple(c.name for c in scope if c.order == p)
        away = tuple(c.name for c in scope if c.order != p)
        out.append(Congruence(at_p, p, 0))
        out.append(Congruence(away, p, 1 % p))
    return out


# -- Fourier-Motzkin bounds ------------------------------------------------------


class UnboundedSearchError(Exception):
    """The rational relaxation does not bound some variable; refusing to
    truncate keeps 'infeasible' verdicts sound."""


class SearchComplexityError(Exception):
    """Elimination or enumeration grew past the configured cap; the engine
    reports an inconclusive outcome instead of stalling."""


_FM_ROW_CAP = 50_000


def _int_row(form: LinearForm, variables) -> tuple[int, ...]:
    """(coeffs..., const) scaled to a primitive integer vector."""
    vals = [form.coeffs.get(v, Fraction(0)) for v in variables] + [form.const]
    den = 1
    for x in vals:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


class _Infeasible(Exception):
    pass


def _reduce_row(comb, nvars):
    """Primitive form of an integer row; None for trivially true rows."""
    if all(c == 0 for c in comb[:nvars]):
        if comb[nvars] < 0:
            raise _Infeasible
        return None
    g = 0
    for x in comb:
        g = math.gcd(g, x)
    if g > 1:
        comb = tuple(x // g for x in comb)
    return comb


def fm_bounds(
    ineqs: list[LinearForm], variables: list[str]
) -> dict[str, tuple[Fraction | None, Fraction | None]] | None:
    """Exact min/max of each variable over {x : f(x) >= 0 for all f} by
    Fourier-Motzkin elimination on primitive integer rows.

    Returns None when the system is rationally infeasible; a None endpoint
    marks an unbounded direction.
    """
    nvars = len(variables)
    try:
        base = set()
        for f in ineqs:
            row = _reduce_row(_int_row(f, variables), nvars)
            if row is not None:
                base.add(row)

        def eliminate(rows, idx):
            pos = [r for r in rows if r[idx] > 0]
            neg = [r for r in rows if r[idx] < 0]
            out = {r for r in rows if r[idx] == 0}
            for rp in pos:
                for rn in neg:
                    comb = _reduce_row(
                        tuple(rp[j] * (-rn[idx]) + rn[j] * rp[idx] for j in range(nvars + 1)),
                        nvars,
                    )
                    if comb is not None:
                        out.add(comb)
                if len(out) > _FM_ROW_CAP:
                    raise SearchComplexityError(
                        f"elimination exceeded {_FM_ROW_CAP} rows at {len(variables)} variables"
                    )
            return out

        bounds = {}
        for i, target in enumerate(variables):
            rows = base
            for j in range(nvars):
                if j != i:
                    rows = eliminate(rows, j)
            lo, hi = None, None
            for r in rows:
                c, k = r[i], r[nvars]
                if c > 0:
                    cand = Fraction(-k, c)
                    lo = cand if lo is None else max(lo, cand)
                elif c < 0:
                    cand = Fraction(-k, c)
                    hi = cand if hi is None else min(hi, cand)
            if lo is not None and hi is not None and lo > hi:
                return None
            bounds[target] = (lo, hi)
        return bounds
    except _Infeasible:
        return None


# -- the feasibility engine --------------------------------------------------------


@dataclass
class FeasibilityResult:
    order: int
    variables: list[str]
    status: str  # "infeasible" | "feasible" | "unbounded"
    feasible: list[PartialAugmentationVector]
    bounds: dict[str, tuple[int, int]] | None
    forms: dict[tuple[str, int], LinearForm]
    congruences: list[Congruence]

    @property
    def is_infeasible(self) -> bool:
        return self.status == "infeasible"


def _coherent_power_assignments(n: int, pools: dict[int, list[PartialAugmentationVector]]):
    proper = sorted(pools)
    for choice in itertools.product(*(pools[d] for d in proper)):
        assign = dict(zip(proper, choice))
        ok = True
        for d, pa in assign.items():
            for e, sub in pa.powers.items():
                if assign.get(d * e) != sub:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield assign


def _search(
    slice_: CharacterTableSlice,
    n: int,
    chars: list[Character],
    exponents,
    candidate_cap: int,
) -> tuple[list[PartialAugmentationVector], dict]:
    """Feasible pa trees for a unit of order n; also returns diagnostics from
    the last-analyzed branch (bounds and multiplicity forms)."""
    var_names = [c.name for c in slice_.variable_classes(n)]
    diag: dict = {"bounds": None, "forms": {}}
    if not var_names:
        return [], diag

    proper = [d for d in divisors(n) if 1 < d < n]
    pools = {}
    for d in proper:
        sub, _ = _search(slice_, n // d, chars, None, candidate_cap)
        if not sub:
            return [], diag
        pools[d] = sub

    congs = congruence_constraints(slice_, n)
    diag["congruences"] = congs
    exps = list(range(n)) if exponents is None else [e % n for e in exponents]
    found = []
    for assign in _coherent_power_assignments(n, pools):
        forms = {}
        for chi in chars:
            for l in exps:
                forms[(chi.name, l)] = multiplicity_form(slice_, chi, n, l, assign)
        ineqs = []
        for (chi_name, _), f in forms.items():
            deg = slice_.character(chi_name).degree
            ineqs.append(f)  # mu >= 0
            ineqs.append(LinearForm(Fraction(deg) - f.const, {v: -c for v, c in f.coeffs.items()}))
        aug = LinearForm(Fraction(-1), {v: Fraction(1) for v in var_names})
        ineqs.append(aug)
        ineqs.append(aug.scaled(-1))
        rel = fm_bounds(ineqs, var_names)
        diag["forms"] = forms
        if rel is None:
            continue  # this branch is already rationally infeasible
        if any(lo is None or hi is None for lo, hi in rel.values()):
            raise UnboundedSearchError(
                f"order {n}: no supplied character bounds "
                + ", ".join(v for v, (lo, hi) in rel.items() if lo is None or hi is None)
            )
        int_bounds = {
            v: (math.ceil(lo), math.floor(hi)) for v, (lo, hi) in rel.items()
        }
        diag["bounds"] = int_bounds
        ranges = [range(int_bounds[v][0], int_bounds[v][1] + 1) for v in var_names]
        total = 1
        for r in ranges:
            total *= len(r)
            if total > candidate_cap:
                raise SearchComplexityError(
                    f"order {n}: candidate box exceeds cap {candidate_cap}"
                )
        scaled = []  # (den, const, coeff list, degree): den*mu must be an
        for (chi_name, _), f in forms.items():  # integer multiple of den in [0, deg*den]
            den = 1
            for x in (f.const, *f.coeffs.values()):
                den = den * x.denominator // math.gcd(den, x.denominator)
            scaled.append(
                (den, int(f.const * den),
                 [int(f.coeffs.get(v, Fraction(0)) * den) for v in var_names],
                 slice_.character(chi_name).degree)
            )
        for point in itertools.product(*ranges):
            if sum(point) != 1:
                continue
            env = dict(zip(var_names, point))
            if not all(c.satisfied(env) for c in congs):
                continue
            ok = True
            for den, c0, coeffs, deg in scaled:
                val = c0 + sum(c * x for c, x in zip(coeffs, point))
                if val < 0 or val > deg * den or val % den:
                    ok = False
                    break
            if ok:
                found.append(
                    PartialAugmentationVector(n, {k: v for k, v in env.items() if v}, dict(assign))
                )
    return found, diag


def feasible_partial_augmentations(
    slice_: CharacterTableSlice,
    n: int,
    characters: list[str] | None = None,
    exponents: list[int] | None = None,
    candidate_cap: int = 2_000_000,
) -> FeasibilityResult:
    """Exact feasible set of order-n partial augmentation vectors.

    characters/exponents restrict which multiplicity constraints are imposed
    at the top order (proper powers always use every exponent); fewer
    constraints can only enlarge the feasible set, so an empty answer from a
    subset is already a sound exclusion.
    """
    if n < 2:
        raise ValueError("unit order must be at least 2")
    chars = (
        [slice_.character(c) for c in characters] if characters else list(slice_.characters)
    )
    if not chars:
        raise ValueError("at least one character is required")
    try:
        found, diag = _search(slice_, n, chars, exponents, candidate_cap)
        status = "feasible" if found else "infeasible"
    except UnboundedSearchError:
        found, diag, status = [], {"bounds": None, "forms": {}}, "unbounded"
    except SearchComplexityError:
        found, diag, status = [], {"bounds": None, "forms": {}}, "too-large"
    var_names = [c.name for c in slice_.variable_classes(n)]
    return FeasibilityResult(
        order=n,
        variables=var_names,
        status=status,
        feasible=found,
        bounds=diag.get("bounds"),
        forms=diag.get("forms", {}),
        congruences=diag.get("congruences", congruence_constraints(slice_, n)),
    )


# -- the published order-21 inequality rows ------------------------------------


#: (constant, coefficient) with value (constant + coefficient * eps_3)/21
#: required to be a non-negative integer.
ONAN_ORDER21_ROWS: tuple[tuple[int, int], ...] = ((98493, 312), (98415, 26), (98415, -156))


def onan_inequalities(epsilon3: int, epsilon7: int) -> tuple[bool, bool, bool]:
    """Evaluate the three divisibility-and-nonnegativity conditions exactly."""
    if epsilon3 + epsilon7 != 1:
        raise ValueError("partial augmentations must satisfy eps_3 + eps_7 = 1")
    out = []
    for const, coeff in ONAN_ORDER21_ROWS:
        v = const + coeff * epsilon3
        out.append(v >= 0 and v % 21 == 0)
    return tuple(out)


@dataclass
class InequalityRowsFixture:
    """A HeLP instance given directly by affine rows (constant + coeff*eps)/modulus
    in a single aggregated variable, as published, plus congruences on it."""

    group: str
    unit_order: int
    variable: str
    partner: str
    modulus: int
    rows: tuple[tuple[int, int], ...]
    congruences: tuple[tuple[int, int], ...]  # (modulus, residue) on the variable

    @classmethod
    def from_json(cls, doc: dict) -> "InequalityRowsFixture":
        return cls(
            group=doc["group"],
            unit_order=int(doc["unit_order"]),
            variable=doc["variable"],
            partner=doc["partner"],
            modulus=int(doc["modulus"]),
            rows=tuple((int(a), int(b)) for a, b in doc["rows"]),
            congruences=tuple((int(m), int(r)) for m, r in doc.get("congruences", [])),
        )

    def feasible_points(self, limit: int | None = None) -> list[tuple[int, int]]:
        """All (eps, 1 - eps) satisfying every row and congruence; the row
        non-negativity bounds the search exactly."""
        lo, hi = None, None
        for const, coeff in self.rows:
            if coeff > 0:
                b = math.ceil(Fraction(-const, coeff))
                lo = b if lo is None else max(lo, b)
            elif coeff < 0:
                b = math.floor(Fraction(-const, coeff))
                hi = b if hi is None else min(hi, b)
        if lo is None or hi is None:
            raise UnboundedSearchError("rows do not bound the variable on both sides")
        out = []
        for e in range(lo, hi + 1):
            if any((e - r) % m for m, r in self.congruences):
                continue
            if all(
                (const + coeff * e) >= 0 and (const + coeff * e) % self.modulus == 0
                for const, coeff in self.rows
            ):
                out.append((e, 1 - e))
                if limit is not None and len(out) >= limit:
                    break
        return out
