"""Partitions, skew tableaux, Littlewood-Richardson counts and gamma statistics.

Partitions are plain tuples of weakly decreasing positive integers.  A skew
tableau is a filled skew diagram outer/inner; row i occupies columns
inner[i]..outer[i]-1 (0-based).  Semistandardness and the lattice property
are checkable predicates, never enforced by construction.

The module also carries the exhaustive verifiers for four combinatorial
inequalities about semistandard lattice skew tableaux, and a brute-force
linear-algebra oracle over GF(p) that recomputes which (submodule, quotient)
partition pairs a nilpotent Jordan module admits, independently of the
Littlewood-Richardson route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(x, int) and x >= 1 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition (weakly decreasing positive parts)")
    return parts


def weight(parts) -> int:
    return sum(parts)


def is_subpartition(mu, lam) -> bool:
    """mu_i <= lam_i for all i, with mu padded by zeros."""
    mu, lam = tuple(mu), tuple(lam)
    if len(mu) > len(lam):
        return all(x == 0 for x in mu[len(lam):]) and is_subpartition(mu[: len(lam)], lam)
    return all(m <= l for m, l in zip(mu, lam))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n == 0:
        return ((),)
    cap = n if max_part is None else min(max_part, n)
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def subpartitions(lam: Partition):
    """All subpartitions of lam (weakly decreasing, componentwise <= lam)."""
    lam = tuple(lam)
    if not lam:
        yield ()
        return

    def rec(i, prev):
        if i == len(lam):
            yield ()
            return
        for v in range(min(prev, lam[i]), -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for mu in rec(0, lam[0]):
        # strip trailing zeros so subpartitions are genuine partitions
        k = len(mu)
        while k and mu[k - 1] == 0:
            k -= 1
        yield mu[:k]


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner; inner must be a subpartition of outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        check_partition(self.outer)
        check_partition(self.inner)
        if not is_subpartition(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not a subpartition of {self.outer}")

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def n_boxes(self) -> int:
        return weight(self.outer) - weight(self.inner)

    def cells(self):
        """(row, col) pairs, row-major."""
        for i, lam in enumerate(self.outer):
            for j in range(self.inner_at(i), lam):
                yield i, j


@dataclass(frozen=True)
class SkewTableau:
    """A skew shape with one positive-integer entry per box (rows left to right)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.shape.outer):
            raise ValueError("one entry tuple per outer row is required")
        for i, row in enumerate(self.rows):
            need = self.shape.outer[i] - self.shape.inner_at(i)
            if len(row) != need:
                raise ValueError(f"row {i} must hold {need} entries, got {len(row)}")
            if any(e < 1 for e in row):
                raise ValueError("entries must be positive integers")

    @classmethod
    def from_rows(cls, outer, inner, rows) -> "SkewTableau":
        return cls(SkewShape(tuple(outer), tuple(inner)), tuple(tuple(r) for r in rows))

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, absolute column j."""
        return self.rows[i][j - self.shape.inner_at(i)]

    def cells_with_entries(self):
        for i, row in enumerate(self.rows):
            off = self.shape.inner_at(i)
            for k, e in enumerate(row):
                yield i, off + k, e

    @property
    def n_boxes(self) -> int:
        return self.shape.n_boxes

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SkewTableau":
        return cls.from_rows(tuple(doc["outer"]), tuple(doc["inner"]), doc["rows"])


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase left to right; columns strictly increase downwards."""
    for row in t.rows:
        if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
            return False
    shape = t.shape
    for i in range(len(t.rows) - 1):
        lo = max(shape.inner_at(i), shape.inner_at(i + 1))
        hi = min(shape.outer[i], shape.outer[i + 1])
        for j in range(lo, hi):
            if t.entry(i, j) >= t.entry(i + 1, j):
                return False
    return True


def reading_word(t: SkewTableau) -> list[int]:
    """Rows top to bottom, each row read right to left."""
    word = []
    for row in t.rows:
        word.extend(reversed(row))
    return word


def is_lattice_word(word) -> bool:
    """Every prefix holds at least as many i as i+1, for every letter i."""
    counts: dict[int, int] = {}
    for e in word:
        counts[e] = counts.get(e, 0) + 1
        if e > 1 and counts[e] > counts.get(e - 1, 0):
            return False
    return True


def has_lattice_property(t: SkewTableau) -> bool:
    return is_lattice_word(reading_word(t))


def content(t: SkewTableau) -> tuple[int, ...]:
    """Letter-count vector (nu_1, nu_2, ...); weakly decreasing whenever the
    tableau satisfies the lattice property, and possibly not otherwise."""
    word = reading_word(t)
    if not word:
        return ()
    top = max(word)
    return tuple(word.count(i) for i in range(1, top + 1))


def gamma(s: int, obj) -> int:
    """Number of parts (partition) or content entries (tableau) of size >= s."""
    if isinstance(obj, SkewTableau):
        obj = content(obj)
    return sum(1 for v in obj if v >= s)


# -- fillings and Littlewood-Richardson counts ------------------------------


def _fillings(shape: SkewShape, max_letter: int, target: Partition | None):
    """Backtrack over semistandard lattice fillings in reading-word order.

    Cells are visited row by row, right to left, so the lattice condition is
    a running prefix check.  target, when given, pins the content exactly.
    """
    cells = []
    for i, lam in enumerate(shape.outer):
        off = shape.inner_at(i)
        cells.extend((i, j) for j in range(lam - 1, off - 1, -1))
    n = len(cells)
    entries: dict[tuple[int, int], int] = {}
    counts = [0] * (max_letter + 2)  # counts[e] = occurrences of e so far

    def rec(k: int):
        if k == n:
            yield {cell: e for cell, e in entries.items()}
            return
        i, j = cells[k]
        right = entries.get((i, j + 1))
        above = entries.get((i - 1, j))
        hi = right if right is not None else max_letter
        for e in range(1, hi + 1):
            if above is not None and e <= above:
                continue
            if e > 1 and counts[e] + 1 > counts[e - 1]:
                continue  # lattice prefix would fail
            if target is not None:
                if e > len(target) or counts[e] + 1 > target[e - 1]:
                    continue
            entries[(i, j)] = e
            counts[e] += 1
            yield from rec(k + 1)
            counts[e] -= 1
            del entries[(i, j)]

    yield from rec(0)


def _cells_to_tableau(shape: SkewShape, cells: dict) -> SkewTableau:
    rows = []
    for i, lam in enumerate(shape.outer):
        off = shape.inner_at(i)
        rows.append(tuple(cells[(i, j)] for j in range(off, lam)))
    return SkewTableau(shape, tuple(rows))


def lr_coefficient(lam, mu, nu) -> int:
    """Number of semistandard lattice fillings of lam/mu with content nu.

    Violated preconditions (weight mismatch, mu not inside lam, nu not a
    partition) yield 0.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not (is_partition(lam) and is_partition(mu) and is_partition(nu)):
        return 0
    if weight(mu) + weight(nu) != weight(lam) or not is_subpartition(mu, lam):
        return 0
    if weight(lam) == weight(mu):
        return 1 if not nu else 0
    shape = SkewShape(lam, mu)
    count = 0
    for cells in _fillings(shape, len(nu), nu):
        if all(list(cells.values()).count(i + 1) == nu[i] for i in range(len(nu))):
            count += 1
    return count


def semistandard_lattice_tableaux(shape: SkewShape):
    """All semistandard lattice fillings of the shape (any content)."""
    for cells in _fillings(shape, shape.n_boxes, None):
        yield _cells_to_tableau(shape, cells)


def enumerate_corpus(max_boxes: int):
    """Deterministic corpus: every semistandard lattice skew tableau whose
    outer partition has weight <= max_boxes and whose first row is nonempty
    (empty leading rows are translated away; larger translates of the same
    diagram re-occur at higher budgets)."""
    for w in range(1, max_boxes + 1):
        for lam in partitions_of(w):
            for mu in subpartitions(lam):
                if weight(mu) == weight(lam):
                    continue
                if mu and mu[0] == lam[0]:
                    continue  # first row empty: same diagram with the row dropped
                yield from semistandard_lattice_tableaux(SkewShape(lam, mu))


# -- the four exhaustively verified inequalities ----------------------------


@dataclass
class VerifierReport:
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": self.violations}


def _check_small_branch(t: SkewTableau) -> list:
    """In w(b), the entry of b occurs at least (boxes right of b in its row)+1 times."""
    bad = []
    word: list[int] = []
    for i, row in enumerate(t.rows):
        for k, e in enumerate(reversed(row)):
            word.append(e)
            ell = k  # boxes strictly to the right of this box in its row
            if word.count(e) < ell + 1:
                bad.append({"tableau": t.to_json(), "row": i, "right_boxes": ell, "entry": e})
    return bad


def _check_full_rectangle(t: SkewTableau) -> list:
    """Every fully contained h x k rectangle forces gamma_k >= h (maximal ones suffice)."""
    bad = []
    shape = t.shape
    nrows = len(shape.outer)
    cont = content(t)
    for r0 in range(nrows):
        lo, hi = shape.inner_at(r0), shape.outer[r0]
        for h in range(1, nrows - r0 + 1):
            i = r0 + h - 1
            lo = max(lo, shape.inner_at(i))
            hi = min(hi, shape.outer[i])
            k = hi - lo
            if k <= 0:
                break
            if gamma(k, cont) < h:
                bad.append({"tableau": t.to_json(), "h": h, "k": k, "gamma_k": gamma(k, cont)})
    return bad


def _column_span(t: SkewTableau) -> tuple[int, int]:
    """(leftmost, rightmost+1) absolute column indices of occupied cells."""
    cols = [
        (t.shape.inner_at(i), t.shape.outer[i])
        for i in range(len(t.shape.outer))
        if t.shape.outer[i] > t.shape.inner_at(i)
    ]
    return min(c for c, _ in cols), max(c for _, c in cols)


def _check_columns_between_lines(t: SkewTableau) -> list:
    """If the first ell-k columns sit between rows c+1..c+h then gamma_{k+1} <= h.

    Checked at the tightest applicable (c, h) for each k (weaker pairs follow);
    k = 0 is included since a tableau inside h rows must have gamma_1 <= h.
    """
    bad = []
    left, right = _column_span(t)
    ell = right - left
    cont = content(t)
    for k in range(0, ell + 1):
        cut = left + (ell - k)  # columns < cut are "the first ell-k columns"
        rows_touched = [i for i, j, _ in t.cells_with_entries() if j < cut]
        if rows_touched:
            h = max(rows_touched) - min(rows_touched) + 1
        else:
            h = 1  # vacuous hypothesis: holds for every h >= 1, so test the strongest
        if gamma(k + 1, cont) > h:
            bad.append(
                {"tableau": t.to_json(), "k": k, "h": h, "gamma": gamma(k + 1, cont)}
            )
    return bad


class _EmptyTableau:
    """Stand-in for the empty tableau produced by a full vertical cut."""

    rows: tuple = ()
    n_boxes = 0

    @staticmethod
    def to_json():
        return {"outer": [], "inner": [], "rows": []}


_EMPTY = _EmptyTableau()


def split_at_column(t: SkewTableau, k: int):
    """The part strictly right of the first k geometric columns, re-rooted."""
    left, _ = _column_span(t)
    cut = left + k
    outer, inner, rows = [], [], []
    for i, lam in enumerate(t.shape.outer):
        off = t.shape.inner_at(i)
        if lam - cut <= 0:
            continue
        outer.append(lam - cut)
        inner.append(max(off - cut, 0))
        rows.append(tuple(t.entry(i, j) for j in range(max(off, cut), lam)))
    while inner and inner[-1] == 0:
        inner.pop()
    if not outer:
        return _EMPTY
    return SkewTableau.from_rows(tuple(outer), tuple(inner), rows)


def _check_divided_tableau(t: SkewTableau) -> list:
    """Cutting off the left k columns leaves a semistandard lattice tableau T'
    with gamma_{n+k}(T) <= gamma_n(T') for every n."""
    bad = []
    left, right = _column_span(t)
    ell = right - left
    cont = content(t)
    for k in range(0, ell + 1):
        right_part = split_at_column(t, k)
        if isinstance(right_part, _EmptyTableau):
            cont_r: tuple[int, ...] = ()
        else:
            if not (is_semistandard(right_part) and has_lattice_property(right_part)):
                bad.append({"tableau": t.to_json(), "k": k, "reason": "right part not SSLT"})
                continue
            cont_r = content(right_part)
        for n in range(1, t.n_boxes + 2):
            if gamma(n + k, cont) > gamma(n, cont_r):
                bad.append(
                    {"tableau": t.to_json(), "k": k, "n": n,
                     "lhs": gamma(n + k, cont), "rhs": gamma(n, cont_r)}
                )
    return bad


def _run_verifier(max_boxes: int, check) -> VerifierReport:
    if max_boxes > 12:
        raise ValueError("enumeration budget capped at 12 boxes")
    checked = 0
    violations = []
    for t in enumerate_corpus(max_boxes):
        checked += 1
        violations.extend(check(t))
    return VerifierReport(checked, violations)


def verify_lemma_small_branch(max_boxes: int) -> VerifierReport:
    return _run_verifier(max_boxes, _check_small_branch)


def verify_lemma_full_rectangle(max_boxes: int) -> VerifierReport:
    return _run_verifier(max_boxes, _check_full_rectangle)


def verify_lemma_columns_between_lines(max_boxes: int) -> VerifierReport:
    return _run_verifier(max_boxes, _check_columns_between_lines)


def verify_lemma_divided_tableau(max_boxes: int) -> VerifierReport:
    return _run_verifier(max_boxes, _check_divided_tableau)


ALL_VERIFIERS = {
    "small-branch": verify_lemma_small_branch,
    "full-rectangle": verify_lemma_full_rectangle,
    "columns-between-lines": verify_lemma_columns_between_lines,
    "divided-tableau": verify_lemma_divided_tableau,
}


# -- module partitions and the submodule/quotient criterion ------------------


@dataclass(frozen=True)
class ModulePartition:
    """Isomorphism type of a module over a cyclic group of order p in
    characteristic p: the multiset of indecomposable summand dimensions,
    every part at most p."""

    p: int
    parts: Partition

    def __post_init__(self):
        if self.p < 3 or any(self.p % d == 0 for d in range(2, self.p)):
            raise ValueError(f"{self.p} is not an odd prime")
        check_partition(self.parts) if self.parts else None
        if any(x > self.p for x in self.parts):
            raise ValueError(f"parts of {self.parts} must be at most p={self.p}")

    @property
    def dim(self) -> int:
        return weight(self.parts)


def submodule_quotient_exists(m: ModulePartition, u: ModulePartition, q: ModulePartition) -> bool:
    """Whether a module of type m has a submodule of type u with quotient of
    type q; decided by non-vanishing of the corresponding LR coefficient.
    Weight mismatch is answered False."""
    if not (m.p == u.p == q.p):
        raise ValueError("module partitions must share the same prime")
    if u.dim + q.dim != m.dim:
        return False
    return lr_coefficient(m.parts, u.parts, q.parts) > 0


# -- independent Jordan oracle over GF(p) ------------------------------------


def _jordan_matrix(p: int, parts: Partition) -> tuple[tuple[int, ...], ...]:
    """Nilpotent N = c - 1 acting on a module of the given type: Jordan blocks
    of the listed sizes, all eigenvalue 0, over GF(p)."""
    d = sum(parts)
    rows = [[0] * d for _ in range(d)]
    off = 0
    for size in parts:
        for i in range(size - 1):
            rows[off + i][off + i + 1] = 1
        off += size
    return tuple(tuple(r) for r in rows)


def _mat_mul(a, b, p):
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m)) for i in range(n)
    )


def _rank(rows, p) -> int:
    mat = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


@lru_cache(maxsize=None)
def _rref_bases(p: int, d: int) -> tuple:
    """Every subspace of GF(p)^d exactly once, as the rows of its RREF basis."""
    out = [()]
    for k in range(1, d + 1):
        for pivots in itertools.combinations(range(d), k):
            free = []
            for r in range(k):
                cols = [
                    c
                    for c in range(pivots[r] + 1, d)
                    if c not in pivots[r + 1:] and c not in pivots
                ]
                free.append(cols)
            slots = [(r, c) for r in range(k) for c in free[r]]
            for vals in itertools.product(range(p), repeat=len(slots)):
                basis = [[0] * d for _ in range(k)]
                for r in range(k):
                    basis[r][pivots[r]] = 1
                for (r, c), v in zip(slots, vals):
                    basis[r][c] = v
                out.append(tuple(tuple(r) for r in basis))
    return tuple(out)


def _vec_in_span(v, rref_rows, pivots, p) -> bool:
    v = list(v)
    for row, pc in zip(rref_rows, pivots):
        if v[pc]:
            f = v[pc]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return not any(v)


def _jordan_type_from_ranks(dim: int, ranks: list[int], p: int) -> Partition:
    """Recover block sizes from ranks of N^1..N^p on the space."""
    ranks = [dim] + ranks  # rank of N^0
    ge = [ranks[s - 1] - ranks[s] for s in range(1, p + 1)]  # blocks of size >= s
    parts = []
    for s in range(p, 0, -1):
        mult = ge[s - 1] - (ge[s] if s < p else 0)
        parts.extend([s] * mult)
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def jordan_submodule_quotient_pairs(p: int, parts: Partition) -> frozenset:
    """Brute-force: all (submodule type, quotient type) pairs realized by
    N-invariant subspaces of the Jordan module of the given type over GF(p).

    Exponential in the dimension; intended for p = 3 and dim <= 6.
    """
    mod = ModulePartition(p, parts)
    d = mod.dim
    if d == 0:
        return frozenset({((), ())})
    n_mat = _jordan_matrix(p, parts)
    powers = [n_mat]
    for _ in range(p - 1):
        powers.append(_mat_mul(powers[-1], n_mat, p))
    pairs = set()
    for basis in _rref_bases(p, d):
        k = len(basis)
        pivots = [next(c for c in range(d) if row[c]) for row in basis]
        invariant = all(
            _vec_in_span([sum(row[t] * n_mat[t][j] for t in range(d)) % p for j in range(d)],
                         basis, pivots, p)
            for row in basis
        )
        if not invariant:
            continue
        sub_ranks = [_rank(_mat_mul(basis, pw, p), p) if k else 0 for pw in powers]
        sub_type = _jordan_type_from_ranks(k, sub_ranks, p)
        quo_ranks = [
            _rank(tuple(pw) + tuple(basis), p) - k if k else _rank(pw, p) for pw in powers
        ]
        quo_type = _jordan_type_from_ranks(d - k, quo_ranks, p)
        pairs.add((sub_type, quo_type))
    return frozenset(pairs)


def jordan_chain_realizable(p: int, m: Partition, steps: tuple[Partition, ...], t: Partition) -> bool:
    """Whether m admits a chain of invariant submodules of the listed types
    with final quotient t, per the brute-force oracle."""
    if not steps:
        return tuple(m) == tuple(t)
    pairs = jordan_submodule_quotient_pairs(p, tuple(m))
    return any(
        quo is not None and jordan_chain_realizable(p, quo, steps[1:], t)
        for sub, quo in pairs
        if sub == tuple(steps[0])
    )
