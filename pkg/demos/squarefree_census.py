"""The squarefree census behind the Lie-type corollaries.

For a prime p, the interesting part of several classical group orders is the
value (p^2+1)(p^2-p+1)(p^2+p+1).  When that number is squarefree, every
relevant prime pair is settled.  This script counts qualifying primes, shows
the Euler-product constant and the Li(x) trend, and cross-checks two
independent counting paths.
"""

from pgq import numtheory as NT

print("census of primes p <= 1000 with (p^2+1)(p^2-p+1)(p^2+p+1) squarefree:")
res = NT.count_N(1000, condition="cor13")
print(f"  {res.count} of {res.total_primes} primes qualify")
bad = [(p, w) for p, ok, w in res.rows if not ok]
print(f"  first failures (p, witness q with q^2 dividing): {bad[:6]}")

print("\nEuler-product constant, exact truncations:")
for bound in (5, 100, 1000, 10000):
    c, shadow = NT.constant_c(bound)
    print(f"  over primes 3 < q <= {bound:>5}: {shadow:.8f} "
          f"(exact {c.numerator}/{c.denominator})" if bound == 5 else
          f"  over primes 3 < q <= {bound:>5}: {shadow:.8f}")

print("\ntrend of N(x) against Li(x) for the full product (x^2+1)(x^6-1):")
for x in (10**3, 10**4, 10**5):
    a = NT.count_N(x, "thm51", "phi-factor")
    b = NT.count_N(x, "thm51", "root-sieve")
    assert a.rows == b.rows, "independent counting paths must agree"
    li_x = NT.li(x)
    print(f"  x = {x:>6}: N = {a.count:>5}, Li(x) = {li_x:12.3f}, N/Li = {a.count/li_x:.4f}")
print("(both a value-factoring path and a residue-sieve path produce each N)")
