"""Signed Brauer trees in action on the bundled tables.

The alternating character sum vanishes on classes of order prime to the
block prime; the main eigenvalue inequality holds at genuine units for every
root-of-unity shift; subtrees yield two-sided bounds on the gamma statistics
of the edge modules; and the order/spectrum profile decides prime pairs.
"""

from pgq import brauer, fixtures
from pgq import helpmethod as H

slice_ = fixtures.load_slice("s5")
tree = fixtures.load_tree("tree_s5_p5")
print("principal block of the symmetric group on 5 points at p = 5:")
print("  vertices:", [(v.name, v.sign) for v in tree.vertices])

from pgq.cyclotomic import CyclotomicElement

for cl in slice_.classes:
    if cl.order % 5:
        values = {v.name: slice_.character(v.characters[0]).value(cl.name)
                  for v in tree.vertices}
        z = brauer.signed_vertex_sum(tree, values)
        print(f"  signed sum at class {cl.name} (order {cl.order}): {z.to_rational()}")

print("\nmain inequality at the genuine order-6 element, block prime 3:")
tree3 = fixtures.load_tree("tree_s5_p3")
pa = H.trivial_pa(slice_, "6a")
for xi in (0, 1):
    a = brauer.assignment_from_table(slice_, tree3, pa, xi)
    holds, slack = brauer.main_inequality_holds(tree3, a)
    print(f"  xi = (-1)^{xi}: holds = {holds}, slack = {slack}")

print("\ngamma bounds from the two sides of edge D1 of the p=3 tree:")
a = brauer.assignment_from_table(slice_, tree3, pa, 0)
for side in ("triv", "v_five"):
    for b in brauer.gamma_bounds(tree3, "D1", a, side):
        rel = ">=" if b.kind == "lower" else "<="
        print(f"  from side {side}: gamma_{b.s}(D1) {rel} {b.value}")

print("\nprime-pair verdicts from order and spectrum alone:")
for name in ("profile_thompson", "profile_monster"):
    report = brauer.group_verdict_table(fixtures.load_profile(name))
    print(f"  {report.group}: open pairs {report.open_pairs or 'none'}")
