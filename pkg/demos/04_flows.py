"""From configurations to Morse flows on the 3-sphere.

Arrangement classes correspond to gradient-like Morse-Smale flows on S^3
with two sources, two sinks, one saddle of each index, and one saddle
connection per intersection point.  A configuration symmetric under
exchanging the two curves yields one flow; an asymmetric one yields two.
Counting flows per level therefore gives 1, 1, 2, 4, 14.
"""

from circlepairs import count_table, decode, enumerate_up_to, symmetry

rows = count_table(10)
print("points configs symmetric asymmetric flows")
for r in rows:
    print(f"{r.n_points:>6} {r.n_configurations:>7} {r.n_symmetric:>9} {r.n_asymmetric:>10} {r.n_flows:>5}")
print()

level10 = enumerate_up_to(10)[-1]
asym = next(cls for cls in level10.classes if not cls.symmetric)
arr = decode(asym.code)
rep = symmetry(arr)
print("the single asymmetric 10-point class:")
print(" ", asym.gp1)
print(f"  swap automorphism: {rep.has_swap_automorphism}")
print(f"  reflection automorphism: {rep.has_reflection_automorphism}")
print(f"  automorphisms: {rep.automorphism_count}")
print("it contributes two topologically distinct flows, hence 13 + 1 = 14")
