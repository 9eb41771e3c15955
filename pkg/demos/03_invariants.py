"""Region invariants: checkerboard colouring, adjacency matrix, defining vectors.

The regions of an arrangement 2-colour like a checkerboard, so region
adjacency is a bipartite graph with one edge per arc, signed +1/-1 by
curve.  Row and column sums vanish, and the sorted degree sequences of
the two colour classes (the defining vectors) separate most classes
cheaply.
"""

from circlepairs import decode, defining_vectors, enumerate_up_to, region_graph

levels = enumerate_up_to(8)

for level in levels:
    print(f"=== {level.n_points} intersection points ===")
    for i, cls in enumerate(level.classes, start=1):
        arr = decode(cls.code)
        graph = region_graph(arr)
        vectors = defining_vectors(graph)
        print(f"class {i}: {cls.gp1}")
        print(f"  regions={graph.n_regions} arcs={arr.n_arcs} vectors {vectors}")
        if graph.matrix is None:
            print("  (matrix withheld: two regions share several arcs)")
        else:
            for row in graph.matrix:
                print("   " + " ".join(f"{x:+2d}" for x in row))
    print()

# how far do the vectors go as a separating invariant at 10 points?
level10 = enumerate_up_to(10)[-1]
groups = {}
for cls in level10.classes:
    vec = defining_vectors(region_graph(decode(cls.code))).key()
    groups.setdefault(vec, []).append(cls)
print("vector groups at 10 points (13 classes):")
for vec, members in sorted(groups.items()):
    black, white = vec
    print(f"  {black}/{white}: {len(members)} class(es)")
print("groups with several classes need the full canonical key to separate")
