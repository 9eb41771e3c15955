"""First steps: Gauss-pair codes, decoding, faces, and validation.

Two circles on the sphere crossing transversally in 2n points are stored
as a text line: point labels 1..2n along curve 1, the order curve 2
visits them, and a crossing sign per point.
"""

from circlepairs import decode, encode, format_gp1, parse_gp1

# The smallest arrangement: two circles crossing twice (the "lens").
lens = decode(parse_gp1("GP1 2 1 2 + -"))

print("lens:", format_gp1(encode(lens)))
print("points:", lens.n_points, " arcs:", lens.n_arcs, " regions:", len(lens.faces()))
print("face walks (darts):", lens.faces())
print("genus:", lens.genus())
print()
print("validation report:")
print(lens.validate())
print()

# Flipping one sign would break the sphere: the map closes up as a torus.
# decode() refuses it by default; ask for the broken map to inspect why.
torus = decode(parse_gp1("GP1 2 1 2 + +"), require_sphere=False)
print("the (+,+) code is not spherical:")
print(torus.validate())
print()

# A four-point arrangement; every valid arrangement has 2n + 2 regions.
four = decode(parse_gp1("GP1 4 1 2 3 4 + - + -"))
print("4-point arrangement:", format_gp1(encode(four)), "->", len(four.faces()), "regions")
