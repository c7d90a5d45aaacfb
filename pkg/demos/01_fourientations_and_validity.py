# # Fourientations and reachability constraints
#
# A fourientation picks one of four states for every edge: 0-way, forward,
# backward or 2-way. Here we look at a triangle and ask which of its
# orientations survive a pair of "v must reach u" requirements.

from fourientations import ConstraintSystem, EdgeConfig, Fourientation, Multigraph, augment, is_valid, iterate_fourientations

triangle = Multigraph(3, ((0, 1), (1, 2), (0, 2)))

phi = Fourientation(triangle, (EdgeConfig.FORWARD, EdgeConfig.TWO_WAY, EdgeConfig.ZERO_WAY))
print("a mixed fourientation:", phi, "solid edges:", sorted(phi.solid_edges))

# B pairs ask that the second vertex reach the first once the pair itself is
# added as an arc; A pairs ask that it cannot.
c = ConstraintSystem(B=((0, 1),))
print("augmented arcs:", [(a.tail, a.head, a.label[0]) for a in augment(phi, c).arcs])

for phi in iterate_fourientations(triangle, s=0):
    print(phi, "valid" if is_valid(phi, c) else "-")

# The same count shows up for every choice of solid edges.
for s in range(8):
    n = sum(is_valid(phi, c) for phi in iterate_fourientations(triangle, s))
    print(f"solid mask {s:03b}: {n} valid")
