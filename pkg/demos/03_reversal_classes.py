# # Cycle and cocycle reversal classes
#
# Reversing a directed cycle or an (A,B)-cocycle of a valid fourientation gives
# another valid one with the same solid set. The move graph splits the valid
# fourientations into classes.

from fourientations import ConstraintSystem, Multigraph, equivalence_classes, filter_valid_classes, verify_theorem_eqclass_all
from fourientations.graph import mask_to_set

# A triangle with one side doubled and a single B pair.
g = Multigraph(3, ((0, 1), (0, 2), (1, 2), (1, 2)))
c = ConstraintSystem(B=((0, 1),))

for mode in ("cyc", "coc", "cc"):
    p = equivalence_classes(g, c, 0, mode)
    print(f"{mode}: {len(p.members)} valid orientations in {len(p)} classes")
    for info in p.classes:
        print("   ", info.representative, "size", info.size)

# With solid edges some classes are discarded: those with an all-2-way cycle
# (cycle moves) or an all-0-way cut (cocycle moves).
p = equivalence_classes(g, c, 0b1100, "cc")
kept = filter_valid_classes(p, g, c)
print(f"solid edges {sorted(mask_to_set(0b1100))}: {len(p)} classes, {len(kept)} kept")

for mode, report in verify_theorem_eqclass_all(g, c).items():
    print(mode.value, "kept classes per solid set:", sorted(set(report.counts.values())))
