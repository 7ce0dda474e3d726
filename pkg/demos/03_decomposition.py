"""Building representations and decomposing them back, exactly.

A representation of the framed cyclic quiver is a matrix per arrow plus a
framing vector.  Decomposition recovers the unframed chain summands from
ranks of path composites and certifies the framed summand through hom
dimensions; everything runs over exact rationals, so the recovered label
is certain, not approximate.

Run with:  python3 demos/03_decomposition.py
"""

import random

from nilquiver import (
    Multipartition,
    OrbitLabel,
    Partition,
    build_chain,
    build_framed,
    build_label_rep,
    decompose_enhanced,
    direct_sum,
    random_base_change,
)

# assemble a representation summand by summand
rep = direct_sum(build_framed(Partition([4, 2]), 1), build_chain(0, 3, 1))
print("dims:", rep.dims)
out = decompose_enhanced(rep)
print("decomposition:", out)
print()

# the label survives an invertible change of basis at every vertex
label = OrbitLabel(
    Partition([2, 1]),
    Multipartition((Partition([2]), Partition([1, 1]), Partition())),
)
rep = build_label_rep(label)
rng = random.Random(1)
moved = random_base_change(rep, rng)
print("original label:   ", label)
print("after base change:", decompose_enhanced(moved).label())
print()

# the arrow matrices of the conjugated representation are dense rationals
print("one conjugated arrow matrix:")
for row in moved.maps[0].rows:
    print("  ", [str(x) for x in row])
