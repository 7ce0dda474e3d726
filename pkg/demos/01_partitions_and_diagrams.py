"""Partitions, Frobenius coordinates and marked circle diagrams.

Run with:  python3 demos/01_partitions_and_diagrams.py
"""

from nilquiver import (
    Partition,
    frobenius_diagram_of_partition,
    partition_of_frobenius_diagram,
    to_ascii,
    weight_of_diagram,
)

lam = Partition([7, 5, 3, 2, 1])
print(f"partition      {lam}")
print(f"transpose      {lam.transpose()}")

f = lam.frobenius()
print(f"legs           {f.legs}")
print(f"arms           {f.arms}")
print(f"hook sizes     {f.hook_sizes()}")
print(f"roundtrip      {f.partition()}")
print()

# the weight counts boxes of content divisible by ell in the first hook
for ell in (1, 2, 3, 4):
    print(f"weight at ell={ell}: {lam.weight(ell)}")
print()

# each hook becomes a chain marked in block 0; the mark offset is the arm
ell = 3
diagram = frobenius_diagram_of_partition(lam, ell)
print(f"marked circle diagram of {lam} at ell={ell}:")
print(to_ascii(diagram))
print(f"diagram weight: {weight_of_diagram(diagram)} (= partition weight {lam.weight(ell)})")
print(f"back to the partition: {partition_of_frobenius_diagram(diagram)}")
