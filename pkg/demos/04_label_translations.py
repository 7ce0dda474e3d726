"""Translating between the three orbit labellings.

One-vertex orbits carry a normal-form bipartition (mu; nu): the Jordan
matrix has type mu + nu and row i is marked in column mu_i.  Deleting the
removable rows translates this into the canonical label.  The cyclic
analogue starts from a striped bipartition (coloured rows plus a marking
function).

Run with:  python3 demos/04_label_translations.py
"""

from nilquiver import (
    Partition,
    StripedBipartition,
    bipartition_to_label,
    label_to_bipartition,
    removable_rows,
    removable_rows_cyclic,
    striped_label,
    striped_to_diagrams,
)

mu, nu = Partition([4, 4, 3, 1]), Partition([3, 2, 2])
print(f"bipartition ({mu};{nu})")
print(f"removable rows: {sorted(removable_rows(mu, nu))}")
eta, zeta = bipartition_to_label(mu, nu)
print(f"canonical label: ({eta};{zeta})")
print(f"inverse: {label_to_bipartition(eta, zeta)}")
print()

s = StripedBipartition(
    4,
    Partition([16, 14, 13, 11, 9, 6, 5, 5, 2]),
    (0, 2, 0, 1, 3, 0, 2, 2, 0),
    (8, 4, 5, 4, 0, 2, 3, 3, -2),
)
print(f"striped rows (length, colour, marked column): {s.rows()}")
print(f"removable rows: {sorted(removable_rows_cyclic(s))}")
frob, circ = striped_to_diagrams(s)
print(f"surviving marked circles (length, mark offset): {frob.circles}")
print(f"removed plain circles (start, length): {circ.circles}")
print(f"canonical label: {striped_label(s)}")
