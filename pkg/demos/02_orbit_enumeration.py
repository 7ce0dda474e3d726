"""Enumerating the orbit labels of a framed cyclic nilpotent cone.

The orbits with dimension vector (1; n, ..., n) are labelled by pairs
(lam; nu): a partition naming the framed indecomposable summand and an
ell-multipartition listing the unframed chain summands by start vertex.

Run with:  python3 demos/02_orbit_enumeration.py
"""

from nilquiver import delta, enumerate_orbit_labels, enumerate_striped

n, ell = 2, 2
labels = enumerate_orbit_labels(n, ell)
print(f"orbit labels for n={n}, ell={ell}:")
for label in labels:
    print(f"  {label}   dims={label.dimension_vector()}")
print(f"total: {len(labels)}")
print()

# the same orbits carry striped-bipartition labels; the counts must agree
striped = enumerate_striped(ell, delta(ell, n))
print(f"striped bipartitions with signature {delta(ell, n)}: {len(striped)}")
print("first few:")
for s in striped[:5]:
    print(f"  lam={s.lam} colours={s.epsilon} marks={s.nu}")
print()

# labels whose chain part is empty correspond to trivial-core partitions
empty_chain = [label.lam for label in labels if all(not c for c in label.nu)]
print(f"framed-only labels (trivial {ell}-core partitions of {n * ell}): {empty_chain}")
