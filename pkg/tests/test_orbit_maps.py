import itertools

import pytest

from nilquiver import (
    CircleDiagram,
    DimensionVector,
    Multipartition,
    OrbitLabel,
    Partition,
    StripedBipartition,
    bipartition_as_striped,
    bipartition_to_label,
    column_residue,
    delta,
    diagrams_of_label,
    enumerate_bipartitions,
    enumerate_orbit_labels,
    enumerate_partitions,
    enumerate_striped,
    frobenius_diagram_of_partition,
    label_of_diagrams,
    label_to_bipartition,
    removable_rows,
    removable_rows_cyclic,
    signature,
    striped_from_label,
    striped_label,
    striped_to_diagrams,
)

P = Partition

TRANSLATION_TABLE_N3 = [
    (([3], []), ([1, 1, 1], [])),
    (([2, 1], []), ([1, 1], [1])),
    (([1, 1, 1], []), ([1], [1, 1])),
    (([2], [1]), ([2, 1], [])),
    (([1, 1], [1]), ([1], [2])),
    (([1], [2]), ([3], [])),
    (([1], [1, 1]), ([2], [1])),
    (([], [3]), ([], [3])),
    (([], [2, 1]), ([], [2, 1])),
    (([], [1, 1, 1]), ([], [1, 1, 1])),
]

BIG_ROW_DATA = dict(
    lam=(16, 14, 13, 11, 9, 6, 5, 5, 2),
    eps=(0, 2, 0, 1, 3, 0, 2, 2, 0),
    marks=(8, 4, 5, 4, 0, 2, 3, 3, -2),
)


def big_striped():
    return StripedBipartition(
        4, P(BIG_ROW_DATA["lam"]), BIG_ROW_DATA["eps"], BIG_ROW_DATA["marks"]
    )


def test_removable_rows_examples():
    assert removable_rows(P([4, 4, 3, 1]), P([3, 2, 2])) == frozenset({1, 3})
    assert removable_rows(P([2, 1]), P([])) == frozenset({2})
    assert removable_rows(P([]), P([3])) == frozenset({1})


def test_removable_rows_rejects_non_partition_sum():
    with pytest.raises(ValueError):
        removable_rows(P([1, 1]), P([0, 3]))


def test_translation_table_n3():
    for (mu, nu), (eta, zeta) in TRANSLATION_TABLE_N3:
        assert bipartition_to_label(P(mu), P(nu)) == (P(eta), P(zeta))


def test_translation_big_example():
    eta, zeta = bipartition_to_label(P([4, 4, 3, 1]), P([3, 2, 2]))
    assert zeta == P([7, 5])
    assert eta == P([3, 2, 1, 1])
    assert eta.size + zeta.size == 19


def test_translation_size_conservation_and_bijectivity():
    for n in range(9):
        bps = enumerate_bipartitions(n)
        images = set()
        for bp in bps:
            eta, zeta = bipartition_to_label(bp.first, bp.second)
            assert eta.size + zeta.size == n
            images.add((eta, zeta))
        # injective, hence bijective onto pairs of total size n
        assert len(images) == len(bps)


def test_inverse_translation():
    assert label_to_bipartition(P([1, 1]), P([1])) == (P([2, 1]), P([]))
    assert label_to_bipartition(P([]), P([3])) == (P([]), P([3]))
    assert label_to_bipartition(P([2]), P([1])) == (P([1]), P([1, 1]))
    # the translation is a bijection, so inverting the forward map succeeds
    for n in range(7):
        for bp in enumerate_bipartitions(n):
            eta, zeta = bipartition_to_label(bp.first, bp.second)
            assert label_to_bipartition(eta, zeta) == (bp.first, bp.second)


def test_striped_validation():
    with pytest.raises(ValueError):  # mark outside block 0
        StripedBipartition(2, P([2]), (1,), (2,))
    with pytest.raises(ValueError):  # marking below -ell
        StripedBipartition(2, P([4]), (0,), (-2,))
    with pytest.raises(ValueError):  # ordering violated
        StripedBipartition(1, P([2, 2]), (0, 0), (0, 2))
    s = StripedBipartition(2, P([2]), (0,), (2,))
    assert s.mu == (0,)


def test_signature_examples():
    assert signature(P([1]), (0,), 2).main == (1, 0)
    assert signature(P([3]), (1,), 2).main == (1, 2)
    s = big_striped()
    # independent box-count oracle over the coloured diagram
    counts = [0] * 4
    for part, colour in zip(BIG_ROW_DATA["lam"], BIG_ROW_DATA["eps"]):
        for j in range(1, part + 1):
            counts[(colour + part - j) % 4] += 1
    assert s.signature().main == tuple(counts) == (20, 20, 21, 20)


def test_removable_rows_cyclic_big_example():
    assert removable_rows_cyclic(big_striped()) == frozenset({2, 3, 5, 6, 8, 9})


def test_removable_rows_cyclic_trivial_cases():
    # single marked row: nothing to remove
    s = StripedBipartition(2, P([2]), (0,), (2,))
    assert removable_rows_cyclic(s) == frozenset()
    # unmarked row is removable
    s = StripedBipartition(2, P([2]), (0,), (0,))
    assert removable_rows_cyclic(s) == frozenset({1})


def test_cyclic_shadow_of_one_vertex_translation():
    # encoding a bipartition as a striped object gives the same final label
    for n in range(6):
        for bp in enumerate_bipartitions(n):
            eta, zeta = bipartition_to_label(bp.first, bp.second)
            s = bipartition_as_striped(bp.first, bp.second)
            label = striped_label(s)
            assert label == OrbitLabel(eta, Multipartition((zeta,)))


def test_striped_to_diagrams_big_example():
    frob, circ = striped_to_diagrams(big_striped())
    assert frob.circles == ((16, 8), (11, 7), (5, 2))
    assert frob.starts() == (0, 1, 2)
    # marked positions counted from the end of each chain
    assert tuple(p - o for p, o in frob.circles) == (8, 4, 3)
    assert circ.circles == CircleDiagram(
        4, ((2, 14), (0, 13), (3, 9), (0, 6), (2, 5), (0, 2))
    ).circles
    label = label_of_diagrams(frob, circ)
    assert label.lam == P([9, 9, 5, 3, 3, 1, 1, 1])


def test_striped_to_diagrams_single_fully_marked_row():
    for ell in (1, 2, 3):
        s = StripedBipartition(ell, P([ell]), (0,), (ell,))
        frob, circ = striped_to_diagrams(s)
        assert circ.circles == ()
        assert frob.circles == ((ell, 0),)
        # one-column partition of weight one
        assert label_of_diagrams(frob, circ).lam == P([1] * ell)


def test_label_of_diagrams_examples():
    frob = frobenius_diagram_of_partition(P([6, 4, 4, 2]), 4)
    circ = CircleDiagram(4, ((1, 3), (0, 2)))
    label = label_of_diagrams(frob, circ)
    assert label.lam == P([6, 4, 4, 2])
    assert [c.parts for c in label.nu] == [(2,), (3,), (), ()]
    # single marked vertex and no plain circles
    frob = frobenius_diagram_of_partition(P([1]), 3)
    label = label_of_diagrams(frob, CircleDiagram(3, ()))
    assert label.lam == P([1]) and label.nu.size == 0


def test_label_diagram_roundtrip():
    for label in enumerate_orbit_labels(2, 2):
        frob, circ = diagrams_of_label(label)
        assert label_of_diagrams(frob, circ) == label


def test_enumerate_striped_counts():
    # one-vertex case: bipartitions
    assert len(enumerate_striped(1, DimensionVector(0, (3,)))) == 10
    assert len(enumerate_striped(2, DimensionVector(0, (0, 0)))) == 1
    for n, ell in [(1, 2), (2, 2), (1, 3), (3, 1), (4, 1)]:
        striped = enumerate_striped(ell, delta(ell, n))
        labels = enumerate_orbit_labels(n, ell)
        assert len(striped) == len(labels)


def test_striped_label_is_a_bijection_at_fixed_signature():
    for ell in (1, 2):
        for main in itertools.product(range(3), repeat=ell):
            xi = DimensionVector(0, main)
            striped = enumerate_striped(ell, xi)
            labels = {striped_label(s) for s in striped}
            assert len(labels) == len(striped)
            for label in labels:
                assert label.dimension_vector().main == main
            # independent census of the labels with this dimension vector
            total = sum(main)
            count = 0
            for m in range(total + 1):
                for lam in enumerate_partitions(m):
                    cr = column_residue(lam, ell)
                    if not xi.dominates(cr):
                        continue
                    rest = tuple(a - b for a, b in zip(main, cr.main))
                    from nilquiver.residues import _fill_with_chains

                    count += sum(1 for _ in _fill_with_chains(rest, 0, ell))
            assert count == len(labels)


def test_striped_from_label_roundtrip():
    for n, ell in [(1, 2), (2, 2)]:
        for label in enumerate_orbit_labels(n, ell):
            s = striped_from_label(label)
            assert striped_label(s) == label


def test_striped_json_roundtrip():
    s = big_striped()
    assert StripedBipartition.from_json(s.to_json(), 4) == s
