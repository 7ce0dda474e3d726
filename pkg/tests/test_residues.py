import pytest

from nilquiver import (
    DimensionVector,
    Multipartition,
    OrbitLabel,
    Partition,
    chain_allowed,
    column_residue,
    delta,
    dim_chain,
    dim_framed,
    ell_quotient_core,
    enumerate_orbit_labels,
    enumerate_partitions,
    enumerate_striped,
    from_core_quotient,
    residue,
    shifted_residue,
    zero_hits,
)


def content_counts(lam, ell):
    """Independent residue oracle: walk the boxes and bucket the contents."""
    counts = [0] * ell
    for i, p in enumerate(lam.parts, 1):
        for j in range(1, p + 1):
            counts[(j - i) % ell] += 1
    return tuple(counts)


def mp(ell, *comps):
    return Multipartition(tuple(Partition(c) for c in comps) or tuple(Partition() for _ in range(ell)))


def test_dimension_vector_basics():
    v = DimensionVector(1, (2, 0, 1))
    assert str(v) == "(1; 2,0,1)"
    assert v.shift(1).main == (1, 2, 0)
    assert DimensionVector.from_json(v.to_json()) == v
    with pytest.raises(ValueError):
        DimensionVector(2, (1,))
    with pytest.raises(ValueError):
        DimensionVector(0, (1, -1))


def test_residue_examples():
    assert residue(Partition([2, 1]), 2).main == (1, 2)
    assert residue(Partition([7, 5, 3, 2, 1]), 1).main == (18,)
    assert residue(Partition([]), 3).main == (0, 0, 0)


def test_residue_matches_box_oracle_and_sums_to_size():
    for n in range(11):
        for lam in enumerate_partitions(n):
            for ell in (1, 2, 3, 4, 5):
                r = residue(lam, ell)
                assert r.main == content_counts(lam, ell)
                assert r.total == n


def test_column_residue_is_residue_of_transpose():
    for n in range(10):
        for lam in enumerate_partitions(n):
            for ell in (2, 3, 4):
                assert column_residue(lam, ell) == residue(lam.transpose(), ell)


def test_shifted_residue_examples():
    assert shifted_residue(mp(2, (1,), ()), 2).main == (1, 0)
    assert shifted_residue(mp(2, (), (1,)), 2).main == (0, 1)
    assert shifted_residue(mp(2, (2,), (1,)), 2).main == (1, 2)


def test_shifted_residue_counts_chain_vertices():
    # each part of component i is a run starting at vertex i
    nu = mp(2, (1, 1), ())
    assert shifted_residue(nu, 2).main == (2, 0)
    nu = mp(3, (4,), (2,), (1, 1))
    want = [0, 0, 0]
    for i, parts in enumerate([(4,), (2,), (1, 1)]):
        for length in parts:
            for k in range(length):
                want[(i + k) % 3] += 1
    assert shifted_residue(nu, 3).main == tuple(want)


def test_dim_chain_examples():
    assert dim_chain(0, 3, 3).main == (1, 1, 1)
    assert dim_chain(2, 10, 4).main == (2, 2, 3, 3)
    assert dim_chain(0, 1, 3).main == (1, 0, 0)
    # brute-force walk oracle
    for ell in (1, 2, 3, 4):
        for i in range(ell):
            for length in range(1, 12):
                walk = [0] * ell
                for k in range(length):
                    walk[(i + k) % ell] += 1
                assert dim_chain(i, length, ell).main == tuple(walk)


def test_dim_framed_examples():
    assert dim_framed(Partition([1]), 2) == DimensionVector(1, (1, 0))
    assert dim_framed(Partition([7, 5, 3, 2, 1]), 1) == DimensionVector(1, (18,))
    assert dim_framed(Partition([2, 1]), 2) == DimensionVector(1, (1, 2))


def test_zero_hits_and_chain_bound():
    assert zero_hits(2, 10, 4) == 2
    assert chain_allowed(2, 10, 4, 2)
    assert not chain_allowed(2, 10, 4, 1)
    assert chain_allowed(0, 1, 5, 1)
    for ell in (1, 2, 3):
        for x in (1, 2):
            # one extra pass through vertex 0 breaks the bound
            assert not chain_allowed(0, ell * x + 1, ell, x)


def test_orbit_label_dimension_and_json():
    label = OrbitLabel(Partition([2]), mp(2, (), (1,)))
    assert label.dimension_vector() == DimensionVector(1, (1, 2))
    assert OrbitLabel.from_json(label.to_json()) == label


def test_enumerate_orbit_labels_small():
    labels = enumerate_orbit_labels(1, 1)
    assert len(labels) == 2
    assert {str(l) for l in labels} == {"([1];([]))", "([];([1]))"}
    assert len(enumerate_orbit_labels(3, 1)) == 10
    assert len(enumerate_orbit_labels(0, 2)) == 1


def test_enumerate_orbit_labels_satisfy_the_residue_equation():
    for n, ell in [(1, 2), (2, 2), (1, 3)]:
        labels = enumerate_orbit_labels(n, ell)
        assert len(labels) == len(set(labels))
        for label in labels:
            assert label.dimension_vector().main == delta(ell, n).main
        # completeness against an independent filter over the search bound
        brute = 0
        for m in range(n * ell + 1):
            for lam in enumerate_partitions(m):
                cr = column_residue(lam, ell)
                if not delta(ell, n).dominates(cr):
                    continue
                need = tuple(n - c for c in cr.main)
                brute += sum(
                    1
                    for label in labels
                    if label.lam == lam and shifted_residue(label.nu, ell).main == need
                )
        assert brute == len(labels)


def test_label_count_matches_striped_count():
    for n, ell in [(1, 2), (2, 2), (1, 3)]:
        assert len(enumerate_orbit_labels(n, ell)) == len(
            enumerate_striped(ell, delta(ell, n))
        )


def test_core_quotient_examples():
    core, quotient = ell_quotient_core(Partition([1]), 2)
    assert core == Partition([1])
    assert all(not c for c in quotient)
    core, quotient = ell_quotient_core(Partition([2]), 2)
    assert core == Partition([])
    assert quotient.size == 1
    for ell in (2, 3, 4):
        core, _ = ell_quotient_core(Partition([ell]), ell)
        assert core == Partition([])


def test_core_quotient_size_and_roundtrip():
    for n in range(13):
        for lam in enumerate_partitions(n):
            for ell in (2, 3, 4):
                core, quotient = ell_quotient_core(lam, ell)
                assert core.size + ell * quotient.size == n
                assert from_core_quotient(core, quotient, ell) == lam


def test_from_core_quotient_rejects_non_core():
    with pytest.raises(ValueError):
        from_core_quotient(Partition([2]), mp(2, (), ()), 2)


def test_trivial_core_matches_residue_equation():
    # partitions of n*ell with empty core = those whose label pairs with the
    # empty multipartition
    for n, ell in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2), (1, 4)]:
        if n * ell > 12:
            continue
        with_empty_nu = {
            label.lam
            for label in enumerate_orbit_labels(n, ell)
            if all(not c for c in label.nu)
        }
        trivial_core = {
            lam
            for lam in enumerate_partitions(n * ell)
            if ell_quotient_core(lam, ell)[0] == Partition([])
        }
        assert with_empty_nu == trivial_core
        # the quotient identifies them with ell-multipartitions of n
        quotients = {ell_quotient_core(lam, ell)[1] for lam in trivial_core}
        assert len(quotients) == len(trivial_core)
