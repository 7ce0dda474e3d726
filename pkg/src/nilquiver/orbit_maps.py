"""Translations between the different orbit labellings.

Three label styles coexist for orbits in the framed nilpotent cone:

* the normal-form bipartition (mu; nu) used for a single Jordan matrix with
  a marked vector, where row i of the matrix is marked in column mu_i
  (ell = 1 only);
* the striped bipartition (lambda, epsilon, nu): a coloured partition whose
  row i starts in block epsilon_i, together with a marking function nu
  giving the marked column of each row (cyclic case);
* the canonical label (lambda; nu) naming the framed indecomposable summand
  and the unframed chain summands directly.

The first two styles translate into the third by deleting "removable" rows,
which split off as unframed chains, and reading the remaining rows as a
marked circle diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle_diagrams import (
    CircleDiagram,
    FrobeniusCircleDiagram,
    frobenius_diagram_of_partition,
)
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    FrobeniusPartition,
    Partition,
    enumerate_bipartitions,
    enumerate_partitions,
)
from .residues import DimensionVector, OrbitLabel, run_vector


# ---------------------------------------------------------------------------
# striped bipartitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class StripedBipartition:
    """A coloured partition with a marking function.

    ``lam`` lists the row lengths, ``epsilon`` the starting block of each
    row, and ``nu`` the marked column of each row (``nu[i] <= lam[i]``;
    rows with ``nu[i] <= 0`` are unmarked).  The derived tuple
    ``mu = lam - nu`` counts the boxes to the right of each mark; since a
    row's chain reads the row from its last box, mu_i is the marked
    vertex's offset from the start of the chain.

    Validity ("striped") requires:

    1. each mark sits in block 0, i.e. epsilon_i + (lam_i - nu_i) = 0
       mod ell; this also pins the canonical value of an unmarked row's
       nu_i inside (-ell, 0];
    2. nu_i > -ell for every row;
    3. for i < j both nu_j < nu_i + ell and mu_j < mu_i + ell.
    """

    ell: int
    lam: Partition
    epsilon: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "epsilon", tuple(int(x) for x in self.epsilon))
        object.__setattr__(self, "nu", tuple(int(x) for x in self.nu))
        ell, lam = self.ell, self.lam
        if ell < 1:
            raise ValueError("ell must be positive")
        k = len(lam)
        if len(self.epsilon) != k or len(self.nu) != k:
            raise ValueError("epsilon and nu must have one entry per part")
        if any(not 0 <= e < ell for e in self.epsilon):
            raise ValueError("colours must lie in 0..ell-1")
        if any(n > p for n, p in zip(self.nu, lam.parts)):
            raise ValueError("marking function exceeds a row length")
        mu = self.mu
        for i in range(k):
            if (self.epsilon[i] + mu[i]) % ell != 0:
                raise ValueError(f"mark of row {i + 1} does not sit in block 0")
            if self.nu[i] <= -ell:
                raise ValueError(f"marking value of row {i + 1} below -ell")
        for i in range(k):
            for j in range(i + 1, k):
                if not (self.nu[j] < self.nu[i] + ell and mu[j] < mu[i] + ell):
                    raise ValueError(f"rows {i + 1},{j + 1} violate the striped ordering")

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(p - n for p, n in zip(self.lam.parts, self.nu))

    def __len__(self) -> int:
        return len(self.lam)

    def rows(self) -> tuple[tuple[int, int, int], ...]:
        """(length, colour, marked column) per row."""
        return tuple(zip(self.lam.parts, self.epsilon, self.nu))

    def signature(self) -> DimensionVector:
        return signature(self.lam, self.epsilon, self.ell)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "epsilon": list(self.epsilon),
            "nu": list(self.nu),
        }

    @classmethod
    def from_json(cls, data: dict, ell: int) -> "StripedBipartition":
        return cls(
            ell,
            Partition(data["lambda"]),
            tuple(data["epsilon"]),
            tuple(data["nu"]),
        )


def signature(lam: Partition, epsilon, ell: int) -> DimensionVector:
    """Box count of the coloured diagram: box (i, j) has colour
    epsilon_i + (lam_i - j) mod ell, so row i is the run starting at
    epsilon_i read from its last box."""
    epsilon = tuple(int(x) for x in epsilon)
    if len(epsilon) != len(lam):
        raise ValueError("one colour per part is required")
    counts = [0] * ell
    for part, col in zip(lam.parts, epsilon):
        for j, extra in enumerate(run_vector(col, part, ell)):
            counts[j] += extra
    return DimensionVector(0, tuple(counts))


# ---------------------------------------------------------------------------
# removable rows, one-vertex case
# ---------------------------------------------------------------------------


def _removal_conditions(mu: list[int], nu: list[int]) -> int | None:
    """Smallest removable row (1-based) of the current state, or None.

    Row i is removable when mu_i = mu_{i+1} (with mu_{k+1} = 0 understood
    only through the final-row rule), nu_{i-1} = nu_i, or i is the last row
    and mu_k = 0.
    """
    k = len(mu)
    for i in range(1, k + 1):
        if i < k and mu[i - 1] == mu[i]:
            return i
        if i >= 2 and nu[i - 2] == nu[i - 1]:
            return i
        if i == k and mu[i - 1] == 0:
            return i
    return None


def removable_rows(mu: Partition, nu: Partition) -> frozenset[int]:
    """Rows of lam = mu + nu that split off as unframed chains (1-based).

    Removal is greedy: the conditions are re-evaluated on the shrunken pair
    after each deletion, which is what makes ties in constant runs shed
    exactly the right number of rows.  The returned indices refer to the
    original rows.
    """
    k = max(len(mu), len(nu))
    rows = list(zip((mu[i] for i in range(k)), (nu[i] for i in range(k))))
    if any(a + b < c + d for (a, b), (c, d) in zip(rows, rows[1:])):
        raise ValueError("mu + nu is not a partition")
    original = list(range(1, k + 1))
    removed: set[int] = set()
    while True:
        cur_mu = [m for m, _ in rows]
        cur_nu = [n for _, n in rows]
        i = _removal_conditions(cur_mu, cur_nu)
        if i is None:
            break
        removed.add(original[i - 1])
        del rows[i - 1]
        del original[i - 1]
    return frozenset(removed)


def bipartition_to_label(mu: Partition, nu: Partition) -> tuple[Partition, Partition]:
    """Translate a normal-form bipartition into (framed partition, chain parts).

    The removable rows contribute their full lengths as unframed chains;
    the surviving rows, with one box less in the mu direction, are the
    Frobenius coordinates (legs, arms) = (mu - 1, nu) of the framed
    partition.
    """
    k = max(len(mu), len(nu))
    removed = removable_rows(mu, nu)
    zeta = Partition(sorted((mu[i - 1] + nu[i - 1] for i in removed), reverse=True))
    kept = [i for i in range(1, k + 1) if i not in removed]
    legs = tuple(mu[i - 1] - 1 for i in kept)
    arms = tuple(nu[i - 1] for i in kept)
    assert all(x >= 0 for x in legs), "surviving rows must keep a positive mark"
    eta = FrobeniusPartition(legs, arms).partition()
    assert eta.size + zeta.size == mu.size + nu.size, "boxes must be conserved"
    return eta, zeta


def label_to_bipartition(eta: Partition, zeta: Partition) -> tuple[Partition, Partition]:
    """Inverse translation, realized by searching the finite fibre."""
    n = eta.size + zeta.size
    for bp in enumerate_bipartitions(n):
        if bipartition_to_label(bp.first, bp.second) == (eta, zeta):
            return bp.first, bp.second
    raise ValueError(f"no bipartition translates to ({eta};{zeta})")


# ---------------------------------------------------------------------------
# removable rows, cyclic case
# ---------------------------------------------------------------------------


def removable_rows_cyclic(s: StripedBipartition) -> frozenset[int]:
    """Rows of a striped bipartition that split off as unframed chains.

    Row i is removable (1-based) when

    (a) nu_i <= 0 (the row is unmarked), or
    (b) some later row j has nu_j >= nu_i with (lam_j, epsilon_j)
        different from (lam_i, epsilon_i), or
    (c) some earlier row j has mu_j <= mu_i.
    """
    lam, eps, nu, mu = s.lam.parts, s.epsilon, s.nu, s.mu
    k = len(lam)
    removed = set()
    for i in range(k):
        if nu[i] <= 0:
            removed.add(i + 1)
            continue
        if any(
            nu[j] >= nu[i] and (lam[j], eps[j]) != (lam[i], eps[i]) for j in range(i + 1, k)
        ):
            removed.add(i + 1)
            continue
        if any(mu[j] <= mu[i] for j in range(i)):
            removed.add(i + 1)
    return frozenset(removed)


def striped_to_diagrams(
    s: StripedBipartition,
) -> tuple[FrobeniusCircleDiagram, CircleDiagram]:
    """Split a striped bipartition into its marked and unmarked diagrams.

    Removed rows become plain circles (start epsilon_i, length lam_i); the
    surviving rows become marked circles of length lam_i with the mark at
    offset mu_i, which lands in block 0 by the striped conditions.
    """
    removed = removable_rows_cyclic(s)
    plain = []
    marked = []
    for i, (length, colour, mark_col) in enumerate(s.rows(), start=1):
        if i in removed:
            plain.append((colour, length))
        else:
            marked.append((length, length - mark_col))
    try:
        frob = FrobeniusCircleDiagram(s.ell, tuple(marked))
    except ValueError as exc:  # pragma: no cover - guards internal consistency
        raise AssertionError(f"surviving rows are not Frobenius: {exc}") from exc
    circ = CircleDiagram(s.ell, tuple(plain))
    total = frob.dimension_vector() + circ.dimension_vector()
    assert total == s.signature(), "diagram dimensions must add up to the signature"
    return frob, circ


def label_of_diagrams(frob: FrobeniusCircleDiagram, circ: CircleDiagram) -> OrbitLabel:
    """Read off the canonical label: the marked diagram names the framed
    partition and the plain circles are grouped by start block."""
    if frob.ell != circ.ell:
        raise ValueError("diagrams live over different cycle lengths")
    return OrbitLabel(frob.partition(), circ.multipartition())


def diagrams_of_label(label: OrbitLabel) -> tuple[FrobeniusCircleDiagram, CircleDiagram]:
    """Inverse of :func:`label_of_diagrams`."""
    ell = label.ell
    return (
        frobenius_diagram_of_partition(label.lam, ell),
        CircleDiagram.from_multipartition(label.nu),
    )


def striped_label(s: StripedBipartition) -> OrbitLabel:
    return label_of_diagrams(*striped_to_diagrams(s))


def striped_from_label(label: OrbitLabel, max_count: int = DEFAULT_ENUMERATION_CAP) -> StripedBipartition:
    """Inverse of :func:`striped_label`, by searching the fixed signature."""
    xi = label.dimension_vector()
    for s in enumerate_striped(label.ell, DimensionVector(0, xi.main), max_count):
        if striped_label(s) == label:
            return s
    raise ValueError(f"no striped bipartition maps to {label}")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _marking_choices(length: int, colour: int, ell: int) -> list[int]:
    """Admissible marking values of a row: nu <= length, nu > -ell, and the
    mark colour condition nu = length + colour mod ell."""
    res = (length + colour) % ell
    lo = -ell + 1
    first = lo + ((res - lo) % ell)
    return list(range(first, length + 1, ell))


def enumerate_striped(
    ell: int, xi: DimensionVector, max_count: int = DEFAULT_ENUMERATION_CAP
) -> list[StripedBipartition]:
    """All striped bipartitions with the given signature.

    Rows are generated in weakly decreasing length order; sequences that
    differ only by reordering equal-length rows describe the same object,
    so results are deduplicated as row multisets.
    """
    if xi.ell != ell:
        raise ValueError("signature has the wrong cycle length")
    total = xi.total
    out: list[StripedBipartition] = []
    seen: set[tuple] = set()

    def colourings(parts: tuple[int, ...]):
        counts = [0] * ell

        def rec(i: int, acc: tuple[int, ...]):
            if i == len(parts):
                if tuple(counts) == xi.main:
                    yield acc
                return
            for colour in range(ell):
                rv = run_vector(colour, parts[i], ell)
                if all(c + r <= t for c, r, t in zip(counts, rv, xi.main)):
                    for j in range(ell):
                        counts[j] += rv[j]
                    yield from rec(i + 1, acc + (colour,))
                    for j in range(ell):
                        counts[j] -= rv[j]

        yield from rec(0, ())

    for lam in enumerate_partitions(total, max_count):
        parts = lam.parts
        for eps in colourings(parts):
            options = [_marking_choices(p, e, ell) for p, e in zip(parts, eps)]

            def assign(i: int, acc: tuple[int, ...]):
                if i == len(parts):
                    key = tuple(sorted(zip(parts, eps, acc)))
                    if key not in seen:
                        seen.add(key)
                        out.append(StripedBipartition(ell, lam, eps, acc))
                        if len(out) > max_count:
                            raise ValueError(f"enumeration exceeds the cap of {max_count}")
                    return
                for value in options[i]:
                    ok = True
                    for j in range(i):
                        mu_j = parts[j] - acc[j]
                        mu_i = parts[i] - value
                        if not (value < acc[j] + ell and mu_i < mu_j + ell):
                            ok = False
                            break
                    if ok:
                        assign(i + 1, acc + (value,))

            assign(0, ())
    out.sort(key=lambda s: (s.lam.parts, s.epsilon, s.nu))
    return out


def bipartition_as_striped(mu: Partition, nu: Partition) -> StripedBipartition:
    """Encode a one-vertex bipartition as a striped bipartition: rows of
    lam = mu + nu, all colours 0, markings mu."""
    k = max(len(mu), len(nu))
    lam = Partition(mu[i] + nu[i] for i in range(k))
    return StripedBipartition(1, lam, (0,) * k, tuple(mu[i] for i in range(k)))
