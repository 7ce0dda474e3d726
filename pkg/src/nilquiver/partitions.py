"""Partitions, Frobenius coordinates, hook data and bounded enumeration.

Conventions used throughout the package:

* a partition is stored as a weakly decreasing tuple of positive integers;
  trailing zeros are stripped on construction, so equality is equality of
  the stripped tuples;
* boxes of the Young diagram sit at matrix positions (i, j) with 1-based
  row i and column j; the content of the box is j - i;
* Frobenius coordinates are stored 0-indexed: the (i+1)-st diagonal box has
  ``legs[i]`` boxes below it and ``arms[i]`` boxes to its right.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Soft cap on the size of any single enumeration result.
DEFAULT_ENUMERATION_CAP = 10**6


class Partition:
    """A weakly decreasing sequence of positive integers.

    Indexing is 0-based and total: ``p[i]`` returns 0 for ``i >= len(p)``,
    which keeps row arithmetic (padding, componentwise sums) free of bounds
    fiddling.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        self.parts = parts

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        if isinstance(i, slice):
            raise TypeError("slice the .parts tuple instead")
        if i < 0:
            raise IndexError("negative partition index")
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.parts) + "]"

    def __bool__(self) -> bool:
        return bool(self.parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the bracket form, e.g. "[7,5,3,2,1]" or "[]"."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"not a bracketed partition: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return cls()
        return cls(int(tok) for tok in inner.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self):
        """Iterate over the (row, column) positions of the Young diagram, 1-based."""
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def diagonal_length(self) -> int:
        """Number of boxes on the main diagonal."""
        return sum(1 for i, part in enumerate(self.parts, start=1) if part >= i)

    def frobenius(self) -> "FrobeniusPartition":
        t = self.transpose()
        k = self.diagonal_length()
        legs = tuple(t[i] - (i + 1) for i in range(k))
        arms = tuple(self[i] - (i + 1) for i in range(k))
        return FrobeniusPartition(legs, arms)

    def weight(self, ell: int) -> int:
        """Number of boxes of content divisible by ell in the first hook.

        The empty partition has weight 0.
        """
        if ell < 1:
            raise ValueError("ell must be positive")
        if not self.parts:
            return 0
        k = len(self.parts)
        return sum(1 for c in range(-(k - 1), self.parts[0]) if c % ell == 0)


@dataclass(frozen=True, slots=True)
class FrobeniusPartition:
    """Frobenius coordinates: strictly decreasing leg and arm sequences.

    ``legs[i]`` counts the boxes below the (i+1)-st diagonal box and
    ``arms[i]`` the boxes to its right; hook i therefore has
    ``legs[i] + arms[i] + 1`` boxes with contents running from ``-legs[i]``
    up to ``arms[i]``.
    """

    legs: tuple[int, ...]
    arms: tuple[int, ...]

    def __post_init__(self):
        legs = tuple(int(x) for x in self.legs)
        arms = tuple(int(x) for x in self.arms)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "arms", arms)
        if len(legs) != len(arms):
            raise ValueError("legs and arms must have equal length")
        for seq in (legs, arms):
            if any(x < 0 for x in seq):
                raise ValueError(f"negative Frobenius coordinate in {seq}")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"coordinates not strictly decreasing: {seq}")

    def __len__(self) -> int:
        return len(self.legs)

    @property
    def size(self) -> int:
        return sum(self.legs) + sum(self.arms) + len(self.legs)

    def hook_sizes(self) -> Partition:
        """The strictly decreasing partition of hook lengths."""
        return Partition(a + b + 1 for a, b in zip(self.legs, self.arms))

    def partition(self) -> Partition:
        """The partition with these Frobenius coordinates."""
        k = len(self.legs)
        nrows = (self.legs[0] + 1) if k else 0
        rows = [0] * nrows
        for i in range(k):
            rows[i] = self.arms[i] + (i + 1)
            for r in range(i + 1, i + 1 + self.legs[i]):
                rows[r] += 1
        return Partition(rows)


def partition_of(f: FrobeniusPartition) -> Partition:
    return f.partition()


@dataclass(frozen=True, slots=True)
class Bipartition:
    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __str__(self) -> str:
        return f"({self.first};{self.second})"


@dataclass(frozen=True, slots=True)
class Multipartition:
    """A fixed-length tuple of partitions."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise ValueError("a multipartition needs at least one component")
        if not all(isinstance(c, Partition) for c in components):
            raise ValueError("components must be Partition values")
        object.__setattr__(self, "components", components)

    @classmethod
    def empty(cls, ell: int) -> "Multipartition":
        return cls(tuple(Partition() for _ in range(ell)))

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Partition:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"


def _partition_tuples(n: int, max_part: int):
    """Yield weakly decreasing tuples summing to n, largest first (lex desc)."""
    if n == 0:
        yield ()
        return
    for head in range(min(n, max_part), 0, -1):
        for tail in _partition_tuples(n - head, head):
            yield (head,) + tail


def enumerate_partitions(n: int, max_count: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for parts in _partition_tuples(n, n):
        out.append(Partition(parts))
        if len(out) > max_count:
            raise ValueError(f"enumeration exceeds the cap of {max_count}")
    return out


def enumerate_bipartitions(n: int, max_count: int = DEFAULT_ENUMERATION_CAP) -> list[Bipartition]:
    """All bipartitions of n; first component sizes run from n down to 0."""
    out = []
    for m in range(n, -1, -1):
        for first in enumerate_partitions(m, max_count):
            for second in enumerate_partitions(n - m, max_count):
                out.append(Bipartition(first, second))
                if len(out) > max_count:
                    raise ValueError(f"enumeration exceeds the cap of {max_count}")
    return out


def enumerate_multipartitions(
    n: int, ell: int, max_count: int = DEFAULT_ENUMERATION_CAP
) -> list[Multipartition]:
    """All ell-multipartitions of n, componentwise lex decreasing."""
    if ell < 1:
        raise ValueError("ell must be positive")
    out: list[Multipartition] = []

    def fill(i: int, remaining: int, acc: list[Partition]):
        if i == ell - 1:
            for last in enumerate_partitions(remaining, max_count):
                out.append(Multipartition(tuple(acc) + (last,)))
                if len(out) > max_count:
                    raise ValueError(f"enumeration exceeds the cap of {max_count}")
            return
        for m in range(remaining, -1, -1):
            for comp in enumerate_partitions(m, max_count):
                acc.append(comp)
                fill(i + 1, remaining - m, acc)
                acc.pop()

    fill(0, n, [])
    return out
