"""Exact linear algebra over the rationals.

Everything in this module is exact: entries are Python ints or
:class:`fractions.Fraction` values, ranks come from fraction-free (Bareiss)
elimination after clearing denominators row by row, and kernels from exact
Gauss-Jordan reduction.  There are no tolerances anywhere in the package;
orbit invariants are discrete rank data and must stay that way.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or canonical "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError(f"not an exact rational: {x!r}")


def fraction_str(x: Fraction) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    """An immutable matrix of exact rationals.

    The row count may be zero, and so may the column count, which is why the
    column count is stored explicitly instead of being inferred from the rows.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        self.rows = rows
        self.nrows = len(rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("ragged matrix")
            inferred = widths.pop()
            if ncols is not None and ncols != inferred:
                raise ValueError("explicit column count disagrees with rows")
            self.ncols = inferred
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    # -- basics ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]}, ncols={self.ncols})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return RationalMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        return RationalMatrix(tuple(tuple(c * x for x in row) for row in self.rows), self.ncols)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        ot = other.transpose()
        return RationalMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot.rows)
                for row in self.rows
            ),
            other.ncols,
        )

    def apply(self, vec: tuple) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def transpose(self) -> "RationalMatrix":
        if self.nrows == 0:
            return RationalMatrix(((),) * self.ncols, 0)
        if self.ncols == 0:
            return RationalMatrix((), self.nrows)
        return RationalMatrix(tuple(zip(*self.rows)), self.nrows)

    def power(self, e: int) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = RationalMatrix.identity(self.nrows)
        for _ in range(e):
            result = result @ self
        return result

    # -- rank and kernel -----------------------------------------------------

    def rank(self) -> int:
        """Rank by fraction-free (Bareiss) elimination on cleared rows."""
        if self.nrows == 0 or self.ncols == 0:
            return 0
        m = []
        for row in self.rows:
            den = lcm(*(x.denominator for x in row)) if row else 1
            m.append([int(x * den) for x in row])
        nrows, ncols = self.nrows, self.ncols
        r = 0
        prev = 1
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            for i in range(r + 1, nrows):
                if all(x == 0 for x in m[i]):
                    continue
                head = m[i][c]
                lead = m[r][c]
                mi, mr = m[i], m[r]
                for j in range(ncols):
                    mi[j] = (mi[j] * lead - head * mr[j]) // prev
            prev = m[r][c]
            r += 1
            if r == nrows:
                break
        return r

    def rref(self) -> tuple[list[int], list[list[Fraction]]]:
        """Reduced row echelon form; returns (pivot columns, reduced rows)."""
        m = [list(row) for row in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / Fraction(m[r][c])
            m[r] = [inv * x for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return pivots, m

    def inverse(self) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        if n == 0:
            return RationalMatrix((), 0)
        augmented = hstack(self, RationalMatrix.identity(n))
        pivots, m = augmented.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return RationalMatrix(tuple(tuple(row[n:]) for row in m), n)

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """A basis of the right kernel, one tuple per basis vector."""
        pivots, m = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.ncols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -m[r][fc]
            basis.append(tuple(vec))
        return basis


def hstack(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch in hstack")
    rows = tuple(ra + rb for ra, rb in zip(a.rows, b.rows)) if a.nrows else ()
    return RationalMatrix(rows, a.ncols + b.ncols)


def vstack(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.ncols != b.ncols:
        raise ValueError("column count mismatch in vstack")
    return RationalMatrix(a.rows + b.rows, a.ncols)


def block_diag(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    top = hstack(a, RationalMatrix.zero(a.nrows, b.ncols))
    bottom = hstack(RationalMatrix.zero(b.nrows, a.ncols), b)
    return vstack(top, bottom)


def from_columns(cols: list[tuple], nrows: int) -> RationalMatrix:
    """Matrix whose columns are the given vectors (each of length nrows)."""
    if not cols:
        return RationalMatrix.zero(nrows, 0)
    return RationalMatrix(tuple(zip(*cols)), len(cols))


def span_dim(vectors: list[tuple], ambient: int) -> int:
    """Dimension of the span of the given vectors inside Q^ambient."""
    if not vectors:
        return 0
    return RationalMatrix(tuple(vectors), ambient).rank()
