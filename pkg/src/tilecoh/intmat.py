"""Dense integer matrices with exact (arbitrary-precision) arithmetic.

Every matrix in this package is an ``IntMatrix``: an immutable row-major
grid of Python ints.  Empty shapes (0 x n, n x 0) are legal and stand for
zero maps between free modules.  All operations are pure functions; values
can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Iterator


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape {self.rows}x{self.cols}")
        grid = tuple(tuple(_as_int(v) for v in row) for row in self.entries)
        if len(grid) != self.rows or any(len(row) != self.cols for row in grid):
            raise ValueError(
                f"entry grid does not match declared shape {self.rows}x{self.cols}"
            )
        object.__setattr__(self, "entries", grid)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> IntMatrix:
        """Build from a row list; ``cols`` disambiguates matrices with 0 rows."""
        grid = tuple(tuple(_as_int(v) for v in row) for row in rows)
        if grid:
            width = len(grid[0])
            if cols is not None and cols != width:
                raise ValueError(f"rows have width {width}, expected {cols}")
            return cls(len(grid), width, grid)
        return cls(0, 0 if cols is None else cols, ())

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> IntMatrix:
        vals = [_as_int(v) for v in values]
        n = len(vals)
        return cls(n, n, tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def column_vector(cls, values: Iterable[int]) -> IntMatrix:
        vals = [_as_int(v) for v in values]
        return cls(len(vals), 1, tuple((v,) for v in vals))

    # -- shape and access --------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> Iterator[tuple[int, ...]]:
        for j in range(self.cols):
            yield self.column(j)

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> IntMatrix:
        ri = list(row_indices)
        ci = list(col_indices)
        return IntMatrix(
            len(ri), len(ci), tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def is_upper_triangular(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols))
        )

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: IntMatrix) -> IntMatrix:
        _require_same_shape("add", self, other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        _require_same_shape("subtract", self, other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(
            self.rows, self.cols, tuple(tuple(-v for v in row) for row in self.entries)
        )

    def __rmul__(self, scalar: int) -> IntMatrix:
        c = _as_int(scalar)
        return IntMatrix(
            self.rows, self.cols, tuple(tuple(c * v for v in row) for row in self.entries)
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols_of_other = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols_of_other)
                for row in self.entries
            ),
        )

    def pow(self, k: int) -> IntMatrix:
        if not self.is_square:
            raise ValueError(f"cannot take powers of a {self.rows}x{self.cols} matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"IntMatrix({self.rows}x{self.cols}: [{body}])"


def _as_int(v) -> int:
    if isinstance(v, Integral):
        return int(v)
    raise TypeError(f"matrix entries must be integers, got {v!r}")


def _require_same_shape(op: str, a: IntMatrix, b: IntMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"cannot {op} {a.rows}x{a.cols} and {b.rows}x{b.cols} matrices")


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise ValueError(f"cannot hstack {a.rows}x{a.cols} and {b.rows}x{b.cols} matrices")
    return IntMatrix(
        a.rows, a.cols + b.cols, tuple(ra + rb for ra, rb in zip(a.entries, b.entries))
    )


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise ValueError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: Bareiss guarantees prev divides the product.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return a.is_square and abs(det(a)) == 1
