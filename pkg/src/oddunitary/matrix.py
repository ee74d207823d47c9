"""Dense exact matrices over a :class:`~oddunitary.rings.Ring`.

Matrices are small (a few dozen rows at most) so storage is a plain
row-major tuple of tuples of :class:`Scalar`.  Vectors are tuples of
scalars.  Elementary transvections ``e_ij(r) = I + r*E_ij`` use 1-based
indices, matching how elementary words are written down and serialized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadIndex, DimensionMismatch, ParseError, RingMismatch
from .rings import Ring, Scalar, ring_from_json

Vector = tuple  # tuple[Scalar, ...]


def vector(ring: Ring, values: Iterable) -> Vector:
    return tuple(ring(x) for x in values)


def zero_vector(ring: Ring, k: int) -> Vector:
    return (ring.zero,) * k


def basis_vector(ring: Ring, k: int, i: int) -> Vector:
    """Standard basis vector with a 1 in 0-based position ``i``."""
    return tuple(ring.one if j == i else ring.zero for j in range(k))


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(x: Vector, s) -> Vector:
    """Right scalar multiple ``x*s``."""
    return tuple(a * s for a in x)


def vec_bar(x: Vector) -> Vector:
    return tuple(a.bar() for a in x)


def dot(x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    if not x:
        raise DimensionMismatch("dot product of empty vectors")
    ring = x[0].ring
    if y[0].ring is not ring and y[0].ring != ring:
        raise RingMismatch(f"{ring} vs {y[0].ring}")
    return Scalar(ring, ring._dot([a.value for a in x], [b.value for b in y]))


class Matrix:
    """Immutable dense matrix."""

    __slots__ = ("ring", "rows", "cols", "_e")

    def __init__(self, ring: Ring, entries: Iterable[Iterable]):
        rows = tuple(tuple(ring(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrices must have at least one row and column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        self.ring = ring
        self.rows = len(rows)
        self.cols = cols
        self._e = rows

    @classmethod
    def _wrap(cls, ring: Ring, rows: tuple) -> Matrix:
        # trusted constructor: rows is already a tuple of tuples of ring scalars
        m = cls.__new__(cls)
        m.ring, m.rows, m.cols, m._e = ring, len(rows), len(rows[0]), rows
        return m

    @classmethod
    def identity(cls, ring: Ring, k: int) -> Matrix:
        one, zero = ring.one, ring.zero
        return cls._wrap(ring, tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k)))

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> Matrix:
        return cls._wrap(ring, tuple((ring.zero,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, ring: Ring, values: Sequence) -> Matrix:
        k = len(values)
        return cls._wrap(
            ring, tuple(tuple(ring(values[i]) if i == j else ring.zero for j in range(k)) for i in range(k))
        )

    @classmethod
    def row(cls, ring: Ring, values: Sequence) -> Matrix:
        return cls(ring, [values])

    @classmethod
    def column(cls, ring: Ring, values: Sequence) -> Matrix:
        return cls(ring, [[x] for x in values])

    # -- access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._e[i][j]

    def row_at(self, i: int) -> Vector:
        return self._e[i]

    def col_at(self, j: int) -> Vector:
        return tuple(r[j] for r in self._e)

    def entries(self) -> tuple:
        return self._e

    def tolist(self) -> list[list]:
        return [[x.to_json() for x in r] for r in self._e]

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: Matrix) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._wrap(
            self.ring, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, other._e))
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix._wrap(self.ring, tuple(tuple(-a for a in r) for r in self._e))

    def scale(self, s) -> Matrix:
        """Entrywise product with a scalar (the ring is commutative)."""
        s = self.ring(s)
        return Matrix._wrap(self.ring, tuple(tuple(a * s for a in r) for r in self._e))

    def __rmul__(self, s) -> Matrix:
        if isinstance(s, (int, Scalar)):
            return self.scale(s)
        return NotImplemented

    def mul_vec(self, x: Sequence[Scalar]) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"{self.shape} matrix times length-{len(x)} vector")
        return tuple(dot(r, x) for r in self._e)

    def vec_mul(self, x: Sequence[Scalar]) -> Vector:
        """Row vector times matrix."""
        if len(x) != self.rows:
            raise DimensionMismatch(f"length-{len(x)} vector times {self.shape} matrix")
        return tuple(dot(x, c) for c in zip(*self._e))

    @property
    def T(self) -> Matrix:
        return Matrix._wrap(self.ring, tuple(zip(*self._e)))

    def bar(self) -> Matrix:
        return Matrix._wrap(self.ring, tuple(tuple(a.bar() for a in r) for r in self._e))

    def bar_transpose(self) -> Matrix:
        return bar_transpose(self)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self._e == other._e

    def __hash__(self):
        return hash((self.ring, self._e))

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._e]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.ring}, {[[str(x) for x in r] for r in self._e]})"

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    @classmethod
    def from_json(cls, data: dict, ring: Ring | None = None) -> Matrix:
        try:
            ring = ring or ring_from_json(data["ring"])
            m = cls(ring, [[ring.from_json(x) for x in r] for r in data["entries"]])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad matrix JSON: {exc}") from None
        if ("rows" in data and data["rows"] != m.rows) or ("cols" in data and data["cols"] != m.cols):
            raise ParseError("matrix JSON shape disagrees with its entries")
        return m


def det(a: Matrix) -> Scalar:
    """Determinant by cofactor expansion (fine for the small sizes used here)."""
    if not a.is_square:
        raise DimensionMismatch(f"determinant of a {a.shape} matrix")
    ring = a.ring

    def rec(rows: tuple, cols: tuple) -> Scalar:
        if len(rows) == 1:
            return a[rows[0], cols[0]]
        acc = ring.zero
        for k, c in enumerate(cols):
            entry = a[rows[0], c]
            if entry.is_zero():
                continue
            minor = rec(rows[1:], cols[:k] + cols[k + 1:])
            acc = acc + entry * minor if k % 2 == 0 else acc - entry * minor
        return acc

    return rec(tuple(range(a.rows)), tuple(range(a.cols)))


def inverse(a: Matrix) -> Matrix:
    """Inverse through the adjugate; raises ``NotAUnit`` if ``det(a)`` is not a unit."""
    n = a.rows
    d_inv = det(a).inv()
    if n == 1:
        return Matrix._wrap(a.ring, ((d_inv,),))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            # cofactor C_ji gives the (i, j) entry of the adjugate
            minor = Matrix._wrap(
                a.ring,
                tuple(tuple(x for c, x in enumerate(r) if c != i) for t, r in enumerate(a._e) if t != j),
            )
            cof = det(minor) if (i + j) % 2 == 0 else -det(minor)
            row.append(cof * d_inv)
        rows.append(tuple(row))
    return Matrix._wrap(a.ring, tuple(rows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.shape} @ {b.shape}")
    bcols = tuple(zip(*b._e))
    return Matrix._wrap(a.ring, tuple(tuple(dot(r, c) for c in bcols) for r in a._e))


def bar_transpose(a: Matrix) -> Matrix:
    """``result[j][i] = bar(a[i][j])``."""
    return Matrix._wrap(a.ring, tuple(tuple(x.bar() for x in c) for c in zip(*a._e)))


def trailing_submatrix(a: Matrix, drop: int) -> Matrix:
    """Delete the first ``drop`` rows and columns of a square matrix."""
    if not a.is_square or not 0 <= drop < a.rows:
        raise DimensionMismatch(f"cannot drop {drop} from a {a.shape} matrix")
    return Matrix._wrap(a.ring, tuple(r[drop:] for r in a._e[drop:]))


def direct_sum(ring: Ring, *blocks: Matrix | None) -> Matrix:
    """Block-diagonal sum; ``None`` entries stand for empty (0x0) blocks."""
    blocks = [b for b in blocks if b is not None]
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = []
    col0 = 0
    for b in blocks:
        for r in b._e:
            rows.append((ring.zero,) * col0 + r + (ring.zero,) * (m - col0 - b.cols))
        col0 += b.cols
    if n == 0:
        raise DimensionMismatch("direct sum of empty blocks")
    return Matrix._wrap(ring, tuple(rows))


def block2(top_left, top_right, bottom_left, bottom_right) -> Matrix:
    """Assemble ``[[A, B], [C, D]]`` from four matrix blocks."""
    ring = top_left.ring
    if top_left.rows != top_right.rows or bottom_left.rows != bottom_right.rows:
        raise DimensionMismatch("block rows do not line up")
    if top_left.cols != bottom_left.cols or top_right.cols != bottom_right.cols:
        raise DimensionMismatch("block columns do not line up")
    rows = tuple(a + b for a, b in zip(top_left._e, top_right._e))
    rows += tuple(a + b for a, b in zip(bottom_left._e, bottom_right._e))
    return Matrix._wrap(ring, rows)


def split2(a: Matrix, r: int, c: int) -> tuple[Matrix | None, ...]:
    """Split into ``(A, B, C, D)`` at row ``r`` and column ``c``; empty blocks are None."""

    def part(rows, cols):
        if rows.start == rows.stop or cols.start == cols.stop:
            return None
        return Matrix._wrap(a.ring, tuple(row[cols] for row in a._e[rows]))

    top, bottom = slice(0, r), slice(r, a.rows)
    left, right = slice(0, c), slice(c, a.cols)
    return part(top, left), part(top, right), part(bottom, left), part(bottom, right)


# -- elementary matrices and words --------------------------------------------------


def elem_matrix(ring: Ring, k: int, i: int, j: int, r) -> Matrix:
    """``I_k`` with ``r`` added at 1-based position ``(i, j)``, ``i != j``."""
    if i == j or not (1 <= i <= k and 1 <= j <= k):
        raise BadIndex(f"elementary matrix index ({i}, {j}) invalid for size {k}")
    rows = [list(r_) for r_ in Matrix.identity(ring, k)._e]
    rows[i - 1][j - 1] = ring(r)
    return Matrix._wrap(ring, tuple(tuple(r_) for r_ in rows))


@dataclass(frozen=True)
class ElementaryWord:
    """An ordered product of elementary transvections ``e_ij(r)``."""

    ring: Ring
    size: int
    factors: tuple[tuple[int, int, Scalar], ...] = ()

    def __post_init__(self):
        for i, j, _ in self.factors:
            if i == j or not (1 <= i <= self.size and 1 <= j <= self.size):
                raise BadIndex(f"factor ({i}, {j}) invalid for size {self.size}")

    def __len__(self) -> int:
        return len(self.factors)

    def __add__(self, other: ElementaryWord) -> ElementaryWord:
        if (self.ring, self.size) != (other.ring, other.size):
            raise DimensionMismatch("words over different rings or sizes")
        return ElementaryWord(self.ring, self.size, self.factors + other.factors)

    def inverse(self) -> ElementaryWord:
        return ElementaryWord(self.ring, self.size, tuple((i, j, -r) for i, j, r in reversed(self.factors)))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "size": self.size,
            "factors": [[i, j, r.to_json()] for i, j, r in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict, ring: Ring | None = None) -> ElementaryWord:
        try:
            ring = ring or ring_from_json(data["ring"])
            factors = tuple((int(i), int(j), ring.from_json(r)) for i, j, r in data["factors"])
            return cls(ring, int(data["size"]), factors)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad elementary word JSON: {exc}") from None


def word_product(w: ElementaryWord) -> Matrix:
    """Multiply the word out left to right.

    Right multiplication by ``e_ij(r)`` adds ``r`` times column ``i`` to
    column ``j``, so each factor costs O(k) instead of a full product.
    """
    ring, k = w.ring, w.size
    cols = [list(c) for c in Matrix.identity(ring, k)._e]  # column-major; I is symmetric
    for i, j, r in w.factors:
        src, dst = cols[i - 1], cols[j - 1]
        if r.is_zero():
            continue
        for t in range(k):
            if not src[t].is_zero():
                dst[t] = dst[t] + src[t] * r
    return Matrix._wrap(ring, tuple(zip(*cols)))
