"""The category Mat_S: natural numbers as objects, S-valued matrices as morphisms.

A morphism n -> m is an m x n matrix; ``f @ g`` is the composite f . g.
The monoidal product is the Kronecker product (strict: n (x) m = n*m with
identity associator), the biproduct is the direct sum and the dagger is
the involution-transpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimMismatch, NonInvertible, RingMismatch
from .scalars import ScalarRing


class Matrix:
    """Dense row-major matrix over a :class:`ScalarRing`. Immutable."""

    __slots__ = ("ring", "rows", "cols", "entries", "_hash")

    def __init__(self, ring: ScalarRing, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0:
            raise DimMismatch("negative dimension")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_rows(cls, ring: ScalarRing, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimMismatch("ragged rows")
        return cls(ring, len(rows), cols, [ring.coerce(x) for r in rows for x in r])

    @classmethod
    def identity(cls, ring: ScalarRing, n: int) -> Matrix:
        zero, one = ring.zero, ring.one
        return cls(ring, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, ring: ScalarRing, rows: int, cols: int) -> Matrix:
        return cls(ring, rows, cols, [ring.zero] * (rows * cols))

    @classmethod
    def diag(cls, ring: ScalarRing, values: Sequence) -> Matrix:
        n = len(values)
        zero = ring.zero
        return cls(ring, n, n, [ring.coerce(values[i]) if i == j else zero
                                for i in range(n) for j in range(n)])

    @classmethod
    def from_columns_map(cls, ring: ScalarRing, rows: int, images: Sequence[int | None]) -> Matrix:
        """0/1 matrix sending basis vector j to basis vector images[j] (or 0)."""
        cols = len(images)
        data = [ring.zero] * (rows * cols)
        for j, i in enumerate(images):
            if i is not None:
                data[i * cols + j] = ring.one
        return cls(ring, rows, cols, data)

    @classmethod
    def column(cls, ring: ScalarRing, values: Sequence) -> Matrix:
        return cls(ring, len(values), 1, [ring.coerce(v) for v in values])

    @classmethod
    def row(cls, ring: ScalarRing, values: Sequence) -> Matrix:
        return cls(ring, 1, len(values), [ring.coerce(v) for v in values])

    # -- access -------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col_list(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.ring, self.rows)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        c = self.cols
        e = self.entries
        return Matrix(self.ring, len(row_idx), len(col_idx),
                      [e[i * c + j] for i in row_idx for j in col_idx])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return self.submatrix(range(r0, r1), range(c0, c1))

    def first_nonzero(self) -> int | None:
        for k, x in enumerate(self.entries):
            if x:
                return k
        return None

    # -- equality -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.ring == other.ring and self.entries == other.entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def _same_ring(self, other: Matrix) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")

    # -- category structure -------------------------------------------------
    def __matmul__(self, other: Matrix) -> Matrix:
        """Composite self . other (ordinary matrix product)."""
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_ring(other)
        if self.cols != other.rows:
            raise DimMismatch(f"cannot compose {self.shape} after {other.shape}")
        ring = self.ring
        add, mul, zero = ring.add, ring.mul, ring.zero
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [zero] * (n * m)
        b_rows = [[(j, y) for j, y in enumerate(b[t * m:(t + 1) * m]) if y] for t in range(k)]
        for i in range(n):
            base = i * m
            for t in range(k):
                x = a[i * k + t]
                if not x:
                    continue
                for j, y in b_rows[t]:
                    out[base + j] = add(out[base + j], mul(x, y))
        return Matrix(ring, n, m, out)

    def dagger(self) -> Matrix:
        star = self.ring.star
        r, c, e = self.rows, self.cols, self.entries
        return Matrix(self.ring, c, r, [star(e[i * c + j]) for j in range(c) for i in range(r)])

    def transpose(self) -> Matrix:
        r, c, e = self.rows, self.cols, self.entries
        return Matrix(self.ring, c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def conjugate(self) -> Matrix:
        return self.map(self.ring.star)

    def map(self, fn, ring: ScalarRing | None = None) -> Matrix:
        return Matrix(ring or self.ring, self.rows, self.cols, [fn(x) for x in self.entries])

    def scale(self, s) -> Matrix:
        mul = self.ring.mul
        return Matrix(self.ring, self.rows, self.cols,
                      [mul(s, x) if x else x for x in self.entries])

    def __add__(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.shape != other.shape:
            raise DimMismatch("shape mismatch in sum")
        add = self.ring.add
        return Matrix(self.ring, self.rows, self.cols,
                      [add(x, y) for x, y in zip(self.entries, other.entries)])

    def kron(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        mul, zero = self.ring.mul, self.ring.zero
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        a, b = self.entries, other.entries
        cols = c1 * c2
        out = [zero] * (r1 * r2 * cols)
        for i1 in range(r1):
            for j1 in range(c1):
                x = a[i1 * c1 + j1]
                if not x:
                    continue
                for i2 in range(r2):
                    row = (i1 * r2 + i2) * cols + j1 * c2
                    for j2 in range(c2):
                        y = b[i2 * c2 + j2]
                        if y:
                            out[row + j2] = mul(x, y)
        return Matrix(self.ring, r1 * r2, cols, out)

    def direct_sum(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        zero = self.ring.zero
        rows, cols = self.rows + other.rows, self.cols + other.cols
        out = [zero] * (rows * cols)
        for i in range(self.rows):
            out[i * cols:i * cols + self.cols] = self.entries[i * self.cols:(i + 1) * self.cols]
        for i in range(other.rows):
            start = (self.rows + i) * cols + self.cols
            out[start:start + other.cols] = other.entries[i * other.cols:(i + 1) * other.cols]
        return Matrix(self.ring, rows, cols, out)

    def hstack(self, other: Matrix) -> Matrix:
        """Block row [self | other] (the copairing of two maps out of a sum)."""
        self._same_ring(other)
        if self.rows != other.rows:
            raise DimMismatch("hstack needs equal row counts")
        out = []
        for i in range(self.rows):
            out += self.entries[i * self.cols:(i + 1) * self.cols]
            out += other.entries[i * other.cols:(i + 1) * other.cols]
        return Matrix(self.ring, self.rows, self.cols + other.cols, out)

    def vstack(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.cols != other.cols:
            raise DimMismatch("vstack needs equal column counts")
        return Matrix(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    # -- linear algebra over fields -------------------------------------------
    def inverse(self, reverse_pivots: bool = False) -> Matrix:
        """Gauss-Jordan inverse. ``reverse_pivots`` searches pivots bottom-up."""
        if not self.is_square:
            raise NonInvertible("non-square matrix")
        n = self.rows
        ring = self.ring
        if not ring.is_field:
            inv = _integer_inverse(self)
            if inv is None:
                raise NonInvertible("matrix is not unimodular")
            return inv
        a = [list(self.row_list(i)) + [ring.one if i == j else ring.zero for j in range(n)]
             for i in range(n)]
        for col in range(n):
            candidates = range(n - 1, col - 1, -1) if reverse_pivots else range(col, n)
            piv = next((r for r in candidates if a[r][col]), None)
            if piv is None:
                raise NonInvertible("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv_p = ring.inv(a[col][col])
            a[col] = [ring.mul(inv_p, x) if x else x for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [ring.sub(x, ring.mul(f, y)) if y else x for x, y in zip(a[r], a[col])]
        return Matrix(ring, n, n, [x for row in a for x in row[n:]])

    def rank(self) -> int:
        ring = self.ring
        if not ring.is_field:
            raise NonInvertible("rank is only implemented over fields")
        a = self.tolist()
        rank = 0
        for col in range(self.cols):
            piv = next((r for r in range(rank, self.rows) if a[r][col]), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            inv_p = ring.inv(a[rank][col])
            a[rank] = [ring.mul(inv_p, x) for x in a[rank]]
            for r in range(self.rows):
                if r != rank and a[r][col]:
                    f = a[r][col]
                    a[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[r], a[rank])]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        if not self.is_square:
            return False
        try:
            self.inverse()
        except NonInvertible:
            return False
        return True

    def left_inverse(self) -> Matrix:
        """Some L with L . self = id, for a matrix of full column rank."""
        if self.cols == 0:
            return Matrix.zero(self.ring, 0, self.rows)
        if self.rows < self.cols:
            raise NonInvertible("too few rows for a left inverse")
        monomial = _monomial_left_inverse(self)
        if monomial is not None:
            return monomial
        ring = self.ring
        chosen: list[int] = []
        for r in range(self.rows):
            trial = chosen + [r]
            if self.submatrix(trial, range(self.cols)).rank() == len(trial):
                chosen = trial
                if len(chosen) == self.cols:
                    break
        if len(chosen) < self.cols:
            raise NonInvertible("matrix is not monic")
        sq_inv = self.submatrix(chosen, range(self.cols)).inverse()
        data = [ring.zero] * (self.cols * self.rows)
        for k, r in enumerate(chosen):
            for i in range(self.cols):
                data[i * self.rows + r] = sq_inv[i, k]
        return Matrix(ring, self.cols, self.rows, data)

    # -- presentation ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"ring": self.ring.name, "rows": self.rows, "cols": self.cols,
                "entries": [self.ring.fmt(x) for x in self.entries]}

    @classmethod
    def from_json(cls, ring: ScalarRing, data: dict) -> Matrix:
        rows, cols = int(data["rows"]), int(data["cols"])
        return cls(ring, rows, cols, [ring.parse(str(x)) for x in data["entries"]])

    def pretty(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[] ({self.rows}x{self.cols})"
        cells = [[self.ring.fmt(x) for x in self.row_list(i)] for i in range(self.rows)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self) -> str:
        return f"Matrix({self.ring.name}, {self.rows}x{self.cols}, {[self.ring.fmt(x) for x in self.entries]})"


def _monomial_left_inverse(m: Matrix) -> Matrix | None:
    """Left inverse when every column has exactly one nonzero, in distinct rows."""
    ring = m.ring
    seen_rows = set()
    data = [ring.zero] * (m.cols * m.rows)
    for j in range(m.cols):
        nz = [i for i in range(m.rows) if m[i, j]]
        if len(nz) != 1 or nz[0] in seen_rows or not ring.is_unit(m[nz[0], j]):
            return None
        i = nz[0]
        seen_rows.add(i)
        data[j * m.rows + i] = ring.inv(m[i, j])
    return Matrix(ring, m.cols, m.rows, data)


def _integer_inverse(m: Matrix) -> Matrix | None:
    from fractions import Fraction
    from .scalars import ScalarRing as _R

    # invert over Q through the Gaussian rationals, then check integrality
    q = _R("gaussian", None, "identity")
    mq = m.map(lambda x: q.coerce(Fraction(x)), ring=q)
    try:
        inv = mq.inverse()
    except NonInvertible:
        return None
    out = []
    for z in inv.entries:
        if z.b != 0 or z.d != 1:
            return None
        out.append(z.a)
    return Matrix(m.ring, m.rows, m.cols, out)


# -- operations on morphisms ---------------------------------------------------

def compose(f: Matrix, g: Matrix) -> Matrix:
    """f . g: first g, then f."""
    return f @ g


def dagger(f: Matrix) -> Matrix:
    return f.dagger()


def kron(f: Matrix, g: Matrix) -> Matrix:
    return f.kron(g)


def direct_sum(f: Matrix, g: Matrix) -> Matrix:
    return f.direct_sum(g)


def kron_all(ms: Iterable[Matrix], ring: ScalarRing) -> Matrix:
    out = Matrix.identity(ring, 1)
    for m in ms:
        out = out.kron(m)
    return out


def permutation(ring: ScalarRing, images: Sequence[int]) -> Matrix:
    """Permutation matrix sending basis vector j to basis vector images[j]."""
    if sorted(images) != list(range(len(images))):
        raise ValueError("not a permutation")
    return Matrix.from_columns_map(ring, len(images), images)


def braiding(ring: ScalarRing, n: int, m: int) -> Matrix:
    """Swap n*m -> m*n: e_i (x) e_j -> e_j (x) e_i."""
    return Matrix.from_columns_map(ring, n * m, [j * n + i for i in range(n) for j in range(m)])


def injection(ring: ScalarRing, dims: Sequence[int], k: int) -> Matrix:
    """The k-th standard coprojection dims[k] -> sum(dims)."""
    offset = sum(dims[:k])
    return Matrix.from_columns_map(ring, sum(dims), [offset + j for j in range(dims[k])])


def projection(ring: ScalarRing, dims: Sequence[int], k: int) -> Matrix:
    return injection(ring, dims, k).transpose()


@dataclass(frozen=True)
class BiproductStructure:
    n: int
    m: int
    apex: int
    kappa: tuple[Matrix, Matrix]
    pi: tuple[Matrix, Matrix]

    def equations(self) -> dict[str, bool]:
        ring = self.kappa[0].ring
        (k1, k2), (p1, p2) = self.kappa, self.pi
        return {
            "pi1.k1=id": p1 @ k1 == Matrix.identity(ring, self.n),
            "pi2.k2=id": p2 @ k2 == Matrix.identity(ring, self.m),
            "pi2.k1=0": (p2 @ k1).is_zero(),
            "pi1.k2=0": (p1 @ k2).is_zero(),
            "k1.pi1+k2.pi2=id": (k1 @ p1) + (k2 @ p2) == Matrix.identity(ring, self.apex),
            "dagger(k)=pi": k1.dagger() == p1 and k2.dagger() == p2,
        }

    def verify(self) -> bool:
        return all(self.equations().values())


def biproduct(ring: ScalarRing, n: int, m: int) -> BiproductStructure:
    dims = (n, m)
    return BiproductStructure(
        n, m, n + m,
        (injection(ring, dims, 0), injection(ring, dims, 1)),
        (projection(ring, dims, 0), projection(ring, dims, 1)),
    )


@dataclass(frozen=True)
class CompactStructure:
    """Self-duality n* = n with cup: 1 -> n*n and cap: n*n -> 1."""

    n: int
    cup: Matrix
    cap: Matrix

    def snakes(self) -> tuple[Matrix, Matrix]:
        ring = self.cup.ring
        ident = Matrix.identity(ring, self.n)
        first = self.cap.kron(ident) @ ident.kron(self.cup)
        second = ident.kron(self.cap) @ self.cup.kron(ident)
        return first, second

    def verify(self) -> bool:
        ident = Matrix.identity(self.cup.ring, self.n)
        return all(s == ident for s in self.snakes())


def compact(ring: ScalarRing, n: int) -> CompactStructure:
    data = [ring.zero] * (n * n)
    for i in range(n):
        data[i * n + i] = ring.one
    cup = Matrix(ring, n * n, 1, data)
    structure = CompactStructure(n, cup, cup.dagger())
    if not structure.verify():
        raise AssertionError("snake equations failed")  # pragma: no cover
    return structure


def distributivity_iso(ring: ScalarRing, a: int, b: int, c: int) -> Matrix:
    """The map a*b + a*c -> a*(b+c) restricting to id_a (x) kappa on each summand."""
    ident = Matrix.identity(ring, a)
    left = ident.kron(injection(ring, (b, c), 0))
    right = ident.kron(injection(ring, (b, c), 1))
    return left.hstack(right)
