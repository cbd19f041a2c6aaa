"""Dense matrices over one scalar ring, with the submatrix-selection
calculus, direct sums, and the text file format.

Indices in the public API are 1-based throughout; the row-major entry
tuple is an internal detail.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import domain
from .domain import Elem, Ring, coerce, format_scalar, parse_scalar
from .errors import (
    BadIndexSet,
    EmptyResult,
    IndexOutOfRange,
    ParseError,
    RingMismatch,
    ShapeMismatch,
)


@dataclass(frozen=True)
class Matrix:
    ring: Ring
    m: int
    n: int
    entries: tuple[Elem, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ShapeMismatch(f"empty {self.m}x{self.n} matrix rejected")
        if len(self.entries) != self.m * self.n:
            raise ShapeMismatch("entry count does not match shape")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rows(ring: Ring, rows: Sequence[Sequence]) -> "Matrix":
        m = len(rows)
        if m == 0 or len(rows[0]) == 0:
            raise ShapeMismatch("matrix needs at least one row and column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("ragged rows")
        entries = tuple(coerce(ring, v) for row in rows for v in row)
        return Matrix(ring, m, n, entries)

    @staticmethod
    def identity(ring: Ring, size: int) -> "Matrix":
        one, zero = Elem.one(ring), Elem.zero(ring)
        return Matrix(
            ring, size, size,
            tuple(one if i == j else zero for i in range(size) for j in range(size)),
        )

    @staticmethod
    def zeros(ring: Ring, m: int, n: int) -> "Matrix":
        return Matrix(ring, m, n, (Elem.zero(ring),) * (m * n))

    # -- access ---------------------------------------------------------------

    def entry(self, i: int, j: int) -> Elem:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexOutOfRange(f"({i},{j}) outside {self.m}x{self.n}")
        return self.entries[(i - 1) * self.n + (j - 1)]

    def row(self, i: int) -> tuple[Elem, ...]:
        return self.entries[(i - 1) * self.n: i * self.n]

    def col(self, j: int) -> tuple[Elem, ...]:
        return self.entries[j - 1:: self.n]

    def rows(self) -> list[list[Elem]]:
        return [list(self.row(i)) for i in range(1, self.m + 1)]

    def is_square(self) -> bool:
        return self.m == self.n

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Matrix"):
        if self.ring is not other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if (self.m, self.n) != (other.m, other.n):
            raise ShapeMismatch("addition needs equal shapes")
        return Matrix(
            self.ring, self.m, self.n,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, self.m, self.n, tuple(-a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def scale(self, c: Elem) -> "Matrix":
        c = coerce(self.ring, c)
        return Matrix(self.ring, self.m, self.n, tuple(c * a for a in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ring, self.n, self.m,
            tuple(self.entries[i * self.n + j]
                  for j in range(self.n) for i in range(self.m)),
        )

    def power(self, e: int) -> "Matrix":
        if not self.is_square():
            raise ShapeMismatch("powers need a square matrix")
        out = Matrix.identity(self.ring, self.m)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return out

    def __str__(self) -> str:
        return format_matrix(self)


def multiply(a: Matrix, b: Matrix) -> Matrix:
    """Exact product: D(i,j) = sum_k A(i,k) B(k,j)."""
    a._check_ring(b)
    if a.n != b.m:
        raise ShapeMismatch(f"{a.m}x{a.n} times {b.m}x{b.n}")
    zero = Elem.zero(a.ring)
    brows = [b.row(k + 1) for k in range(b.m)]
    out = []
    for i in range(a.m):
        arow = a.row(i + 1)
        acc = [zero] * b.n
        for k in range(a.n):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = brows[k]
            for j in range(b.n):
                if not brow[j].is_zero():
                    acc[j] = acc[j] + aik * brow[j]
        out.extend(acc)
    return Matrix(a.ring, a.m, b.n, tuple(out))


def submatrix(x: Matrix, f: Sequence[int], g: Sequence[int]) -> Matrix:
    """Y(p,q) = X(f(p), g(q)); the selectors need not be injective or
    increasing."""
    if not f or not g:
        raise BadIndexSet("selectors must be nonempty")
    if any(not 1 <= i <= x.m for i in f) or any(not 1 <= j <= x.n for j in g):
        raise IndexOutOfRange("selector outside matrix bounds")
    entries = tuple(x.entry(i, j) for i in f for j in g)
    return Matrix(x.ring, len(f), len(g), entries)


def submatrix_sets(
    x: Matrix, alpha: Iterable[int], beta: Iterable[int], mode: str = "keep-keep"
) -> Matrix:
    """Set-style selection X[α|β], X(α|β), X[α|β), X(α|β]: each axis either
    keeps the set or drops it (keeping the complement), in increasing order."""
    alpha, beta = sorted(set(alpha)), sorted(set(beta))
    if any(not 1 <= i <= x.m for i in alpha) or any(not 1 <= j <= x.n for j in beta):
        raise IndexOutOfRange("index set outside matrix bounds")
    try:
        rmode, cmode = mode.split("-")
        if rmode not in ("keep", "drop") or cmode not in ("keep", "drop"):
            raise ValueError
    except ValueError:
        raise BadIndexSet(f"bad mode {mode!r}") from None
    rows = alpha if rmode == "keep" else [i for i in range(1, x.m + 1) if i not in alpha]
    cols = beta if cmode == "keep" else [j for j in range(1, x.n + 1) if j not in beta]
    if not rows or not cols:
        raise EmptyResult("selection leaves no rows or columns")
    return submatrix(x, rows, cols)


def direct_sum(b: Matrix, c: Matrix) -> Matrix:
    """Block diagonal sum of two square matrices."""
    return general_direct_sum(b, c, range(1, b.m + 1), range(1, b.m + 1))


def general_direct_sum(
    b: Matrix, c: Matrix, xset: Iterable[int], yset: Iterable[int]
) -> Matrix:
    """A with A[X|Y] = B, A(X|Y) = C and zero blocks elsewhere."""
    b._check_ring(c)
    if not b.is_square() or not c.is_square():
        raise ShapeMismatch("direct sum needs square summands")
    r, s = b.m, c.m
    size = r + s
    xs, ys = sorted(set(xset)), sorted(set(yset))
    if len(xs) != r or len(ys) != r:
        raise BadIndexSet(f"index sets must have size {r}")
    if any(not 1 <= i <= size for i in xs) or any(not 1 <= j <= size for j in ys):
        raise BadIndexSet(f"index sets must lie in 1..{size}")
    xcomp = [i for i in range(1, size + 1) if i not in xs]
    ycomp = [j for j in range(1, size + 1) if j not in ys]
    zero = Elem.zero(b.ring)
    grid = [[zero] * size for _ in range(size)]
    for p, i in enumerate(xs):
        for q, j in enumerate(ys):
            grid[i - 1][j - 1] = b.entry(p + 1, q + 1)
    for p, i in enumerate(xcomp):
        for q, j in enumerate(ycomp):
            grid[i - 1][j - 1] = c.entry(p + 1, q + 1)
    return Matrix(b.ring, size, size, tuple(v for row in grid for v in row))


def lift(a: Matrix, ring: Ring) -> Matrix:
    """Embed a matrix into a larger ring (Z -> Q, Z/Q -> Q[x])."""
    if a.ring is ring:
        return a
    if a.ring is Ring.Z and ring is Ring.Q:
        return Matrix.from_rows(ring, [[e.value for e in a.row(i)]
                                       for i in range(1, a.m + 1)])
    if a.ring in (Ring.Z, Ring.Q) and ring is Ring.QX:
        return Matrix.from_rows(ring, [[e.value for e in a.row(i)]
                                       for i in range(1, a.m + 1)])
    raise RingMismatch(f"cannot lift {a.ring} into {ring}")


# ---------------------------------------------------------------------------
# text file format

_RING_TOKENS = {r.value: r for r in Ring}


def format_matrix(a: Matrix) -> str:
    lines = [f"ring {a.ring.value}", f"rows {a.m}", f"cols {a.n}"]
    for i in range(1, a.m + 1):
        lines.append(" ".join(format_scalar(e) for e in a.row(i)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    """Parse the matrix file format; inverse of format_matrix bit-exactly."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ParseError("matrix file needs ring/rows/cols header")

    def header(idx: int, key: str) -> str:
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(f"line {idx + 1}: expected '{key} <value>'")
        return parts[1]

    ring_tok = header(0, "ring")
    if ring_tok not in _RING_TOKENS:
        raise ParseError(f"line 1: unknown ring {ring_tok!r}")
    ring = _RING_TOKENS[ring_tok]
    try:
        m, n = int(header(1, "rows")), int(header(2, "cols"))
    except ValueError:
        raise ParseError("rows/cols must be integers") from None
    if m < 1 or n < 1:
        raise ParseError(f"matrix must be at least 1x1, got {m}x{n}")
    if len(lines) != 3 + m:
        raise ParseError(f"expected {m} data lines, found {len(lines) - 3}")
    rows = []
    for r in range(m):
        toks = lines[3 + r].split()
        if len(toks) != n:
            raise ParseError(f"line {4 + r}: expected {n} scalars, found {len(toks)}")
        try:
            rows.append([parse_scalar(t, ring) for t in toks])
        except ParseError as exc:
            raise ParseError(f"line {4 + r}: {exc}") from None
    return Matrix.from_rows(ring, rows)


def parse_matrix_file(path: str) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def mat_z(rows: Sequence[Sequence]) -> Matrix:
    return Matrix.from_rows(Ring.Z, rows)


def mat_q(rows: Sequence[Sequence]) -> Matrix:
    return Matrix.from_rows(Ring.Q, rows)


def mat_qx(rows: Sequence[Sequence]) -> Matrix:
    return Matrix.from_rows(Ring.QX, rows)


def vector(ring: Ring, values: Sequence) -> Matrix:
    return Matrix.from_rows(ring, [[v] for v in values])


def scalar_matrix(ring: Ring, size: int, c) -> Matrix:
    return Matrix.identity(ring, size).scale(coerce(ring, c))


def x_identity(size: int) -> Matrix:
    """x * I_n over Q[x]."""
    return scalar_matrix(Ring.QX, size, domain.X)
