"""Exact rational matrices and the walk operators built from a graph.

Every matrix here carries Fraction entries so that the determinant
identities downstream hold exactly, never up to a tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import InvalidParameterError, NonSquareError
from .graphs import Graph, arc_table


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rectangular matrix over arbitrary-precision rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.entries:
            width = len(self.entries[0])
            if any(len(row) != width for row in self.entries):
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        zero = Fraction(0)
        return cls(tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def scale(self, c) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        cols = other.cols
        out = []
        for row in self.entries:
            acc = [Fraction(0)] * cols
            for k, x in enumerate(row):
                if x:
                    orow = other.entries[k]
                    for j in range(cols):
                        if orow[j]:
                            acc[j] += x * orow[j]
            out.append(tuple(acc))
        return ExactMatrix(tuple(out))

    def to_float_rows(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.entries]

    def to_json(self) -> str:
        """Row-major dump, entries as "p/q" strings in lowest terms."""
        return json.dumps({
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self.entries],
        })

    @classmethod
    def from_json(cls, text: str) -> "ExactMatrix":
        raw = json.loads(text)
        m = cls.from_rows(raw["entries"])
        if (m.rows, m.cols) != (raw["rows"], raw["cols"]):
            raise ValueError("declared shape disagrees with entries")
        return m


def det_exact(matrix: ExactMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are scaled to integers first; the scaling is divided back out of
    the integer determinant at the end.
    """
    if not matrix.is_square:
        raise NonSquareError(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if n == 0:
        return Fraction(1)

    scale = 1
    rows: list[list[int]] = []
    for row in matrix.entries:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        scale *= mult
        rows.append([int(x * mult) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


@lru_cache(maxsize=None)
def grover_matrix(g: Graph) -> ExactMatrix:
    """Time evolution operator of the Grover walk, indexed by canonical arcs.

    Entry (e, f) is 2/deg(t(f)) when arc f flows into the origin of arc e,
    with 1 subtracted on the backtracking transition f = inverse(e), and 0
    otherwise. The result is exactly orthogonal.
    """
    arcs = arc_table(g)
    deg = g.degrees()
    size = len(arcs)
    rows = []
    for e in range(size):
        oe = arcs.origin(e)
        inv_e = arcs.inverse(e)
        row = []
        for f in range(size):
            if arcs.terminus(f) == oe:
                val = Fraction(2, deg[oe])
                if f == inv_e:
                    val -= 1
                row.append(val)
            else:
                row.append(Fraction(0))
        rows.append(tuple(row))
    return ExactMatrix(tuple(rows))


@lru_cache(maxsize=None)
def transition_matrix(g: Graph) -> ExactMatrix:
    """Row-stochastic transition matrix of the simple symmetric random walk."""
    deg = g.degrees()
    if g.n > 0 and min(deg) == 0:
        # only the single-vertex graph; rows of zeros are not stochastic
        raise InvalidParameterError("random walk needs every vertex to have a neighbour")
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = Fraction(1, deg[u])
        rows[v][u] = Fraction(1, deg[v])
    return ExactMatrix(tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def adjacency_and_degree(g: Graph) -> tuple[ExactMatrix, ExactMatrix]:
    """0/1 adjacency matrix and the diagonal degree matrix."""
    adj = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        adj[u][v] = Fraction(1)
        adj[v][u] = Fraction(1)
    deg = g.degrees()
    dia = [[Fraction(deg[i]) if i == j else Fraction(0) for j in range(g.n)]
           for i in range(g.n)]
    return (ExactMatrix(tuple(tuple(r) for r in adj)),
            ExactMatrix(tuple(tuple(r) for r in dia)))


def positive_support(matrix: ExactMatrix) -> ExactMatrix:
    """Elementwise indicator of strictly positive entries."""
    if not matrix.is_square:
        raise NonSquareError("positive support is defined for square matrices here")
    one, zero = Fraction(1), Fraction(0)
    return ExactMatrix(tuple(
        tuple(one if x > 0 else zero for x in row) for row in matrix.entries))


@lru_cache(maxsize=None)
def edge_matrix(g: Graph) -> ExactMatrix:
    """Non-backtracking arc adjacency: entry (e, f) is 1 iff arc f can
    follow arc e, i.e. o(f) = t(e) and f is not the inverse of e.

    Equals positive_support(transpose(grover_matrix(g))) on every graph of
    minimum degree >= 2; on degree-1 graphs the two differ because the
    backtracking Grover entry 2/d - 1 turns positive at d = 1.
    """
    arcs = arc_table(g)
    size = len(arcs)
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for e in range(size):
        te = arcs.terminus(e)
        inv_e = arcs.inverse(e)
        rows.append(tuple(
            one if (arcs.origin(f) == te and f != inv_e) else zero
            for f in range(size)))
    return ExactMatrix(tuple(rows))
