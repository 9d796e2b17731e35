"""Exact linear algebra over the rationals.

Rows are reduced fraction-free: every stored row is a primitive integer
vector (gcd of entries 1, kept sparse as ``{column: int}``), and elimination
uses cross-multiplication followed by content removal.  Rationals only
appear when solutions are read back.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction
SparseRow = dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    # Normalise sign so the leading entry is positive.
    if row and row[min(row)] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def integer_row(values: Iterable[Number], offset: int = 0) -> SparseRow:
    """Clear denominators of a dense rational row and return it sparse."""
    vals = [Fraction(v) for v in values]
    den = 1
    for v in vals:
        if v:
            den = lcm(den, v.denominator)
    return {
        offset + i: int(v * den) for i, v in enumerate(vals) if v
    }


def sparse_integer_row(entries: dict[int, Number]) -> SparseRow:
    den = 1
    for v in entries.values():
        if v:
            den = lcm(den, Fraction(v).denominator)
    return {c: int(Fraction(v) * den) for c, v in entries.items() if v}


class Echelon:
    """Incrementally maintained echelon basis of a row space.

    With ``reduced=True`` the basis is kept in reduced form (each pivot
    column is zero in every other row), which is what ``nullspace`` needs.
    """

    def __init__(self, reduced: bool = False):
        self.reduced = reduced
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: SparseRow) -> SparseRow:
        row = dict(row)
        while True:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                return row
            c = min(hits)
            prow = self.pivots[c]
            pv, rv = prow[c], row[c]
            g = gcd(pv, rv)
            mr, mp = pv // g, rv // g
            new = {k: v * mr for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - mp * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new

    def reduce(self, row: SparseRow) -> SparseRow:
        """Residue of ``row`` modulo the current row space (integer scaled)."""
        return self._reduce(row)

    def contains(self, row: SparseRow) -> bool:
        return not self._reduce(row)

    def add(self, row: SparseRow) -> bool:
        """Insert a row; return True iff it enlarged the row space."""
        row = self._reduce(row)
        if not row:
            return False
        row = _primitive(row)
        c = min(row)
        if self.reduced:
            pv = row[c]
            for pc, prow in list(self.pivots.items()):
                rv = prow.get(c)
                if not rv:
                    continue
                g = gcd(pv, rv)
                mr, mp = pv // g, rv // g
                new = {k: v * mr for k, v in prow.items()}
                for k, v in row.items():
                    nv = new.get(k, 0) - mp * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                self.pivots[pc] = _primitive(new)
        self.pivots[c] = row
        return True

    def rows(self) -> list[SparseRow]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def rank(matrix: Sequence[Sequence[Number]]) -> int:
    ech = Echelon()
    for r in matrix:
        ech.add(integer_row(r))
    return ech.rank


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace_sparse(rows: Iterable[SparseRow], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    ech = Echelon(reduced=True)
    for r in rows:
        ech.add(r)
    pivot_of_col = ech.pivots
    free = [c for c in range(ncols) if c not in pivot_of_col]
    # column -> list of (pivot column, coefficient) to speed up assembly
    by_col: dict[int, list[tuple[int, int]]] = {}
    for pc, prow in pivot_of_col.items():
        for c, v in prow.items():
            if c != pc:
                by_col.setdefault(c, []).append((pc, v))
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for pc, v in by_col.get(f, ()):
            x[pc] = Fraction(-v, pivot_of_col[pc][pc])
        basis.append(x)
    return basis


def nullspace(matrix: Sequence[Sequence[Number]], ncols: int | None = None) -> list[list[Fraction]]:
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    return nullspace_sparse((integer_row(r) for r in matrix), ncols)


def solve(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Fraction] | None:
    """One solution x of matrix . x = rhs, or None if inconsistent."""
    ncols = len(matrix[0]) if matrix else 0
    ech = Echelon(reduced=True)
    for r, b in zip(matrix, rhs):
        ech.add(integer_row(list(r) + [b]))
    if ncols in ech.pivots:
        return None
    x = [Fraction(0)] * ncols
    for pc, prow in ech.pivots.items():
        x[pc] = Fraction(prow.get(ncols, 0), prow[pc])
    return x


def solve_many(
    matrix: Sequence[Sequence[Number]], rhs_columns: Sequence[Sequence[Number]]
) -> list[list[Fraction]] | None:
    """Solve matrix . x_j = b_j for every column b_j with a single elimination."""
    ncols = len(matrix[0]) if matrix else 0
    k = len(rhs_columns)
    ech = Echelon(reduced=True)
    for i, r in enumerate(matrix):
        ech.add(integer_row(list(r) + [b[i] for b in rhs_columns]))
    if any(c in ech.pivots for c in range(ncols, ncols + k)):
        return None
    out = [[Fraction(0)] * ncols for _ in range(k)]
    for pc, prow in ech.pivots.items():
        for j in range(k):
            v = prow.get(ncols + j)
            if v:
                out[j][pc] = Fraction(v, prow[pc])
    return out


def inverse(matrix: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    n = len(matrix)
    ech = Echelon(reduced=True)
    for i, r in enumerate(matrix):
        aug = list(r) + [1 if j == i else 0 for j in range(n)]
        ech.add(integer_row(aug))
    if any(c not in ech.pivots for c in range(n)):
        raise ValueError("matrix is singular")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for c in range(n):
        prow = ech.pivots[c]
        for k, v in prow.items():
            if k >= n:
                inv[c][k - n] = Fraction(v, prow[c])
    return inv


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bareiss_rank(matrix: Sequence[Sequence[Number]]) -> int:
    """Dense one-step Bareiss elimination; independent of :class:`Echelon`."""
    rows = [integer_row(r) for r in matrix]
    ncols = len(matrix[0]) if matrix else 0
    m = [[r.get(c, 0) for c in range(ncols)] for r in rows]
    nrows = len(m)
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (p * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    m = [list(map(int, r)) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1
