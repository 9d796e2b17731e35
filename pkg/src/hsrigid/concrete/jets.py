"""Fundamental forms of explicit polynomial embeddings, computed from jets.

An affine chart of M in P_N is given by coordinate polynomials f_0, ..., f_N
in z_1..z_n.  The span of the f_j is the space of hyperplane sections; its
r-jets at the base point filter it, and the r-th fundamental form is the
image in Sym^r V* of the sections whose (r-1)-jet vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .. import linalg
from ..repmod import FundamentalFormProfile
from . import poly as P
from .poly import Exponent, Poly


class ConcreteError(ValueError):
    pass


@dataclass(frozen=True)
class PolynomialMap:
    n: int
    coords: tuple[Poly, ...]
    base_point: tuple[Fraction, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(P.clean(c) for c in self.coords))
        bp = tuple(Fraction(x) for x in self.base_point) or (Fraction(0),) * self.n
        if len(bp) != self.n:
            raise ConcreteError("base point has the wrong dimension")
        object.__setattr__(self, "base_point", bp)
        for c in self.coords:
            for e in c:
                if len(e) != self.n:
                    raise ConcreteError(f"monomial {e} is not in {self.n} variables")


@dataclass(frozen=True)
class GradedSubspace:
    """pieces[r] is a basis (homogeneous degree-r polynomials) of F^r."""

    n: int
    pieces: tuple[tuple[Poly, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.pieces)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def basis(self) -> list[tuple[int, Poly]]:
        """Global basis: (degree, polynomial), degree 0 first."""
        return [(r, b) for r, piece in enumerate(self.pieces) for b in piece]

    def basis_matrix(self, r: int) -> list[list[Fraction]]:
        mons = P.monomials(self.n, r)
        return [[b.get(m, Fraction(0)) for m in mons] for b in self.pieces[r]]


def _column_index(n: int, max_deg: int) -> tuple[list[Exponent], dict[Exponent, int]]:
    cols: list[Exponent] = []
    for r in range(max_deg + 1):
        cols.extend(P.monomials(n, r))
    return cols, {e: i for i, e in enumerate(cols)}


def fundamental_form_dims(pmap: PolynomialMap) -> tuple[FundamentalFormProfile, GradedSubspace]:
    n = pmap.n
    shifted = [P.shift(c, pmap.base_point) for c in pmap.coords]
    max_deg = max((P.degree(c) for c in shifted), default=0)
    cols, index = _column_index(n, max_deg)
    deg_of_col = [sum(e) for e in cols]
    ech = linalg.Echelon(reduced=True)
    for c in shifted:
        ech.add(linalg.sparse_integer_row({index[e]: v for e, v in c.items()}))
    if ech.rank != len(pmap.coords):
        raise ConcreteError(
            f"degenerate chart: {len(pmap.coords)} coordinates span only {ech.rank} dimensions"
        )
    one = {index[(0,) * n]: 1}
    if not ech.contains(one):
        raise ConcreteError("the constant function 1 is not in the span of the coordinates")
    pieces: list[list[Poly]] = [[] for _ in range(max_deg + 1)]
    for pc in sorted(ech.pivots):
        row = ech.pivots[pc]
        r = deg_of_col[pc]
        top = {cols[c]: Fraction(v) for c, v in row.items() if deg_of_col[c] == r}
        pieces[r].append(top)
    while pieces and not pieces[-1]:
        pieces.pop()
    # normalise the degree-0 piece to the constant 1
    pieces[0] = [P.const(n)]
    dims = tuple(len(p) for p in pieces)
    if 0 in dims:
        raise ConcreteError(f"jet filtration has a gap: {dims}")
    F = GradedSubspace(n, tuple(tuple(p) for p in pieces))
    return FundamentalFormProfile(dims), F


@dataclass(frozen=True)
class ClosureWitness:
    direction: int
    degree: int
    element: Poly
    image: Poly


def _span(F: GradedSubspace, r: int) -> tuple[linalg.Echelon, dict[Exponent, int]]:
    mons = P.monomials(F.n, r) if r >= 0 else []
    index = {e: i for i, e in enumerate(mons)}
    ech = linalg.Echelon()
    if 0 <= r < len(F.pieces):
        for b in F.pieces[r]:
            ech.add(linalg.sparse_integer_row({index[e]: v for e, v in b.items()}))
    return ech, index


def iota_closure_check(F: GradedSubspace) -> tuple[bool, ClosureWitness | None]:
    """Is each F^r mapped into F^{r-1} by every partial derivative?"""
    for r in range(1, len(F.pieces)):
        ech, index = _span(F, r - 1)
        for b in F.pieces[r]:
            for i in range(F.n):
                d = P.derivative(b, i)
                if not d:
                    continue
                if not ech.contains(linalg.sparse_integer_row({index[e]: v for e, v in d.items()})):
                    return False, ClosureWitness(i, r, b, d)
    return True, None


Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class MatrixLieData:
    dim_S: int
    nu: tuple[tuple[tuple[Fraction, ...], ...], ...]  # one dim_S x dim_S matrix per direction
    grading_of_S: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.nu)


def _coordinates(piece: Sequence[Poly], target: Poly, n: int, r: int) -> list[Fraction]:
    mons = P.monomials(n, r)
    # columns of A are the basis vectors
    A = [[b.get(m, Fraction(0)) for b in piece] for m in mons]
    rhs = [target.get(m, Fraction(0)) for m in mons]
    x = linalg.solve(A, rhs)
    if x is None:
        raise ConcreteError("element is not in the span of the graded piece")
    return x


def realize_nu(F: GradedSubspace) -> MatrixLieData:
    ok, witness = iota_closure_check(F)
    if not ok:
        raise ConcreteError(
            f"F is not closed under inner multiplication: d/dz{witness.direction + 1} "
            f"of {P.format_poly(witness.element)} leaves F^{witness.degree - 1}"
        )
    basis = F.basis()
    dim = len(basis)
    offsets = []
    k = 0
    for piece in F.pieces:
        offsets.append(k)
        k += len(piece)
    mats = []
    for i in range(F.n):
        M = [[Fraction(0)] * dim for _ in range(dim)]
        for col, (r, b) in enumerate(basis):
            if r == 0:
                continue
            d = P.derivative(b, i)
            if not d:
                continue
            x = _coordinates(F.pieces[r - 1], d, F.n, r - 1)
            for j, v in enumerate(x):
                M[offsets[r - 1] + j][col] = v
        mats.append(tuple(tuple(row) for row in M))
    data = MatrixLieData(dim, tuple(mats), tuple(r for r, _ in basis))
    _check_nu(data)
    return data


def matmul(A, B) -> Matrix:
    n, m = len(A), len(B[0]) if B else 0
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(A[i], Bt[j]) if a and b), Fraction(0)) for j in range(m)]
            for i in range(n)]


def bracket(A, B) -> Matrix:
    AB, BA = matmul(A, B), matmul(B, A)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]


def _check_nu(data: MatrixLieData) -> None:
    deg = data.grading_of_S
    for M in data.nu:
        for a in range(data.dim_S):
            for b in range(data.dim_S):
                if M[a][b] and deg[a] != deg[b] - 1:
                    raise ConcreteError("nu(X) does not lower the degree by one")
    for i in range(data.n):
        for j in range(i + 1, data.n):
            if any(any(row) for row in bracket(data.nu[i], data.nu[j])):
                raise ConcreteError("nu(X) and nu(Y) do not commute")
