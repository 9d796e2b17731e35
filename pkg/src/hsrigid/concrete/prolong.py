"""Graded pieces of gl(S), prolongation of the nu-action, and the
Killing-orthogonal complement of the prolongation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .. import linalg
from .jets import ConcreteError, MatrixLieData

# A graded matrix is stored sparsely as {(row, col): value}.
SparseMatrix = dict[tuple[int, int], Fraction]


class GradedGL:
    """gl(S) split by degree: E_ab has degree deg(a) - deg(b)."""

    def __init__(self, grading_of_S: Sequence[int]):
        self.deg = tuple(grading_of_S)
        self.dim_S = len(self.deg)
        self.pieces: dict[int, list[tuple[int, int]]] = {}
        for a in range(self.dim_S):
            for b in range(self.dim_S):
                self.pieces.setdefault(self.deg[a] - self.deg[b], []).append((a, b))
        self.index = {k: {ab: i for i, ab in enumerate(v)} for k, v in self.pieces.items()}

    def basis(self, k: int) -> list[tuple[int, int]]:
        return self.pieces.get(k, [])

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def vector(self, k: int, M: Mapping[tuple[int, int], Fraction]) -> dict[int, Fraction]:
        idx = self.index.get(k, {})
        out = {}
        for ab, v in M.items():
            if v:
                if ab not in idx:
                    raise ConcreteError(f"matrix entry {ab} is not of degree {k}")
                out[idx[ab]] = v
        return out

    def matrix(self, k: int, vec: Sequence[Fraction]) -> SparseMatrix:
        return {ab: v for ab, v in zip(self.basis(k), vec) if v}

    @property
    def degrees(self) -> list[int]:
        return sorted(self.pieces)


def sparse_of(M) -> SparseMatrix:
    return {(i, j): Fraction(v) for i, row in enumerate(M) for j, v in enumerate(row) if v}


def sparse_bracket(A: SparseMatrix, B: SparseMatrix) -> SparseMatrix:
    out: dict[tuple[int, int], Fraction] = {}
    b_rows: dict[int, list[tuple[int, Fraction]]] = {}
    for (i, j), v in B.items():
        b_rows.setdefault(i, []).append((j, v))
    a_rows: dict[int, list[tuple[int, Fraction]]] = {}
    for (i, j), v in A.items():
        a_rows.setdefault(i, []).append((j, v))
    for (i, k), v in A.items():
        for j, w in b_rows.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    for (i, k), v in B.items():
        for j, w in a_rows.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) - v * w
    return {ab: v for ab, v in out.items() if v}


@dataclass(frozen=True)
class ProlongationResult:
    dims: tuple[int, ...]                              # p_{-1}, p_0, p_1, ...
    bases: tuple[tuple[SparseMatrix, ...], ...]        # matching bases

    def piece(self, k: int) -> tuple[SparseMatrix, ...]:
        i = k + 1
        return self.bases[i] if 0 <= i < len(self.bases) else ()

    @property
    def dim(self) -> int:
        return sum(self.dims)


def prolong(data: MatrixLieData, max_degree: int | None = None) -> ProlongationResult:
    gl = GradedGL(data.grading_of_S)
    nus = [sparse_of(M) for M in data.nu]
    p_minus = linalg.Echelon()
    for M in nus:
        p_minus.add(linalg.sparse_integer_row(gl.vector(-1, M)))
    if p_minus.rank != data.n:
        raise ConcreteError("nu is not injective")
    bases: list[tuple[SparseMatrix, ...]] = [tuple(nus)]
    dims = [data.n]
    top = max(gl.degrees) if max_degree is None else max_degree
    k = 0
    while True:
        prev = bases[-1]
        if k > top or not prev:
            dims.append(0)
            bases.append(())
            break
        basis_k = gl.basis(k)
        nx = len(basis_k)
        # unknowns: x (gl_k coordinates) then c_{i,j} with [nu_i, X] = sum_j c_ij prev_j
        nprev = len(prev)
        prev_vecs = [gl.vector(k - 1, B) for B in prev]
        rows: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, N in enumerate(nus):
            for col, ab in enumerate(basis_k):
                E = {ab: Fraction(1)}
                for pos, v in gl.vector(k - 1, sparse_bracket(N, E)).items():
                    rows.setdefault((i, pos), {})[col] = v
            for j, vec in enumerate(prev_vecs):
                cvar = nx + i * nprev + j
                for pos, v in vec.items():
                    rows.setdefault((i, pos), {})[cvar] = -v
        sols = linalg.nullspace_sparse(
            (linalg.sparse_integer_row(r) for r in rows.values()), nx + data.n * nprev
        )
        ech = linalg.Echelon()
        piece = []
        for s in sols:
            x = s[:nx]
            if ech.add(linalg.integer_row(x)):
                piece.append(gl.matrix(k, x))
        dims.append(len(piece))
        bases.append(tuple(piece))
        if not piece:
            break
        k += 1
    return ProlongationResult(tuple(dims), tuple(bases))


def trace_form(A: SparseMatrix, B: SparseMatrix) -> Fraction:
    return sum((v * B.get((j, i), 0) for (i, j), v in A.items()), Fraction(0))


def killing_form_gl(m: int, A: SparseMatrix, B: SparseMatrix) -> Fraction:
    """2m tr(AB) - 2 tr(A) tr(B), the Killing form of gl(m).

    Degenerate: the identity pairs to zero with everything.  On sl(m) it is
    2m times the trace form.
    """
    tr_ab = sum((v * B.get((j, i), 0) for (i, j), v in A.items()), Fraction(0))
    tr_a = sum((v for (i, j), v in A.items() if i == j), Fraction(0))
    tr_b = sum((v for (i, j), v in B.items() if i == j), Fraction(0))
    return 2 * m * tr_ab - 2 * tr_a * tr_b


def trace_orthogonal_complement(
    data: MatrixLieData, g: ProlongationResult
) -> dict[int, list[SparseMatrix]]:
    """g-perp under the trace form tr(MN) of gl(S), degree by degree.

    The form pairs gl_k with gl_{-k}, so g-perp_k is cut out by g_{-k}.  Since
    g contains the identity, g-perp lies in sl(S), where the trace form is a
    multiple of the Killing form of gl(S).
    """
    gl = GradedGL(data.grading_of_S)
    m = data.dim_S
    out: dict[int, list[SparseMatrix]] = {}
    total = 0
    for k in gl.degrees:
        basis_k = gl.basis(k)
        partners = g.piece(-k)
        rows = []
        for N in partners:
            rows.append(
                linalg.sparse_integer_row(
                    {c: trace_form({ab: Fraction(1)}, N) for c, ab in enumerate(basis_k)}
                )
            )
        sols = linalg.nullspace_sparse(rows, len(basis_k))
        piece = [gl.matrix(k, s) for s in sols]
        # nondegeneracy: g_k and g-perp_k are complementary
        ech = linalg.Echelon()
        for M in list(g.piece(k)) + piece:
            ech.add(linalg.sparse_integer_row(gl.vector(k, M)))
        if ech.rank != len(g.piece(k)) + len(piece):
            raise ConcreteError(f"trace form degenerate on g in degree {k}")
        if piece:
            out[k] = piece
        total += len(piece)
    assert total == m * m - g.dim
    return out


def is_nu_stable(data: MatrixLieData, gamma: Mapping[int, Sequence[SparseMatrix]]) -> bool:
    gl = GradedGL(data.grading_of_S)
    nus = [sparse_of(M) for M in data.nu]
    spans = {}
    for k, basis in gamma.items():
        ech = linalg.Echelon()
        for M in basis:
            ech.add(linalg.sparse_integer_row(gl.vector(k, M)))
        spans[k] = ech
    for k, basis in gamma.items():
        for M in basis:
            for N in nus:
                img = sparse_bracket(N, M)
                if not img:
                    continue
                if k - 1 not in spans or not spans[k - 1].contains(
                    linalg.sparse_integer_row(gl.vector(k - 1, img))
                ):
                    return False
    return True
