"""Explicit Spencer complex of a graded l_{-1}-module and its H^{p,1}.

For the degree-p part of the complex

    Gamma_p --d0--> V* (x) Gamma_{p-1} --d1--> L^2 V* (x) Gamma_{p-2}

with (d0 c)(X) = X.c and (d1 c)(X, Y) = X.c(Y) - Y.c(X), H^{p,1} is
ker d1 / im d0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .. import linalg
from .jets import ConcreteError, MatrixLieData
from .prolong import GradedGL, SparseMatrix, is_nu_stable, sparse_bracket, sparse_of

# action[i][k] is the matrix of X_i : Gamma_k -> Gamma_{k-1}, shape (d_{k-1}, d_k)
Action = Sequence[Mapping[int, Sequence[Sequence[Fraction]]]]


@dataclass(frozen=True)
class GradedModule:
    dims: dict[int, int]
    action: tuple[dict[int, tuple[tuple[Fraction, ...], ...]], ...]

    @property
    def n(self) -> int:
        return len(self.action)

    def act(self, i: int, k: int):
        return self.action[i].get(k)

    def sparse_act(self, i: int, k: int) -> dict[tuple[int, int], Fraction]:
        key = (i, k)
        cache = self.__dict__.setdefault("_sparse_cache", {})
        if key not in cache:
            M = self.act(i, k)
            cache[key] = {} if M is None else {
                (r, c): v for r, line in enumerate(M) for c, v in enumerate(line) if v
            }
        return cache[key]


@dataclass(frozen=True)
class DegreeData:
    p: int
    dim_c0: int
    dim_c1: int
    dim_c2: int
    rank_d0: int
    rank_d1: int

    @property
    def h1(self) -> int:
        return self.dim_c1 - self.rank_d0 - self.rank_d1

    @property
    def h0(self) -> int:
        return self.dim_c0 - self.rank_d0

    @property
    def coker_d1(self) -> int:
        return self.dim_c2 - self.rank_d1


def module_from_gl_subspace(
    data: MatrixLieData, gamma: Mapping[int, Sequence[SparseMatrix]]
) -> GradedModule:
    """Action of nu(X) by commutator on a nu-stable graded subspace of gl(S)."""
    if not is_nu_stable(data, gamma):
        raise ConcreteError("Gamma is not stable under the nu-action")
    gl = GradedGL(data.grading_of_S)
    nus = [sparse_of(M) for M in data.nu]
    dims = {k: len(v) for k, v in gamma.items() if v}
    action = []
    for N in nus:
        per_deg = {}
        for k, basis in gamma.items():
            if not basis or k - 1 not in dims:
                continue
            target = gamma[k - 1]
            tvecs = [gl.vector(k - 1, T) for T in target]
            nt = len(gl.basis(k - 1))
            A = [[tv.get(pos, Fraction(0)) for tv in tvecs] for pos in range(nt)]
            imgs = [gl.vector(k - 1, sparse_bracket(N, M)) for M in basis]
            cols = linalg.solve_many(
                A, [[img.get(pos, Fraction(0)) for pos in range(nt)] for img in imgs]
            )
            assert cols is not None
            per_deg[k] = tuple(tuple(cols[c][r] for c in range(len(basis))) for r in range(len(target)))
        action.append(per_deg)
    return GradedModule(dims, tuple(action))


Sparse = dict[tuple[int, int], Fraction]


def _block_rows(blocks: list[tuple[int, int, Sparse, int]]):
    """Assemble sparse rows from (row offset, col offset, matrix, sign) blocks."""
    rows: dict[int, dict[int, Fraction]] = {}
    for ro, co, M, sign in blocks:
        for (r, c), v in M.items():
            row = rows.setdefault(ro + r, {})
            row[co + c] = row.get(co + c, 0) + sign * v
    return [linalg.sparse_integer_row(r) for r in rows.values() if any(r.values())]


def _mat(module: GradedModule, i: int, k: int) -> Sparse:
    return module.sparse_act(i, k)


def _sparse_mul(A: Sparse, B: Sparse) -> Sparse:
    b_rows: dict[int, list[tuple[int, Fraction]]] = {}
    for (r, c), v in B.items():
        b_rows.setdefault(r, []).append((c, v))
    out: dict[tuple[int, int], Fraction] = {}
    for (r, k), v in A.items():
        for c, w in b_rows.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + v * w
    return {rc: v for rc, v in out.items() if v}


def degree_data(module: GradedModule, p: int, check: bool = True) -> DegreeData:
    n = module.n
    d = module.dims
    d0, d1, d2 = d.get(p, 0), d.get(p - 1, 0), d.get(p - 2, 0)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # d0 : Gamma_p -> sum_i Gamma_{p-1}; rows indexed by (i, basis of Gamma_{p-1})
    blocks0 = [(i * d1, 0, _mat(module, i, p), 1) for i in range(n)] if d0 and d1 else []
    rank0 = linalg.sparse_rank(_block_rows(blocks0))
    blocks1 = []
    if d1 and d2:
        for q, (i, j) in enumerate(pairs):
            blocks1.append((q * d2, j * d1, _mat(module, i, p - 1), 1))
            blocks1.append((q * d2, i * d1, _mat(module, j, p - 1), -1))
    rank1 = linalg.sparse_rank(_block_rows(blocks1))
    if check and d0 and d2:
        # d1 o d0 = X_i X_j - X_j X_i on Gamma_p
        for i, j in pairs:
            a = _sparse_mul(_mat(module, i, p - 1), _mat(module, j, p))
            b = _sparse_mul(_mat(module, j, p - 1), _mat(module, i, p))
            if a != b:
                raise ConcreteError(f"d o d != 0 in degree {p}")
    return DegreeData(p, d0, n * d1, len(pairs) * d2, rank0, rank1)


def spencer_bruteforce_module(module: GradedModule) -> dict[int, int]:
    """dim H^{p,1} for every p with nonzero 1-cochains."""
    if not module.dims:
        return {}
    lo, hi = min(module.dims), max(module.dims)
    return {p: degree_data(module, p).h1 for p in range(lo + 1, hi + 2)}


def spencer_bruteforce(
    data: MatrixLieData, gamma: Mapping[int, Sequence[SparseMatrix]]
) -> dict[int, int]:
    return spencer_bruteforce_module(module_from_gl_subspace(data, gamma))


def nonzero_degrees(h: Mapping[int, int]) -> dict[int, int]:
    return {p: v for p, v in sorted(h.items()) if v}
