"""Affine-chart parameterisations of standard equivariant embeddings,
centred at the origin of the big cell."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from . import poly as P
from .jets import PolynomialMap


def segre(dims: list[int]) -> PolynomialMap:
    """P_{n_1} x ... x P_{n_m}: all products x^1_{i_1} ... x^m_{i_m}, x^j_0 = 1."""
    n = sum(dims)
    factors = []
    off = 0
    for d in dims:
        factors.append([P.const(n)] + [P.var(n, off + i) for i in range(d)])
        off += d
    coords = [P.product(choice, n) for choice in product(*factors)]
    name = "segre(" + ",".join(map(str, dims)) + ")"
    return PolynomialMap(n, tuple(coords), (Fraction(0),) * n, name)


def veronese(n: int, d: int) -> PolynomialMap:
    """v_d(P_n): all monomials of degree <= d in n affine variables."""
    coords = []
    for r in range(d + 1):
        for combo in combinations_with_replacement(range(n), r):
            coords.append(P.product((P.var(n, i) for i in combo), n))
    return PolynomialMap(n, tuple(coords), (Fraction(0),) * n, f"veronese({n},{d})")


def grassmannian(k: int, m: int) -> PolynomialMap:
    """Gr(k, m) in its Pluecker embedding, chart [I_k | A] with A of size k x (m-k).

    Coordinates are the k x k minors; variable (i, j) of A is index i*(m-k)+j.
    """
    q = m - k
    n = k * q

    def entry(i: int, c: int) -> P.Poly:
        if c < k:
            return P.const(n, 1 if i == c else 0)
        return P.var(n, i * q + (c - k))

    def det(cols: tuple[int, ...]) -> P.Poly:
        total: P.Poly = {}
        for perm in _permutations(k):
            sign, sigma = perm
            term = P.const(n, sign)
            for i in range(k):
                term = P.mul(term, entry(i, cols[sigma[i]]))
            total = P.add(total, term)
        return total

    coords = [det(cols) for cols in combinations(range(m), k)]
    return PolynomialMap(n, tuple(coords), (Fraction(0),) * n, f"grassmannian({k},{m})")


def _permutations(k: int):
    from itertools import permutations

    for sigma in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if sigma[i] > sigma[j])
        yield (-1) ** inv, sigma


def quadric(n: int) -> PolynomialMap:
    """Q_n in P_{n+1}: chart (1, z_1, ..., z_n, z_1^2 + ... + z_n^2)."""
    q: P.Poly = {}
    for i in range(n):
        q = P.add(q, P.mul(P.var(n, i), P.var(n, i)))
    coords = [P.const(n)] + [P.var(n, i) for i in range(n)] + [q]
    return PolynomialMap(n, tuple(coords), (Fraction(0),) * n, f"quadric({n})")


GENERATORS = {
    "segre": lambda args: segre(list(args["dims"])),
    "veronese": lambda args: veronese(int(args["n"]), int(args["degree"])),
    "grassmannian": lambda args: grassmannian(int(args["k"]), int(args["m"])),
    "quadric": lambda args: quadric(int(args["n"])),
}
