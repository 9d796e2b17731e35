"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a dict ``{exponent tuple: Fraction}`` with no zero values.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]
Poly = dict[Exponent, Fraction]


def clean(p: Mapping[Exponent, Fraction]) -> Poly:
    return {e: Fraction(c) for e, c in p.items() if c}


def const(n: int, c=1) -> Poly:
    return clean({(0,) * n: Fraction(c)})


def var(n: int, i: int) -> Poly:
    return {tuple(1 if j == i else 0 for j in range(n)): Fraction(1)}


def add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return clean(out)


def scale(p: Poly, c) -> Poly:
    return clean({e: v * c for e, v in p.items()})


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def mul(p: Poly, q: Poly) -> Poly:
    out: dict[Exponent, Fraction] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return clean(out)


def product(polys: Iterable[Poly], n: int) -> Poly:
    out = const(n)
    for p in polys:
        out = mul(out, p)
    return out


def degree(p: Poly) -> int:
    return max((sum(e) for e in p), default=-1)


def homogeneous_part(p: Poly, r: int) -> Poly:
    return {e: c for e, c in p.items() if sum(e) == r}


def derivative(p: Poly, i: int) -> Poly:
    out: dict[Exponent, Fraction] = {}
    for e, c in p.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = out.get(tuple(f), 0) + c * e[i]
    return clean(out)


def shift(p: Poly, base: Sequence) -> Poly:
    """p(base + t) as a polynomial in t (Taylor expansion at ``base``)."""
    if not any(base):
        return dict(p)
    out: dict[Exponent, Fraction] = {}
    for e, c in p.items():
        # prod_i (b_i + t_i)^{e_i}
        terms: dict[Exponent, Fraction] = {(): Fraction(c)}
        for i, k in enumerate(e):
            b = Fraction(base[i])
            nxt: dict[Exponent, Fraction] = {}
            for head, v in terms.items():
                for j in range(k + 1):
                    coef = comb(k, j) * b ** (k - j)
                    if coef:
                        key = head + (j,)
                        nxt[key] = nxt.get(key, 0) + v * coef
            terms = nxt
        for key, v in terms.items():
            out[key] = out.get(key, 0) + v
    return clean(out)


def monomials(n: int, r: int) -> list[Exponent]:
    """Degree-r exponents, ordered so that z_1 powers come first."""
    out = []
    for combo in combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomial_key(e: Exponent):
    return (sum(e), tuple(-x for x in e))


def format_poly(p: Poly, names: Sequence[str] | None = None) -> str:
    if not p:
        return "0"
    n = len(next(iter(p)))
    names = names or [f"z{i + 1}" for i in range(n)]
    parts = []
    for e in sorted(p, key=monomial_key):
        c = p[e]
        mono = "*".join(
            (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def to_sparse_json(p: Poly) -> dict[str, str]:
    """``{"1,0,2": "p/q"}`` exponent-vector keys, rational string values."""
    return {",".join(map(str, e)): str(c) for e, c in sorted(p.items(), key=lambda t: monomial_key(t[0]))}


def from_sparse_json(data: Mapping[str, object], n: int) -> Poly:
    out: dict[Exponent, Fraction] = {}
    for key, val in data.items():
        e = tuple(int(x) for x in str(key).split(",")) if str(key).strip() else ()
        if len(e) != n:
            raise ValueError(f"exponent {key!r} does not have {n} entries")
        out[e] = out.get(e, 0) + Fraction(str(val))
    return clean(out)
