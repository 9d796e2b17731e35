"""Semisimple root data with exact rational Cartan data.

Conventions
-----------
* Simple roots are numbered as in Bourbaki, per component; a semisimple
  datum is the block-diagonal concatenation of its components.
* ``cartan[i][j] = <alpha_j, alpha_i> = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)``,
  so column ``j`` of ``cartan`` is ``alpha_j`` written in fundamental-weight
  coordinates.
* Roots are integer vectors in simple-root coordinates; weights are tuples in
  fundamental-weight coordinates (``w[i] = <w, alpha_i>``).
* ``sym_form`` is the invariant form on simple roots with the shortest root of
  every component of squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg

Weight = tuple  # tuple of int | Fraction, fundamental-weight coordinates
Root = tuple    # tuple of int, simple-root coordinates

SERIES = "ABCDEFG"


class RootDataError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleComponent:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(s)
        if ok is None:
            raise RootDataError(f"unknown series {s!r} in component {s}{n}")
        if not ok:
            raise RootDataError(f"invalid rank for component {s}{n}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleComponent":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise RootDataError(f"cannot parse component {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def dynkin(self) -> tuple[list[tuple[int, int]], list[int]]:
        """Edges (0-based) and half squared lengths of the simple roots."""
        s, n = self.series, self.rank
        chain = [(i, i + 1) for i in range(n - 1)]
        half = [1] * n
        if s == "A":
            edges = chain
        elif s == "B":
            edges = chain
            half = [2] * (n - 1) + [1]
        elif s == "C":
            edges = chain
            half = [1] * (n - 1) + [2]
        elif s == "D":
            edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        elif s == "E":
            edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        elif s == "F":
            edges = chain
            half = [2, 2, 1, 1]
        else:  # G2, alpha_1 short
            edges = chain
            half = [1, 3]
        return edges, half


def _component_forms(comp: SimpleComponent) -> list[list[int]]:
    edges, half = comp.dynkin()
    n = comp.rank
    sym = [[0] * n for _ in range(n)]
    for i in range(n):
        sym[i][i] = 2 * half[i]
    for i, j in edges:
        sym[i][j] = sym[j][i] = -max(half[i], half[j])
    return sym


@dataclass(frozen=True)
class RootDatum:
    components: tuple[SimpleComponent, ...]
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    sym_form: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    # derived caches, not part of equality
    _weight_gram: tuple = field(compare=False, repr=False, default=())
    _root_set: frozenset = field(compare=False, repr=False, default=frozenset())

    @property
    def rank(self) -> int:
        return len(self.cartan)

    total_rank = rank

    @property
    def offsets(self) -> list[int]:
        out, k = [], 0
        for c in self.components:
            out.append(k)
            k += c.rank
        return out

    def component_slice(self, k: int) -> range:
        start = self.offsets[k]
        return range(start, start + self.components[k].rank)

    def component_of(self, i: int) -> int:
        for k, start in enumerate(self.offsets):
            if start <= i < start + self.components[k].rank:
                return k
        raise IndexError(i)

    def __str__(self) -> str:
        return "+".join(str(c) for c in self.components)

    # -- conversions -----------------------------------------------------
    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates."""
        return tuple(self.cartan[j][i] for j in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        n = self.rank
        return tuple(sum(self.cartan[i][k] * root[k] for k in range(n)) for i in range(n))

    def weight_to_root_coords(self, w: Sequence) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(
            sum((self.cartan_inverse[i][k] * w[k] for k in range(n)), Fraction(0))
            for i in range(n)
        )

    def zero(self) -> Weight:
        return (0,) * self.rank

    def is_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._root_set

    # -- forms -----------------------------------------------------------
    def root_inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Invariant form on vectors in simple-root coordinates."""
        n = self.rank
        return sum(
            (Fraction(x[i]) * self.sym_form[i][j] * y[j]
             for i in range(n) if x[i] for j in range(n) if y[j]),
            Fraction(0),
        )

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """Invariant form on weights in fundamental coordinates."""
        g = self._weight_gram
        n = self.rank
        return sum(
            (g[i][j] * u[i] * v[j] for i in range(n) if u[i] for j in range(n) if v[j]),
            Fraction(0),
        )

    def pairing(self, beta: Sequence, root: Sequence[int]) -> Fraction:
        """<beta, gamma> = 2 (beta, gamma) / (gamma, gamma) for a root gamma."""
        root = tuple(root)
        if not self.is_root(root):
            raise RootDataError(f"{list(root)} is not a root of {self}")
        b = self.weight_to_root_coords(beta)
        return 2 * self.root_inner(b, root) / self.root_inner(root, root)

    # -- Weyl group ------------------------------------------------------
    def reflect(self, beta: Sequence, i: int) -> Weight:
        if not 0 <= i < self.rank:
            raise IndexError(f"simple root index {i} out of range")
        c = beta[i]
        if not c:
            return tuple(beta)
        return tuple(b - c * self.cartan[j][i] for j, b in enumerate(beta))

    def dominant_representative(self, beta: Sequence) -> tuple[Weight, int, int]:
        """Dominant weight in the Weyl orbit of beta, with parity and step count."""
        w = tuple(beta)
        steps = 0
        while True:
            i = next((k for k, c in enumerate(w) if c < 0), None)
            if i is None:
                return w, (-1) ** steps, steps
            w = self.reflect(w, i)
            steps += 1

    def dot_dominant(self, beta: Sequence) -> tuple[Weight, int] | None:
        """Dominant representative under the rho-shifted action.

        Returns ``(w, parity)`` with ``w + rho`` dominant in the orbit of
        ``beta + rho``, or None when ``beta + rho`` lies on a wall.
        """
        shifted = tuple(b + 1 for b in beta)
        w, parity, _ = self.dominant_representative(shifted)
        if any(c == 0 for c in w):
            return None
        return tuple(c - 1 for c in w), parity

    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    def is_dominant(self, w: Sequence) -> bool:
        return all(c >= 0 for c in w)

    def is_integral(self, w: Sequence) -> bool:
        return all(Fraction(c).denominator == 1 for c in w)

    def highest_root(self, k: int = 0) -> Root:
        rng = self.component_slice(k)
        roots = [r for r in self.positive_roots if any(r[i] for i in rng)]
        return max(roots, key=sum)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[Root]:
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i> in simple-root coordinates
                pair = sum(cartan[i][k] * beta[k] for k in range(n))
                # r = how far the alpha_i-string extends below beta
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        r += 1
                    else:
                        break
                if r - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda x: (sum(x), tuple(-c for c in x)))
        out.extend(nxt)
        layer = nxt
    return out


def build_root_datum(components: Sequence[SimpleComponent | str]) -> RootDatum:
    comps = tuple(
        SimpleComponent.parse(c) if isinstance(c, str) else c for c in components
    )
    if not comps:
        raise RootDataError("a root datum needs at least one component")
    n = sum(c.rank for c in comps)
    sym = [[0] * n for _ in range(n)]
    off = 0
    for c in comps:
        block = _component_forms(c)
        for i in range(c.rank):
            for j in range(c.rank):
                sym[off + i][off + j] = block[i][j]
        off += c.rank
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = Fraction(2 * sym[j][i], sym[i][i])
            assert v.denominator == 1
            cartan[i][j] = int(v)
    cinv = linalg.inverse(cartan)
    # Gram matrix of the fundamental weights: Cinv^T Sym Cinv
    gram = linalg.matmul(linalg.matmul(list(zip(*cinv)), sym), cinv)
    roots = _positive_roots(cartan)
    root_set = frozenset(roots) | frozenset(tuple(-c for c in r) for r in roots)
    return RootDatum(
        components=comps,
        cartan=tuple(tuple(r) for r in cartan),
        cartan_inverse=tuple(tuple(r) for r in cinv),
        sym_form=tuple(tuple(r) for r in sym),
        positive_roots=tuple(roots),
        _weight_gram=tuple(tuple(Fraction(x) for x in r) for r in gram),
        _root_set=root_set,
    )


def parse_components(text: str) -> list[SimpleComponent]:
    """Parse ``"A4"`` or ``"B3+A2"``."""
    return [SimpleComponent.parse(t) for t in text.split("+")]


def classical_positive_root_count(comp: SimpleComponent) -> int:
    s, n = comp.series, comp.rank
    if s == "A":
        return n * (n + 1) // 2
    if s in "BC":
        return n * n
    if s == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(s, n)]
