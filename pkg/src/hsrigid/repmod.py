"""Finite-dimensional representations: dimensions, weight multiplicities,
tensor product decompositions and the Z-graded structure of embedding modules.

All weights are integer tuples in fundamental-weight coordinates.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .grading import HSSGrading, lie_algebra_dim
from .rootdata import RootDatum, Weight


class RepresentationError(ValueError):
    pass


def _as_int_weight(w: Sequence) -> Weight:
    out = []
    for c in w:
        f = Fraction(c)
        if f.denominator != 1:
            raise RepresentationError(f"weight {list(w)} is not integral")
        out.append(int(f))
    return tuple(out)


@dataclass(frozen=True)
class IrreducibleModule:
    datum: RootDatum
    highest_weight: Weight

    def __post_init__(self):
        hw = _as_int_weight(self.highest_weight)
        if len(hw) != self.datum.rank:
            raise RepresentationError(
                f"weight has {len(hw)} coordinates, datum {self.datum} has rank {self.datum.rank}"
            )
        if any(c < 0 for c in hw):
            raise RepresentationError(f"highest weight {list(hw)} is not dominant")
        object.__setattr__(self, "highest_weight", hw)

    @property
    def dim(self) -> int:
        return weyl_dim(self)


@dataclass(frozen=True)
class WeightSystem:
    module: IrreducibleModule
    table: Mapping[Weight, int]

    @property
    def dim(self) -> int:
        return sum(self.table.values())


@dataclass(frozen=True)
class ModuleDecomposition:
    datum: RootDatum
    entries: tuple[tuple[Weight, int], ...]  # (highest weight, multiplicity), sorted

    @classmethod
    def from_counts(cls, datum: RootDatum, counts: Mapping[Weight, int]) -> "ModuleDecomposition":
        return cls(datum, tuple(sorted((w, m) for w, m in counts.items() if m)))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    @property
    def dim(self) -> int:
        return sum(m * weyl_dim(IrreducibleModule(self.datum, w)) for w, m in self.entries)

    def multiplicity(self, w: Sequence) -> int:
        return self.as_dict().get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FundamentalFormProfile:
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))

    @property
    def order(self) -> int:
        return len(self.dims)


# -- helpers on the datum -------------------------------------------------

def _half_lengths(datum: RootDatum) -> tuple[int, ...]:
    return tuple(datum.sym_form[i][i] // 2 for i in range(datum.rank))


def _root_form_coeffs(datum: RootDatum) -> list[tuple[int, ...]]:
    """For each positive root a, the integer vector c with (mu, a) = c . mu."""
    half = _half_lengths(datum)
    return [tuple(r[k] * half[k] for k in range(datum.rank)) for r in datum.positive_roots]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def weyl_dim(module: IrreducibleModule) -> int:
    datum = module.datum
    lam = module.highest_weight
    num, den = 1, 1
    for c in _root_form_coeffs(datum):
        num *= sum(ci * (li + 1) for ci, li in zip(c, lam))
        den *= sum(c)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


def _is_weight_of(datum: RootDatum, lam: Weight, mu: Weight) -> bool:
    dom, _, _ = datum.dominant_representative(mu)
    diff = datum.weight_to_root_coords(tuple(a - b for a, b in zip(lam, dom)))
    return all(d.denominator == 1 and d >= 0 for d in diff)


@lru_cache(maxsize=256)
def _freudenthal(datum: RootDatum, lam: Weight) -> MappingProxyType:
    n = datum.rank
    half = _half_lengths(datum)
    roots_f = [datum.root_to_weight(r) for r in datum.positive_roots]
    coeffs = _root_form_coeffs(datum)
    simple_f = [datum.simple_root(i) for i in range(n)]

    mult: dict[Weight, int] = {lam: 1}
    depth: dict[Weight, tuple[int, ...]] = {lam: (0,) * n}
    layer = [lam]
    while layer:
        candidates: dict[Weight, tuple[int, ...]] = {}
        for mu in layer:
            d = depth[mu]
            for i in range(n):
                nu = tuple(a - b for a, b in zip(mu, simple_f[i]))
                if nu in mult or nu in candidates:
                    continue
                dn = list(d)
                dn[i] += 1
                candidates[nu] = tuple(dn)
        nxt = []
        for nu, dn in sorted(candidates.items()):
            if not _is_weight_of(datum, lam, nu):
                continue
            # (lam+rho)^2 - (nu+rho)^2 = (lam + nu + 2 rho, lam - nu)
            s = tuple(a + b + 2 for a, b in zip(lam, nu))
            denom = sum(dn[k] * half[k] * s[k] for k in range(n))
            assert denom > 0
            total = 0
            for rf, c in zip(roots_f, coeffs):
                k = 1
                x = tuple(a + b for a, b in zip(nu, rf))
                while x in mult:
                    total += mult[x] * _dot(c, x)
                    k += 1
                    x = tuple(a + b for a, b in zip(x, rf))
            m, r = divmod(2 * total, denom)
            assert r == 0, "Freudenthal recursion produced a non-integer"
            if m:
                mult[nu] = m
                depth[nu] = dn
                nxt.append(nu)
        layer = nxt
    return MappingProxyType(mult)


def weight_multiplicities(module: IrreducibleModule) -> WeightSystem:
    return WeightSystem(module, _freudenthal(module.datum, module.highest_weight))


def dual_module(module: IrreducibleModule) -> IrreducibleModule:
    neg = tuple(-c for c in module.highest_weight)
    dom, _, _ = module.datum.dominant_representative(neg)
    return IrreducibleModule(module.datum, dom)


def lowest_weight(module: IrreducibleModule) -> Weight:
    return tuple(-c for c in dual_module(module).highest_weight)


def tensor_decompose(m1: IrreducibleModule, m2: IrreducibleModule) -> ModuleDecomposition:
    """Klimyk's formula: sum over weights of one factor, reflected into the
    dominant chamber by the rho-shifted action."""
    if m1.datum != m2.datum:
        raise RepresentationError("tensor factors live on different root data")
    datum = m1.datum
    w1 = weight_multiplicities(m1).table
    w2 = weight_multiplicities(m2).table
    if len(w2) > len(w1):
        m1, m2, w1, w2 = m2, m1, w2, w1
    lam = m1.highest_weight
    counts: Counter = Counter()
    for nu, m in w2.items():
        hit = datum.dot_dominant(tuple(a + b for a, b in zip(lam, nu)))
        if hit is None:
            continue
        w, parity = hit
        counts[w] += parity * m
    if any(v < 0 for v in counts.values()):
        raise RepresentationError("Klimyk cancellation left a negative multiplicity")
    dec = ModuleDecomposition.from_counts(datum, counts)
    assert dec.dim == weyl_dim(m1) * weyl_dim(m2)
    return dec


def embedding_space(module: IrreducibleModule) -> IrreducibleModule:
    """S for the embedding of H as the highest-weight orbit in P(module).

    Linear forms on P(module) are the dual module, which is the graded
    module S = S_0 + S_1 + ... of the fundamental forms.
    """
    return dual_module(module)


def z_grading(grading: HSSGrading, module: IrreducibleModule) -> dict[Fraction, int]:
    """Total weight multiplicity of ``module`` on each Z-eigenvalue."""
    out: dict[Fraction, int] = defaultdict(int)
    for w, m in weight_multiplicities(module).table.items():
        out[grading.z_value(w)] += m
    return dict(out)


def graded_dims_from_min(grading: HSSGrading, module: IrreducibleModule) -> tuple[int, ...]:
    levels = z_grading(grading, module)
    lo = min(levels)
    for z in levels:
        if (z - lo).denominator != 1:
            raise RepresentationError("Z-eigenvalues differ by non-integers")
    top = int(max(levels) - lo)
    return tuple(levels.get(lo + r, 0) for r in range(top + 1))


def fundamental_form_profile(grading: HSSGrading, module: IrreducibleModule) -> FundamentalFormProfile:
    """Dimensions of S_0, S_1, ... for H in P(module).

    ``module`` is the representation whose projectivisation contains H as the
    orbit of the highest weight line; S is its dual, graded upward from the
    lowest Z-eigenvalue (S_0 is annihilated by l_{-1}).
    """
    _check_same_datum(grading, module)
    dims = graded_dims_from_min(grading, embedding_space(module))
    if dims[0] != 1:
        raise RepresentationError(
            f"lowest Z-eigenspace not a line (dimension {dims[0]}): "
            f"V({list(module.highest_weight)}) does not give an embedding with dim S_0 = 1"
        )
    assert 0 not in dims
    return FundamentalFormProfile(dims)


def gl_decomposition(grading: HSSGrading, module: IrreducibleModule) -> ModuleDecomposition:
    _check_same_datum(grading, module)
    return tensor_decompose(module, dual_module(module))


def adjoint_weights(datum: RootDatum) -> list[Weight]:
    """Highest weight of the adjoint module of each simple factor."""
    return [datum.root_to_weight(datum.highest_root(k)) for k in range(len(datum.components))]


def gperp_constituents(grading: HSSGrading, module: IrreducibleModule) -> ModuleDecomposition:
    """gl(S) with the scalars and the adjoint of every simple factor removed."""
    datum = grading.datum
    lam = module.highest_weight
    for k, comp in enumerate(datum.components):
        if not any(lam[i] for i in datum.component_slice(k)):
            raise RepresentationError(f"module is not faithful on factor {k + 1} ({comp})")
    fundamental_form_profile(grading, module)
    counts = Counter(gl_decomposition(grading, module).as_dict())
    for w in [datum.zero()] + adjoint_weights(datum):
        if counts[w] < 1:
            raise RepresentationError(f"constituent {list(w)} missing from gl(S)")
        counts[w] -= 1
    dec = ModuleDecomposition.from_counts(datum, counts)
    d = weyl_dim(module)
    assert dec.dim == d * d - lie_algebra_dim(datum) - 1
    return dec


def _check_same_datum(grading: HSSGrading, module: IrreducibleModule) -> None:
    if grading.datum != module.datum:
        raise RepresentationError("module and grading are over different root data")


def decompositions_equal(a: ModuleDecomposition, b: ModuleDecomposition) -> bool:
    return a.datum == b.datum and a.entries == b.entries


def iter_modules(decomposition: ModuleDecomposition) -> Iterable[tuple[IrreducibleModule, int]]:
    for w, m in decomposition.entries:
        yield IrreducibleModule(decomposition.datum, w), m
