"""|1|-gradings of semisimple Lie algebras attached to a set of simple roots."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .notation import caret_message, format_root
from .rootdata import (
    Root,
    RootDataError,
    RootDatum,
    SimpleComponent,
    Weight,
    build_root_datum,
)


class GradingError(ValueError):
    pass


class UnmarkedComponentWarning(UserWarning):
    pass


class FactorKind(str, enum.Enum):
    PROJECTIVE_SPACE = "ProjectiveSpace"
    HYPERQUADRIC = "Hyperquadric"
    OTHER_HSS = "OtherHSS"


@dataclass(frozen=True)
class FactorClass:
    component: int
    label: str
    nodes: tuple[int, ...]  # 1-based, within the component
    kind: FactorKind
    coefficient: Fraction | None  # a_i at the marked node, single-node case


@dataclass(frozen=True)
class HSSGrading:
    datum: RootDatum
    delta1: tuple[int, ...]  # 0-based global indices, sorted
    a: tuple[Fraction, ...]  # simple-root coordinates of the sum of lambda_i over delta1
    z_coeffs: tuple[Fraction, ...]  # Z = sum z_coeffs[i] h_{alpha_i}
    phi1_plus: tuple[Root, ...]
    phi0_plus: tuple[Root, ...]
    warnings: tuple[str, ...] = ()

    def z_value(self, w: Sequence) -> Fraction:
        return sum((bi * c for bi, c in zip(self.z_coeffs, w) if c), Fraction(0))

    def root_z_value(self, root: Sequence[int]) -> Fraction:
        """gamma(Z) for a root given in simple-root coordinates."""
        return sum((root[i] for i in self.delta1), Fraction(0))

    @property
    def level0_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.datum.rank) if i not in self.delta1)

    def spec_string(self) -> str:
        parts = []
        for k, comp in enumerate(self.datum.components):
            rng = self.datum.component_slice(k)
            nodes = [str(i - rng.start + 1) for i in self.delta1 if i in rng]
            parts.append(f"{comp}:{','.join(nodes)}" if nodes else str(comp))
        return "+".join(parts)


def z_value(grading: HSSGrading, w: Sequence) -> Fraction:
    return grading.z_value(w)


def make_grading(datum: RootDatum, delta1: Iterable[int]) -> HSSGrading:
    """Grading with characteristic element dual to ``delta1`` (0-based indices).

    ``a`` holds the simple-root coordinates of the sum of the fundamental
    weights at ``delta1`` (columns of the inverse Cartan matrix).  Z itself
    is expanded in coroots with the matching rows, which differ from ``a``
    off the diagonal only for non-simply-laced factors.
    """
    nodes = tuple(sorted(set(delta1)))
    n = datum.rank
    if not nodes:
        raise GradingError("delta1 must be nonempty")
    for i in nodes:
        if not 0 <= i < n:
            raise GradingError(f"node index {i + 1} out of range for {datum}")
    cinv = datum.cartan_inverse
    a = tuple(sum((cinv[i][j] for j in nodes), Fraction(0)) for i in range(n))
    b = tuple(sum((cinv[j][i] for j in nodes), Fraction(0)) for i in range(n))
    notes = []
    for k, comp in enumerate(datum.components):
        if not any(i in datum.component_slice(k) for i in nodes):
            msg = f"component {k + 1} ({comp}) has no marked node; it contributes only to l_0"
            notes.append(msg)
            warnings.warn(msg, UnmarkedComponentWarning, stacklevel=2)
    phi1, phi0 = [], []
    for root in datum.positive_roots:
        value = sum(root[i] for i in nodes)
        if value >= 2:
            raise GradingError(
                f"not a |1|-grading: positive root {format_root(root)} has Z-value {value}"
            )
        (phi1 if value == 1 else phi0).append(root)
    g = HSSGrading(datum, nodes, a, b, tuple(phi1), tuple(phi0), tuple(notes))
    # alpha_i(Z) = 1 on delta1 and 0 elsewhere
    for i in range(n):
        assert g.z_value(datum.simple_root(i)) == (1 if i in nodes else 0)
    return g


def parse_grading(text: str) -> HSSGrading:
    """Parse ``"A4:2"``, ``"A2:1+A2:1"`` or ``"A3:1,3"`` (nodes are 1-based)."""
    comps, nodes = [], []
    offset = 0
    start = 0
    for part in text.split("+"):
        head, _, tail = part.partition(":")
        try:
            comp = SimpleComponent.parse(head)
        except RootDataError as exc:
            pos = start + len(head) - len(head.lstrip())
            raise GradingError(caret_message(text, pos, str(exc))) from None
        comps.append(comp)
        pos = start + len(head) + 1
        for t in tail.split(","):
            node = t.strip()
            if node and (not node.isdigit() or not 1 <= int(node) <= comp.rank):
                col = pos + len(t) - len(t.lstrip())
                raise GradingError(
                    caret_message(text, col, f"bad node {node!r} for component {comp}")
                )
            if node:
                nodes.append(offset + int(node) - 1)
            pos += len(t) + 1
        offset += comp.rank
        start += len(part) + 1
    return make_grading(build_root_datum(comps), nodes)


def graded_dims(grading: HSSGrading) -> tuple[int, int, int]:
    n1 = len(grading.phi1_plus)
    return n1, grading.datum.rank + 2 * len(grading.phi0_plus), n1


def lie_algebra_dim(datum: RootDatum) -> int:
    return datum.rank + 2 * len(datum.positive_roots)


def _kind(series: str, rank: int, node: int) -> FactorKind:
    """Geometric type of the irreducible HSS (series rank, 1-based node)."""
    if series == "A":
        if node in (1, rank):
            return FactorKind.PROJECTIVE_SPACE
        if rank == 3 and node == 2:
            return FactorKind.HYPERQUADRIC  # Gr(2,4) = Q_4
        return FactorKind.OTHER_HSS
    if series == "B" and node == 1:
        return FactorKind.HYPERQUADRIC
    if series == "C" and rank == 2 and node == 2:
        return FactorKind.HYPERQUADRIC  # C2 = B2
    if series == "D":
        if rank == 3:
            # D3 = A3 with the branch node first
            return FactorKind.HYPERQUADRIC if node == 1 else FactorKind.PROJECTIVE_SPACE
        if node == 1 or (rank == 4 and node in (3, 4)):
            return FactorKind.HYPERQUADRIC  # triality for D4
    return FactorKind.OTHER_HSS


def classify_factors(grading: HSSGrading) -> list[FactorClass]:
    datum = grading.datum
    out = []
    for k, comp in enumerate(datum.components):
        rng = datum.component_slice(k)
        nodes = tuple(i - rng.start + 1 for i in grading.delta1 if i in rng)
        if len(nodes) != 1:
            # unmarked factor: compact-trivial, reported as OtherHSS
            out.append(FactorClass(k, str(comp), nodes, FactorKind.OTHER_HSS, None))
            continue
        node = nodes[0]
        coef = grading.z_coeffs[rng.start + node - 1]
        out.append(FactorClass(k, str(comp), nodes, _kind(comp.series, comp.rank, node), coef))
    return out


def is_irreducible_pn_or_qn(grading: HSSGrading) -> FactorKind | None:
    """The kind of H when H itself is a projective space or a hyperquadric.

    P1 x P1 (``A1:1+A1:1``) is the quadric surface.
    """
    classes = [c for c in classify_factors(grading) if c.nodes]
    if len(classes) == 1 and classes[0].kind != FactorKind.OTHER_HSS:
        return classes[0].kind
    if len(classes) == 2 and all(c.label == "A1" for c in classes):
        return FactorKind.HYPERQUADRIC
    return None


def phi_sigma(datum: RootDatum, i: int) -> list[Root]:
    """Positive roots sent to negative roots by the simple reflection s_i."""
    out = []
    for root in datum.positive_roots:
        w = datum.reflect(datum.root_to_weight(root), i)
        image = tuple(int(c) for c in datum.weight_to_root_coords(w))
        if all(c <= 0 for c in image):
            out.append(root)
    return out


def w0_one(grading: HSSGrading) -> list[int]:
    """Indices of the simple reflections forming W^0(1) (0-based)."""
    datum = grading.datum
    phi1 = set(grading.phi1_plus)
    result = []
    for i in grading.delta1:
        inv = phi_sigma(datum, i)
        alpha = tuple(1 if j == i else 0 for j in range(datum.rank))
        assert inv == [alpha] and alpha in phi1
        result.append(i)
    return result
