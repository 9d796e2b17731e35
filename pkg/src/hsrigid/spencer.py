"""Spencer cohomology H^{p,1}(l_{-1}, Gamma) via Kostant's theorem.

For an irreducible l-module Gamma with lowest weight gamma, H^1(l_{-1}, Gamma)
is the sum over the simple reflections s_a (a in delta1) of the irreducible
l_0-modules with lowest weight xi = s_a(gamma) + a, sitting in Z-degree
p = xi(Z) = gamma(Z) - <gamma, a> + 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .grading import (
    FactorKind,
    HSSGrading,
    classify_factors,
    is_irreducible_pn_or_qn,
    w0_one,
)
from .repmod import (
    FundamentalFormProfile,
    IrreducibleModule,
    ModuleDecomposition,
    fundamental_form_profile,
    gperp_constituents,
    lowest_weight,
)
from .rootdata import Weight


class SpencerError(ValueError):
    pass


class Verdict(str, enum.Enum):
    RIGID = "Rigid"
    NON_RIGID_CANDIDATE = "NonRigidCandidate"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SpencerEntry:
    constituent: Weight       # lowest weight gamma
    reflection_node: int      # 0-based index of a in delta1
    xi: Weight
    p: Fraction
    multiplicity: int = 1
    h_dim: int | None = None

    def sort_key(self):
        return (self.constituent, self.reflection_node)


@dataclass(frozen=True)
class SpencerReport:
    entries: tuple[SpencerEntry, ...]
    verdict: Verdict
    reason: str = ""
    profile: FundamentalFormProfile | None = None
    gperp: ModuleDecomposition | None = field(default=None, compare=False)

    @property
    def offending(self) -> tuple[SpencerEntry, ...]:
        return tuple(e for e in self.entries if e.p >= 1)

    def degrees(self) -> dict[Fraction, int]:
        """Total dimension of H^{p,1} per degree p (needs h_dim)."""
        out: dict[Fraction, int] = {}
        for e in self.entries:
            if e.h_dim is None:
                raise SpencerError("report was built without h_dim")
            out[e.p] = out.get(e.p, 0) + e.multiplicity * e.h_dim
        return out


def _check_antidominant(gamma: Sequence) -> None:
    if any(c > 0 for c in gamma):
        raise SpencerError(f"expected a lowest weight (antidominant), got {list(gamma)}")


def entry_degree(grading: HSSGrading, gamma: Sequence, node: int) -> Fraction:
    """p = gamma(Z) - <gamma, alpha_node> + 1, using <gamma, alpha_i> = gamma[i]."""
    return grading.z_value(gamma) - gamma[node] + 1


def nonvanishing_entries(
    grading: HSSGrading, gamma_lowest: Sequence, *, multiplicity: int = 1, with_h_dim: bool = False
) -> list[SpencerEntry]:
    gamma = tuple(gamma_lowest)
    _check_antidominant(gamma)
    datum = grading.datum
    out = []
    for i in w0_one(grading):
        reflected = datum.reflect(gamma, i)
        xi = tuple(a + b for a, b in zip(reflected, datum.simple_root(i)))
        p = entry_degree(grading, gamma, i)
        assert p == grading.z_value(reflected) + 1 == grading.z_value(xi)
        entry = SpencerEntry(gamma, i, xi, p, multiplicity)
        if with_h_dim:
            entry = SpencerEntry(gamma, i, xi, p, multiplicity, h_module_dim(grading, entry))
        out.append(entry)
    return out


def _levi_positive_roots(grading: HSSGrading):
    return grading.phi0_plus


def h_module_dim(grading: HSSGrading, entry: SpencerEntry) -> int:
    """Dimension of the irreducible l_0-module with lowest weight xi.

    Its dual has highest weight -xi, dominant for the Levi roots; the Weyl
    dimension formula over Phi_0^+ gives the answer (the centre of l_0 acts
    by scalars).
    """
    datum = grading.datum
    mu = tuple(-c for c in entry.xi)
    for i in grading.level0_nodes:
        if Fraction(mu[i]).denominator != 1 or mu[i] < 0:
            raise SpencerError(f"xi = {list(entry.xi)} is not a Levi lowest weight")
    roots = _levi_positive_roots(grading)
    if not roots:
        return 1
    rho0 = [Fraction(0)] * datum.rank
    for r in roots:
        for k, c in enumerate(r):
            rho0[k] += Fraction(c, 2)
    mu_simple = datum.weight_to_root_coords(mu)
    num, den = Fraction(1), Fraction(1)
    for r in roots:
        shifted = [a + b for a, b in zip(mu_simple, rho0)]
        num *= datum.root_inner(shifted, r)
        den *= datum.root_inner(rho0, r)
    q = num / den
    assert q.denominator == 1 and q > 0
    return int(q)


def spencer_report(
    grading: HSSGrading,
    constituents: ModuleDecomposition,
    *,
    with_h_dim: bool = False,
    profile: FundamentalFormProfile | None = None,
) -> SpencerReport:
    entries: list[SpencerEntry] = []
    for w, mult in constituents.entries:
        gamma = lowest_weight(IrreducibleModule(constituents.datum, w))
        entries.extend(
            nonvanishing_entries(grading, gamma, multiplicity=mult, with_h_dim=with_h_dim)
        )
    entries.sort(key=SpencerEntry.sort_key)
    bad = [e for e in entries if e.p >= 1]
    verdict = Verdict.NON_RIGID_CANDIDATE if bad else Verdict.RIGID
    return SpencerReport(tuple(entries), verdict, "", profile, constituents)


def rigidity_check(
    grading: HSSGrading, embedding_weight: Sequence, *, with_h_dim: bool = False
) -> SpencerReport:
    """Profile, g-perp constituents and the Spencer verdict for H in P(V(lambda))."""
    if grading.warnings:
        raise SpencerError("every simple component needs a marked node: " + grading.warnings[0])
    module = IrreducibleModule(grading.datum, tuple(embedding_weight))
    profile = fundamental_form_profile(grading, module)
    gperp = gperp_constituents(grading, module)
    report = spencer_report(grading, gperp, with_h_dim=with_h_dim, profile=profile)
    kind = is_irreducible_pn_or_qn(grading)
    degrees = sorted({e.p for e in report.offending})
    if kind is not None and report.verdict != Verdict.RIGID:
        name = "projective space" if kind == FactorKind.PROJECTIVE_SPACE else "hyperquadric"
        return SpencerReport(
            report.entries,
            Verdict.NOT_APPLICABLE,
            f"H is a {name}; H^(p,1) is nonzero for p = {', '.join(map(str, degrees))}",
            profile,
            gperp,
        )
    if report.verdict == Verdict.RIGID:
        labels = [c.kind for c in classify_factors(grading) if c.nodes]
        if any(k != FactorKind.OTHER_HSS for k in labels):
            reason = "H^(p,1)(l_-1, g-perp) = 0 for p >= 1 despite a P_n or Q_n factor"
        else:
            reason = "no P_n or Q_n factor"
        return SpencerReport(report.entries, report.verdict, reason, profile, gperp)
    reason = f"H^(p,1)(l_-1, g-perp) is nonzero for p = {', '.join(map(str, degrees))}"
    return SpencerReport(report.entries, report.verdict, reason, profile, gperp)
