"""Named verification batteries and the polynomial-model cross-checks.

Each battery returns a list of :class:`CaseResult`; a case passes when the
computed value equals the expected one exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .catalog import CatalogEntry, load_catalog
from .concrete import (
    fundamental_form_dims,
    prolong,
    realize_nu,
    spencer_bruteforce,
    trace_orthogonal_complement,
)
from .concrete import models
from .concrete.complex import nonzero_degrees
from .concrete.jets import PolynomialMap
from .grading import HSSGrading, graded_dims, make_grading, parse_grading
from .repmod import (
    IrreducibleModule,
    adjoint_weights,
    fundamental_form_profile,
    lowest_weight,
)
from .rootdata import build_root_datum
from .spencer import SpencerReport, Verdict, rigidity_check


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case: str
    expected: str
    computed: str
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.suite:<12} {self.case:<28} expected {self.expected}; got {self.computed}"


# -- polynomial models against the Kostant side ----------------------------

@dataclass(frozen=True)
class ModelComparison:
    jet_profile: tuple[int, ...]
    weight_profile: tuple[int, ...]
    prolong_dims: tuple[int, ...]
    expected_prolong: tuple[int, ...]
    bruteforce: dict[int, int] | None
    kostant: dict[int, int] | None

    @property
    def flags(self) -> dict[str, bool]:
        out = {
            "profile": self.jet_profile == self.weight_profile,
            "prolong": self.prolong_dims == self.expected_prolong,
        }
        if self.bruteforce is not None:
            out["spencer"] = self.bruteforce == self.kostant
        return out


def expected_prolongation(grading: HSSGrading) -> tuple[int, ...]:
    dm, d0, dp = graded_dims(grading)
    return (dm, d0 + 1, dp, 0)


def kostant_degrees(report: SpencerReport) -> dict[int, int]:
    out = {}
    for p, d in sorted(report.degrees().items()):
        assert Fraction(p).denominator == 1
        if d:
            out[int(p)] = d
    return out


def compare_model(
    grading: HSSGrading, weight: Sequence, pmap: PolynomialMap, *, spencer: bool = True
) -> ModelComparison:
    module = IrreducibleModule(grading.datum, tuple(weight))
    weight_profile = fundamental_form_profile(grading, module).dims
    profile, F = fundamental_form_dims(pmap)
    data = realize_nu(F)
    g = prolong(data)
    brute = kostant = None
    if spencer:
        gperp = trace_orthogonal_complement(data, g)
        brute = nonzero_degrees(spencer_bruteforce(data, gperp))
        kostant = kostant_degrees(rigidity_check(grading, weight, with_h_dim=True))
    return ModelComparison(
        profile.dims, weight_profile, g.dims, expected_prolongation(grading), brute, kostant
    )


def compare_entry(entry: CatalogEntry, *, spencer: bool = True) -> ModelComparison:
    return compare_model(entry.grading, entry.weight, entry.polynomial_map(), spencer=spencer)


# -- batteries -------------------------------------------------------------

PROP7_CASES = [("A4:2", 2), ("A5:3", 3), ("C3:3", 3), ("D5:5", 5), ("E6:1", 1), ("E7:7", 7)]


def _single_node_weight(grading: HSSGrading, node: int) -> tuple[int, ...]:
    return tuple(1 if i == node - 1 else 0 for i in range(grading.datum.rank))


def suite_prop7() -> list[CaseResult]:
    out = []
    for spec, node in PROP7_CASES:
        grading = parse_grading(spec)
        report = rigidity_check(grading, _single_node_weight(grading, node))
        top = max(e.p for e in report.entries) if report.entries else None
        ok = report.verdict == Verdict.RIGID and all(e.p <= 0 for e in report.entries)
        out.append(CaseResult("prop7", f"({spec}, l{node})", "Rigid, max p <= 0",
                              f"{report.verdict.value}, max p = {top}", ok))
    return out


def segre_grading(dims: Sequence[int]) -> HSSGrading:
    return parse_grading("+".join(f"A{n}:1" for n in dims))


def segre_weight(grading: HSSGrading) -> tuple[int, ...]:
    w = [0] * grading.datum.rank
    for k in range(len(grading.datum.components)):
        w[grading.datum.component_slice(k).start] = 1
    return tuple(w)


def _adjoint_fold(grading: HSSGrading, w: Sequence[int]) -> int | None:
    """k if w is adjoint in k factors and trivial elsewhere, else None."""
    datum = grading.datum
    adj = adjoint_weights(datum)
    k = 0
    for c in range(len(datum.components)):
        rng = datum.component_slice(c)
        part = tuple(w[rng.start:rng.stop])
        if any(part):
            if part != tuple(adj[c][rng.start:rng.stop]):
                return None
            k += 1
    return k


def suite_prop8() -> list[CaseResult]:
    out = []
    for dims in [(2, 2), (2, 3), (3, 3), (2, 2, 2)]:
        grading = segre_grading(dims)
        report = rigidity_check(grading, segre_weight(grading))
        name = "segre" + str(dims).replace(" ", "")
        out.append(CaseResult("prop8", name, "Rigid", report.verdict.value,
                              report.verdict == Verdict.RIGID))
        problems = []
        firsts = [grading.datum.component_slice(c).start for c in range(len(dims))]
        for w, _ in report.gperp.entries:
            k = _adjoint_fold(grading, w)
            gamma = lowest_weight(IrreducibleModule(grading.datum, w))
            if k is None or k < 2:
                problems.append(f"{list(w)} is not a k-fold adjoint product")
                continue
            if grading.z_value(gamma) != -k:
                problems.append(f"gamma(Z) = {grading.z_value(gamma)} for k = {k}")
            for i in firsts:
                if -gamma[i] not in (0, 1):
                    problems.append(f"-<gamma, a{i + 1}> = {-gamma[i]}")
        out.append(CaseResult(
            "prop8", name + " weights", "gamma(Z) = -k, -<gamma,a1> in {0,1}",
            "; ".join(problems) or f"{len(report.gperp)} constituents ok", not problems,
        ))
    return out


def suite_remark() -> list[CaseResult]:
    out = []
    for n2 in (2, 3):
        grading = segre_grading((1, n2))
        report = rigidity_check(grading, segre_weight(grading))
        witnesses = [
            e for e in report.entries
            if e.p == 1 and e.reflection_node == 0
            and grading.z_value(e.constituent) == -2 and -e.constituent[0] == 2
        ]
        ok = report.verdict == Verdict.NON_RIGID_CANDIDATE and bool(witnesses)
        out.append(CaseResult(
            "remark", f"segre(1,{n2})",
            "NonRigidCandidate, p = 1 at a1 with gamma(Z) = -2, -<gamma,a1> = 2",
            f"{report.verdict.value}, {len(witnesses)} witness entries", ok,
        ))
    return out


def suite_oracles() -> list[CaseResult]:
    out = []
    for dims in [(1, 2), (2, 2)]:
        grading = segre_grading(dims)
        cmp = compare_model(grading, segre_weight(grading), models.segre(list(dims)))
        out.append(CaseResult("oracles", f"segre{dims}".replace(" ", ""),
                              f"Kostant {cmp.kostant}", f"brute force {cmp.bruteforce}",
                              cmp.bruteforce == cmp.kostant))
    return out


PROFILE_CASES: list[tuple[str, str, Callable[[], PolynomialMap], tuple[int, ...] | None]] = [
    ("segre(1,1)", "A1:1+A1:1", lambda: models.segre([1, 1]), None),
    ("segre(1,2)", "A1:1+A2:1", lambda: models.segre([1, 2]), None),
    ("segre(2,2)", "A2:1+A2:1", lambda: models.segre([2, 2]), (1, 4, 4)),
    ("segre(2,3)", "A2:1+A3:1", lambda: models.segre([2, 3]), None),
    ("veronese(2,2)", "A2:1", lambda: models.veronese(2, 2), (1, 2, 3)),
    ("grassmannian(2,4)", "A3:2", lambda: models.grassmannian(2, 4), (1, 4, 1)),
    ("grassmannian(2,5)", "A4:2", lambda: models.grassmannian(2, 5), (1, 6, 3)),
]

_PROFILE_WEIGHTS = {"A2:1": (2, 0), "A3:2": (0, 1, 0), "A4:2": (0, 1, 0, 0)}


def suite_profiles() -> list[CaseResult]:
    out = []
    for name, spec, make, expected in PROFILE_CASES:
        grading = parse_grading(spec)
        weight = _PROFILE_WEIGHTS.get(spec) or segre_weight(grading)
        by_weights = fundamental_form_profile(grading, IrreducibleModule(grading.datum, weight)).dims
        by_jets = fundamental_form_dims(make())[0].dims
        ok = by_weights == by_jets and (expected is None or by_jets == expected)
        out.append(CaseResult("profiles", name, f"weights {by_weights}" + (
            f", expected {expected}" if expected else ""), f"jets {by_jets}", ok))
    return out


def suite_coefficients() -> list[CaseResult]:
    out = []
    cases = [(f"A{n}", 1, Fraction(n, n + 1)) for n in range(1, 8)]
    cases += [("A3", 2, Fraction(1))]
    cases += [(f"B{n}", 1, Fraction(1)) for n in range(2, 6)]
    cases += [(f"D{n}", 1, Fraction(1)) for n in range(4, 7)]
    for comp, node, expected in cases:
        datum = build_root_datum([comp])
        grading = make_grading(datum, [node - 1])
        got = datum.cartan_inverse[node - 1][node - 1]
        ok = got == expected == grading.a[node - 1] == grading.z_coeffs[node - 1]
        out.append(CaseResult("coefficients", f"({comp}, a{node})", str(expected), str(got), ok))
    return out


def suite_prolong(catalog_path=None) -> list[CaseResult]:
    out = []
    for entry in load_catalog(catalog_path).values():
        if not entry.has_model:
            continue
        cmp = compare_entry(entry, spencer=False)
        out.append(CaseResult("prolong", entry.name, str(cmp.expected_prolong),
                              str(cmp.prolong_dims), cmp.prolong_dims == cmp.expected_prolong))
    return out


SUITES: dict[str, Callable[[], list[CaseResult]]] = {
    "prop7": suite_prop7,
    "prop8": suite_prop8,
    "remark": suite_remark,
    "oracles": suite_oracles,
    "profiles": suite_profiles,
    "coefficients": suite_coefficients,
    "prolong": suite_prolong,
}


def run_suite(name: str) -> list[CaseResult]:
    if name == "all":
        return [r for fn in SUITES.values() for r in fn()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name]()
