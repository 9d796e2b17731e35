"""JSON forms of weights, decompositions, Spencer reports and verdict records.

Rationals are written as ``"p/q"`` strings (``"3"`` when integral) so the
output is exact.  Every ``*_from_json`` inverts the matching ``*_to_json``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .grading import parse_grading
from .repmod import FundamentalFormProfile, IrreducibleModule, ModuleDecomposition, weyl_dim
from .rootdata import RootDatum, Weight, build_root_datum, parse_components
from .spencer import SpencerEntry, SpencerReport, Verdict


def rational_to_json(x) -> str:
    return str(Fraction(x))


def rational_from_json(s) -> int | Fraction:
    f = Fraction(str(s))
    return int(f) if f.denominator == 1 else f


def weight_to_json(w: Sequence) -> list[str]:
    return [rational_to_json(c) for c in w]


def weight_from_json(data: Sequence) -> Weight:
    return tuple(rational_from_json(c) for c in data)


def datum_from_name(name: str) -> RootDatum:
    return build_root_datum(parse_components(name))


def decomposition_to_json(dec: ModuleDecomposition) -> list[dict[str, Any]]:
    return [
        {"weight": weight_to_json(w), "mult": m, "dim": weyl_dim(IrreducibleModule(dec.datum, w))}
        for w, m in dec.entries
    ]


def decomposition_from_json(data: Sequence[Mapping], datum: RootDatum) -> ModuleDecomposition:
    counts: dict[Weight, int] = {}
    for item in data:
        w = weight_from_json(item["weight"])
        counts[w] = counts.get(w, 0) + int(item["mult"])
        if "dim" in item and weyl_dim(IrreducibleModule(datum, w)) != int(item["dim"]):
            raise ValueError(f"dimension mismatch for constituent {list(w)}")
    return ModuleDecomposition.from_counts(datum, counts)


def profile_to_json(profile: FundamentalFormProfile | None) -> list[int] | None:
    return None if profile is None else list(profile.dims)


def profile_from_json(data) -> FundamentalFormProfile | None:
    return None if data is None else FundamentalFormProfile(tuple(int(d) for d in data))


def entry_to_json(e: SpencerEntry) -> dict[str, Any]:
    out = {
        "gamma": weight_to_json(e.constituent),
        "alpha": e.reflection_node + 1,
        "xi": weight_to_json(e.xi),
        "p": rational_to_json(e.p),
        "mult": e.multiplicity,
    }
    if e.h_dim is not None:
        out["h_dim"] = e.h_dim
    return out


def entry_from_json(data: Mapping) -> SpencerEntry:
    return SpencerEntry(
        weight_from_json(data["gamma"]),
        int(data["alpha"]) - 1,
        weight_from_json(data["xi"]),
        Fraction(str(data["p"])),
        int(data.get("mult", 1)),
        None if data.get("h_dim") is None else int(data["h_dim"]),
    )


def report_to_json(report: SpencerReport, datum: RootDatum) -> dict[str, Any]:
    return {
        "datum": str(datum),
        "entries": [entry_to_json(e) for e in report.entries],
        "verdict": report.verdict.value,
        "reason": report.reason,
        "profile": profile_to_json(report.profile),
        "gperp": None if report.gperp is None else decomposition_to_json(report.gperp),
    }


def report_from_json(data: Mapping) -> SpencerReport:
    datum = datum_from_name(data["datum"])
    gperp = data.get("gperp")
    return SpencerReport(
        tuple(entry_from_json(e) for e in data["entries"]),
        Verdict(data["verdict"]),
        data.get("reason", ""),
        profile_from_json(data.get("profile")),
        None if gperp is None else decomposition_from_json(gperp, datum),
    )


@dataclass(frozen=True)
class VerdictRecord:
    name: str
    grading: str
    weight: Weight
    profile: FundamentalFormProfile
    gperp: ModuleDecomposition
    verdict: Verdict
    reason: str
    entries: tuple[SpencerEntry, ...]
    oracle: Mapping[str, bool] | None = None  # present iff a polynomial model exists

    @classmethod
    def from_report(
        cls, name: str, grading: str, weight: Sequence, report: SpencerReport,
        oracle: Mapping[str, bool] | None = None,
    ) -> "VerdictRecord":
        return cls(name, grading, tuple(weight), report.profile, report.gperp,
                   report.verdict, report.reason, report.entries,
                   None if oracle is None else dict(oracle))

    def to_json(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "grading": self.grading,
            "weight": weight_to_json(self.weight),
            "profile": profile_to_json(self.profile),
            "gperp": decomposition_to_json(self.gperp),
            "verdict": self.verdict.value,
            "reason": self.reason,
            "entries": [entry_to_json(e) for e in self.entries],
        }
        if self.oracle is not None:
            out["oracle"] = dict(self.oracle)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "VerdictRecord":
        datum = parse_grading(data["grading"]).datum
        return cls(
            data["name"],
            data["grading"],
            weight_from_json(data["weight"]),
            profile_from_json(data["profile"]),
            decomposition_from_json(data["gperp"], datum),
            Verdict(data["verdict"]),
            data.get("reason", ""),
            tuple(entry_from_json(e) for e in data["entries"]),
            dict(data["oracle"]) if data.get("oracle") is not None else None,
        )
