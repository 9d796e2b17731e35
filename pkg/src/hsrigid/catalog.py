"""Catalog of named embeddings, loaded from YAML."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

import yaml

from .concrete import models
from .concrete import poly as P
from .concrete.jets import PolynomialMap
from .grading import HSSGrading, parse_grading
from .notation import parse_weight
from .rootdata import Weight


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    grading_spec: str
    weight_spec: str
    model: Mapping[str, Any] | None = field(default=None, compare=False)

    @property
    def grading(self) -> HSSGrading:
        return parse_grading(self.grading_spec)

    @property
    def weight(self) -> Weight:
        return parse_weight(self.weight_spec, self.grading.datum)

    @property
    def has_model(self) -> bool:
        return self.model is not None

    def polynomial_map(self) -> PolynomialMap:
        if self.model is None:
            raise CatalogError(f"entry {self.name!r} has no polynomial model")
        return model_from_spec(self.model, self.name)


def model_from_spec(spec: Mapping[str, Any], name: str = "") -> PolynomialMap:
    if "generator" in spec:
        gen = models.GENERATORS.get(spec["generator"])
        if gen is None:
            raise CatalogError(f"{name}: unknown generator {spec['generator']!r}")
        try:
            return gen(spec)
        except KeyError as exc:
            raise CatalogError(f"{name}: generator argument {exc} missing") from None
    try:
        n = int(spec["n"])
        coords = tuple(P.from_sparse_json(c, n) for c in spec["coords"])
        base = tuple(Fraction(str(x)) for x in spec.get("base_point", ["0"] * n))
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"{name}: malformed explicit model ({exc})") from None
    return PolynomialMap(n, coords, base, name)


def default_catalog_path() -> Path:
    return Path(str(resources.files("hsrigid") / "data" / "catalog.yaml"))


def load_catalog(path: str | Path | None = None) -> dict[str, CatalogEntry]:
    path = Path(path) if path is not None else default_catalog_path()
    try:
        raw = yaml.safe_load(path.read_text())
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    except yaml.YAMLError as exc:
        raise CatalogError(f"catalog {path} is not valid YAML: {exc}") from None
    if not isinstance(raw, list):
        raise CatalogError(f"catalog {path} must be a list of entries")
    out: dict[str, CatalogEntry] = {}
    for item in raw:
        if not isinstance(item, dict) or not {"name", "grading", "lambda"} <= item.keys():
            raise CatalogError(f"catalog entry needs name, grading and lambda: {item!r}")
        entry = CatalogEntry(str(item["name"]), str(item["grading"]), str(item["lambda"]),
                             item.get("model"))
        if entry.name in out:
            raise CatalogError(f"duplicate catalog entry {entry.name!r}")
        _validate(entry)
        out[entry.name] = entry
    return out


def _validate(entry: CatalogEntry) -> None:
    try:
        grading = entry.grading
        w = entry.weight
    except ValueError as exc:
        raise CatalogError(f"{entry.name}: {exc}") from None
    if not grading.datum.is_dominant(w) or not grading.datum.is_integral(w):
        raise CatalogError(f"{entry.name}: weight {entry.weight_spec} is not dominant integral")
    if entry.model is not None and not isinstance(entry.model, Mapping):
        raise CatalogError(f"{entry.name}: model must be a mapping")


def lookup(name: str, path: str | Path | None = None) -> CatalogEntry:
    cat = load_catalog(path)
    if name not in cat:
        raise CatalogError(f"no catalog entry {name!r}; known: {', '.join(sorted(cat))}")
    return cat[name]
