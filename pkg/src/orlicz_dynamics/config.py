"""Run configuration: JSON parsing, validation and canonical emission.

A run config names a group, a translation element, a weight, a Young
function, a finite set K (box bounds or an explicit point list), the
property to check and the search budgets.  ``emit_config(parse(c))`` is
the canonical form of c, and parsing is lossless on canonical configs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .criteria import DEFAULT_EPSILONS, CriterionRequest, Property
from .errors import ConfigError
from .groups import GROUP_KINDS, CompactSet, Element, Group, box
from .orlicz import OrliczVector
from .translations import Weight, WeightedSystem, weight_from_config, weight_to_config
from .young import YoungFunction, young_from_config, young_to_config

SCHEMA_VERSION = 1

DEFAULTS = {"L": 1, "N_max": 64, "L_max": 32, "seed": 0, "out": None}


@dataclass(frozen=True)
class RunConfig:
    group: Group
    a: Element
    weight: Weight
    young: YoungFunction
    K: CompactSet
    K_spec: tuple  # canonical ("box", bounds) or ("points", coords)
    property: Property
    L: int
    epsilons: tuple[float, ...]
    N_max: int
    L_max: int
    seed: int
    out: Optional[str]

    def system(self) -> WeightedSystem:
        return WeightedSystem(group=self.group, a=self.a, weight=self.weight, young=self.young)

    def request(self) -> CriterionRequest:
        return CriterionRequest(
            system=self.system(),
            K=self.K,
            property=self.property,
            L=self.L,
            epsilons=self.epsilons,
            N_max=self.N_max,
            L_max=self.L_max,
        )


def _require(spec: dict, key: str, path: str):
    if key not in spec:
        raise ConfigError(f"{path}.{key}", "missing required field")
    return spec[key]


def group_from_config(spec: dict) -> Group:
    kind = _require(spec, "kind", "group")
    if kind not in GROUP_KINDS:
        raise ConfigError("group.kind", f"unknown kind {kind!r}")
    try:
        if kind == "Zd":
            return GROUP_KINDS[kind](d=int(_require(spec, "d", "group")))
        if kind == "cyclic":
            return GROUP_KINDS[kind](m=int(_require(spec, "m", "group")))
        return GROUP_KINDS[kind]()
    except (ValueError, TypeError) as exc:
        raise ConfigError("group", str(exc)) from exc


def group_to_config(group: Group) -> dict:
    out = {"kind": group.kind}
    if group.kind == "Zd":
        out["d"] = group.d
    if group.kind == "cyclic":
        out["m"] = group.m
    return out


def _rank(group: Group) -> int:
    return len(group.coords(group.identity()))


def _element(group: Group, raw, path: str) -> Element:
    try:
        if isinstance(raw, int):
            return group.element(raw)
        return group.element([int(c) for c in raw])
    except (ValueError, TypeError) as exc:
        raise ConfigError(path, f"bad element {raw!r}: {exc}") from exc


def compact_set_from_config(spec: dict, group: Group) -> tuple[CompactSet, tuple]:
    """Parse K and return it with its canonical spec echo."""
    if "box" in spec:
        bounds = spec["box"]
        if bounds and isinstance(bounds[0], int):
            bounds = [bounds]
        bounds = [[int(lo), int(hi)] for lo, hi in bounds]
        if len(bounds) != _rank(group):
            raise ConfigError("K.box", f"expected {_rank(group)} bound pairs, got {len(bounds)}")
        try:
            K = box(group, bounds)
        except ValueError as exc:
            raise ConfigError("K.box", str(exc)) from exc
        return K, ("box", tuple(tuple(b) for b in bounds))
    if "points" in spec:
        pts = [_element(group, p, "K.points") for p in spec["points"]]
        if not pts:
            raise ConfigError("K.points", "point list is empty")
        K = CompactSet.of(pts)
        coords = sorted(tuple(group.coords(p)) for p in K)
        return K, ("points", tuple(coords))
    raise ConfigError("K", "need either a 'box' or a 'points' entry")


def compact_set_to_config(spec: tuple) -> dict:
    kind, payload = spec
    if kind == "box":
        return {"box": [list(b) for b in payload]}
    return {"points": [list(c) for c in payload]}


def parse_config(raw: dict) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("<root>", "config must be a JSON object")
    version = raw.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ConfigError("schema_version", f"unsupported version {version}")
    group = group_from_config(_require(raw, "group", "<root>"))
    a = _element(group, _require(raw, "a", "<root>"), "a")
    try:
        weight = weight_from_config(_require(raw, "weight", "<root>"), group)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError("weight", str(exc)) from exc
    try:
        young = young_from_config(_require(raw, "young", "<root>"))
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError("young", str(exc)) from exc
    K, K_spec = compact_set_from_config(_require(raw, "K", "<root>"), group)
    prop_raw = _require(raw, "property", "<root>")
    try:
        prop = Property(prop_raw)
    except ValueError as exc:
        raise ConfigError("property", f"unknown property {prop_raw!r}") from exc
    epsilons = tuple(float(e) for e in raw.get("epsilons", DEFAULT_EPSILONS))
    cfg = RunConfig(
        group=group,
        a=a,
        weight=weight,
        young=young,
        K=K,
        K_spec=K_spec,
        property=prop,
        L=int(raw.get("L", DEFAULTS["L"])),
        epsilons=epsilons,
        N_max=int(raw.get("N_max", DEFAULTS["N_max"])),
        L_max=int(raw.get("L_max", DEFAULTS["L_max"])),
        seed=int(raw.get("seed", DEFAULTS["seed"])),
        out=raw.get("out", DEFAULTS["out"]),
    )
    try:
        cfg.request()
    except ValueError as exc:
        raise ConfigError("<root>", str(exc)) from exc
    return cfg


def emit_config(cfg: RunConfig) -> dict:
    """Canonical JSON form: defaults materialized, elements as int arrays."""
    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_to_config(cfg.group),
        "a": cfg.group.coords(cfg.a),
        "weight": weight_to_config(cfg.weight, cfg.group),
        "young": young_to_config(cfg.young),
        "K": compact_set_to_config(cfg.K_spec),
        "property": cfg.property.value,
        "L": cfg.L,
        "epsilons": list(cfg.epsilons),
        "N_max": cfg.N_max,
        "L_max": cfg.L_max,
        "seed": cfg.seed,
        "out": cfg.out,
    }


def load_config(path: str | Path) -> RunConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError("<file>", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_config(raw)


def vector_from_file(path: str | Path, group: Group) -> OrliczVector:
    """Load a vector serialized as [[coords, value], ...]."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError("<vector>", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError("<vector>", f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if isinstance(raw, dict):
        raw = raw.get("entries", raw)
    if not isinstance(raw, list):
        raise ConfigError("<vector>", "expected a list of [coords, value] pairs")
    try:
        return OrliczVector.from_pairs(group, raw)
    except (ValueError, TypeError) as exc:
        raise ConfigError("<vector>", str(exc)) from exc
