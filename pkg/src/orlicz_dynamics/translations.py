"""Weighted translation operators and their orbit weight products.

The operator T applies a positive weight after a right translation by a
fixed group element a; S divides by the weight and translates back, so
T(S(h)) = h exactly.  All dynamical criteria reduce to the two product
sequences along the orbit of a point x:

    forward products   prod_{j=1..n} w(x * a^j)
    backward products  1 / prod_{j=0..n-1} w(x * a^{-j})

Products are accumulated in linear space and in log space side by side;
for long orbits (n > 128) the linear value may legitimately underflow to
0.0 (or overflow to inf) while the log value stays finite, so callers
needing magnitudes at that length should use the *_pair or *_series
variants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .groups import Element, Group
from .orlicz import OrliczVector


@dataclass(frozen=True)
class ConstantWeight:
    c: float

    def __post_init__(self):
        if not self.c > 0.0:
            raise ValueError("constant weight must be positive")

    def __call__(self, g: Element) -> float:
        return self.c

    def sup_bound(self) -> float:
        return self.c

    def inf_bound(self) -> float:
        return self.c


@dataclass(frozen=True)
class TwoSidedStepWeight:
    """On the integers: c_neg for x <= 0, c_pos for x >= 1."""

    c_neg: float
    c_pos: float

    def __post_init__(self):
        if not (self.c_neg > 0.0 and self.c_pos > 0.0):
            raise ValueError("step weights must be positive")

    def __call__(self, g: int) -> float:
        return self.c_pos if g >= 1 else self.c_neg

    def sup_bound(self) -> float:
        return max(self.c_neg, self.c_pos)

    def inf_bound(self) -> float:
        return min(self.c_neg, self.c_pos)


@dataclass(frozen=True)
class HeisenbergDyadicWeight:
    """Dyadic step weight on Heisenberg triples, keyed by the z coordinate:
    1/2 for z >= 1, 2^{-z} for -1 < z < 1, and 2 for z <= -1.

    At integer z the values are exact powers of two, so orbit products of
    this weight are exact in floating point.
    """

    def __call__(self, g: tuple[int, int, int]) -> float:
        z = g[2]
        if z >= 1:
            return 0.5
        if z <= -1:
            return 2.0
        return 2.0 ** (-z)

    def sup_bound(self) -> float:
        return 2.0

    def inf_bound(self) -> float:
        return 0.5


@dataclass(frozen=True)
class TableWeight:
    """Explicit per-element weights with a default for everything else."""

    entries: tuple[tuple[Element, float], ...]
    default: float = 1.0

    def __post_init__(self):
        table = {g: float(v) for g, v in self.entries}
        if any(v <= 0.0 for v in table.values()) or not self.default > 0.0:
            raise ValueError("weights must be positive")
        object.__setattr__(self, "entries", tuple(sorted(table.items(), key=lambda e: repr(e[0]))))
        object.__setattr__(self, "_table", table)

    def __call__(self, g: Element) -> float:
        return self._table.get(g, self.default)

    def sup_bound(self) -> float:
        return max(max(self._table.values(), default=self.default), self.default)

    def inf_bound(self) -> float:
        return min(min(self._table.values(), default=self.default), self.default)


Weight = ConstantWeight | TwoSidedStepWeight | HeisenbergDyadicWeight | TableWeight


@dataclass(frozen=True)
class WeightedSystem:
    """A group, a translation element a, a weight and a Young function."""

    group: Group
    a: Element
    weight: Weight
    young: object


class ProductValue(NamedTuple):
    """Orbit product as (natural log, linear value).

    The linear value may be 0.0 (underflow) or inf (overflow) for long
    orbits; the log stays finite for any positive weight.
    """

    log: float
    linear: float


def apply_T(sys: WeightedSystem, f: OrliczVector) -> OrliczVector:
    """(T f)(x) = w(x) * f(x * a^{-1}); support shifts right by a."""
    g, a, w = sys.group, sys.a, sys.weight
    out = {}
    for x, v in f.items():
        y = g.mul(x, a)
        out[y] = w(y) * v
    return OrliczVector(out)


def apply_S(sys: WeightedSystem, h: OrliczVector) -> OrliczVector:
    """(S h)(x) = h(x * a) / w(x * a); right inverse of T."""
    g, a, w = sys.group, sys.a, sys.weight
    a_inv = g.inv(a)
    out = {}
    for x, v in h.items():
        out[g.mul(x, a_inv)] = v / w(x)
    return OrliczVector(out)


def apply_T_n(sys: WeightedSystem, f: OrliczVector, n: int) -> OrliczVector:
    """Closed-form n-th iterate: each support point y moves to y * a^n and
    picks up the forward product of the n weights along the way."""
    if n < 0:
        raise ValueError("iterate count must be >= 0")
    if n == 0:
        return f
    g, a = sys.group, sys.a
    shift = g.pow(a, n)
    out = {}
    for y, v in f.items():
        out[g.mul(y, shift)] = v * phi_product(sys, y, n)
    return OrliczVector(out)


def apply_S_n(sys: WeightedSystem, f: OrliczVector, n: int) -> OrliczVector:
    """Closed-form n-th iterate of S: y moves to y * a^{-n} weighted by the
    backward product."""
    if n < 0:
        raise ValueError("iterate count must be >= 0")
    if n == 0:
        return f
    g, a = sys.group, sys.a
    shift = g.pow(a, -n)
    out = {}
    for y, v in f.items():
        out[g.mul(y, shift)] = v * phi_tilde_product(sys, y, n)
    return OrliczVector(out)


def orbit_weights_forward(sys: WeightedSystem, x: Element, m: int) -> np.ndarray:
    """Array [w(x*a), w(x*a^2), ..., w(x*a^m)]."""
    g, a, w = sys.group, sys.a, sys.weight
    out = np.empty(m)
    cur = x
    for j in range(m):
        cur = g.mul(cur, a)
        out[j] = w(cur)
    return out


def orbit_weights_backward(sys: WeightedSystem, x: Element, m: int) -> np.ndarray:
    """Array [w(x), w(x*a^{-1}), ..., w(x*a^{-(m-1)})]."""
    g, a, w = sys.group, sys.a, sys.weight
    a_inv = g.inv(a)
    out = np.empty(m)
    cur = x
    for j in range(m):
        out[j] = w(cur)
        cur = g.mul(cur, a_inv)
    return out


def phi_product(sys: WeightedSystem, x: Element, n: int) -> float:
    """Forward product prod_{j=1..n} w(x * a^j); empty product is 1."""
    if n < 0:
        raise ValueError("product length must be >= 0")
    return float(math.prod(orbit_weights_forward(sys, x, n))) if n else 1.0


def phi_tilde_product(sys: WeightedSystem, x: Element, n: int) -> float:
    """Reciprocal backward product [prod_{j=0..n-1} w(x * a^{-j})]^{-1}.

    Overflows to inf when the backward product underflows (long orbits of
    small weights); use the pair variant for the log value."""
    if n < 0:
        raise ValueError("product length must be >= 0")
    if n == 0:
        return 1.0
    denom = float(math.prod(orbit_weights_backward(sys, x, n)))
    return math.inf if denom == 0.0 else 1.0 / denom


def phi_product_pair(sys: WeightedSystem, x: Element, n: int) -> ProductValue:
    """Forward product as a (log, linear) pair; see module notes on underflow."""
    ws = orbit_weights_forward(sys, x, n)
    return ProductValue(float(np.sum(np.log(ws))) if n else 0.0, float(math.prod(ws)) if n else 1.0)


def phi_tilde_product_pair(sys: WeightedSystem, x: Element, n: int) -> ProductValue:
    ws = orbit_weights_backward(sys, x, n)
    if n == 0:
        return ProductValue(0.0, 1.0)
    denom = float(math.prod(ws))
    return ProductValue(-float(np.sum(np.log(ws))), math.inf if denom == 0.0 else 1.0 / denom)


def phi_series_pair(sys: WeightedSystem, x: Element, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Incremental forward products for n = 0..n_max.

    Returns (linear, log) arrays of length n_max + 1 built by the running
    recurrence value(n+1) = value(n) * w(x * a^{n+1}).
    """
    ws = orbit_weights_forward(sys, x, n_max)
    linear = np.concatenate(([1.0], np.cumprod(ws)))
    logs = np.concatenate(([0.0], np.cumsum(np.log(ws))))
    return linear, logs


def phi_tilde_series_pair(sys: WeightedSystem, x: Element, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Incremental backward reciprocal products for n = 0..n_max."""
    ws = orbit_weights_backward(sys, x, n_max)
    with np.errstate(over="ignore", divide="ignore"):
        linear = np.concatenate(([1.0], 1.0 / np.cumprod(ws)))
    logs = np.concatenate(([0.0], -np.cumsum(np.log(ws))))
    return linear, logs


def weight_from_config(spec: dict, group: Group) -> Weight:
    """Build a weight from its config form, e.g. {"family":"constant","c":0.5}."""
    family = spec.get("family")
    if family == "constant":
        return ConstantWeight(c=float(spec["c"]))
    if family == "two_sided_step":
        if group.kind != "Z":
            raise ValueError("two_sided_step weight is defined on the integers only")
        return TwoSidedStepWeight(c_neg=float(spec["c_neg"]), c_pos=float(spec["c_pos"]))
    if family == "heisenberg_paper":
        if group.kind != "heisenberg":
            raise ValueError("heisenberg_paper weight needs the heisenberg group")
        return HeisenbergDyadicWeight()
    if family == "table":
        entries = tuple((group.element(c), float(v)) for c, v in spec["entries"])
        return TableWeight(entries=entries, default=float(spec.get("default", 1.0)))
    raise ValueError(f"unknown weight family {family!r}")


def weight_to_config(w: Weight, group: Group) -> dict:
    if isinstance(w, ConstantWeight):
        return {"family": "constant", "c": w.c}
    if isinstance(w, TwoSidedStepWeight):
        return {"family": "two_sided_step", "c_neg": w.c_neg, "c_pos": w.c_pos}
    if isinstance(w, HeisenbergDyadicWeight):
        return {"family": "heisenberg_paper"}
    if isinstance(w, TableWeight):
        rows = sorted(((group.coords(g), v) for g, v in w.entries), key=lambda r: tuple(r[0]))
        return {"family": "table", "entries": [[c, v] for c, v in rows], "default": w.default}
    raise TypeError(f"not a weight: {w!r}")
