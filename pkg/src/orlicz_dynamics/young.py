"""Young functions and their numeric calculus.

A Young function is continuous, even, convex, vanishes only at 0 and grows
to infinity.  Built-in families:

* ``PowerYoung(p)``      -- |t|^p / p, p >= 1
* ``AlphaLogYoung(a)``   -- |t|^a * (1 + |log|t||), a > 1
* ``TableYoung(knots)``  -- piecewise-linear interpolation of a sampled
  table on [0, T], validated for monotonicity and convexity

The complementary (conjugate) function, the generalized inverse, the
doubling-ratio probe and the Young-inequality sampler are all numeric and
work uniformly across families; closed forms exist only in tests as
oracles.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import OutOfRangeError
from .numerics import bisect_root, expand_while_increasing, golden_max

CONVEXITY_SLACK = 1e-12


@dataclass(frozen=True)
class PowerYoung:
    """Phi(t) = |t|^p / p."""

    p: float

    def __post_init__(self):
        if not self.p >= 1.0:
            raise ValueError("power exponent must satisfy p >= 1")

    def evaluate(self, t: float) -> float:
        return abs(t) ** self.p / self.p


@dataclass(frozen=True)
class AlphaLogYoung:
    """Phi(t) = |t|^alpha * (1 + |log|t||).

    Strictly increasing on t >= 0 with Phi(0) = 0.  Note: for small alpha
    the raw formula has a mild concavity dip just left of t = 1 (it is
    equivalent to, but not literally, a convex function); the doubling
    probe and all norm machinery only rely on monotonicity.
    """

    alpha: float

    def __post_init__(self):
        if not self.alpha > 1.0:
            raise ValueError("alphalog exponent must satisfy alpha > 1")

    def evaluate(self, t: float) -> float:
        at = abs(t)
        if at == 0.0:
            return 0.0
        return at**self.alpha * (1.0 + abs(math.log(at)))


@dataclass(frozen=True)
class TableYoung:
    """Piecewise-linear Young function from a sampled table on [0, T].

    ``knots`` is a sequence of (t, value) pairs with t ascending from 0,
    value(0) = 0, values positive for t > 0, nondecreasing, and secant
    slopes nondecreasing (convexity) up to a 1e-12 slack.  Evaluation
    beyond the last knot raises OutOfRangeError.
    """

    knots: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ks = tuple((float(t), float(v)) for t, v in self.knots)
        object.__setattr__(self, "knots", ks)
        if len(ks) < 2:
            raise ValueError("table needs at least two knots")
        ts = [t for t, _ in ks]
        vs = [v for _, v in ks]
        if ts[0] != 0.0 or vs[0] != 0.0:
            raise ValueError("table must start at (0, 0)")
        if any(t1 >= t2 for t1, t2 in zip(ts, ts[1:])):
            raise ValueError("knot abscissae must be strictly increasing")
        if any(v <= 0.0 for v in vs[1:]):
            raise ValueError("values must be positive for t > 0")
        slopes = [(v2 - v1) / (t2 - t1) for (t1, v1), (t2, v2) in zip(ks, ks[1:])]
        for s1, s2 in zip(slopes, slopes[1:]):
            if s2 - s1 < -CONVEXITY_SLACK * max(1.0, abs(s1), abs(s2)):
                raise ValueError("table violates convexity (secant slopes decrease)")

    @property
    def domain_max(self) -> float:
        return self.knots[-1][0]

    def evaluate(self, t: float) -> float:
        at = abs(t)
        ts = [k[0] for k in self.knots]
        if at > ts[-1]:
            raise OutOfRangeError(f"|t| = {at} beyond table range {ts[-1]}")
        i = bisect_right(ts, at) - 1
        if i >= len(ts) - 1:
            return self.knots[-1][1]
        t1, v1 = self.knots[i]
        t2, v2 = self.knots[i + 1]
        return v1 + (v2 - v1) * (at - t1) / (t2 - t1)


YoungFunction = PowerYoung | AlphaLogYoung | TableYoung


@dataclass(frozen=True)
class Delta2Report:
    """Probed doubling ratio sup Phi(2t)/Phi(t) over a log-spaced grid.

    Numeric evidence only, never a proof; downstream criteria must not
    branch on it.
    """

    ratio_sup: float
    t_lo: float
    t_hi: float
    n_grid: int
    evidence_only: bool = True

    def to_json(self) -> dict:
        return {
            "ratio_sup": self.ratio_sup,
            "t_lo": self.t_lo,
            "t_hi": self.t_hi,
            "n_grid": self.n_grid,
            "evidence_only": self.evidence_only,
        }


def inverse(phi: YoungFunction, s: float) -> float:
    """Generalized inverse inf{t >= 0 : Phi(t) >= s}.

    Bracketing by doubling, then bisection to relative tolerance 1e-12.
    """
    if s < 0.0:
        raise ValueError("inverse argument must be >= 0")
    if s == 0.0:
        return 0.0
    hi = 1.0
    cap = getattr(phi, "domain_max", None)
    if cap is not None:
        if phi.evaluate(cap) < s:
            raise OutOfRangeError(f"target {s} above table maximum {phi.evaluate(cap)}")
        hi = min(hi, cap)
    guard = 0
    while phi.evaluate(hi) < s:
        hi = min(2.0 * hi, cap) if cap is not None else 2.0 * hi
        guard += 1
        if guard > 4096:
            raise RuntimeError("inverse bracket expansion failed to terminate")
    return bisect_root(lambda t: phi.evaluate(t) - s, 0.0, hi, rel_tol=1e-12)


def _bracketed_max(objective, lo: float, hi: float) -> float:
    """Max of the objective on [lo, hi]: coarse grid scan, then golden
    refinement around the best cell.

    The scan costs nothing for concave objectives and protects against the
    mild non-unimodality of equivalent-to-convex families, whose conjugate
    objective can carry two local maxima.
    """
    xs = np.linspace(lo, hi, 129)
    vals = [objective(float(x)) for x in xs]
    i = int(np.argmax(vals))
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, len(xs) - 1)])
    _, refined = golden_max(objective, a, b, abs_tol=1e-10)
    return max(refined, max(vals))


def complementary(phi: YoungFunction, y: float) -> float:
    """Complementary function sup{x|y| - Phi(x) : x >= 0}, numerically.

    Bracket expansion followed by golden-section refinement (absolute
    tolerance 1e-10 on x).  Returns math.inf when the objective is still
    increasing at the expansion cap; for table families the supremum is
    taken over the table domain.
    """
    ay = abs(y)
    if ay == 0.0:
        return 0.0

    def objective(x: float) -> float:
        return x * ay - phi.evaluate(x)

    cap = getattr(phi, "domain_max", None)
    if cap is not None:
        return max(_bracketed_max(objective, 0.0, cap), 0.0)
    hi = expand_while_increasing(objective, x_init=1.0, cap=1e18)
    if hi is None:
        return math.inf
    return max(_bracketed_max(objective, 0.0, hi), 0.0)


def young_inequality_check(phi: YoungFunction, samples: int, seed: int = 0) -> float:
    """Max of x*y - Phi(x) - Psi(y) over random (x, y) >= 0.

    Points where the numeric conjugate is infinite are skipped.  For a
    genuine Young pair the result is <= 0 up to conjugation error.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    cap = getattr(phi, "domain_max", None)
    x_hi = cap if cap is not None else 8.0
    worst = -math.inf
    for _ in range(samples):
        x = float(rng.uniform(0.0, x_hi))
        y = float(rng.uniform(0.0, 8.0))
        psi = complementary(phi, y)
        if math.isinf(psi):
            continue
        worst = max(worst, x * y - phi.evaluate(x) - psi)
    return worst


def delta2_probe(phi: YoungFunction, t_lo: float, t_hi: float, n_grid: int) -> Delta2Report:
    """Sup of Phi(2t)/Phi(t) on a log-spaced grid in [t_lo, t_hi]."""
    if not (0.0 < t_lo < t_hi):
        raise ValueError("need 0 < t_lo < t_hi")
    if n_grid < 2:
        raise ValueError("n_grid must be >= 2")
    grid = np.geomspace(t_lo, t_hi, n_grid)
    sup = 0.0
    for t in grid:
        sup = max(sup, phi.evaluate(2.0 * float(t)) / phi.evaluate(float(t)))
    return Delta2Report(ratio_sup=sup, t_lo=t_lo, t_hi=t_hi, n_grid=n_grid)


def young_from_config(spec: dict) -> YoungFunction:
    """Build a Young function from its config form, e.g. {"family":"power","p":2.0}."""
    family = spec.get("family")
    if family == "power":
        return PowerYoung(p=float(spec["p"]))
    if family == "alphalog":
        return AlphaLogYoung(alpha=float(spec["alpha"]))
    if family == "custom":
        return TableYoung(knots=tuple((float(t), float(v)) for t, v in spec["table"]))
    raise ValueError(f"unknown young family {family!r}")


def young_to_config(phi: YoungFunction) -> dict:
    if isinstance(phi, PowerYoung):
        return {"family": "power", "p": phi.p}
    if isinstance(phi, AlphaLogYoung):
        return {"family": "alphalog", "alpha": phi.alpha}
    if isinstance(phi, TableYoung):
        return {"family": "custom", "table": [[t, v] for t, v in phi.knots]}
    raise TypeError(f"not a Young function: {phi!r}")
