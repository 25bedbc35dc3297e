"""Measure specifications on (0, inf) and the targets they generate.

Three families cover every closed form downstream: finite point masses
(weighted exponentials), the multiplicative Haar measure dlam/lam
(target -log|x|), and the power family lam^{-sigma} dlam (target
proportional to |x|^{sigma-1}).  The raw target of a measure mu is

    f_mu(x) = integral of (e^{-lam|x|} - e^{-lam}) dmu(lam),

with the subtraction making the integral converge for Haar and for
sigma > 1.  Closed forms are used throughout; quadrature of the
defining integral is kept only as a cross-check oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import gamma as _gamma

from .errors import InvalidPointMass, InvalidSigma
from .quadrature import QuadratureConfig, integrate_ray

__all__ = [
    "PointMasses",
    "HaarLog",
    "PowerSigma",
    "MeasureSpec",
    "DilationParam",
    "validate",
    "gamma_one_minus",
    "f_mu",
    "f_mu_dilated_offset",
    "integrate_measure",
    "measure_to_json",
    "measure_from_json",
]


@dataclass(frozen=True)
class PointMasses:
    """Finite sum of weighted Dirac masses: masses = ((lam_1, w_1), ...)."""

    masses: tuple

    def __post_init__(self):
        object.__setattr__(self, "masses", tuple((float(l), float(w)) for l, w in self.masses))


@dataclass(frozen=True)
class HaarLog:
    """The measure dlam/lam on (0, inf); raw target -log|x|."""


@dataclass(frozen=True)
class PowerSigma:
    """The measure lam^{-sigma} dlam, 0 < sigma < 2, sigma != 1."""

    sigma: float


# union of the three variants
MeasureSpec = PointMasses | HaarLog | PowerSigma


@dataclass(frozen=True)
class DilationParam:
    """Dilation delta > 0: approximants have exponential type pi*delta."""

    delta: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise ValueError(f"delta must be a positive real, got {self.delta}")


def validate(spec) -> None:
    """Check a measure specification; raise on violation, else return None."""
    if isinstance(spec, HaarLog):
        return
    if isinstance(spec, PowerSigma):
        s = spec.sigma
        if not (isinstance(s, (int, float)) and math.isfinite(s)):
            raise InvalidSigma(f"sigma must be a finite real, got {s!r}")
        if not (0.0 < s < 2.0) or s == 1.0:
            raise InvalidSigma(f"sigma must lie in (0,2) excluding 1, got {s}")
        return
    if isinstance(spec, PointMasses):
        masses = spec.masses
        if len(masses) == 0:
            raise InvalidPointMass("point-mass list must be non-empty")
        prev = 0.0
        total = 0.0
        for lam, w in masses:
            if not (math.isfinite(lam) and lam > 0):
                raise InvalidPointMass(f"mass location must be positive, got {lam}")
            if not (math.isfinite(w) and w >= 0):
                raise InvalidPointMass(f"weight must be nonnegative, got {w}")
            if lam <= prev:
                raise InvalidPointMass("mass locations must be strictly increasing")
            prev = lam
            total += w * lam / (lam * lam + 1.0)
        if not math.isfinite(total):
            raise InvalidPointMass("admissibility sum is not finite")
        return
    raise TypeError(f"not a measure specification: {spec!r}")


def gamma_one_minus(sigma: float) -> float:
    """Gamma(1 - sigma) for sigma in (0,2)\\{1} (negative for sigma > 1)."""
    return float(_gamma(1.0 - sigma))


def f_mu(spec, x):
    """Raw target f_mu(x); vectorized over x, +inf where divergent.

    PointMasses -> sum w_j (e^{-lam_j|x|} - e^{-lam_j})
    HaarLog     -> -log|x|            (+inf at 0)
    PowerSigma  -> Gamma(1-sigma) (|x|^{sigma-1} - 1)
                   (+inf at 0 for sigma < 1, finite for sigma > 1)
    """
    validate(spec)
    ax = np.abs(np.asarray(x, dtype=float))
    scalar = ax.ndim == 0
    ax = np.atleast_1d(ax)
    if isinstance(spec, PointMasses):
        lam = np.array([m[0] for m in spec.masses])
        w = np.array([m[1] for m in spec.masses])
        out = np.exp(-np.multiply.outer(ax, lam)) - np.exp(-lam)
        out = out @ w
    elif isinstance(spec, HaarLog):
        with np.errstate(divide="ignore"):
            out = -np.log(ax)
    else:
        g = gamma_one_minus(spec.sigma)
        with np.errstate(divide="ignore"):
            out = g * (ax ** (spec.sigma - 1.0) - 1.0)
    return float(out[0]) if scalar else out


def f_mu_dilated_offset(spec, delta: float) -> float:
    """The constant f_mu(1/delta) relating a dilated approximant back.

    If F approximates the target of the dilated measure, then
    F(delta*x) + f_mu_dilated_offset(spec, delta) approximates f_mu(x).
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    return float(f_mu(spec, 1.0 / delta))


def integrate_measure(spec, g, cfg: QuadratureConfig | None = None,
                      tail_cut: float | None = None) -> float:
    """integral of g(lam) dmu(lam) over (0, inf).

    Exact weighted sum for point masses; adaptive quadrature with the
    density folded in otherwise.  g must accept ndarray input (scalars
    arrive as 0-d arrays from the quadrature driver).  tail_cut
    overrides the config's tail split for slowly decaying integrands.
    """
    validate(spec)
    if isinstance(spec, PointMasses):
        lam = np.array([m[0] for m in spec.masses])
        w = np.array([m[1] for m in spec.masses])
        return float(np.dot(w, np.asarray(g(lam), dtype=float)))
    if cfg is None:
        cfg = QuadratureConfig()
    if tail_cut is not None:
        cfg = replace(cfg, tail_cut=tail_cut)
    if isinstance(spec, HaarLog):
        return integrate_ray(lambda t: float(g(t)) / t, 0.0, cfg)
    s = spec.sigma
    return integrate_ray(lambda t: float(g(t)) * t ** (-s), 0.0, cfg)


# --- JSON wire format ------------------------------------------------------
# {"kind":"haar"} | {"kind":"power","sigma":0.5}
#                 | {"kind":"points","masses":[[1.0,1.0],...]}

def measure_to_json(spec) -> str:
    validate(spec)
    if isinstance(spec, HaarLog):
        obj = {"kind": "haar"}
    elif isinstance(spec, PowerSigma):
        obj = {"kind": "power", "sigma": spec.sigma}
    else:
        obj = {"kind": "points", "masses": [[l, w] for l, w in spec.masses]}
    return json.dumps(obj, separators=(",", ":"))


def measure_from_json(text):
    """Parse the wire format (a JSON string or an already-decoded dict)."""
    obj = json.loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"not a measure object: {obj!r}")
    kind = obj["kind"]
    if kind == "haar":
        spec = HaarLog()
    elif kind == "power":
        if "sigma" not in obj:
            raise InvalidSigma("power measure requires a 'sigma' field")
        spec = PowerSigma(float(obj["sigma"]))
    elif kind == "points":
        if "masses" not in obj:
            raise InvalidPointMass("points measure requires a 'masses' field")
        spec = PointMasses(tuple((float(l), float(w)) for l, w in obj["masses"]))
    else:
        raise ValueError(f"unknown measure kind: {kind!r}")
    validate(spec)
    return spec
