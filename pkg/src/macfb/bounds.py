"""Rate-region generators for the binary additive noisy and erasure channels.

Each bound maps its parameters to a :class:`RateConstraintSet` (a pentagon
``R1 <= r1_max``, ``R2 <= r2_max``, ``R1 + R2 <= sum_max`` in the nonnegative
quadrant); region boundaries are assembled by sweeping the parameter domain,
collecting pentagon corners, Pareto-filtering the union, and sharpening the
result with a per-direction local refinement pass.

Regions
-------
cutset        outer bound, arbitrary input correlation (4-atom joint sweep)
dbpc1, dbpc2  dependence-balance outer bounds (genie = one of the inputs)
dbpc          their intersection, taken in sweep-direction space
cover-leung   achievable region (conditionally independent inputs, binary T)
erasure-fb    feedback capacity region of Y = X1 + X2
erasure-nofb  no-feedback pentagon of Y = X1 + X2
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize

from . import _kernels
from .channel import JointInputDistribution
from .feasible import InvalidTripleError, UTriple, in_P
from .geometry import BoundaryCurve, pareto_filter, support_value
from .infofn import CLAMP_TOL, DomainError, binary_entropy, f2, mu_fn, phi

__all__ = [
    "Region",
    "RegionSpec",
    "RateConstraintSet",
    "SWEEP_LAMBDAS",
    "db_pc1_constraints",
    "db_pc2_constraints",
    "cover_leung_constraints",
    "cover_leung_witness",
    "erasure_fb_constraints",
    "erasure_fb_witness",
    "erasure_fb_constraints_at_triple",
    "erasure_nofb_constraints",
    "cutset_region_noisy",
    "region_boundary",
]

#: default sweep directions (1-degree resolution over the quarter turn)
SWEEP_LAMBDAS = np.linspace(0.0, 1.0, 181)


class Region(enum.Enum):
    CUTSET = "cutset"
    DBPC1 = "dbpc1"
    DBPC2 = "dbpc2"
    DBPC = "dbpc"
    COVER_LEUNG = "cover-leung"
    ERASURE_FB = "erasure-fb"
    ERASURE_NOFB = "erasure-nofb"


@dataclass(frozen=True)
class RegionSpec:
    which: Region
    grid_n: int = 201

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError("grid_n must be at least 2")


@dataclass(frozen=True)
class RateConstraintSet:
    """{(R1, R2) >= 0 : R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}.

    An absent cap (``None``) means that constraint is not imposed.
    """

    r1_max: float | None
    r2_max: float | None
    sum_max: float | None

    def __post_init__(self):
        for name, cap in (("r1_max", self.r1_max), ("r2_max", self.r2_max), ("sum_max", self.sum_max)):
            if cap is not None and (not np.isfinite(cap) or cap < -1e-12):
                raise ValueError(f"{name} must be finite and nonnegative, got {cap}")
            if cap is not None and cap < 0.0:
                object.__setattr__(self, name, 0.0)

    def _caps(self) -> tuple[float, float, float]:
        inf = np.inf
        return (
            inf if self.r1_max is None else self.r1_max,
            inf if self.r2_max is None else self.r2_max,
            inf if self.sum_max is None else self.sum_max,
        )

    def corners(self) -> list[tuple[float, float]]:
        """Vertices of the pentagon, including the axis intercepts."""
        a, b, c = self._caps()
        x_max = min(a, c)
        y_max = min(b, c)
        if not np.isfinite(x_max) or not np.isfinite(y_max):
            raise ValueError("corners need all-finite caps")
        pts = [
            (x_max, 0.0),
            (0.0, y_max),
            (x_max, min(b, c - x_max)),
            (min(a, c - y_max), y_max),
        ]
        return [(float(x), float(y)) for x, y in pts]

    def support(self, lam: float) -> float:
        """max of lam*R1 + (1-lam)*R2 over the set."""
        return max(lam * x + (1.0 - lam) * y for x, y in self.corners())

    def contains(self, r1: float, r2: float, tol: float = 1e-12) -> bool:
        a, b, c = self._caps()
        return r1 >= -tol and r2 >= -tol and r1 <= a + tol and r2 <= b + tol and r1 + r2 <= c + tol

    def dominates(self, other: "RateConstraintSet", tol: float = 1e-12) -> bool:
        """True if every cap of ``other`` is at most the matching cap here."""
        sa, sb, sc = self._caps()
        oa, ob, oc = other._caps()
        return oa <= sa + tol and ob <= sb + tol and oc <= sc + tol


def _require_in_S(u1: float, u2: float) -> tuple[float, float]:
    if not (-CLAMP_TOL <= u1 <= 0.25 + CLAMP_TOL and -CLAMP_TOL <= u2 <= 0.25 + CLAMP_TOL):
        raise DomainError(f"(u1, u2) = ({u1}, {u2}) outside [0, 1/4]^2")
    return min(max(u1, 0.0), 0.25), min(max(u2, 0.0), 0.25)


def db_pc1_constraints(t: UTriple) -> RateConstraintSet:
    """Genie reveals X1: R1 <= min(h(u)/2, h(phi(2u1))), R2 <= h(phi(2u2))/2."""
    if not in_P(t):
        raise InvalidTripleError(f"{t} is not in P")
    u1, u2, u = t
    return RateConstraintSet(
        r1_max=min(0.5 * binary_entropy(u), binary_entropy(phi(2.0 * u1))),
        r2_max=0.5 * binary_entropy(phi(2.0 * u2)),
        sum_max=binary_entropy((1.0 - u) / 2.0),
    )


def db_pc2_constraints(t: UTriple) -> RateConstraintSet:
    """Genie reveals X2: mirror image of :func:`db_pc1_constraints`."""
    if not in_P(t):
        raise InvalidTripleError(f"{t} is not in P")
    u1, u2, u = t
    return RateConstraintSet(
        r1_max=0.5 * binary_entropy(phi(2.0 * u1)),
        r2_max=min(0.5 * binary_entropy(u), binary_entropy(phi(2.0 * u2))),
        sum_max=binary_entropy((1.0 - u) / 2.0),
    )


def cover_leung_constraints(u1: float, u2: float) -> RateConstraintSet:
    u1, u2 = _require_in_S(u1, u2)
    return RateConstraintSet(
        r1_max=0.5 * binary_entropy(phi(2.0 * u1)),
        r2_max=0.5 * binary_entropy(phi(2.0 * u2)),
        sum_max=binary_entropy((1.0 - f2(2.0 * u1, 2.0 * u2)) / 2.0),
    )


def _binary_t_witness(u1: float, u2: float) -> JointInputDistribution:
    p1 = phi(2.0 * u1)
    p2 = phi(2.0 * u2)
    return JointInputDistribution(
        p_t=np.array([0.5, 0.5]),
        q1=np.array([p1, 1.0 - p1]),
        q2=np.array([p2, 1.0 - p2]),
    )


def cover_leung_witness(u1: float, u2: float) -> JointInputDistribution:
    """Binary uniform-T input attaining the Cover-Leung caps with equality."""
    u1, u2 = _require_in_S(u1, u2)
    return _binary_t_witness(u1, u2)


def erasure_fb_constraints(u1: float, u2: float) -> RateConstraintSet:
    u1, u2 = _require_in_S(u1, u2)
    f = f2(2.0 * u1, 2.0 * u2)
    return RateConstraintSet(
        r1_max=binary_entropy(phi(2.0 * u1)),
        r2_max=binary_entropy(phi(2.0 * u2)),
        sum_max=mu_fn(f),
    )


def erasure_fb_witness(u1: float, u2: float) -> JointInputDistribution:
    """Binary uniform-T input attaining the erasure feedback caps with equality."""
    u1, u2 = _require_in_S(u1, u2)
    return _binary_t_witness(u1, u2)


def erasure_fb_constraints_at_triple(t: UTriple) -> RateConstraintSet:
    """Erasure caps evaluated at a feasible triple (sum cap mu(u), not mu(f2)).

    This is the three-variable form whose projection onto the lower face
    ``u = f2(2u1, 2u2)`` is checked by the equivalence suite.
    """
    if not in_P(t):
        raise InvalidTripleError(f"{t} is not in P")
    u1, u2, u = t
    return RateConstraintSet(
        r1_max=binary_entropy(phi(2.0 * u1)),
        r2_max=binary_entropy(phi(2.0 * u2)),
        sum_max=mu_fn(u),
    )


def erasure_nofb_constraints() -> RateConstraintSet:
    return RateConstraintSet(r1_max=1.0, r2_max=1.0, sum_max=1.5)


# ---------------------------------------------------------------------------
# Region boundary assembly
# ---------------------------------------------------------------------------


def _corner_points(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Upper pentagon corners for arrays of caps; shape (2n, 2).

    Axis intercepts are always dominated by these corners, so the Pareto
    frontier of the union is unchanged by omitting them here.
    """
    x_max = np.minimum(a, c)
    y_at_x = np.clip(np.minimum(b, c - x_max), 0.0, None)
    y_max = np.minimum(b, c)
    x_at_y = np.clip(np.minimum(a, c - y_max), 0.0, None)
    pts = np.concatenate(
        [np.stack([x_max, y_at_x], axis=1), np.stack([x_at_y, y_max], axis=1)], axis=0
    )
    return pts


def _pareto_points(pts: np.ndarray) -> np.ndarray:
    return pareto_filter(pts).points


def _db_caps(u1: np.ndarray, u2: np.ndarray, u: np.ndarray, mirror: bool):
    """Vectorized caps of the dependence-balance pentagon family."""
    capped = np.minimum(0.5 * binary_entropy(u), binary_entropy(phi(2.0 * (u2 if mirror else u1))))
    half_other = 0.5 * binary_entropy(phi(2.0 * (u1 if mirror else u2)))
    csum = binary_entropy((1.0 - u) / 2.0)
    if mirror:
        return half_other, capped, csum
    return capped, half_other, csum


def _sweep_db(grid_n: int, mirror: bool) -> np.ndarray:
    g = np.linspace(0.0, 0.25, grid_n)
    u1, u2 = np.meshgrid(g, g, indexing="ij")
    u1, u2 = u1.ravel(), u2.ravel()
    lo = f2(2.0 * u1, 2.0 * u2)
    hi = 1.0 - (u1 + u2)
    chunks = []
    for w in np.linspace(0.0, 1.0, grid_n):
        u = lo + w * (hi - lo)
        a, b, c = _db_caps(u1, u2, u, mirror)
        chunks.append(_pareto_points(_corner_points(a, b, c)))
    return np.concatenate(chunks, axis=0)


def _sweep_product_region(grid_n: int, caps_fn) -> np.ndarray:
    g = np.linspace(0.0, 0.25, grid_n)
    u1, u2 = np.meshgrid(g, g, indexing="ij")
    a, b, c = caps_fn(u1.ravel(), u2.ravel())
    return _corner_points(a, b, c)


def _cl_caps(u1: np.ndarray, u2: np.ndarray):
    return (
        0.5 * binary_entropy(phi(2.0 * u1)),
        0.5 * binary_entropy(phi(2.0 * u2)),
        binary_entropy((1.0 - f2(2.0 * u1, 2.0 * u2)) / 2.0),
    )


def _erasure_caps(u1: np.ndarray, u2: np.ndarray):
    f = f2(2.0 * u1, 2.0 * u2)
    return binary_entropy(phi(2.0 * u1)), binary_entropy(phi(2.0 * u2)), mu_fn(f)


def _simplex_grid(grid_n: int):
    """Yield (n, 4) chunks covering the 3-simplex lattice with grid_n per axis."""
    g = np.linspace(0.0, 1.0, grid_n)
    for a in g:
        b = g[g <= 1.0 - a + 1e-15]
        bb, cc = np.meshgrid(b, g, indexing="ij")
        mask = cc <= 1.0 - a - bb + 1e-15
        bb, cc = bb[mask], cc[mask]
        dd = np.clip(1.0 - a - bb - cc, 0.0, None)
        yield np.stack([np.full_like(bb, a), bb, cc, dd], axis=1)


def _sweep_cutset(grid_n: int) -> np.ndarray:
    chunks = []
    for joint in _simplex_grid(grid_n):
        stats = _kernels.cutset_stats(joint, _kernels.KIND_NOISY)
        pts = _corner_points(stats[:, 0], stats[:, 1], stats[:, 2])
        chunks.append(_pareto_points(pts))
    return np.concatenate(chunks, axis=0)


def _support_of_caps(a, b, c, lam: float):
    """Pentagon support value(s) in direction (lam, 1-lam), vectorized."""
    x_max = np.minimum(a, c)
    y_at_x = np.clip(np.minimum(b, c - x_max), 0.0, None)
    y_max = np.minimum(b, c)
    x_at_y = np.clip(np.minimum(a, c - y_max), 0.0, None)
    return np.maximum(
        lam * x_max + (1.0 - lam) * y_at_x, lam * x_at_y + (1.0 - lam) * y_max
    )


# scalar math fast paths for the Nelder-Mead refinement (inputs pre-clipped)


def _hs(s: float) -> float:
    if s <= 0.0 or s >= 1.0:
        return 0.0
    return -s * math.log2(s) - (1.0 - s) * math.log2(1.0 - s)


def _phis(s: float) -> float:
    inner = 1.0 - 2.0 * s if s <= 0.5 else 2.0 * s - 1.0
    return (1.0 - math.sqrt(max(inner, 0.0))) / 2.0


def _f2s(x: float, y: float) -> float:
    return (1.0 - math.sqrt(max((1.0 - 2.0 * x) * (1.0 - 2.0 * y), 0.0))) / 2.0


def _support_scalar(a: float, b: float, c: float, lam: float) -> float:
    x_max = min(a, c)
    y_at_x = max(min(b, c - x_max), 0.0)
    y_max = min(b, c)
    x_at_y = max(min(a, c - y_max), 0.0)
    return max(lam * x_max + (1.0 - lam) * y_at_x, lam * x_at_y + (1.0 - lam) * y_max)


_GOLD = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_min(fn, lo: float, hi: float, tol: float = 1e-11) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _GOLD * (b - a)
    d = a + _GOLD * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLD * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLD * (b - a)
            fd = fn(d)
    mid = 0.5 * (a + b)
    return mid, fn(mid)


def _local_min(neg, x0: np.ndarray, lo: np.ndarray, hi: np.ndarray, step0: float) -> tuple[np.ndarray, float]:
    """Deterministic local minimizer over a box, robust at the boundary.

    Nelder-Mead with an interior non-degenerate start simplex, a coordinate
    golden-section polish (simplexes collapse when clipped at the box), and
    one Nelder-Mead restart from the polished point.
    """
    span = hi - lo

    def nm(x):
        sim = [x]
        for i in range(len(x)):
            v = x.copy()
            h = 0.02 * span[i]
            v[i] = v[i] - h if v[i] + h > hi[i] else v[i] + h
            sim.append(v)
        res = minimize(
            neg,
            x,
            method="Nelder-Mead",
            options={
                "maxiter": 500,
                "xatol": 1e-11,
                "fatol": 1e-14,
                "initial_simplex": np.asarray(sim),
            },
        )
        return np.clip(res.x, lo, hi), res.fun

    def polish(x, fx):
        for r in range(5):
            d = step0 * 0.5**r
            for i in range(len(x)):
                a, b = max(lo[i], x[i] - d), min(hi[i], x[i] + d)
                if b - a < 1e-13:
                    continue

                def along(v, i=i, x=x):
                    y = x.copy()
                    y[i] = v
                    return neg(y)

                v, fv = _golden_min(along, a, b)
                if fv < fx:
                    x = x.copy()
                    x[i], fx = v, fv
        return x, fx

    x = np.clip(np.asarray(x0, dtype=float), lo, hi)
    fx = neg(x)
    xn, fn = nm(x)
    if fn < fx:
        x, fx = xn, fn
    x, fx = polish(x, fx)
    xn, fn = nm(x)
    if fn < fx:
        x, fx = xn, fn
    return x, fx


class _RegionFamily:
    """Parameter space + caps of one pentagon family, for refinement."""

    def __init__(self, caps_scalar, coarse_params: np.ndarray, coarse_caps,
                 lo: np.ndarray, hi: np.ndarray, step0: float):
        self.caps_scalar = caps_scalar
        self.coarse_params = coarse_params
        self.coarse_caps = coarse_caps
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)
        self.step0 = step0

    def refined_points(self, lambdas=SWEEP_LAMBDAS, n_starts: int = 2) -> np.ndarray:
        """Local refinement per sweep direction from the best grid incumbents."""
        a, b, c = self.coarse_caps
        pts = np.empty((2 * len(lambdas), 2))
        for i, lam in enumerate(lambdas):
            sup = _support_of_caps(a, b, c, lam)
            seeds = np.argsort(sup)[-n_starts:]

            def neg_support(x, lam=lam):
                return -_support_scalar(*self.caps_scalar(x), lam)

            best_x, best_f = None, np.inf
            for j in seeds:
                x, fx = _local_min(neg_support, self.coarse_params[j], self.lo, self.hi, self.step0)
                if fx < best_f:
                    best_x, best_f = x, fx
            ca, cb, cc = self.caps_scalar(best_x)
            x_max = min(ca, cc)
            y_max = min(cb, cc)
            pts[2 * i] = (x_max, max(min(cb, cc - x_max), 0.0))
            pts[2 * i + 1] = (max(min(ca, cc - y_max), 0.0), y_max)
        return pts


def _db_caps_scalar(x, mirror: bool):
    p1 = min(max(x[0], 0.0), 0.25)
    p2 = min(max(x[1], 0.0), 0.25)
    pw = min(max(x[2], 0.0), 1.0)
    lo = _f2s(2.0 * p1, 2.0 * p2)
    u = lo + pw * (1.0 - (p1 + p2) - lo)
    capped = min(0.5 * _hs(u), _hs(_phis(2.0 * (p2 if mirror else p1))))
    half_other = 0.5 * _hs(_phis(2.0 * (p1 if mirror else p2)))
    csum = _hs((1.0 - u) / 2.0)
    if mirror:
        return half_other, capped, csum
    return capped, half_other, csum


def _db_family(mirror: bool, coarse_n: int = 41) -> _RegionFamily:
    g = np.linspace(0.0, 0.25, coarse_n)
    w = np.linspace(0.0, 1.0, coarse_n)
    u1, u2, ww = (x.ravel() for x in np.meshgrid(g, g, w, indexing="ij"))
    params = np.stack([u1, u2, ww], axis=1)
    lo = f2(2.0 * u1, 2.0 * u2)
    caps = _db_caps(u1, u2, lo + ww * (1.0 - (u1 + u2) - lo), mirror)
    return _RegionFamily(
        lambda x: _db_caps_scalar(x, mirror),
        params,
        caps,
        lo=np.array([0.0, 0.0, 0.0]),
        hi=np.array([0.25, 0.25, 1.0]),
        step0=0.25 / (coarse_n - 1),
    )


def _cl_caps_scalar(x):
    p1 = min(max(x[0], 0.0), 0.25)
    p2 = min(max(x[1], 0.0), 0.25)
    return (
        0.5 * _hs(_phis(2.0 * p1)),
        0.5 * _hs(_phis(2.0 * p2)),
        _hs((1.0 - _f2s(2.0 * p1, 2.0 * p2)) / 2.0),
    )


def _erasure_caps_scalar(x):
    p1 = min(max(x[0], 0.0), 0.25)
    p2 = min(max(x[1], 0.0), 0.25)
    f = _f2s(2.0 * p1, 2.0 * p2)
    return _hs(_phis(2.0 * p1)), _hs(_phis(2.0 * p2)), _hs(f) + 1.0 - f


def _product_family(caps_xy, caps_scalar, coarse_n: int = 101) -> _RegionFamily:
    g = np.linspace(0.0, 0.25, coarse_n)
    u1, u2 = (x.ravel() for x in np.meshgrid(g, g, indexing="ij"))
    params = np.stack([u1, u2], axis=1)
    return _RegionFamily(
        caps_scalar,
        params,
        caps_xy(u1, u2),
        lo=np.array([0.0, 0.0]),
        hi=np.array([0.25, 0.25]),
        step0=0.25 / (coarse_n - 1),
    )


def _plog2p(p: float) -> float:
    return -p * math.log2(p) if p > 0.0 else 0.0


def _cutset_caps_scalar(z):
    e0, e1, e2, e3 = 1.0, math.exp(z[0]), math.exp(z[1]), math.exp(z[2])
    tot = e0 + e1 + e2 + e3
    a, b, c, d = e0 / tot, e1 / tot, e2 / tot, e3 / tot
    s_x1x2 = _plog2p(a) + _plog2p(b) + _plog2p(c) + _plog2p(d)
    s_x1 = _plog2p(a + b) + _plog2p(c + d)
    s_x2 = _plog2p(a + c) + _plog2p(b + d)
    # noisy additive law: each input pair splits evenly over two outputs
    s_x1x2y = s_x1x2 + 1.0
    s_y = (
        _plog2p(a / 2.0)
        + _plog2p((a + b + c) / 2.0)
        + _plog2p((b + c + d) / 2.0)
        + _plog2p(d / 2.0)
    )
    s_x1y = (
        _plog2p(a / 2.0)
        + _plog2p((a + b) / 2.0)
        + _plog2p(b / 2.0)
        + _plog2p(c / 2.0)
        + _plog2p((c + d) / 2.0)
        + _plog2p(d / 2.0)
    )
    s_x2y = (
        _plog2p(a / 2.0)
        + _plog2p((a + c) / 2.0)
        + _plog2p(c / 2.0)
        + _plog2p(b / 2.0)
        + _plog2p((b + d) / 2.0)
        + _plog2p(d / 2.0)
    )
    i1 = (s_x1x2 - s_x2) - (s_x1x2y - s_x2y)
    i2 = (s_x1x2 - s_x1) - (s_x1x2y - s_x1y)
    isum = s_y - 1.0
    return i1, i2, isum


def _cutset_family(coarse_n: int = 31) -> _RegionFamily:
    joints = np.concatenate(list(_simplex_grid(coarse_n)), axis=0)
    # parameterize free of the simplex constraint: softmax of (0, z1, z2, z3)
    z = np.log(np.clip(joints, 1e-12, None))
    params = z[:, 1:] - z[:, :1]
    stats = _kernels.cutset_stats(joints, _kernels.KIND_NOISY)
    return _RegionFamily(
        _cutset_caps_scalar,
        params,
        (stats[:, 0], stats[:, 1], stats[:, 2]),
        lo=np.full(3, -40.0),
        hi=np.full(3, 40.0),
        step0=1.0,
    )


def _concave_upper_hull(pts: np.ndarray) -> np.ndarray:
    """Upper concave envelope of Pareto-sorted points (time-sharing hull)."""
    hull: list[np.ndarray] = []
    for p in pts:
        while len(hull) >= 2:
            o, q = hull[-2], hull[-1]
            cross = (q[0] - o[0]) * (p[1] - o[1]) - (q[1] - o[1]) * (p[0] - o[0])
            if cross >= 0.0:  # q below or on chord o-p: not a hull vertex
                hull.pop()
            else:
                break
        hull.append(p)
    return np.asarray(hull)


@lru_cache(maxsize=4)
def _cutset_points(grid_n: int) -> np.ndarray:
    pts = _sweep_cutset(grid_n)
    refined = _cutset_family().refined_points()
    return np.concatenate([pts, refined], axis=0)


def cutset_region_noisy(grid_n: int = 201) -> BoundaryCurve:
    """Cut-set boundary: sweep of all 4-atom input joints plus refinement."""
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    return pareto_filter(_cutset_points(grid_n), label=Region.CUTSET.value)


@lru_cache(maxsize=4)
def _dbpc_points(grid_n: int) -> np.ndarray:
    pts = _sweep_db(grid_n, mirror=False)
    refined = _db_family(False).refined_points()
    return np.concatenate([pts, refined], axis=0)


def _dbpc_curve(grid_n: int, mirror: bool) -> BoundaryCurve:
    label = (Region.DBPC2 if mirror else Region.DBPC1).value
    pts = _dbpc_points(grid_n)
    # the two genie choices give exact mirror-image regions
    if mirror:
        pts = pts[:, ::-1]
    return pareto_filter(pts, label=label)


def _intersection_curve(grid_n: int) -> BoundaryCurve:
    """Direction-space intersection: pointwise min of the two support functions."""
    c1 = _dbpc_curve(grid_n, mirror=False)
    c2 = _dbpc_curve(grid_n, mirror=True)
    lams = SWEEP_LAMBDAS
    m = np.array([min(support_value(c1, l), support_value(c2, l)) for l in lams])
    # candidate vertices: intersections of every pair of support lines (some
    # lines are redundant, so binding pairs need not be adjacent in lambda),
    # plus the axis anchors
    i, j = np.triu_indices(len(lams), k=1)
    l1, l2 = lams[i], lams[j]
    det = l1 - l2
    x = (m[i] * (1.0 - l2) - m[j] * (1.0 - l1)) / det
    y = (l1 * m[j] - l2 * m[i]) / det
    ok = (x >= -1e-12) & (y >= -1e-12)
    cand = np.concatenate(
        [np.stack([x[ok], y[ok]], axis=1), [(m[-1], 0.0), (0.0, m[0])]], axis=0
    )
    cand = np.clip(cand, 0.0, None)
    feas = np.ones(len(cand), dtype=bool)
    for l, mv in zip(lams, m):
        feas &= l * cand[:, 0] + (1.0 - l) * cand[:, 1] <= mv + 1e-9
    return pareto_filter(cand[feas], label=Region.DBPC.value)


@lru_cache(maxsize=4)
def _product_points(grid_n: int, which: str) -> np.ndarray:
    caps_xy, caps_scalar = (_cl_caps, _cl_caps_scalar) if which == "cl" else (_erasure_caps, _erasure_caps_scalar)
    pts = _sweep_product_region(grid_n, caps_xy)
    refined = _product_family(caps_xy, caps_scalar).refined_points()
    return np.concatenate([pts, refined], axis=0)


def _product_curve(grid_n: int, which: str, label: str, hull: bool) -> BoundaryCurve:
    curve = pareto_filter(_product_points(grid_n, which), label=label)
    if hull:
        return BoundaryCurve(points=_concave_upper_hull(curve.points), label=label)
    return curve


def region_boundary(spec: RegionSpec) -> BoundaryCurve:
    """Boundary curve of the requested region at the requested grid size."""
    which, g = spec.which, spec.grid_n
    if which is Region.CUTSET:
        return cutset_region_noisy(g)
    if which is Region.DBPC1:
        return _dbpc_curve(g, mirror=False)
    if which is Region.DBPC2:
        return _dbpc_curve(g, mirror=True)
    if which is Region.DBPC:
        return _intersection_curve(g)
    if which is Region.COVER_LEUNG:
        return _product_curve(g, "cl", which.value, hull=True)
    if which is Region.ERASURE_FB:
        return _product_curve(g, "erasure", which.value, hull=True)
    if which is Region.ERASURE_NOFB:
        corners = np.asarray(erasure_nofb_constraints().corners())
        return pareto_filter(corners, label=which.value)
    raise ValueError(f"unknown region {which!r}")
