"""Symmetric-rate solvers: the largest R with (R, R) in each region.

The dependence-balance and Cover-Leung problems reduce to scalar fixed-point
equations solved by bisection; the cut-set problem is a derivative-free
max-min search over the 4-atom input simplex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bounds import _binary_t_witness, _simplex_grid
from .channel import JointInputDistribution
from .infofn import binary_entropy, f2, phi, phi_inv

__all__ = [
    "BracketError",
    "SymmetricRateSolution",
    "solve_db_symmetric",
    "solve_cl_symmetric",
    "solve_cutset_symmetric",
    "cutset_symmetric_argmax",
]


class BracketError(RuntimeError):
    """Bisection bracket does not change sign."""


@dataclass(frozen=True)
class SymmetricRateSolution:
    """Optimal symmetric rate with its (u1*, u2*, u*) and witness input."""

    rate: float
    u1_star: float
    u2_star: float
    u_star: float
    witness: JointInputDistribution

    def __post_init__(self):
        if abs(self.u_star - f2(2.0 * self.u1_star, 2.0 * self.u2_star)) > 1e-9:
            raise ValueError("u_star must equal f2(2 u1*, 2 u2*)")


def _bisect(fn, lo: float, hi: float, xtol: float = 1e-12, max_iter: int = 200) -> float:
    flo, fhi = fn(lo), fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = fn(mid)
        if fmid == 0.0 or (hi - lo) / 2.0 <= xtol:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _db_gap(s: float) -> float:
    """h(phi(s)) - h((1 - phi(s)) / (3 - 2 phi(s))) / 2; increasing through zero."""
    p = phi(s)
    return binary_entropy(p) - 0.5 * binary_entropy((1.0 - p) / (3.0 - 2.0 * p))


def solve_db_symmetric() -> SymmetricRateSolution:
    """Balance point of the dependence-balance symmetric-rate bound.

    Finds the unique s in [0, 1/2] with h(phi(s)) = h((1-phi(s))/(3-2phi(s)))/2,
    sets u1* = s/2, recovers u2* through the increasing branch of phi, and
    returns the binary uniform-T witness that attains all three caps.
    """
    s = _bisect(_db_gap, 0.0, 0.5)
    u1 = s / 2.0
    p1 = phi(s)
    p2 = (1.0 - p1) / (3.0 - 2.0 * p1)
    u2 = phi_inv(p2) / 2.0
    rate = binary_entropy(p1)
    return SymmetricRateSolution(
        rate=rate,
        u1_star=u1,
        u2_star=u2,
        u_star=f2(2.0 * u1, 2.0 * u2),
        witness=_binary_t_witness(u1, u2),
    )


def _cl_symmetric_value(u1, u2):
    """min of the three Cover-Leung caps in the symmetric direction."""
    return np.minimum(
        np.minimum(0.5 * binary_entropy(phi(2.0 * u1)), 0.5 * binary_entropy(phi(2.0 * u2))),
        0.5 * binary_entropy((1.0 - f2(2.0 * u1, 2.0 * u2)) / 2.0),
    )


def solve_cl_symmetric(grid_check_n: int = 201) -> SymmetricRateSolution:
    """Cover-Leung symmetric rate.

    By symmetry the optimum has u1 = u2 = u, where the per-user cap
    h(phi(2u))/2 (increasing) crosses the halved sum cap h((1-2u)/2)/2
    (decreasing); a 2-D grid over [0, 1/4]^2 confirms the symmetric
    restriction is optimal to within 1e-6.
    """
    diag = lambda u: binary_entropy(phi(2.0 * u)) - binary_entropy((1.0 - 2.0 * u) / 2.0)
    u = _bisect(diag, 0.0, 0.25)
    rate = 0.5 * binary_entropy(phi(2.0 * u))
    if grid_check_n:
        g = np.linspace(0.0, 0.25, grid_check_n)
        g1, g2 = np.meshgrid(g, g, indexing="ij")
        grid_max = float(_cl_symmetric_value(g1, g2).max())
        if grid_max > rate + 1e-6:
            raise RuntimeError(
                f"asymmetric grid point beats the symmetric optimum: {grid_max} > {rate}"
            )
    return SymmetricRateSolution(
        rate=rate,
        u1_star=u,
        u2_star=u,
        u_star=f2(2.0 * u, 2.0 * u),
        witness=_binary_t_witness(u, u),
    )


def _cutset_symmetric_value(joint: np.ndarray) -> np.ndarray:
    stats = _kernels.cutset_stats(np.atleast_2d(joint), _kernels.KIND_NOISY)
    return np.minimum(np.minimum(stats[:, 0], stats[:, 1]), 0.5 * stats[:, 2])


_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fn, lo: float, hi: float, tol: float = 1e-10) -> float:
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fn(d)
    return 0.5 * (a + b)


def _refine_cutset(joint: np.ndarray, step: float, rounds: int = 3) -> np.ndarray:
    """Coordinate-wise golden-section refinement on the simplex."""
    x = joint.copy()
    for r in range(rounds):
        delta = step * 0.5**r
        for j in range(3):
            slack = x[j] + x[3]  # coordinate j trades mass with the last atom

            def fj(v, j=j, slack=slack):
                y = x.copy()
                y[j] = v
                y[3] = slack - v
                return float(_cutset_symmetric_value(y)[0])

            lo = max(0.0, x[j] - delta)
            hi = min(slack, x[j] + delta)
            best = _golden_max(fj, lo, hi)
            x[3] = slack - best
            x[j] = best
    return x


def solve_cutset_symmetric(grid_n: int = 101) -> float:
    """Cut-set symmetric rate: max-min over all 4-atom input joints."""
    return _cutset_symmetric_search(grid_n)[0]


def cutset_symmetric_argmax(grid_n: int = 101) -> tuple[float, np.ndarray]:
    """Cut-set symmetric rate together with the optimizing input joint."""
    return _cutset_symmetric_search(grid_n)


def _cutset_symmetric_search(grid_n: int) -> tuple[float, np.ndarray]:
    best_val = -np.inf
    best_joint = None
    for joint in _simplex_grid(grid_n):
        vals = _cutset_symmetric_value(joint)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_joint = joint[i]
    refined = _refine_cutset(best_joint, step=1.0 / (grid_n - 1))
    val = float(_cutset_symmetric_value(refined)[0])
    if val >= best_val:
        return val, refined
    return best_val, best_joint
