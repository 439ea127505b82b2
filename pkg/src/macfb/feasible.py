"""The (u1, u2, u) summary statistics and their feasible set.

Every closed-form bound in this package is a function of the triple

    u1 = sum_t p_t q1t (1 - q1t)
    u2 = sum_t p_t q2t (1 - q2t)
    u  = sum_t p_t (q1t + q2t - 2 q1t q2t)

of a conditionally independent input distribution.  The feasible set P is the
box-and-band region f2(2u1, 2u2) <= u <= 1 - (u1 + u2) with u1, u2 in [0, 1/4];
it may be a strict superset of the realizable triples, which is sound because
the bounds are maximized over it.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .channel import JointInputDistribution
from .infofn import f2

__all__ = ["UTriple", "InvalidTripleError", "u_triple_of", "in_P", "project_to_lower_face", "sample_triples"]

_TOL = 1e-12


class InvalidTripleError(ValueError):
    """Triple lies outside the feasible set P."""


class UTriple(NamedTuple):
    u1: float
    u2: float
    u: float


def u_triple_of(d: JointInputDistribution) -> UTriple:
    """Summary statistics (u1, u2, u) of a conditionally independent input."""
    u1 = float(np.dot(d.p_t, d.q1 * (1.0 - d.q1)))
    u2 = float(np.dot(d.p_t, d.q2 * (1.0 - d.q2)))
    u = float(np.dot(d.p_t, d.q1 + d.q2 - 2.0 * d.q1 * d.q2))
    return UTriple(u1, u2, u)


def in_P(t: UTriple, tol: float = _TOL) -> bool:
    """Membership in the feasible set P, with ``tol`` slack on each face."""
    u1, u2, u = t
    if not (-tol <= u1 <= 0.25 + tol and -tol <= u2 <= 0.25 + tol):
        return False
    lo = f2(2.0 * min(max(u1, 0.0), 0.25), 2.0 * min(max(u2, 0.0), 0.25))
    return lo - tol <= u <= 1.0 - (u1 + u2) + tol


def project_to_lower_face(t: UTriple) -> tuple[float, float]:
    """Map a feasible triple to a pair on the face u = f2(2 u1bar, 2 u2bar).

    For u <= 1/2 the first coordinate is kept and u2bar solves
    f2(2 u1, 2 u2bar) = u, i.e. u2bar = (1 - (1-2u)^2 / (1-4u1)) / 4, which
    dominates (u1, u2) componentwise.  For u > 1/2 no pair reaches u, and
    (1/4, 1/4) (where f2 = 1/2) dominates instead.
    """
    if not in_P(t):
        raise InvalidTripleError(f"{t} is not in P")
    u1, u2, u = t
    if u > 0.5:
        return 0.25, 0.25
    if 1.0 - 4.0 * u1 <= _TOL:
        # u1 = 1/4 forces f2 = 1/2 = u; the formula's 0/0 resolves to 1/4.
        return 0.25, 0.25
    u2bar = 0.25 * (1.0 - (1.0 - 2.0 * u) ** 2 / (1.0 - 4.0 * u1))
    return float(u1), float(min(max(u2bar, u2), 0.25))


def sample_triples(n: int, rng: np.random.Generator) -> list[UTriple]:
    """Draw ``n`` triples uniformly inside P (u1, u2 uniform, u uniform in its band)."""
    u1 = rng.uniform(0.0, 0.25, size=n)
    u2 = rng.uniform(0.0, 0.25, size=n)
    lo = f2(2.0 * u1, 2.0 * u2)
    hi = 1.0 - (u1 + u2)
    u = lo + rng.uniform(0.0, 1.0, size=n) * (hi - lo)
    return [UTriple(float(a), float(b), float(c)) for a, b, c in zip(u1, u2, u)]
