"""Brute-force verification of the closed-form characterizations.

The oracles evaluate the bounds' original information-theoretic expressions by
exact enumeration (through the kernel layer, whose semantics match
``macfb.channel``) over lattices of conditionally independent inputs, never
the closed-form (u1, u2, u) characterizations they are checking.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .channel import JointInputDistribution
from .infofn import binary_entropy, mu_fn, phi

__all__ = [
    "DEFAULT_BUDGET",
    "BUDGET_ENV_VAR",
    "BudgetExceededError",
    "OracleConfig",
    "OracleResult",
    "CharacterizationReport",
    "OBJECTIVES",
    "oracle_max",
    "verify_characterization",
]

DEFAULT_BUDGET = 100_000_000
BUDGET_ENV_VAR = "MACFB_BUDGET"

OBJECTIVES = (
    "db1_symmetric_direct",
    "cl_symmetric_direct",
    "erasure_sum_direct",
    "cutset_symmetric_direct",
)

_CHUNK = 200_000


class BudgetExceededError(RuntimeError):
    """Requested grid is larger than the evaluation budget."""


def _env_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else None


@dataclass(frozen=True)
class OracleConfig:
    """Grid configuration for the brute-force sweeps.

    ``steps`` is the number of lattice points per probability axis; for
    ``t_card == 3`` a full lattice is out of reach and a seeded
    Latin-hypercube sample of matching size stands in for the q-coordinates.
    """

    t_card: int = 2
    steps: int = 21
    seed: int = 0
    budget: int | None = None

    def __post_init__(self):
        if self.t_card not in (1, 2, 3):
            raise ValueError("t_card must be 1, 2 or 3")
        if self.steps < 2:
            raise ValueError("steps must be at least 2")
        if self.budget is None:
            object.__setattr__(self, "budget", _env_budget() or DEFAULT_BUDGET)

    @property
    def grid_size(self) -> int:
        if self.t_card == 1:
            return self.steps**2
        if self.t_card == 2:
            return self.steps**5
        n_p = self.steps * (self.steps + 1) // 2  # 2-simplex lattice for p
        return n_p * min(self.steps**3, max(self.budget // max(n_p, 1), 1))

    def check_budget(self) -> None:
        if self.grid_size > self.budget:
            raise BudgetExceededError(
                f"grid of {self.grid_size} evaluations exceeds budget {self.budget}"
            )


def _axis(steps: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, steps)


def iter_input_grid(cfg: OracleConfig) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield (p, q1, q2) chunks of shape (n, t_card) covering the sweep."""
    g = _axis(cfg.steps)
    if cfg.t_card == 1:
        q1, q2 = np.meshgrid(g, g, indexing="ij")
        q1, q2 = q1.ravel()[:, None], q2.ravel()[:, None]
        yield np.ones_like(q1), q1, q2
        return
    if cfg.t_card == 2:
        q = np.stack([x.ravel() for x in np.meshgrid(g, g, g, g, indexing="ij")], axis=1)
        for w in g:
            p = np.full((len(q), 2), (w, 1.0 - w))
            for start in range(0, len(q), _CHUNK):
                sl = slice(start, min(start + _CHUNK, len(q)))
                yield p[sl], q[sl, :2], q[sl, 2:]
        return
    # t_card == 3: simplex lattice for p, Latin-hypercube for the six q's
    rng = np.random.default_rng(cfg.seed)
    p_pts = []
    for i, a in enumerate(g):
        for b in g[: cfg.steps - i]:
            p_pts.append((a, b, max(1.0 - a - b, 0.0)))
    p_pts = np.asarray(p_pts)
    n_q = min(cfg.steps**3, max(cfg.budget // max(len(p_pts), 1), 1))
    qs = _latin_hypercube(rng, n_q, 6)
    for p in p_pts:
        for start in range(0, n_q, _CHUNK):
            sl = slice(start, min(start + _CHUNK, n_q))
            block = qs[sl]
            yield np.broadcast_to(p, (len(block), 3)).copy(), block[:, :3], block[:, 3:]


def _latin_hypercube(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    cells = (np.arange(n)[:, None] + rng.uniform(size=(n, dim))) / n
    for j in range(dim):
        cells[:, j] = cells[rng.permutation(n), j]
    return cells


@dataclass(frozen=True)
class OracleResult:
    objective: str
    value: float
    argmax_params: tuple[float, ...]
    argmax: object  # JointInputDistribution, or a 4-atom joint for the cut-set
    n_evaluated: int
    config: OracleConfig

    def to_dict(self) -> dict:
        if isinstance(self.argmax, JointInputDistribution):
            arg = {
                "p_t": [float(v) for v in self.argmax.p_t],
                "q1": [float(v) for v in self.argmax.q1],
                "q2": [float(v) for v in self.argmax.q2],
            }
        else:
            arg = {"joint_x1x2": [float(v) for v in np.asarray(self.argmax).ravel()]}
        return {
            "objective": self.objective,
            "value": float(self.value),
            "argmax": arg,
            "grid": {
                "t_card": self.config.t_card,
                "steps": self.config.steps,
                "seed": self.config.seed,
                "evaluations": self.n_evaluated,
            },
        }


def _objective_values(name: str, p, q1, q2) -> np.ndarray:
    if name == "db1_symmetric_direct":
        s = _kernels.input_stats(p, q1, q2, _kernels.KIND_NOISY)
        return np.minimum(
            np.minimum(s[:, 2], s[:, 0]), np.minimum(0.5 * s[:, 1], 0.5 * s[:, 4])
        )
    if name == "cl_symmetric_direct":
        s = _kernels.input_stats(p, q1, q2, _kernels.KIND_NOISY)
        return np.minimum(np.minimum(0.5 * s[:, 0], 0.5 * s[:, 1]), 0.5 * s[:, 4])
    if name == "erasure_sum_direct":
        s = _kernels.input_stats(p, q1, q2, _kernels.KIND_ERASURE)
        return s[:, 5]
    raise ValueError(f"unknown objective {name!r}")


def _lex_min_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return rows[order[0]]


def oracle_max(objective: str, cfg: OracleConfig) -> OracleResult:
    """Maximize a direct (non-closed-form) objective over the configured grid.

    Ties on the maximum value resolve to the lexicographically smallest
    parameter vector, so parallel or re-chunked sweeps reproduce the result.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    cfg.check_budget()
    if objective == "cutset_symmetric_direct":
        return _cutset_oracle_max(cfg)

    best_val = -np.inf
    best_key: np.ndarray | None = None
    n_eval = 0
    for p, q1, q2 in iter_input_grid(cfg):
        vals = _objective_values(objective, p, q1, q2)
        n_eval += len(vals)
        m = float(vals.max())
        if m < best_val:
            continue
        rows = np.concatenate([p, q1, q2], axis=1)[vals == m]
        key = _lex_min_rows(rows)
        if m > best_val or tuple(key) < tuple(best_key):
            best_val, best_key = m, key
    k = cfg.t_card
    arg = JointInputDistribution(p_t=best_key[:k], q1=best_key[k : 2 * k], q2=best_key[2 * k :])
    return OracleResult(
        objective=objective,
        value=best_val,
        argmax_params=tuple(float(v) for v in best_key),
        argmax=arg,
        n_evaluated=n_eval,
        config=cfg,
    )


def _cutset_oracle_max(cfg: OracleConfig) -> OracleResult:
    from .bounds import _simplex_grid

    best_val = -np.inf
    best_key = None
    n_eval = 0
    for joint in _simplex_grid(cfg.steps):
        s = _kernels.cutset_stats(joint, _kernels.KIND_NOISY)
        vals = np.minimum(np.minimum(s[:, 0], s[:, 1]), 0.5 * s[:, 2])
        n_eval += len(vals)
        m = float(vals.max())
        if m < best_val:
            continue
        key = _lex_min_rows(joint[vals == m])
        if m > best_val or tuple(key) < tuple(best_key):
            best_val, best_key = m, key
    return OracleResult(
        objective="cutset_symmetric_direct",
        value=best_val,
        argmax_params=tuple(float(v) for v in best_key),
        argmax=np.asarray(best_key),
        n_evaluated=n_eval,
        config=cfg,
    )


_INEQUALITIES = ("h_x1_given_t", "h_x2_given_t", "i_x1_y_given_x2", "i_x2_y_given_x1", "i_x1x2_y", "h_y_erasure")
_IDENTITIES = ("half_h_x1", "half_h_x2")


@dataclass
class CharacterizationReport:
    """Max violations of the closed-form caps over an input lattice."""

    config: OracleConfig
    n_evaluated: int = 0
    max_violation: dict = field(default_factory=dict)
    equality_count: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "grid": {
                "t_card": self.config.t_card,
                "steps": self.config.steps,
                "evaluations": self.n_evaluated,
            },
            "max_violation": dict(self.max_violation),
            "equality_count": dict(self.equality_count),
            "worst": self.worst_violation,
        }

    @property
    def worst_violation(self) -> float:
        return max(self.max_violation.values())


def verify_characterization(cfg: OracleConfig, equality_tol: float = 1e-9) -> CharacterizationReport:
    """Check every closed-form cap and identity over the configured lattice.

    For each lattice distribution the exact information quantities (both
    channels) are compared against the (u1, u2, u) caps; the report carries
    the largest violation of each inequality and how often it is tight.
    """
    cfg.check_budget()
    report = CharacterizationReport(config=cfg)
    viol = {name: -np.inf for name in _INEQUALITIES + _IDENTITIES}
    eq = {name: 0 for name in _INEQUALITIES}
    n = 0
    for p, q1, q2 in iter_input_grid(cfg):
        noisy = _kernels.input_stats(p, q1, q2, _kernels.KIND_NOISY)
        erased = _kernels.input_stats(p, q1, q2, _kernels.KIND_ERASURE)
        u1 = np.sum(p * q1 * (1.0 - q1), axis=1)
        u2 = np.sum(p * q2 * (1.0 - q2), axis=1)
        u = np.sum(p * (q1 + q2 - 2.0 * q1 * q2), axis=1)
        caps = {
            "h_x1_given_t": (noisy[:, 0], binary_entropy(phi(2.0 * u1))),
            "h_x2_given_t": (noisy[:, 1], binary_entropy(phi(2.0 * u2))),
            "i_x1_y_given_x2": (noisy[:, 2], 0.5 * binary_entropy(u)),
            "i_x2_y_given_x1": (noisy[:, 3], 0.5 * binary_entropy(u)),
            "i_x1x2_y": (noisy[:, 4], binary_entropy((1.0 - u) / 2.0)),
            "h_y_erasure": (erased[:, 5], mu_fn(u)),
        }
        for name, (value, cap) in caps.items():
            gap = value - cap
            viol[name] = max(viol[name], float(gap.max()))
            eq[name] += int(np.count_nonzero(gap >= -equality_tol))
        viol["half_h_x1"] = max(viol["half_h_x1"], float(np.abs(noisy[:, 6] - 0.5 * noisy[:, 0]).max()))
        viol["half_h_x2"] = max(viol["half_h_x2"], float(np.abs(noisy[:, 7] - 0.5 * noisy[:, 1]).max()))
        n += len(u)
    report.n_evaluated = n
    report.max_violation = viol
    report.equality_count = eq
    return report
