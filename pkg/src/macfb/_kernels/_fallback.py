"""Pure-numpy kernels: vectorized exact enumeration over batches of inputs.

Semantics match ``macfb.channel`` exactly (same entropy-difference
definitions); the compiled extension in ``_core.pyx`` implements the same
arithmetic in C loops.  Batches are processed in chunks to bound memory.
"""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 16

KIND_NOISY = 0
KIND_ERASURE = 1

STAT_COLUMNS = (
    "h_x1_given_t",
    "h_x2_given_t",
    "i_x1_y_given_x2",
    "i_x2_y_given_x1",
    "i_x1x2_y",
    "h_y",
    "h_x1_given_y_x2_t",
    "h_x2_given_y_x1_t",
)


def _transition(kind: int) -> np.ndarray:
    ny = 4 if kind == KIND_NOISY else 3
    t = np.zeros((2, 2, ny))
    for x1 in range(2):
        for x2 in range(2):
            if kind == KIND_NOISY:
                t[x1, x2, x1 + x2] = 0.5
                t[x1, x2, x1 + x2 + 1] = 0.5
            else:
                t[x1, x2, x1 + x2] = 1.0
    return t


def _ent(table: np.ndarray) -> np.ndarray:
    """Entropy along all axes but the first (batch axis)."""
    flat = table.reshape(table.shape[0], -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(flat > 0.0, -flat * np.log2(np.where(flat > 0.0, flat, 1.0)), 0.0)
    return terms.sum(axis=1)


def input_stats(p: np.ndarray, q1: np.ndarray, q2: np.ndarray, kind: int) -> np.ndarray:
    """Batch information quantities for conditionally independent inputs.

    ``p``, ``q1``, ``q2`` have shape (n, K).  Returns (n, 8) with columns
    ``STAT_COLUMNS``.
    """
    p = np.ascontiguousarray(p, dtype=float)
    q1 = np.ascontiguousarray(q1, dtype=float)
    q2 = np.ascontiguousarray(q2, dtype=float)
    n = p.shape[0]
    trans = _transition(kind)
    out = np.empty((n, 8))
    for start in range(0, n, CHUNK):
        sl = slice(start, min(start + CHUNK, n))
        out[sl] = _input_stats_chunk(p[sl], q1[sl], q2[sl], trans)
    return out


def _input_stats_chunk(p, q1, q2, trans):
    b1 = np.stack([q1, 1.0 - q1], axis=2)  # (n, K, 2)
    b2 = np.stack([q2, 1.0 - q2], axis=2)
    w = p[:, :, None, None] * b1[:, :, :, None] * b2[:, :, None, :]  # (n, K, 2, 2)
    full = w[..., None] * trans[None, None, ...]  # (n, K, 2, 2, Y)

    s_t = _ent(p)
    s_tx1 = _ent(p[:, :, None] * b1)
    s_tx2 = _ent(p[:, :, None] * b2)
    s_full = _ent(full)
    s_tx1y = _ent(full.sum(axis=3))
    s_tx2y = _ent(full.sum(axis=2))
    m_x1x2y = full.sum(axis=1)  # (n, 2, 2, Y)
    s_x1x2y = _ent(m_x1x2y)
    s_x1x2 = _ent(m_x1x2y.sum(axis=3))
    s_x1y = _ent(m_x1x2y.sum(axis=2))
    s_x2y = _ent(m_x1x2y.sum(axis=1))
    s_x1 = _ent(m_x1x2y.sum(axis=(2, 3)))
    s_x2 = _ent(m_x1x2y.sum(axis=(1, 3)))
    s_y = _ent(m_x1x2y.sum(axis=(1, 2)))

    return np.stack(
        [
            s_tx1 - s_t,
            s_tx2 - s_t,
            (s_x1x2 - s_x2) - (s_x1x2y - s_x2y),
            (s_x1x2 - s_x1) - (s_x1x2y - s_x1y),
            s_y - (s_x1x2y - s_x1x2),
            s_y,
            s_full - s_tx2y,
            s_full - s_tx1y,
        ],
        axis=1,
    )


def cutset_stats(joint: np.ndarray, kind: int = KIND_NOISY) -> np.ndarray:
    """Batch (I(X1;Y|X2), I(X2;Y|X1), I(X1,X2;Y)) for 4-atom input joints.

    ``joint`` has shape (n, 4) holding (P(00), P(01), P(10), P(11)).
    """
    joint = np.ascontiguousarray(joint, dtype=float)
    n = joint.shape[0]
    trans = _transition(kind)
    out = np.empty((n, 3))
    for start in range(0, n, CHUNK):
        sl = slice(start, min(start + CHUNK, n))
        out[sl] = _cutset_chunk(joint[sl], trans)
    return out


def _cutset_chunk(joint, trans):
    w = joint.reshape(-1, 2, 2)
    law = w[..., None] * trans[None, ...]  # (n, 2, 2, Y)
    s_x1x2y = _ent(law)
    s_x1x2 = _ent(w)
    s_x1y = _ent(law.sum(axis=2))
    s_x2y = _ent(law.sum(axis=1))
    s_x1 = _ent(w.sum(axis=2))
    s_x2 = _ent(w.sum(axis=1))
    s_y = _ent(law.sum(axis=(1, 2)))
    i1 = (s_x1x2 - s_x2) - (s_x1x2y - s_x2y)
    i2 = (s_x1x2 - s_x1) - (s_x1x2y - s_x1y)
    isum = s_y - (s_x1x2y - s_x1x2)
    return np.stack([i1, i2, isum], axis=1)
