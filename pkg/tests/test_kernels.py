import numpy as np
import pytest

from macfb import _kernels
from macfb.channel import Channel, JointInputDistribution, cutset_quantities, info_quantities


def random_batch(rng, n, k):
    p = rng.dirichlet(np.ones(k), size=n)
    q1 = rng.uniform(size=(n, k))
    q2 = rng.uniform(size=(n, k))
    return p, q1, q2


def test_backend_reported():
    assert _kernels.BACKEND in ("compiled", "numpy")
    assert set(_kernels.backends()) >= {"numpy"}


@pytest.mark.skipif(not _kernels.HAVE_COMPILED, reason="extension not built")
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("kind", [_kernels.KIND_NOISY, _kernels.KIND_ERASURE])
def test_compiled_matches_numpy_input_stats(rng, k, kind):
    backends = _kernels.backends()
    p, q1, q2 = random_batch(rng, 512, k)
    got = backends["compiled"].input_stats(p, q1, q2, kind)
    want = backends["numpy"].input_stats(p, q1, q2, kind)
    np.testing.assert_allclose(got, want, atol=1e-13, rtol=0)


@pytest.mark.skipif(not _kernels.HAVE_COMPILED, reason="extension not built")
def test_compiled_matches_numpy_cutset(rng):
    backends = _kernels.backends()
    joint = rng.dirichlet(np.ones(4), size=1024)
    got = backends["compiled"].cutset_stats(joint, _kernels.KIND_NOISY)
    want = backends["numpy"].cutset_stats(joint, _kernels.KIND_NOISY)
    np.testing.assert_allclose(got, want, atol=1e-13, rtol=0)


@pytest.mark.parametrize("name", ["numpy", "compiled"])
def test_kernels_match_reference_channel_module(rng, name):
    backends = _kernels.backends()
    if name not in backends:
        pytest.skip("extension not built")
    mod = backends[name]
    for kind, channel in ((_kernels.KIND_NOISY, Channel.NOISY_ADDITIVE), (_kernels.KIND_ERASURE, Channel.ERASURE)):
        for k in (1, 2, 3):
            p, q1, q2 = random_batch(rng, 32, k)
            stats = mod.input_stats(p, q1, q2, kind)
            for i in range(stats.shape[0]):
                q = info_quantities(channel, JointInputDistribution(p[i], q1[i], q2[i]))
                ref = [
                    q.h_x1_given_t,
                    q.h_x2_given_t,
                    q.i_x1_y_given_x2,
                    q.i_x2_y_given_x1,
                    q.i_x1x2_y,
                    q.h_y,
                    q.h_x1_given_y_x2_t,
                    q.h_x2_given_y_x1_t,
                ]
                np.testing.assert_allclose(stats[i], ref, atol=1e-12, rtol=0)


@pytest.mark.parametrize("name", ["numpy", "compiled"])
def test_cutset_kernel_matches_reference(rng, name):
    backends = _kernels.backends()
    if name not in backends:
        pytest.skip("extension not built")
    mod = backends[name]
    joint = rng.dirichlet(np.ones(4), size=64)
    stats = mod.cutset_stats(joint, _kernels.KIND_NOISY)
    for i in range(64):
        ref = cutset_quantities(Channel.NOISY_ADDITIVE, joint[i])
        np.testing.assert_allclose(stats[i], ref, atol=1e-12, rtol=0)


def test_chunked_equals_unchunked(monkeypatch, rng):
    from macfb._kernels import _fallback

    p, q1, q2 = random_batch(rng, 1000, 2)
    full = _fallback.input_stats(p, q1, q2, _fallback.KIND_NOISY)
    monkeypatch.setattr(_fallback, "CHUNK", 7)
    chunked = _fallback.input_stats(p, q1, q2, _fallback.KIND_NOISY)
    np.testing.assert_array_equal(full, chunked)


def test_env_var_forces_fallback():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "from macfb import _kernels; print(_kernels.BACKEND)"],
        env={"MACFB_KERNELS": "numpy", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.stdout.strip() == "numpy"
