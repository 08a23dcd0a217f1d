"""Time every hot kernel under the numba and the pure-numpy backend.

    python benchmarks/bench_kernels.py [--repeat 20] [--batch 64]

Shapes follow the MNIST LeNet-5 used in the experiments (batch of 64,
1->16 and 16->32 channel 5x5 convolutions, 2x2 pooling) plus the SLBF
select-and-combine step with m = 8, k = 1 and m = 8, k = 4. Prints one
row per kernel and shape with both timings and the speedup of numba over
numpy. Results from both backends are cross-checked before timing.
"""
import argparse
import time

import numpy as np

from slbf import kernels


def _time(fn, args, repeat):
    fn(*args)  # warm-up / JIT compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases(batch, rng):
    f32 = np.float32
    x1 = rng.standard_normal((batch, 1, 28, 28)).astype(f32)
    x2 = rng.standard_normal((batch, 16, 12, 12)).astype(f32)
    yield "im2col", "conv1 1x28x28 d5", (x1, 5, 1, 24, 24)
    yield "im2col", "conv2 16x12x12 d5", (x2, 5, 1, 8, 8)
    cols2 = rng.standard_normal((16 * 25, batch * 64)).astype(f32)
    yield "col2im", "conv2 16x12x12 d5", (cols2, batch, 16, 12, 12, 5, 1, 8, 8)
    a1 = rng.standard_normal((batch, 16, 24, 24)).astype(f32)
    yield "maxpool_forward", "16x24x24 p2", (a1, 2)
    _, arg = kernels.numpy_backend.maxpool_forward(a1, 2)
    g1 = rng.standard_normal((batch, 16, 12, 12)).astype(f32)
    yield "maxpool_backward", "16x24x24 p2", (g1, arg, 24, 24, 2)
    yield "channel_moments", "16x24x24", (a1,)
    yield "channel_grad_sums", "16x24x24", (a1, a1[::-1].copy())
    for k in (1, 4):
        maps = rng.standard_normal((k, 8, batch * 64)).astype(f32)
        rows = rng.integers(0, 8, (32, k)).astype(np.int64)
        vals = rng.standard_normal((32, k)).astype(f32)
        go = rng.standard_normal((32, batch * 64)).astype(f32)
        yield "select_combine", f"c_out32 m8 k{k}", (maps, rows, vals)
        yield "select_grad", f"c_out32 m8 k{k}", (go, maps, rows)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--batch", type=int, default=64)
    args = ap.parse_args(argv)
    if kernels.numba_backend is None:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18}{'shape':<22}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}")
    for name, label, fargs in cases(args.batch, rng):
        f_np = getattr(kernels.numpy_backend, name)
        f_nb = getattr(kernels.numba_backend, name)
        a, b = f_np(*fargs), f_nb(*fargs)
        for u, v in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            np.testing.assert_allclose(u, v, rtol=1e-4, atol=1e-4)
        t_np = _time(f_np, fargs, args.repeat)
        t_nb = _time(f_nb, fargs, args.repeat)
        print(f"{name:<18}{label:<22}{t_np * 1e3:>10.3f}{t_nb * 1e3:>10.3f}{t_np / t_nb:>8.2f}x")


if __name__ == "__main__":
    main()
