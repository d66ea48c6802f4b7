"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints one line per kernel and size with the median time of each path and
the speed-up. Both paths are imported by name, so no env flag is needed here.
"""

import argparse
import statistics
import time

import numpy as np

from wavegate import _accel


def bench(fn, make_args, repeat):
    fn(*make_args())  # warm-up (and JIT compile)
    times = []
    for _ in range(repeat):
        args = make_args()
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if not _accel.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(0)

    cases = []
    for shape in [(32, 1024, 128), (32, 128)]:
        x = rng.normal(size=shape)
        g = rng.normal(size=shape)
        cdf = _accel.gelu_forward_numpy(x)[1]
        cases.append((f"gelu_forward {shape}", "gelu_forward", lambda x=x: (x,)))
        cases.append((f"gelu_backward {shape}", "gelu_backward", lambda x=x, c=cdf, g=g: (x, c, g)))
    psi1 = rng.normal(size=128) + 1j * rng.normal(size=128)
    psi2 = rng.normal(size=(128, 128)) + 1j * rng.normal(size=(128, 128))
    pot = rng.uniform(0, 5, size=(128, 128))
    cases.append(("phase_kick (128,)", "phase_kick", lambda: (psi1.copy(), 1e-3)))
    cases.append(("trap_kick (128, 128)", "trap_kick", lambda: (psi2.copy(), pot, 1.0, 5e-3, 0.9998)))

    print(f"{'kernel':<34}{'numpy':>12}{'numba':>12}{'speed-up':>10}")
    for label, name, make in cases:
        t_np = bench(getattr(_accel, f"{name}_numpy"), make, args.repeat)
        t_nb = bench(getattr(_accel, f"{name}_numba"), make, args.repeat)
        print(f"{label:<34}{t_np * 1e3:>10.3f}ms{t_nb * 1e3:>10.3f}ms{t_np / t_nb:>9.2f}x")


if __name__ == "__main__":
    main()
