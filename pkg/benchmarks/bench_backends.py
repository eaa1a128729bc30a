"""Throughput of the compiled grid kernel against the pure numpy fallback.

Workload: the standard 2001-point full-band sweep of a gain/loss ring,
repeated enough to drown out timer noise.  Run from the repo root:

    python benchmarks/bench_backends.py
"""

import time

import numpy as np

from triodot import _core_py

try:
    from triodot import _core
except ImportError:
    _core = None

# ring, v1 = v2 = 0.5, E2 = t3 = 0.5, gamma = 0.3
ARGS = dict(
    h11=complex(0.0, -0.3),
    h22=complex(0.5, 0.0),
    h33=complex(0.0, 0.3),
    h12=complex(0.5, 0.0),
    h23=complex(0.5, 0.0),
    h13=complex(0.5, 0.0),
    vl=np.array([0.5, 0.5, 0.5]),
    vr=np.array([0.5, 0.5, 0.5]),
    t0=1.0,
)


def time_kernel(impl, omegas, reps):
    impl.transport_grid(omegas=omegas, **ARGS)  # warm up
    start = time.perf_counter()
    for _ in range(reps):
        impl.transport_grid(omegas=omegas, **ARGS)
    return (time.perf_counter() - start) / reps


def main():
    omegas = np.linspace(-1.999, 1.999, 2001)
    reps = 200
    rows = []
    py_time = time_kernel(_core_py, omegas, reps)
    rows.append(("python", py_time))
    if _core is not None:
        c_time = time_kernel(_core, omegas, reps)
        rows.append(("compiled", c_time))

    print(f"{'backend':>10}  {'ms/sweep':>10}  {'points/s':>12}")
    for name, t in rows:
        print(f"{name:>10}  {1e3 * t:>10.3f}  {len(omegas) / t:>12.3e}")
    if _core is not None:
        print(f"\ncompiled speedup over python: {py_time / c_time:.1f}x")
    else:
        print("\ncompiled kernel not built; python fallback only")


if __name__ == "__main__":
    main()
