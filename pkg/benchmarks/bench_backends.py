"""Timing comparison of the two erfcx kernel backends.

Feeds each backend identical batches of contour-typical arguments, from
quadrature-panel size (15 points) up to large vectorized grids, then times
two end-to-end consumers: a closed-form propagator sweep and an adaptive
quadrature evolution.  Prints median wall times, the numba/numpy speedup,
and the worst pointwise disagreement.  Numba rows are skipped when numba
cannot load.  The panel-sized rows are the ones the adaptive integrator
actually exercises; numpy catches up only on batches too large for it.

Usage:
    python benchmarks/bench_backends.py [--repeats N] [--sizes 15,1000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pointgreen import (
    available_backends,
    delta_prime,
    green,
    plane_wave_datum,
    psi,
    robin,
    set_backend,
)
from pointgreen.backend import kernel_for


def median_time(fn, repeats: int, inner: int = 1) -> float:
    fn()  # warmup: first numba call pays the JIT compile
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            fn()
        times.append((time.perf_counter() - start) / inner)
    return float(np.median(times))


def contour_batch(size: int, seed: int = 42) -> np.ndarray:
    """Arguments shaped like the hot path: rotated-ray points spanning both
    the Taylor disc and the continued-fraction region, plus a short
    left-half-plane slice small enough that the reflection term stays finite.
    """
    rng = np.random.default_rng(seed)
    n_left = size // 8
    n_right = size - n_left
    radius = rng.uniform(0.05, 30.0, n_right)
    angle = rng.uniform(0.0, 0.5 * np.pi, n_right)
    right = radius * np.exp(1j * angle)
    left = rng.uniform(0.1, 2.0, n_left) * np.exp(1j * rng.uniform(0.5 * np.pi, np.pi, n_left))
    out = np.concatenate([right, left]).astype(np.complex128)
    rng.shuffle(out)
    return out


def worst_gap(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))


def bench_kernel(sizes: list[int], repeats: int, has_numba: bool) -> None:
    numpy_kernel = kernel_for("numpy")
    numba_kernel = kernel_for("numba") if has_numba else None
    print("erfcx kernel, flat complex128 batches")
    print(f"{'size':>9}  {'numpy us':>10}  {'numba us':>10}  {'speedup':>8}  {'worst gap':>10}")
    for size in sizes:
        z = contour_batch(size)
        inner = max(1, 20000 // size)
        t_numpy = median_time(lambda: numpy_kernel(z), repeats, inner)
        if numba_kernel is None:
            print(f"{size:>9}  {1e6 * t_numpy:>10.2f}  {'n/a':>10}  {'n/a':>8}  {'n/a':>10}")
            continue
        t_numba = median_time(lambda: numba_kernel(z), repeats, inner)
        gap = worst_gap(numba_kernel(z), numpy_kernel(z))
        print(
            f"{size:>9}  {1e6 * t_numpy:>10.2f}  {1e6 * t_numba:>10.2f}"
            f"  {t_numpy / t_numba:>7.2f}x  {gap:>10.2e}"
        )


def bench_end_to_end(name: str, fn, repeats: int, has_numba: bool, inner: int = 1) -> None:
    print(f"\n{name}")
    set_backend("numpy")
    t_numpy = median_time(fn, repeats, inner)
    value_numpy = fn()
    if not has_numba:
        print(f"numpy  {1e3 * t_numpy:>10.3f} ms")
        set_backend("auto")
        return
    set_backend("numba")
    t_numba = median_time(fn, repeats, inner)
    value_numba = fn()
    set_backend("auto")
    gap = abs(value_numba - value_numpy) / max(1.0, abs(value_numpy))
    print(f"numpy  {1e3 * t_numpy:>10.3f} ms")
    print(f"numba  {1e3 * t_numba:>10.3f} ms   speedup {t_numpy / t_numba:.2f}x   value gap {gap:.2e}")


def propagator_sweep(points: int):
    u = delta_prime(1.5)  # both omega branches live: two Lambda calls per point
    half = points // 2
    ys = np.concatenate([np.linspace(0.05, 8.0, half), -np.linspace(0.05, 8.0, points - half)])

    def sweep() -> complex:
        acc = 0.0 + 0.0j
        for t in (0.1, 1.0, 10.0):
            acc += green(u, t, 0.7, ys).sum()
        return acc

    return sweep


def quadrature_point():
    u = robin(1.5, -0.8)
    datum = plane_wave_datum(3.0)

    def evolve() -> complex:
        return psi(u, 0.7, -1.1, datum)

    return evolve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7, help="timed runs per row (median reported)")
    parser.add_argument(
        "--sizes",
        default="15,60,240,1000,10000,100000",
        help="comma-separated kernel batch sizes",
    )
    parser.add_argument("--grid", type=int, default=20000, help="targets in the propagator sweep")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    has_numba = "numba" in available_backends()
    if not has_numba:
        print("numba backend unavailable; timing numpy only\n")
    bench_kernel(sizes, args.repeats, has_numba)
    bench_end_to_end(
        f"closed-form propagator sweep, {args.grid} targets x 3 times, delta_prime(1.5)",
        propagator_sweep(args.grid),
        args.repeats,
        has_numba,
    )
    bench_end_to_end(
        "adaptive quadrature evolution, one point, robin(1.5, -0.8), planewave k=3",
        quadrature_point(),
        args.repeats,
        has_numba,
    )


if __name__ == "__main__":
    main()
