"""Benchmark the compiled reduction kernels against the pure-Python fallback.

Times ``transform_reduce`` (plain and powered transforms) and
``sign_split_sums`` on random cell arrays of growing size, checks that the
two backends agree bit for bit on every input, and prints per-call times
with the speedup of the compiled extension.

Run from the repository root::

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 1000,100000 --repeat 9
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from monotonia import _kernels_py

try:
    from monotonia import _kernels
except ImportError:
    _kernels = None


def _time_call(fn, args, repeat: int) -> float:
    """Best-of-``repeat`` seconds per call, with an auto-scaled loop count."""
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def _cases(n: int, rng: np.random.Generator):
    lengths = rng.uniform(0.01, 2.0, n)
    values = rng.uniform(-5.0, 5.0, n)
    return [
        ("transform_reduce ABS", "transform_reduce", (lengths, values, _kernels_py.ABS)),
        (
            "transform_reduce NEG_POW p=2.7",
            "transform_reduce",
            (lengths, values, _kernels_py.NEG_POW, 2.7),
        ),
        ("sign_split_sums", "sign_split_sums", (lengths, values)),
    ]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="1000,10000,100000",
        help="comma-separated cell counts (default 1000,10000,100000)",
    )
    parser.add_argument(
        "--repeat", type=int, default=5, help="timing repetitions, best is kept (default 5)"
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed for the cell data")
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels is None:
        print("compiled extension not importable; timing the python backend only")
    header = f"{'kernel':32} {'cells':>8} {'python':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    rng = np.random.default_rng(args.seed)
    for n in sizes:
        for label, name, call_args in _cases(n, rng):
            py_fn = getattr(_kernels_py, name)
            py_time = _time_call(py_fn, call_args, args.repeat)
            if _kernels is None:
                print(f"{label:32} {n:>8} {py_time * 1e6:>10.1f}us {'-':>12} {'-':>8}")
                continue
            c_fn = getattr(_kernels, name)
            if py_fn(*call_args) != c_fn(*call_args):
                raise AssertionError(f"backend mismatch for {label} at n={n}")
            c_time = _time_call(c_fn, call_args, args.repeat)
            print(
                f"{label:32} {n:>8} {py_time * 1e6:>10.1f}us "
                f"{c_time * 1e6:>10.1f}us {py_time / c_time:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
