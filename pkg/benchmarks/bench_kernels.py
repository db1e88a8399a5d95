"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from spincong import _purekernels

try:
    from spincong import _kernels
except ImportError:
    _kernels = None


def cases():
    rng = random.Random(0)
    a = [rng.randint(-1000, 1000) for _ in range(2000)]
    b = [rng.randint(-1000, 1000) for _ in range(2000)]
    return [
        ("mul_trunc_i64 2000x2000", lambda m: m.mul_trunc_i64(a, b, 2000)),
        ("strict_sign_counts 110", lambda m: m.strict_sign_counts(110)),
        ("core_sign_counts 150, p=7", lambda m: m.core_sign_counts(150, 7)),
        ("core_sign_counts 120, p=13", lambda m: m.core_sign_counts(120, 13)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':30} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>9}")
    for name, fn in cases():
        pure = min(timeit.repeat(lambda: fn(_purekernels), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:30} {pure:12.4f} {'-':>13} {'-':>9}")
            continue
        assert fn(_kernels) == fn(_purekernels), name
        fast = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:30} {pure:12.4f} {fast:13.5f} {pure / fast:8.0f}x")


if __name__ == "__main__":
    main()
