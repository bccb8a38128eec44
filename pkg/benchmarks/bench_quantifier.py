"""Compare the quantifier-form cone kernels: numba submask loops vs numpy transforms.

    python3 benchmarks/bench_quantifier.py                    # both backends in this process
    FREEVL_DISABLE_NUMBA=1 python3 benchmarks/bench_quantifier.py --max-atoms 10
                                                              # loops run as plain Python

Times are the best of ``--repeat`` runs over a fixed batch of random sums; the
numba loops are compiled (and checked against numpy) before timing starts.
"""

import argparse
import random
import time
from fractions import Fraction

from freevl import kernels
from freevl._accel import USE_NUMBA


def batch(rng, n_atoms, count, support):
    out = []
    for _ in range(count):
        masks = [rng.getrandbits(n_atoms) for _ in range(support)]
        coeffs = [Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3))) for _ in range(support)]
        out.append((masks, coeffs))
    return out


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-atoms", type=int, default=2)
    ap.add_argument("--max-atoms", type=int, default=14)
    ap.add_argument("--count", type=int, default=50, help="sums per atom count")
    ap.add_argument("--support", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--form", choices=["simplified", "original"], default="simplified")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    loop_name = "numba" if USE_NUMBA else "python loop"
    print(f"form={args.form}  loops compiled: {USE_NUMBA}  sums/row={args.count}  support={args.support}")
    print(f"{'atoms':>5}  {loop_name + ' [s]':>16}  {'numpy [s]':>12}  {'ratio':>8}")
    for n in range(args.min_atoms, args.max_atoms + 1):
        sums = batch(rng, n, args.count, args.support)
        for masks, coeffs in sums[:3]:  # warm-up and cross-check
            a = kernels.quantifier_check(n, masks, coeffs, form=args.form, backend="numba")
            b = kernels.quantifier_check(n, masks, coeffs, form=args.form, backend="numpy")
            assert a == b, (n, masks, coeffs)

        def run(backend):
            return lambda: [kernels.quantifier_check(n, m, c, form=args.form, backend=backend) for m, c in sums]

        t_loop = best_time(run("numba"), args.repeat)
        t_np = best_time(run("numpy"), args.repeat)
        print(f"{n:>5}  {t_loop:>16.5f}  {t_np:>12.5f}  {t_loop / t_np:>8.2f}")


if __name__ == "__main__":
    main()
