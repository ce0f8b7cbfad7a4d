"""Compare the pure-Python and compiled statistic-table kernels."""

import argparse
import time

from catschett._kernels_py import stat_table_pure

try:
    from catschett import _speedups
except ImportError:
    _speedups = None

HOT_KINDS = ("runs321", "compdyck", "lpkpk231", "lpk321")


def time_call(fn, *args) -> tuple[float, object]:
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=11, help="table size (default 11)")
    parser.add_argument("--kinds", nargs="*", default=list(HOT_KINDS))
    args = parser.parse_args()

    if _speedups is None:
        print("compiled speedups unavailable; timing the pure kernels only")
    header = f"{'kind':12s} {'n':>3s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for kind in args.kinds:
        pure_t, pure_table = time_call(stat_table_pure, kind, args.n)
        if _speedups is None:
            print(f"{kind:12s} {args.n:>3d} {pure_t:>10.3f} {'-':>13s} {'-':>8s}")
            continue
        fast_t, fast_table = time_call(_speedups.stat_table_fast, kind, args.n)
        if fast_table is None:
            print(f"{kind:12s} {args.n:>3d} {pure_t:>10.3f} {'unsupported':>13s} {'-':>8s}")
            continue
        if dict(fast_table) != dict(pure_table):
            raise SystemExit(f"backend mismatch for {kind} at n={args.n}")
        print(f"{kind:12s} {args.n:>3d} {pure_t:>10.3f} {fast_t:>13.3f} "
              f"{pure_t / fast_t:>7.1f}x")


if __name__ == "__main__":
    main()
