#!/usr/bin/env python3
"""Run every verification check at desk scale and print a status table."""
import argparse
import time

from rhombus import oeis
from rhombus.grid import generate
from rhombus import verify as v


def checks(orders, max_n, k_max, horizon, grid):
    yield "rhombus rule", lambda: v.verify_rhombus_rule(grid)
    for n in range(max_n + 1):
        yield f"conj2 n={n}", lambda n=n: v.verify_conjecture2(n, grid)
    for n in range(orders + 1):
        yield f"theorem1 n={n}", lambda n=n: v.verify_theorem1(n, grid)
        yield f"counts n={n}", lambda n=n: v.verify_counts(n, grid)
    for n in range(1, orders + 1):
        yield f"lemma1 n={n}", lambda n=n: v.verify_lemma1(n, grid)
        yield f"conj1 n={n}", lambda n=n: v.verify_conjecture1(n, grid)
        yield f"mirror n={n}", lambda n=n: v.verify_mirror(n, grid)
    for k in range(1, k_max + 1):
        yield f"conj3 k={k}", lambda k=k: v.verify_conjecture3(k, horizon, grid, max_order=orders)
    yield f"density n<={max_n}", lambda: v.verify_density(max_n, grid)
    yield f"conj4 m<={horizon}", lambda: v.verify_conjecture4(horizon, grid)
    for seq_id in oeis.KNOWN_IDS:
        yield f"oeis {seq_id}", lambda s=seq_id: oeis.compare(s, oeis.computed_terms(s, 40), mode="offline")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, default=8, help="largest stealth order for structural checks")
    parser.add_argument("--max-n", type=int, default=14, help="largest n for power-of-two row checks")
    parser.add_argument("--k-max", type=int, default=64)
    parser.add_argument("--horizon", type=int, default=4096)
    args = parser.parse_args()

    rows = max(1 << args.max_n, 1 << (args.orders + 1), args.horizon + 2 * args.k_max)
    t0 = time.perf_counter()
    grid = generate(rows)
    print(f"generated {rows} rows in {time.perf_counter() - t0:.2f}s")
    failures = 0
    for name, run in checks(args.orders, args.max_n, args.k_max, args.horizon, grid):
        t0 = time.perf_counter()
        report = run()
        failures += report.status != v.PASS
        print(f"{name:<22} {report.status:<13} {time.perf_counter() - t0:7.3f}s")
    print(f"{failures} failing check(s)")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
