#!/usr/bin/env python3
"""Tightness sweep: watermelon graphs have exactly 3^k minimal u,v-separators.

For each k up to --max-k, enumerate the minimal separators of watermelon(k, q)
through its minimum vertex cover and count those separating the two hubs.
Prints one row per k with wall-clock time; exits nonzero if any count is off.
"""

from __future__ import annotations

import argparse
import sys
import time

from pmckit import (
    is_minimal_uv_separator,
    minimum_vertex_cover,
    separators_by_vc,
    watermelon,
    watermelon_hubs,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=8)
    parser.add_argument("--q", type=int, default=3, help="path length (default 3)")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    print(f"{'k':>3} {'n':>4} {'vc':>4} {'total_seps':>11} {'uv_seps':>9} {'3^k':>9} {'time_s':>8}")
    ok = True
    for k in range(2, args.max_k + 1):
        t0 = time.perf_counter()
        g = watermelon(k, args.q)
        cover = minimum_vertex_cover(g)
        seps = separators_by_vc(g, cover, jobs=args.jobs)
        u, v = watermelon_hubs(k, args.q)
        uv = sum(1 for s in seps if is_minimal_uv_separator(g, s, u, v))
        dt = time.perf_counter() - t0
        expected = 3**k if args.q == 3 else None
        mark = ""
        if expected is not None and uv != expected:
            mark = "  MISMATCH"
            ok = False
        print(
            f"{k:>3} {g.n:>4} {len(cover):>4} {len(seps):>11} {uv:>9} "
            f"{expected if expected is not None else '-':>9} {dt:>8.2f}{mark}"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
