"""Compare the compiled kernels with the pure-Python fallback.

Runs the graded Fedder method end to end on a few Table 1 cells, once per
backend, and checks that both backends agree on the verdict and effort.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import importlib
import json
import statistics
import time
from unittest import mock

from fpure_lab import kernels
from fpure_lab.table1 import row_graph

fedder_mod = importlib.import_module("fpure_lab.fedder")

CASES = [("coC5", 3), ("coC5", 5), ("co-XF6^2", 3), ("co-XF5^3", 3), ("coC5", 7)]


def run_case(name: str, p: int, backend, repeat: int) -> dict:
    g = row_graph(name)
    times = []
    report = None
    with mock.patch.object(fedder_mod, "kernels", backend):
        for _ in range(repeat):
            t0 = time.perf_counter()
            report = fedder_mod.fedder(g, p, name=name)
            times.append(time.perf_counter() - t0)
    return {"verdict": report.verdict, "best_s": min(times), "median_s": statistics.median(times),
            "row_reductions": report.components[0].get("row_reductions")}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="write results here")
    ap.add_argument("--quick", action="store_true", help="only the two smallest cells")
    args = ap.parse_args(argv)

    try:
        compiled = kernels.backend_module("cython")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1
    fallback = kernels.backend_module("python")
    cases = CASES[:2] if args.quick else CASES
    rows = []
    print(f"{'cell':<14}{'p':>3}{'verdict':>11}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for name, p in cases:
        c = run_case(name, p, compiled, args.repeat)
        py = run_case(name, p, fallback, max(1, args.repeat // 2))
        if (c["verdict"], c["row_reductions"]) != (py["verdict"], py["row_reductions"]):
            raise SystemExit(f"backends disagree on {name} p={p}: {c} vs {py}")
        speedup = py["best_s"] / c["best_s"]
        rows.append({"cell": name, "p": p, "verdict": c["verdict"], "cython": c, "python": py,
                     "speedup": round(speedup, 2)})
        print(f"{name:<14}{p:>3}{c['verdict']:>11}{c['best_s']:>11.3f}{py['best_s']:>11.3f}{speedup:>8.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
