"""Run every verification suite and write one JSON report per suite.

    python scripts/run_all_suites.py --out reports --seed 0
"""

import argparse
import json
import time
from pathlib import Path

from latticemed.suites import SuiteConfig, run_suite, suite_names


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="reports")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--suite", action="append", choices=suite_names(), help="repeatable; default is all")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cfg = SuiteConfig(seed=args.seed)
    failed = []
    for name in args.suite or suite_names():
        start = time.perf_counter()
        report = run_suite(name, cfg)
        secs = time.perf_counter() - start
        (out / f"{name}.json").write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
        s = report.summary()
        print(f"{name:28s} {s['pass']:4d} pass {s['fail']:3d} fail {report.checks:9d} checks {secs:6.1f}s")
        if not report.passed:
            failed.append(name)
    if failed:
        print("failed:", ", ".join(failed))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
