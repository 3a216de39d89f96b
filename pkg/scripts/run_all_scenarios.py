"""Run every scenario and write one JSON report per scenario plus a summary line each."""

import argparse
from pathlib import Path

from fibercas.report import emit_json
from fibercas.scenarios import SCENARIOS, ScenarioConfig, run_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--long", action="store_true")
    ap.add_argument("--timing", action="store_true")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    config = ScenarioConfig(long=args.long)
    failed = 0
    for sid in sorted(SCENARIOS):
        rep = run_scenario(sid, config=config)
        (args.out / f"{sid}.json").write_text(emit_json(rep, args.timing), encoding="utf-8")
        real = [c for c in rep.checks if not c.informative]
        print(f"{sid}: {'PASS' if rep.passed else 'FAIL'} {sum(c.passed for c in real)}/{len(real)}"
              f" in {rep.timing_s:.2f}s")
        failed += not rep.passed
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
