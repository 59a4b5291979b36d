#!/usr/bin/env python3
"""Run the full verification suite over every bundled field descriptor.

Writes one check-table CSV per field into the output directory and prints a
one-line summary per field. Exit status 1 if any check failed anywhere.
Fields that cannot be processed (e.g. the bundled index-prime fixture) are
reported and skipped without failing the run.

Usage:
    python scripts/run_corpus_verify.py [--out-dir out] [--xmax 1e6]
        [--grid 4:24] [--theta-constant classic|broadbent]
"""

import argparse
import sys
from pathlib import Path

from nfmertens.cli import RunConfig, parse_grid, run
from nfmertens.errors import NfMertensError

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--xmax", type=float, default=1e6)
    parser.add_argument("--grid", default="4:24")
    parser.add_argument("--theta-constant", default="classic",
                        choices=("classic", "broadbent"))
    parser.add_argument("--fields-dir", default=str(ROOT / "fields"))
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = tuple(x for x in parse_grid(args.grid) if x <= args.xmax)

    worst = 0
    for field_path in sorted(Path(args.fields_dir).glob("*.field")):
        out_path = out_dir / f"verify_{field_path.stem}.csv"
        config = RunConfig(
            field_path=str(field_path),
            command="verify",
            x_max=args.xmax,
            grid=grid,
            out=str(out_path),
            theta_variant=args.theta_constant,
        )
        try:
            code = run(config)
        except NfMertensError as exc:
            print(f"{field_path.stem}: skipped ({exc})")
            continue
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
