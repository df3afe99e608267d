#!/usr/bin/env python3
"""Run the construction on random sequences and check its invariants after every step."""
import argparse
import sys
import time

from annihilator.campaign import random_sequences, structural_violations
from annihilator.field import parse_field


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10**4)
    ap.add_argument("--max-len", type=int, default=64)
    ap.add_argument("--fields", default="gf2,gf3,gf5,gf101")
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--show", type=int, default=10)
    args = ap.parse_args(argv)

    fields = [parse_field(f) for f in args.fields.split(",")]
    bad = []
    t0 = time.perf_counter()
    for s in random_sequences(fields, args.count, args.max_len, args.seed):
        bad += [f"{s.field.name} [{s}]: {m}" for m in structural_violations(s)]
    elapsed = time.perf_counter() - t0
    for line in bad[: args.show]:
        print(line)
    print(f"{args.count} sequences, {len(bad)} violations, {elapsed:.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
