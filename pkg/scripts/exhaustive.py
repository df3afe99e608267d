#!/usr/bin/env python3
"""Check every nontrivial sequence up to a given length against the oracles.

    python scripts/exhaustive.py                  # GF(2) n<=10 and GF(3) n<=6
    python scripts/exhaustive.py --field gf5 --max-len 4 --uniqueness
"""
import argparse
import sys
import time

from annihilator.campaign import all_sequences, exhaustive_violations, uniqueness_violations
from annihilator.field import parse_field

DEFAULT = [("gf2", 10), ("gf3", 6)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", help="gf<p>; default runs the standard GF(2)/GF(3) suite")
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--uniqueness", action="store_true", help="also check the uniqueness conditions")
    ap.add_argument("--show", type=int, default=10, help="violations to print")
    args = ap.parse_args(argv)

    plan = [(args.field, args.max_len)] if args.field else DEFAULT
    total, bad = 0, []
    t0 = time.perf_counter()
    for name, n in plan:
        field = parse_field(name)
        for s in all_sequences(field, n):
            total += 1
            msgs = exhaustive_violations(s)
            if args.uniqueness:
                msgs += uniqueness_violations(s)
            bad += [f"{field.name} [{s}]: {m}" for m in msgs]
    elapsed = time.perf_counter() - t0
    for line in bad[: args.show]:
        print(line)
    print(f"{total} sequences, {len(bad)} violations, {elapsed:.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
