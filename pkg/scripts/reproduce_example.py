#!/usr/bin/env python3
"""Print the construction table, staircase and minimal polynomial for 1,0,0,1,1,0,1,0 over GF(2)."""
import sys

from annihilator import bm, engine
from annihilator.cli import render_trace
from annihilator.field import GF2
from annihilator.inverse import Sequence, from_sequence

TERMS = (1, 0, 0, 1, 1, 0, 1, 0)


def main() -> int:
    s = Sequence(GF2, TERMS)
    F = from_sequence(s)
    out = engine.run(F, trace=True)
    print(f"F = {F}\n")
    print(render_trace(out.trace))
    print()
    corners = ", ".join(f"({e.x},{e.z})" for e in engine.staircase(out))
    print(f"staircase corners: {corners}")
    print(f"degree tuple:      {out.dtuple}")
    print(f"dim = |f1||f2|:    {out.f1.deg}*{out.f2.deg} = {out.dim} (rectangle sum {engine.rectangle_sum(out)})")
    mp = bm.minimal_polynomial(s)
    print(f"minimal poly:      {mp.mu1}  (lc {mp.lc})")
    print("profile:           " + ",".join(map(str, mp.profile)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
