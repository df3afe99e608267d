"""Command-line front end.

    annihilator gb      --field gf2 --seq 1,0,0,1,1,0,1,0 [--reduced] [--json]
    annihilator minpoly --field gf7 --file seqs.txt
    annihilator profile --field q   --seq 1,2,4,8
    annihilator trace   --field gf2 --seq 1,0,0,1,1,0,1,0
    annihilator verify  --field gf3 --seed 42 [--length 12]

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
outside the domain (an all-zero sequence where a basis is required).
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional

from . import bm, engine, oracle
from .errors import AllZeroSequence, NonPrimeModulus
from .field import Field, parse_field
from .inverse import InverseForm, Sequence, from_sequence

COMMANDS = ("gb", "minpoly", "profile", "verify", "trace")


@dataclass
class CliConfig:
    command: str
    field: Field
    inputs: list  # Sequence or InverseForm items, in input order
    reduced: bool = False
    json: bool = False
    seed: Optional[int] = None
    batch: bool = False


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _field_arg(text: str) -> Field:
    try:
        return parse_field(text)
    except (ValueError, NonPrimeModulus) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="annihilator", description="Annihilator ideals of finite sequences.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--field", required=True, type=_field_arg, help="gf2, gf<p> or q")
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--seq", help="comma-separated sequence terms")
    src.add_argument("--file", help="one sequence per line; '-' for stdin")
    src.add_argument("--form-json", help="inverse form (or list of them) as JSON")
    parser.add_argument("--reduced", action="store_true", help="compute the reduced basis")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, help="random input when no source is given")
    parser.add_argument("--length", type=int, default=12, help="length of the random input")
    return parser


def _read_lines(path: str) -> list[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_args(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    field = ns.field
    batch = False
    try:
        if ns.seq is not None:
            inputs = [Sequence.parse(field, ns.seq)]
        elif ns.file is not None:
            inputs = [Sequence.parse(field, ln) for ln in _read_lines(ns.file)]
            batch = True
        elif ns.form_json is not None:
            with open(ns.form_json) as fh:
                obj = json.load(fh)
            batch = isinstance(obj, list)
            objs = obj if batch else [obj]
            inputs = [InverseForm.from_json(field, o) for o in objs]
        elif ns.seed is not None:
            rng = random.Random(ns.seed)
            terms = [rng.randrange(field.char or 7) for _ in range(ns.length)]
            if not any(terms):
                terms[-1] = 1
            inputs = [Sequence(field, tuple(terms))]
        else:
            raise UsageError("one of --seq, --file, --form-json or --seed is required")
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad input: {exc}") from exc
    return CliConfig(ns.command, field, inputs, ns.reduced, ns.json, ns.seed, batch)


# rendering


def _color() -> bool:
    return os.environ.get("ANNIH_COLOR", "0") == "1"


def _bold(text: str) -> str:
    return f"\x1b[1m{text}\x1b[0m" if _color() else text


def _as_form(item) -> InverseForm:
    return item if isinstance(item, InverseForm) else from_sequence(item)


def _as_sequence(item) -> Sequence:
    if isinstance(item, Sequence):
        return item
    from .inverse import to_sequence

    return to_sequence(item)


def render_gb(out: engine.AnnihilatorBasis) -> str:
    lines = [
        f"field: {out.field.name}",
        f"m: {out.m}",
        f"lambda: {out.lam}",
        f"dim: {out.dim}",
        f"reduced: {str(out.reduced).lower()}",
        "degree_tuple: " + ",".join(map(str, out.dtuple)),
        "profile: " + ",".join(map(str, out.profile)),
        f"min_poly: {out.min_poly()}",
        "basis:",
    ]
    for i, (f, e) in enumerate(zip(out.basis, engine.staircase(out)), 1):
        lines.append(f"  f{i} = {f}    e = ({e.x},{e.z})")
    return "\n".join(lines)


def render_trace(rows) -> str:
    cells = [("m", "f", "D")]
    for r in rows:
        forms = ",".join(f.display(factor_z=True) for f in r.basis)
        cells.append((str(r.m), f"({forms})", "(" + ",".join(map(str, r.dtuple)) + ")"))
    w = [max(len(c[i]) for c in cells) for i in range(3)]
    lines = []
    for k, (a, b, c) in enumerate(cells):
        line = f"{a:>{w[0]}} | {b:<{w[1]}} | {c}"
        lines.append(_bold(line) if k == 0 else line)
        if k == 0:
            lines.append("-" * len(f"{a:>{w[0]}} | {b:<{w[1]}} | {c:<{w[2]}}"))
    return "\n".join(lines)


def render_minpoly(res: bm.MinPolyResult) -> str:
    lines = [f"mu1 = {res.mu1}", f"lc = {res.lc}"]
    if res.degenerate:
        lines.append("degenerate = true")
    return "\n".join(lines)


def _one(cfg: CliConfig, item):
    """(text, json_obj, exit_code) for a single input."""
    cmd = cfg.command
    if cmd in ("gb", "trace", "verify"):
        try:
            F = _as_form(item)
        except AllZeroSequence as exc:
            raise _DomainError(str(exc)) from exc
    if cmd == "gb":
        out = engine.run(F, reduced=cfg.reduced)
        return render_gb(out), out.to_json(), 0
    if cmd == "trace":
        out = engine.run(F, reduced=cfg.reduced, trace=True)
        return render_trace(out.trace), [r.to_json() for r in out.trace], 0
    if cmd == "verify":
        rep = oracle.verify_sequence(_as_sequence(item))
        return rep.table(), rep.to_json(), 0 if rep.passed else 1
    seq = _as_sequence(item)
    res = bm.minimal_polynomial(seq)
    if cmd == "minpoly":
        return render_minpoly(res), res.to_json(), 0
    return ",".join(map(str, res.profile)), list(res.profile), 0


class _DomainError(Exception):
    pass


def run_command(cfg: CliConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    texts, objs, code = [], [], 0
    for item in cfg.inputs:
        try:
            text, obj, rc = _one(cfg, item)
        except _DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        texts.append(text)
        objs.append(obj)
        code = max(code, rc)
    if cfg.json:
        payload = objs if cfg.batch else objs[0]
        stdout.write(json.dumps(payload) + "\n")
    else:
        stdout.write("\n\n".join(texts) + "\n")
    return code


def main(argv=None, stdout=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"annihilator: error: {exc}", file=sys.stderr)
        return 2
    return run_command(cfg, stdout)


if __name__ == "__main__":
    sys.exit(main())
