"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (for instance ``betti`` on a
non-ACM set), 2 for malformed input or usage.
"""

from __future__ import annotations

import argparse
import sys

from . import acceptance
from .combinat import first_difference
from .acm2 import betti, border, format_betti, is_acm, peel
from .errors import DomainError, InconsistencyError, MalformedInputError
from .geometry import format_pointset, gen_depth_example, gen_grid, gen_random, parse_pointset
from .hilbert import format_table, hilbert_table
from .lifting import lift_staircase
from .staircase import parse_staircase


def _field(text: str) -> int | None:
    if text == "rational":
        return None
    if text.startswith("prime:"):
        try:
            return int(text[6:])
        except ValueError:
            pass
    raise MalformedInputError(f"--field must be 'rational' or 'prime:<p>', got {text!r}")


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise MalformedInputError(f"{what} {text!r} is not a comma-separated list of integers") from None
    if any(v < 0 for v in vals):
        raise MalformedInputError(f"{what} {text!r} has a negative entry")
    return vals


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None


def _table_values(args, x):
    tbl = hilbert_table(x, _field(args.field))
    if args.window is None:
        return tbl, tbl.values
    window = _ints(args.window, "--window")
    if len(window) != x.k:
        raise MalformedInputError(f"--window needs {x.k} entries, got {len(window)}")
    return tbl, tbl.on_window(window)


def cmd_hilbert(args) -> str:
    _, values = _table_values(args, parse_pointset(_read(args.input)))
    return format_table(values)


def cmd_delta(args) -> str:
    _, values = _table_values(args, parse_pointset(_read(args.input)))
    return format_table(first_difference(values))


def cmd_acm(args) -> str:
    v = is_acm(parse_pointset(_read(args.input)), _field(args.field))
    lines = ["ACM" if v.is_acm else "NOT ACM",
             f"alpha={v.alpha}",
             f"beta={v.beta}",
             f"alpha*={v.alpha_conjugate} beta={v.beta}"]
    if v.witness is not None:
        cond, cell = v.witness
        value = int(v.delta[cell])
        lines.append(f"witness condition={cond} at={','.join(map(str, cell))} DeltaH={value}")
    return "\n".join(lines) + "\n"


def cmd_border(args) -> str:
    b = border(parse_pointset(_read(args.input)), _field(args.field))
    return ("B_C\t" + "\t".join(map(str, b.b_c)) + "\n"
            + "B_R\t" + "\t".join(map(str, b.b_r)) + "\n")


def cmd_betti(args) -> str:
    v = is_acm(parse_pointset(_read(args.input)), _field(args.field))
    if not v.is_acm:
        raise DomainError(f"betti needs an ACM set: alpha*={v.alpha_conjugate} beta={v.beta}")
    return format_betti(betti(v.alpha))


def cmd_lift(args) -> str:
    st = parse_staircase(_read(args.input))
    dims = _ints(args.dims, "--dims") if args.dims else None
    return format_pointset(lift_staircase(st, dims))


def cmd_peel(args) -> str:
    return format_pointset(peel(parse_pointset(_read(args.input)), _field(args.field)))


def cmd_gen(args) -> str:
    p = args.params
    if args.kind == "grid":
        if len(p) != 2:
            raise MalformedInputError("usage: gen grid <t> <r>")
        t, r = (int(v) for v in p)
        return format_pointset(gen_grid(t, r))
    if args.kind == "depth":
        if len(p) != 2:
            raise MalformedInputError("usage: gen depth <k> <l>")
        k, l = (int(v) for v in p)
        dims = _ints(args.dims, "--dims") if args.dims else (1,) * k
        if len(dims) != k:
            raise MalformedInputError(f"--dims needs {k} entries")
        return format_pointset(gen_depth_example(dims, l))
    if len(p) not in (1, 2):
        raise MalformedInputError("usage: gen random <s> [<seed>]")
    s = int(p[0])
    seed = int(p[1]) if len(p) == 2 else args.seed
    dims = _ints(args.dims, "--dims") if args.dims else (1, 1)
    return format_pointset(gen_random(dims, s, seed))


def cmd_selftest(args) -> str:
    results = acceptance.run_all(echo=lambda line: print(line, flush=True))
    failed = [r for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} criteria passed\n"
    if failed:
        sys.stdout.write(summary)
        raise DomainError("selftest failed")
    return summary


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multihilb",
                                 description="Hilbert functions of points in products of projective spaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    fieldopt = argparse.ArgumentParser(add_help=False)
    fieldopt.add_argument("--field", default="rational", help="rational (default) or prime:<p>")
    sub = ap.add_subparsers(dest="verb", required=True)

    for name, fn, help_ in [("hilbert", cmd_hilbert, "Hilbert table as TSV"),
                            ("delta", cmd_delta, "first difference of the Hilbert table")]:
        sp = sub.add_parser(name, parents=[common, fieldopt], help=help_)
        sp.add_argument("input", help="point-set file, or - for stdin")
        sp.add_argument("--window", help="w1,w2,... (default t_1,...,t_k)")
        sp.set_defaults(func=fn)
    for name, fn, help_ in [("acm", cmd_acm, "ACM test in P^1 x P^1"),
                            ("border", cmd_border, "border tuples B_C and B_R"),
                            ("betti", cmd_betti, "Betti shifts of an ACM set"),
                            ("peel", cmd_peel, "remove a largest first-factor fiber")]:
        sp = sub.add_parser(name, parents=[common, fieldopt], help=help_)
        sp.add_argument("input", help="point-set file, or - for stdin")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("lift", parents=[common], help="lift a staircase file to a point set")
    sp.add_argument("input", help="staircase file, or - for stdin")
    sp.add_argument("--dims", help="n1,...,nk grouping of the variables (default all 1)")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("gen", parents=[common], help="generate a point set")
    sp.add_argument("kind", choices=["grid", "depth", "random"])
    sp.add_argument("params", nargs="*", help="grid: t r | depth: k l | random: s [seed]")
    sp.add_argument("--seed", type=int, default=0, help="seed for gen random")
    sp.add_argument("--dims", help="n1,...,nk for depth/random")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    sp.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MalformedInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
