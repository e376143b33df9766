"""Deterministic command-line frontend.

Each subcommand routes to one module operation and prints sorted,
reproducible output.  Exit status is 0 on success, 1 when a
verification report comes back negative, and 2 on usage errors
(including malformed input text).
"""

import argparse
import os
import sys

from .coxeter import coxeter_group
from .embed import conjecture_436_check, drank_sequence, rho_build, rho_verify_bijection
from .planar import Context, fusion_twist
from .selftest import CHECKS, KNOWN_FAILURES, run_check
from .table_algebra import TableAlgebra
from .tabular import datum_build
from .tl import tl
from .verlinde import make_verlinde


class UsageError(Exception):
    """Bad flags or unparseable input; reported on stderr with status 2."""


GROUP_RANKS = {"A": (1, 2, 3, 4), "B": (2, 3), "H": (3, 4), "I": (2,)}


def _context(args) -> Context:
    if args.algebra:
        try:
            with open(args.algebra, encoding="ascii") as fh:
                alg = TableAlgebra.from_text(fh.read())
        except (OSError, ValueError) as exc:
            raise UsageError(f"--algebra {args.algebra}: {exc}") from exc
    elif args.verlinde:
        alg = make_verlinde(args.verlinde)
    else:
        raise UsageError("a context needs --verlinde <r> or --algebra <file>")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return Context(args.n, alg)


def _group(args):
    family = args.type
    if family not in GROUP_RANKS:
        raise UsageError(f"--type {family}: expected one of A, B, H, I")
    if args.rank not in GROUP_RANKS[family]:
        allowed = ", ".join(str(k) for k in GROUP_RANKS[family])
        raise UsageError(f"--rank {args.rank}: type {family} supports {allowed}")
    if family == "I":
        if not 3 <= args.m <= 12:
            raise UsageError("--m is required for type I and must be in 3..12")
        return coxeter_group("I", 2, args.m)
    if args.m:
        raise UsageError("--m only applies to type I")
    return coxeter_group(family, args.rank)


def _read_elements(ctx: Context, args, count: int) -> list:
    if args.files:
        if len(args.files) != count:
            raise UsageError(f"expected {count} element file(s)")
        texts = []
        for path in args.files:
            try:
                with open(path, encoding="ascii") as fh:
                    texts.append(fh.read())
            except OSError as exc:
                raise UsageError(str(exc)) from exc
    else:
        blob = sys.stdin.read()
        texts = blob.split("\n--\n") if count > 1 else [blob]
        if len(texts) != count:
            raise UsageError(
                f"expected {count} elements on stdin separated by a '--' line"
            )
    out = []
    for text in texts:
        try:
            out.append(ctx.from_text(text))
        except (KeyError, ValueError, IndexError) as exc:
            raise UsageError(f"cannot parse element: {exc}") from exc
    return out


def cmd_verlinde(args) -> int:
    if args.r < 1:
        raise UsageError("verlinde needs r >= 1")
    print(make_verlinde(args.r).to_text())
    return 0


def cmd_basis(args) -> int:
    ctx = _context(args)
    items = ctx.d_basis() if args.exposed else ctx.basis()
    if args.machine:
        print(f"size={len(items)}")
        for d in items:
            print(f"diagram={d.to_text()}")
    else:
        for d in items:
            print(d.to_text())
    return 0


def cmd_mul(args) -> int:
    ctx = _context(args)
    x, y = _read_elements(ctx, args, 2)
    print((x * y).to_text())
    return 0


def cmd_star(args) -> int:
    ctx = _context(args)
    (x,) = _read_elements(ctx, args, 1)
    print(x.star().to_text())
    return 0


def cmd_trace(args) -> int:
    ctx = _context(args)
    (x,) = _read_elements(ctx, args, 1)
    if args.machine:
        print(f"tau={x.tau()}")
    else:
        print(f"tau: {x.tau()}")
    return 0


def cmd_omega(args) -> int:
    ctx = _context(args)
    (x,) = _read_elements(ctx, args, 1)
    print(fusion_twist(x).to_text())
    return 0


def cmd_axioms(args) -> int:
    rep = datum_build(_context(args)).axioms_check()
    if args.machine:
        for key, val in rep.flags().items():
            print(f"{key}={val}")
        print(f"a_function={rep.a_function_ok}")
        print(f"exhaustive={rep.exhaustive}")
        for w in rep.witnesses[:10]:
            print(f"witness={w}")
    else:
        print(rep.report())
    return 0 if rep.ok and rep.a_function_ok else 1


def cmd_tlbasis(args) -> int:
    q = tl(_group(args))
    print(f"group: {q.g.name}")
    print(f"wc: {q.rank}")
    for w in q.wc:
        word = "".join(str(s + 1) for s in q.g.rwords[w]) or "e"
        unit = q.canonical_unit(w)
        parts = []
        for k in sorted(unit):
            zword = "".join(str(s + 1) for s in q.g.rwords[q.wc[k]]) or "e"
            parts.append(f"({unit[k]}) t~[{zword}]")
        print(f"c[{word}] = " + " + ".join(parts))
    try:
        q.cross_check_canonical()
    except AssertionError as exc:
        print(f"oracle: FAIL {exc}")
        return 1
    print("oracle: theta(C'_w) == c_w for all w")
    return 0


def cmd_embed(args) -> int:
    variant = args.variant or args.type
    if variant not in ("A", "B", "H", "I", "uniform"):
        raise UsageError(f"--variant {variant}: expected A, B, H, I or uniform")
    g = _group(args)
    try:
        rep = rho_build(variant, args.type, args.rank, m=args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = rho_verify_bijection(rep)
    for line in rep.lines():
        print(line)
    print(f"bijection={ok}")
    return 0 if ok and rep.single_unit and rep.injective else 1


def cmd_conjecture(args) -> int:
    _group(args)  # validates type/rank/m
    rep = conjecture_436_check(args.type, args.rank, m=args.m)
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_drank(args) -> int:
    if args.r < 1 or args.nmax < 1:
        raise UsageError("drank needs --r >= 1 and --nmax >= 1")
    seq = drank_sequence(args.r, args.nmax)
    if args.machine:
        for n, value in enumerate(seq, start=1):
            print(f"drank[{n}]={value}")
    else:
        print(" ".join(str(k) for k in seq))
    return 0


def cmd_selftest(args) -> int:
    if args.only:
        try:
            wanted = sorted({int(k) for k in args.only.split(",")})
        except ValueError as exc:
            raise UsageError(f"--only {args.only}: expected numbers") from exc
        known = {num for num, *_ in CHECKS}
        bad = [k for k in wanted if k not in known]
        if bad:
            raise UsageError(f"--only: no check numbered {bad[0]}")
    else:
        wanted = [num for num, *_ in CHECKS]
    all_ok = True
    for num in wanted:
        res = run_check(num)
        ok = res.passed and res.seconds <= res.budget
        all_ok = all_ok and ok
        if args.machine:
            print(
                f"check={res.number:02d} name={res.name} "
                f"result={'pass' if ok else 'fail'} seconds={res.seconds:.2f}"
            )
        else:
            print(res.line())
            if not res.passed and num in KNOWN_FAILURES:
                print("  (known failure: the twist moves the m = 6 dihedral"
                      " image; u_4 u_1 = u_3 in V_5)")
    return 0 if all_ok else 1


def _add_context_flags(sub):
    sub.add_argument("--n", type=int, default=0, help="number of boundary pairs")
    sub.add_argument("--verlinde", type=int, default=0, help="fusion rank r")
    sub.add_argument("--algebra", help="table algebra file")


def _add_group_flags(sub):
    sub.add_argument("--type", required=True, help="Coxeter family A, B, H or I")
    sub.add_argument("--rank", type=int, required=True)
    sub.add_argument("--m", type=int, default=0, help="dihedral bond for type I")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planalg", description="exact labeled-diagram algebra toolkit"
    )
    parser.add_argument("--machine", action="store_true",
                        help="emit key=value lines")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("verlinde", help="print the fusion table algebra")
    sub.add_argument("r", type=int)

    for name, exposed in (("basis", False), ("dbasis", True)):
        sub = subs.add_parser(name, help="list basis diagrams")
        _add_context_flags(sub)
        sub.set_defaults(exposed=exposed)

    for name, count in (("mul", 2), ("star", 1), ("trace", 1), ("omega", 1)):
        sub = subs.add_parser(name, help=f"{name} of parsed element(s)")
        _add_context_flags(sub)
        sub.add_argument("files", nargs="*",
                         help=f"{count} element file(s); default stdin")

    sub = subs.add_parser("axioms", help="run the cell-structure axiom checks")
    _add_context_flags(sub)

    sub = subs.add_parser("tlbasis", help="print the canonical quotient basis")
    _add_group_flags(sub)

    sub = subs.add_parser("embed", help="build and verify a diagram embedding")
    _add_group_flags(sub)
    sub.add_argument("--variant", help="generator labeling; defaults to --type")

    sub = subs.add_parser("conjecture", help="check the canonical image map")
    _add_group_flags(sub)

    sub = subs.add_parser("drank", help="exposed-subalgebra rank sequence")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--nmax", type=int, required=True)

    sub = subs.add_parser("selftest", help="run the verification battery")
    sub.add_argument("--only", help="comma-separated check numbers")
    return parser


COMMANDS = {
    "verlinde": cmd_verlinde,
    "basis": cmd_basis,
    "dbasis": cmd_basis,
    "mul": cmd_mul,
    "star": cmd_star,
    "trace": cmd_trace,
    "omega": cmd_omega,
    "axioms": cmd_axioms,
    "tlbasis": cmd_tlbasis,
    "embed": cmd_embed,
    "conjecture": cmd_conjecture,
    "drank": cmd_drank,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"planalg: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
