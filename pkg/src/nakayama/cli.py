"""Command line front end.

Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
"""

import argparse
import sys

from . import algebra as alg
from .charseq import char_of, format_seq, parse_seq
from .classify import (
    VerificationFailure,
    analyze,
    census,
    verify_theorem_1,
    verify_theorem_1p,
    verify_props,
    verify_theorem_3,
)
from .constructions import ascent_algebra, closure_trace, h_algebra
from .homology import pd
from .render import layout, to_graph_desc, to_text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _module(A, text):
    try:
        t, l = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"module must be given as 't,l', got {text!r}") from None
    return alg.make_module(A, t, l)


def _seq(text):
    if text is None:
        return ()
    try:
        return parse_seq(text)
    except ValueError:
        raise UsageError(f"not an integer sequence: {text!r}") from None


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, tuple):
        return format_seq(v)
    if v == float("inf"):
        return "inf"
    return str(v)


def cmd_validate(a, out):
    print(alg.parse_kupisch(a.kupisch), file=out)


def cmd_info(a, out):
    A = alg.parse_kupisch(a.kupisch)
    r = analyze(A)
    if a.format == "records":
        print(r.to_line(), file=out)
        return
    print(f"Kupisch series   {A}", file=out)
    print(f"rank n           {r.n}", file=out)
    print(f"height h         {r.h}", file=out)
    print(f"global dimension {r.gldim}", file=out)
    print(f"dominant dim     {_fmt(r.domdim)}", file=out)
    print(f"higher Auslander {'yes, d = ' + str(r.d) if r.is_ha else 'no'}", file=out)
    print(f"concave          {'yes' if alg.is_concave(A) else 'no'}", file=out)
    if r.summit_count is not None:
        print(f"summits          {alg.summits(A)}", file=out)
        print(f"char first       {_fmt(r.first_summit_char)}", file=out)
        print(f"char last        {_fmt(r.last_summit_char)}", file=out)
    if r.z_char is not None:
        print(f"char Z{chr(39) if r.d % 2 == 0 else ''}           {_fmt(r.z_char)}", file=out)


def cmd_pd(a, out):
    A = alg.parse_kupisch(a.kupisch)
    print(pd(A, _module(A, a.module)), file=out)


def cmd_char(a, out):
    A = alg.parse_kupisch(a.kupisch)
    print(format_seq(char_of(A, _module(A, a.module))), file=out)


def cmd_ascent(a, out):
    print(ascent_algebra(_seq(a.seq)), file=out)


def cmd_closure(a, out):
    A = alg.parse_kupisch(a.kupisch)
    cl = closure_trace(A, a.d)
    print(cl.algebra, file=out)
    if a.trace:
        B = A
        for k, (Y, length) in enumerate(cl.trace, 1):
            B = alg.one_point_extension(B, Y)
            print(f"  step {k}: cliff {Y}, append {length} -> {B}", file=out)
        print(f"  {cl.iterations} iterations", file=out)


def cmd_hd(a, out):
    print(h_algebra(a.d, _seq(a.seq)), file=out)


def cmd_census(a, out):
    recs = census(a.max_n, jobs=a.jobs)
    lines = [r.to_line() for r in recs]
    if a.out:
        with open(a.out, "w") as f:
            f.write("".join(x + "\n" for x in lines))
        print(f"{len(lines)} records written to {a.out}", file=out)
    else:
        for x in lines:
            print(x, file=out)


def cmd_verify(a, out):
    reports = []
    if a.what == "thm1":
        if a.d is None:
            raise UsageError("verify thm1 needs --d")
        if a.d % 2:
            reports.append(verify_theorem_1(a.d, a.max_u, a.max_n))
        else:
            reports.append(verify_theorem_1p(a.d, a.max_n))
    elif a.what == "thm3":
        if a.d is None:
            raise UsageError("verify thm3 needs --d")
        reports.append(verify_theorem_3(a.d, _seq(a.seq)))
    else:
        reports.append(verify_props(a.max_n, census(a.max_n, jobs=a.jobs)))
    for rep in reports:
        print(rep.text(), file=out)


def cmd_render(a, out):
    A = alg.parse_kupisch(a.kupisch)
    lay = layout(A, a.labels)
    print(to_graph_desc(lay) if a.graph else to_text(lay), end="", file=out)


def build_parser():
    p = _Parser(prog="nakayama", description="Homological invariants of linear Nakayama algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a Kupisch series")
    s.add_argument("kupisch")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", help="dimensions, summits and characteristics")
    s.add_argument("kupisch")
    s.add_argument("--format", choices=["human", "records"], default="human")
    s.set_defaults(func=cmd_info)

    for name, func in (("pd", cmd_pd), ("char", cmd_char)):
        s = sub.add_parser(name, help=f"{name} of the module M(t,l)")
        s.add_argument("kupisch")
        s.add_argument("--module", required=True, metavar="T,L")
        s.set_defaults(func=func)

    s = sub.add_parser("ascent", help="ascent algebra of a projective characteristic sequence")
    s.add_argument("seq")
    s.set_defaults(func=cmd_ascent)

    s = sub.add_parser("closure", help="partial d-closure")
    s.add_argument("kupisch")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("hd", help="the algebra H_d(c_1,..,c_u)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--seq", default=None, help="comma-separated odd numbers (omit for the empty sequence)")
    s.set_defaults(func=cmd_hd)

    s = sub.add_parser("census", help="concave higher Auslander algebras up to a rank")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", help="machine checks of the classification")
    s.add_argument("what", choices=["thm1", "thm3", "props"])
    s.add_argument("--d", type=int)
    s.add_argument("--seq", default=None)
    s.add_argument("--max-u", type=int, default=3)
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw the Auslander-Reiten quiver")
    s.add_argument("kupisch")
    s.add_argument("--labels", choices=["pd", "none"], default="pd")
    s.add_argument("--graph", action="store_true", help="vertex/edge line format instead of the grid")
    s.set_defaults(func=cmd_render)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except VerificationFailure as e:
        print(e.report.text(), file=out)
        return 2
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=err)
        return 1
    return 0


def main():
    sys.exit(run())
