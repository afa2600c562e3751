"""Partial d-closure step by step, starting from an ascending algebra."""

import sys

from nakayama.algebra import one_point_extension
from nakayama.charseq import format_seq, parse_seq
from nakayama.constructions import ascent_algebra, closure_trace
from nakayama.render import layout, to_text


def main(seq="(1,3,0,1)", d=4):
    z = parse_seq(seq)
    A = ascent_algebra(z)
    print(f"ascent algebra of {format_seq(z)}: ({A})")
    cl = closure_trace(A, d)
    B = A
    for Y, length in cl.trace:
        B = one_point_extension(B, Y)
        print(f"  cliff {Y}, append {length}: ({B})")
    print(f"\n{d}-closure after {cl.iterations} steps:\n")
    print(to_text(layout(cl.algebra)))


if __name__ == "__main__":
    main(*sys.argv[1:2], *(int(x) for x in sys.argv[2:3]))
