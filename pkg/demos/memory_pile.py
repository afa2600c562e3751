"""The memory pile with radical characteristic (5,1,4,1) and three summits."""

from nakayama.charseq import format_seq, memory_pile, subfactor_pds
from nakayama.render import QuiverLayout, Vertex, position, to_text


def main():
    z = (5, 1, 4, 1)
    p = memory_pile(z, 3)
    print(f"pile series {p.kupisch}, radical {p.radical}, cliff {p.cliff}")
    print(f"char radical {format_seq(p.radical_char)}")
    print(f"char cliff   {format_seq(p.cliff_char)}\n")
    verts = tuple(Vertex(*position(M), M, str(v)) for M, v in sorted(p.mu.items()))
    print(to_text(QuiverLayout(verts, (), True)))
    print("pd of the subfactors M_j/M_(i-1) of a module with this characteristic:")
    for (i, j), v in sorted(subfactor_pds(z).items()):
        print(f"  [{i},{j}] {v}")


if __name__ == "__main__":
    main()
