"""Walk through the classification for small d.

For each d the algebras H_d(c) are built from their sequences, checked to be
higher Auslander, and compared with the census.
"""

from nakayama.charseq import format_seq
from nakayama.classify import census, theorem_3_prediction
from nakayama.constructions import h_algebra, legal_sequences
from nakayama.homology import dominant_dimension, global_dimension


def main():
    records = census(12)
    print(f"{len(records)} concave higher Auslander algebras with n <= 12\n")
    for d in (2, 3, 4):
        print(f"d = {d}")
        for cs in legal_sequences(d, 2 if d % 2 else d):
            H = h_algebra(d, cs)
            s, _, q = theorem_3_prediction(d, cs)
            print(f"  H_{d}{format_seq(cs):10} = ({H})  gldim {global_dimension(H)}"
                  f"  domdim {dominant_dimension(H)}  summits {s}  char Q {format_seq(q)}")
        hits = [r for r in records if r.d == d]
        print(f"  census algebras with d = {d}: {len(hits)}\n")


if __name__ == "__main__":
    main()
