from collections import Counter

import pytest

from nakayama import algebra as alg
from nakayama.algebra import Kupisch
from nakayama.classify import (
    CensusRecord,
    VerificationFailure,
    analyze,
    census,
    check_equivalent_conditions,
    check_structural_props,
    enumerate_concave,
    enumerate_kupisch,
    extract_descent_piles,
    theorem_3_prediction,
    verify_theorem_1,
    verify_theorem_1p,
    verify_theorem_3,
)
from nakayama.constructions import h_algebra, is_d_closed, legal_sequences
from nakayama.homology import global_dimension, is_higher_auslander

from . import suites


def test_enumeration_counts():
    # Catalan numbers
    assert [sum(1 for _ in enumerate_kupisch(n)) for n in range(1, 8)] == [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 8):
        assert {A for A in enumerate_kupisch(n) if alg.is_concave(A)} == set(enumerate_concave(n))


def test_census_shape(census12):
    assert len(census12) == 42
    assert all(r.n >= 2 and r.is_ha and r.gldim == r.domdim == r.d for r in census12)
    assert [str(r.kupisch) for r in census12 if r.n == 4] == ["1,2,2,2", "1,2,3,4"]


def test_record_round_trip(census12):
    for r in census12:
        assert CensusRecord.from_line(r.to_line()) == r


def test_analyze_non_ha():
    r = analyze(Kupisch((1, 2, 3, 3)))
    assert not r.is_ha and r.d is None and r.z_char is None
    assert "d=-" in r.to_line()


def test_higher_auslander_suite(census12):
    assert suites.ha_suite(census12) == []


def test_condition_lists_on_d_bound_algebras():
    assert suites.conditions_suite(12) == []


def test_literal_reading_counterexamples():
    # R = M(2,2) is projective-injective, so tau^- R is zero
    for c, d in (((1, 2, 2, 3, 3), 3), ((1, 2, 2, 2, 3, 3), 4)):
        A = Kupisch(c)
        assert global_dimension(A) <= d and is_d_closed(A, d)
        assert not check_equivalent_conditions(A, d).details["1"]
        with pytest.raises(VerificationFailure):
            check_equivalent_conditions(A, d, literal=True)


@pytest.mark.parametrize("cs", [(3,), (1, 3)])
def test_condition_five_converse_fails(cs):
    c = check_equivalent_conditions(h_algebra(4, cs), 4).details
    assert c["1"] and not c["5"]


def test_structural_props_rejects_non_ha():
    with pytest.raises(VerificationFailure):
        check_structural_props(Kupisch((1, 2, 3, 3)))


def test_descent_piles():
    piles = extract_descent_piles(Kupisch((1, 2, 2, 2, 3, 2, 2)))
    assert len(piles) == 1
    p = piles[0]
    assert (p.height, p.summit_count, p.radical_char, p.cliff_char) == (2, 2, (1,), (3,))
    with pytest.raises(alg.NotConcave):
        extract_descent_piles(Kupisch((1, 2, 3, 2, 3)))


def test_theorems_small():
    assert verify_theorem_1(3, 2, 9).passed
    assert verify_theorem_1p(2, 9).passed
    assert verify_theorem_3(3, (1,)).passed
    with pytest.raises(ValueError):
        verify_theorem_1(2, 1, 5)


def test_theorem_3_prediction_values():
    assert theorem_3_prediction(3, ()) == (3, (0, 1), (0, 3))
    assert theorem_3_prediction(4, ()) == (4, (0, 1), (3, 0))
    assert theorem_3_prediction(3, (1,)) == (4, (0, 1, 1), (0, 3, 3))


def test_small_heights():
    for h in range(2, 7):
        assert sum(1 for cs in legal_sequences(3, h) if h_algebra(3, cs).h == h) == h - 1
    assert max(h_algebra(4, cs).h for cs in legal_sequences(4, 4)) == 4
    for d in range(1, 9):
        H = h_algebra(d)
        assert H == Kupisch((1,) + (2,) * d)
        assert is_higher_auslander(H) == (True, d)


def test_census_parity_split(census12):
    counts = Counter(r.parity for r in census12)
    assert counts["odd"] + counts["even"] == len(census12)
    assert census(5) == [r for r in census12 if r.n <= 5]
