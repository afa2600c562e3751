import warnings

import pytest

from nakayama.algebra import Kupisch, Module
from nakayama.constructions import (
    BadSequence,
    IterationCapExceeded,
    ascent_algebra,
    closure_trace,
    d_cliff_module,
    h_algebra,
    h_seed,
    is_d_closed,
    is_descending_extension,
    is_partially_d_closed,
    legal_sequences,
    partial_d_closure,
)
from nakayama.homology import global_dimension
from nakayama.rotations import NotProjective

from . import suites


def test_ascent_examples():
    assert ascent_algebra((0,)) == Kupisch((1,))
    assert ascent_algebra((0, 1)) == Kupisch((1, 2))
    assert ascent_algebra((1, 0)) == Kupisch((1, 2, 2))
    with pytest.raises(NotProjective):
        ascent_algebra((1, 3))


def test_h_algebras():
    assert h_algebra(3) == Kupisch((1, 2, 2, 2))
    assert h_algebra(3, (1,)) == Kupisch((1, 2, 3, 3, 3, 3))
    assert h_algebra(4, (1,)) == Kupisch((1, 2, 2, 3, 3, 3, 3, 2))
    assert h_seed(3, (3, 1)) == (0, 3, 1, 1)
    assert h_seed(4, (1, 3)) == (1, 3, 0, 1)


@pytest.mark.parametrize("d,cs,msg", [
    (3, (2,), "entries must be odd"),
    (3, (5,), "between 1 and d"),
    (3, (1, 3), "weakly decreasing"),
    (4, (3, 1), "strictly increasing"),
    (4, (1, 1), "strictly increasing"),
    (0, (), "at least 1"),
])
def test_bad_sequences(d, cs, msg):
    with pytest.raises(BadSequence, match=msg):
        h_algebra(d, cs)


def test_legal_sequences():
    assert legal_sequences(3, 2) == [(), (1,), (3,), (1, 1), (3, 1), (3, 3)]
    # even d: subsets of the odd numbers up to d
    assert len(legal_sequences(6, 6)) == 8


def test_closure_trace():
    A = ascent_algebra((0, 1))
    cl = closure_trace(A, 3)
    assert cl.algebra == Kupisch((1, 2, 2, 2))
    assert cl.iterations == len(cl.trace) == 2
    B = A
    for Y, length in cl.trace:
        assert Y.top == B.n and length == Y.length + 1
        B = Kupisch(B.c + (length,))
    assert B == cl.algebra
    assert partial_d_closure(A, 3) == (cl.algebra, 2)


def test_closure_fixed_point():
    H = h_algebra(3, (1,))
    assert is_d_closed(H, 3) and is_partially_d_closed(H, 3)
    assert d_cliff_module(H, 3) is None
    assert closure_trace(H, 3).iterations == 0


def test_closure_warns_below_gldim():
    A = Kupisch((1, 2, 2, 2))
    with pytest.warns(UserWarning):
        closure_trace(A, 2)


def test_closure_descends():
    for A in suites.all_series(6):
        for d in range(max(1, global_dimension(A)), 5):
            C, _ = partial_d_closure(A, d)
            assert is_descending_extension(C, A.n)


def test_iteration_cap(monkeypatch):
    from nakayama import constructions

    # a cliff search that never settles must hit the cap
    monkeypatch.setattr(constructions, "d_cliff_module", lambda A, d: Module(A.n, 1))
    with pytest.raises(IterationCapExceeded, match="no fixed point"):
        closure_trace(Kupisch((1, 2)), 1)


def test_cliff_module():
    A = ascent_algebra((0, 1))
    assert d_cliff_module(A, 3) == Module(2, 1)


def test_construction_properties():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert suites.construction_suite(9) == []


def test_closure_of_summit_recovers_algebra():
    assert suites.closure_corollary_suite(12) == []
