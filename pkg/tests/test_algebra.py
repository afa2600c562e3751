import pytest
from hypothesis import given, strategies as st

from nakayama import algebra as alg
from nakayama.algebra import Kupisch, Module

from .conftest import all_series


@st.composite
def kupisch(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    c = [1]
    for i in range(1, n):
        c.append(draw(st.integers(2, c[-1] + 1)))
    return Kupisch(tuple(c))


@pytest.mark.parametrize("raw,exc", [
    ((), alg.EmptySeries),
    ((2, 2), alg.FirstNotOne),
    ((1, 3), alg.GrowthViolation),
    ((1, 2, 1), alg.Disconnected),
])
def test_validation_errors(raw, exc):
    with pytest.raises(exc):
        alg.validate_kupisch(raw)


def test_parse():
    assert alg.parse_kupisch("(1,2,3,3)") == Kupisch((1, 2, 3, 3))
    assert alg.parse_kupisch(" 1, 2 ,2 ") == Kupisch((1, 2, 2))
    with pytest.raises(alg.KupischError):
        alg.parse_kupisch("1,x")
    assert str(Kupisch((1, 2, 2))) == "1,2,2"


def test_basic_queries():
    A = Kupisch((1, 2, 3, 3, 2))
    assert A.n == 5 and A.h == 3
    assert alg.summits(A) == [3, 4]
    assert alg.first_summit(A) == Module(3, 3)
    assert alg.last_summit(A) == Module(4, 3)
    assert alg.principal_cliff(A) == Module(4, 2)
    assert alg.is_concave(A) and not alg.is_ascending(A)
    assert not alg.is_concave(Kupisch((1, 2, 3, 2, 3)))
    with pytest.raises(alg.NotConcave):
        alg.first_summit(Kupisch((1, 2, 3, 2, 3)))
    with pytest.raises(alg.OutOfRange):
        alg.make_module(A, 2, 3)


def test_module_structure():
    M = Module(5, 3)
    assert M.socle == 3 and list(M.factors()) == [3, 4, 5]
    assert alg.radical(M) == Module(4, 2)
    assert alg.soc_quotient(M) == Module(5, 2)
    assert alg.rad_power(M, 3) is None
    assert alg.socle(M) == Module(3, 1) and alg.top_of(M) == Module(5, 1)
    assert len(alg.subfactors(M)) == 6
    assert alg.submodules(M)[0] == M and alg.factor_modules(M)[-1] == Module(5, 1)
    assert str(M) == "M(5,3)"


def test_syzygy_and_envelope():
    A = Kupisch((1, 2, 3, 3, 3, 3))
    assert alg.syzygy(A, Module(4, 1)) == Module(3, 2)
    assert alg.syzygy(A, Module(4, 3)) is None
    assert alg.injective_envelope(A, Module(2, 1)) == Module(4, 3)
    assert alg.cosyzygy(A, Module(2, 1)) == Module(4, 2)
    assert alg.injective_envelope(A, Module(6, 3)) == Module(6, 3)


@given(kupisch())
def test_tau_inverse(A):
    for M in alg.all_indecomposables(A):
        t = alg.tau(A, M)
        assert (t is None) == alg.is_projective(A, M)
        if t is not None:
            assert alg.tau_minus(A, t) == M
        u = alg.tau_minus(A, M)
        assert (u is None) == alg.is_injective(A, M)
        if u is not None:
            assert alg.tau(A, u) == M


@given(kupisch())
def test_summits_are_projective_injective(A):
    for M in alg.all_indecomposables(A):
        if M.length == A.h:
            assert alg.is_projective(A, M) and alg.is_injective(A, M)
        env = alg.injective_envelope(A, M)
        assert alg.is_injective(A, env) and env.socle == M.socle


@given(kupisch(), st.data())
def test_serre_restriction(A, data):
    i = data.draw(st.integers(1, A.n))
    j = data.draw(st.integers(i, A.n))
    B = alg.serre_restrict(A, i, j)
    assert B.n == j - i + 1
    for t in range(1, B.n + 1):
        for l in range(1, B.plen(t) + 1):
            assert alg.is_module(A, Module(t + i - 1, l))
        assert not alg.is_module(A, Module(t + i - 1, B.plen(t) + 1)) or B.plen(t) == t


def test_rays_and_extension():
    A = Kupisch((1, 2, 2, 3))
    assert alg.ray(A, 2) == [Module(2, 1), Module(3, 2), Module(4, 3)]
    assert alg.ray(A, 4) == [Module(4, 1)]
    assert alg.one_point_extension(A, Module(4, 2)) == Kupisch((1, 2, 2, 3, 3))
    with pytest.raises(alg.TopNotOmega):
        alg.one_point_extension(A, Module(3, 2))


def test_all_indecomposables_count():
    for A in all_series(7):
        assert len(alg.all_indecomposables(A)) == sum(A.c)
