"""Ascent algebras, d-closedness, cliff extensions and the algebras H_d(c)."""

import warnings
from dataclasses import dataclass

from .algebra import Kupisch, Module, one_point_extension, ray
from .charseq import format_seq, is_projective_char_seq
from .homology import global_dimension, is_torsionless, pd_table
from .rotations import NotProjective, lambda_rot


class IterationCapExceeded(RuntimeError):
    pass


class BadSequence(ValueError):
    pass


def epsilon(z):
    z = tuple(z)
    if not is_projective_char_seq(z):
        raise NotProjective(f"{format_seq(z)} is not a projective characteristic sequence")
    return sum(z) + z.index(0)


def ascent_algebra(z):
    """The ascending algebra whose last projective has characteristic z."""
    z = tuple(z)
    if not is_projective_char_seq(z):
        raise NotProjective(f"{format_seq(z)} is not a projective characteristic sequence")
    chain = []
    while len(z) > 1:
        chain.append(len(z))
        z = lambda_rot(z)
    # z == (0,) now, the base algebra k
    return Kupisch((1,) + tuple(reversed(chain)))


# d-closedness

def is_d_closed_simple(A, s, d):
    R = ray(A, s)
    if is_torsionless(A, R[0]):
        return True
    tab = pd_table(A)
    return any(tab[M.top, M.length] >= d for M in R)


def closed_simples(A, d):
    return [is_d_closed_simple(A, s, d) for s in range(1, A.n + 1)]


def is_d_closed(A, d):
    return all(closed_simples(A, d))


def _omega_factors(A):
    p = A.plen(A.n)
    return range(A.n - p + 1, A.n + 1)


def is_partially_d_closed(A, d):
    return all(is_d_closed_simple(A, s, d) for s in _omega_factors(A))


def is_almost_d_closed(A, d):
    inside = set(_omega_factors(A))
    return all(ok or s in inside for s, ok in enumerate(closed_simples(A, d), 1))


def d_cliff_module(A, d):
    """P(omega)/U with U the largest submodule all of whose factors are d-closed."""
    p = A.plen(A.n)
    k = 0
    for s in _omega_factors(A):
        if not is_d_closed_simple(A, s, d):
            break
        k += 1
    if k == p:
        return None
    return Module(A.n, p - k)


def cliff_extension(A, d):
    Y = d_cliff_module(A, d)
    return A if Y is None else one_point_extension(A, Y)


@dataclass(frozen=True)
class Closure:
    algebra: Kupisch
    iterations: int
    trace: tuple  # (cliff module, appended length) per step


def closure_trace(A, d):
    if d < global_dimension(A):
        warnings.warn(f"d = {d} is below the global dimension of ({A})", stacklevel=2)
    cap = A.n * d * A.h + 16
    steps = []
    while True:
        Y = d_cliff_module(A, d)
        if Y is None:
            return Closure(A, len(steps), tuple(steps))
        if len(steps) >= cap:
            raise IterationCapExceeded(f"no fixed point after {cap} extensions")
        steps.append((Y, Y.length + 1))
        A = one_point_extension(A, Y)


def partial_d_closure(A, d):
    cl = closure_trace(A, d)
    return cl.algebra, cl.iterations


def is_descending_extension(B, n_A):
    c = B.c[n_A - 1:]
    return all(a >= b for a, b in zip(c, c[1:]))


# the algebras H_d(c_1,..,c_u)

def check_h_sequence(d, cs):
    cs = tuple(cs)
    if d < 1:
        raise BadSequence("d must be at least 1")
    if any(c % 2 == 0 for c in cs):
        raise BadSequence("entries must be odd")
    if any(c < 1 or c > d for c in cs):
        raise BadSequence(f"entries must lie between 1 and d = {d}")
    if d % 2:
        if any(a < b for a, b in zip(cs, cs[1:])):
            raise BadSequence("entries must be weakly decreasing for odd d")
    elif any(a >= b for a, b in zip(cs, cs[1:])):
        raise BadSequence("entries must be strictly increasing for even d")
    return cs


def h_seed(d, cs):
    """The projective characteristic whose ascent algebra is closed to H_d(cs)."""
    cs = check_h_sequence(d, cs)
    return (0, *cs, 1) if d % 2 else (*cs, 0, 1)


def h_algebra(d, cs=()):
    A = ascent_algebra(h_seed(d, cs))
    return partial_d_closure(A, d)[0]


def legal_sequences(d, max_u):
    """All sequences accepted by h_algebra(d, .) with u <= max_u."""
    odds = list(range(1, d + 1, 2))
    out = [()]
    frontier = [()]
    for _ in range(max_u):
        nxt = []
        for cs in frontier:
            for c in odds:
                if not cs or (c <= cs[-1] if d % 2 else c > cs[-1]):
                    nxt.append(cs + (c,))
        out.extend(nxt)
        frontier = nxt
    return out

