"""Projective, injective, global and dominant dimension.

Dimensions are plain ints; the zero module has pd -inf and dominant
dimension can be +inf, both as floats from ``math``.
"""

import math
from functools import lru_cache

from .algebra import (
    Module,
    all_indecomposables,
    cosyzygy,
    injective_envelope,
    is_projective,
    subfactors,
    syzygy,
)

NEG_INF = -math.inf
INF = math.inf


@lru_cache(maxsize=8192)
def pd_table(A):
    """pd of every indecomposable, keyed by (top, length).

    Omega M(t,l) has top t-l < t, so filling in increasing t only ever
    looks up entries already computed.
    """
    table = {}
    for t in range(1, A.n + 1):
        for l in range(1, A.plen(t) + 1):
            om = syzygy(A, Module(t, l))
            table[t, l] = 0 if om is None else table[om.top, om.length] + 1
    return table


def pd(A, M):
    if M is None:
        return NEG_INF
    return pd_table(A)[M.top, M.length]


def pd_by_iteration(A, M):
    """Least k with Omega^k M projective, without any caching."""
    if M is None:
        return NEG_INF
    k = 0
    while not is_projective(A, M):
        M = syzygy(A, M)
        k += 1
    return k


def inj_dim(A, M):
    if M is None:
        return NEG_INF
    k = 0
    while True:
        M = cosyzygy(A, M)
        if M is None:
            return k
        k += 1


def simple_pds(A):
    t = pd_table(A)
    return tuple(t[i, 1] for i in range(1, A.n + 1))


def global_dimension(A):
    return max(simple_pds(A))


def is_torsionless(A, M):
    """M(t,l) embeds in a projective iff some P S_t', t' >= t, has the same socle."""
    s = M.socle
    return any(t2 - A.plen(t2) + 1 == s for t2 in range(M.top, A.n + 1))


def dominant_dimension(A):
    best = INF
    for t in range(1, A.n + 1):
        X = Module(t, A.plen(t))
        k = 0
        while X is not None:
            if not is_projective(A, injective_envelope(A, X)):
                break
            k += 1
            X = cosyzygy(A, X)
        else:
            continue
        best = min(best, k)
    return best


def is_higher_auslander(A):
    """Return (flag, d); d is the global dimension when the flag is set."""
    if A.n == 1:
        return False, None
    d = global_dimension(A)
    if d == dominant_dimension(A):
        return True, d
    return False, None


def is_pd_controlled(A, M):
    p = pd(A, M)
    return all(pd(A, Z) <= p for Z in subfactors(M))


def is_odd(A, M):
    return pd(A, M) % 2 == 1


def is_even(A, M):
    return pd(A, M) % 2 == 0


def pd_of_all(A):
    return {M: pd(A, M) for M in all_indecomposables(A)}
