"""Characteristic sequences, memory piles and subfactor dimensions.

char M lists, socle first, pd F_i for each odd composition factor F_i and
pd M in the slot of the (at most one) even factor.  A memory pile stores a
function mu on the modules of the pile series (1,2,..,h-1,h,..,h) with s
summits; vertices are keyed by their local Module(top, length).
"""

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Kupisch, Module, all_indecomposables
from .homology import pd, pd_table
from .rotations import rho, rho_inv, rho_pow


class InvalidCharSeq(ValueError):
    pass


class WrongClass(ValueError):
    pass


def format_seq(z):
    return "(" + ",".join(map(str, z)) + ")"


def parse_seq(text):
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def even_positions(z):
    """1-based positions of the even entries."""
    return [i + 1 for i, x in enumerate(z) if x % 2 == 0]


def is_char_seq(z):
    return all(x >= 0 for x in z) and len(even_positions(z)) <= 1


def is_projective_char_seq(z):
    return is_char_seq(z) and 0 in z


def is_all_odd(z):
    return all(x % 2 for x in z)


def char_of(A, M):
    if M is None:
        return ()
    tab = pd_table(A)
    p = tab[M.top, M.length]
    return tuple(tab[i, 1] if tab[i, 1] % 2 else p for i in M.factors())


def y_map(z):
    """char P -> char P/soc P."""
    z = tuple(z)
    if not is_projective_char_seq(z):
        raise WrongClass(f"{format_seq(z)} is not a projective characteristic sequence")
    if len(z) < 2:
        raise WrongClass("y_map needs length >= 2")
    v = z.index(0)
    if v == 0:
        return z[1:]
    return z[1:v] + (z[0] + 1,) + z[v + 1:]


def p_map(z):
    """Inverse of y_map on non-projective characteristic sequences."""
    z = tuple(z)
    if not is_char_seq(z) or 0 in z or not z:
        raise WrongClass(f"{format_seq(z)} is not a non-projective characteristic sequence")
    ev = even_positions(z)
    if not ev:
        return (0,) + z
    v = ev[0] - 1
    return (z[v] - 1,) + z[:v] + (0,) + z[v + 1:]


# memory piles

def pile_series(h, s):
    return Kupisch(tuple(range(1, h)) + (h,) * s)


@dataclass(frozen=True)
class MemoryPile:
    height: int
    summit_count: int
    mu: dict

    @property
    def kupisch(self):
        return pile_series(self.height, self.summit_count)

    @property
    def radical(self):
        return Module(self.height - 1, self.height - 1)

    @property
    def cliff(self):
        return Module(self.summit_count + self.height - 1, self.height - 1)

    def at(self, r, level):
        """mu on the vertex of ray r (socle index) at the given level."""
        return self.mu[Module(r + level - 1, level)]

    def char_of(self, M):
        """Characteristic of a vertex computed from mu alone."""
        p = self.mu[M]
        out = []
        for i in M.factors():
            q = self.mu[Module(i, 1)]
            out.append(q if q % 2 else p)
        return tuple(out)

    @property
    def radical_char(self):
        return self.char_of(self.radical)

    @property
    def cliff_char(self):
        return self.char_of(self.cliff)

    def cliff_subfactors(self):
        Y = self.cliff
        return [Module(j, j - i + 1) for i in range(Y.socle, Y.top + 1) for j in range(i, Y.top + 1)]


def _all_odd_power(z, s):
    """Least s* >= s with rho^{s*}(z) all odd."""
    h = len(z) + 1
    ev = even_positions(z)
    base = ev[0] if ev else h
    k = max(0, -(-(s - base) // h))
    return base + k * h


def memory_pile(radical_char, s):
    z = tuple(radical_char)
    if not z or not is_char_seq(z):
        raise InvalidCharSeq(f"{format_seq(z)} is not a nonempty characteristic sequence")
    if s < 1:
        raise InvalidCharSeq(f"summit count must be >= 1, got {s}")
    return MemoryPile(len(z) + 1, s, dict(_pile_mu(z, s)))


@lru_cache(maxsize=4096)
def _pile_mu(z, s):
    h = len(z) + 1
    big = _all_odd_power(z, s)
    y = rho_pow(z, big)
    mu = {}
    # the cliff is odd, so the maximum principle covers its subfactors
    for i in range(1, h):
        for j in range(i, h):
            mu[Module(big + j, j - i + 1)] = max(y[i - 1:j])
    for t in range(h, big + h):
        mu[Module(t, h)] = 0
    # everything else sits one below the module it is the syzygy of
    for sigma in range(big, 0, -1):
        for l in range(1, h):
            t = sigma + l - 1
            if l > t:
                break
            mu[Module(t, l)] = mu[Module(t + h - l, h - l)] - 1
    last = s + h - 1
    return tuple((M, v) for M, v in mu.items() if M.top <= last)


def is_d_pile(p, d):
    if p.mu[p.cliff] != d:
        return False
    return all(p.mu[Z] <= d for Z in p.cliff_subfactors())


def pile_from_algebra(A, radical, s):
    """The pile of A with radical R and s summits, mu = pd over A."""
    h = radical.length + 1
    off = radical.socle - 1
    mu = {}
    for t in range(1, s + h):
        for l in range(1, min(t, h) + 1):
            mu[Module(t, l)] = pd(A, Module(t + off, l))
    return MemoryPile(h, s, mu)


# subfactor dimensions

def subfactor_pds(z):
    """pd of M_j/M_{i-1} for all 1 <= i <= j <= len(z), keyed by (i, j)."""
    z = tuple(z)
    if not is_char_seq(z):
        raise InvalidCharSeq(f"{format_seq(z)} is not a characteristic sequence")
    m = len(z)
    ev = even_positions(z)
    if not ev:
        return {(i, j): max(z[i - 1:j]) for i in range(1, m + 1) for j in range(i, m + 1)}
    mu = dict(_pile_mu(z, ev[0]))
    return {(i, j): mu[Module(j, j - i + 1)] for i in range(1, m + 1) for j in range(i, m + 1)}


def subfactor_pd(z, i, j):
    z = tuple(z)
    if not 1 <= i <= j <= len(z):
        raise ValueError(f"interval [{i},{j}] outside 1..{len(z)}")
    if is_char_seq(z) and is_all_odd(z):
        return max(z[i - 1:j])
    return subfactor_pds(z)[i, j]


# shape predicates

def is_decreasing(z):
    return is_all_odd(z) and all(a >= b for a, b in zip(z, z[1:]))


def is_plus_decreasing(z):
    return len(z) > 0 and is_decreasing(rho(z))


def is_strictly_increasing_odd(z):
    return is_all_odd(z) and all(a < b for a, b in zip(z, z[1:]))


def is_plus_strictly_increasing(z):
    return len(z) > 0 and z[0] % 2 == 0 and is_strictly_increasing_odd(rho(z))


def is_minus_strictly_increasing(z):
    # the first entry of rho^{-1} z may be -1
    return len(z) > 0 and z[-1] % 2 == 0 and is_strictly_increasing_odd(rho_inv(z))


def characteristics(A):
    return {M: char_of(A, M) for M in all_indecomposables(A)}
