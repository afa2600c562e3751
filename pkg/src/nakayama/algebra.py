"""Linear Nakayama algebras given by their Kupisch series.

Simples are indexed 1..n with tau S_i = S_{i-1}, so the simple projective
sits at index 1 and omega = S_n.  An indecomposable module is uniserial and
is written M(t, l): top S_t, length l, socle S_{t-l+1}.  The zero module is
represented by ``None`` throughout the package.
"""

from dataclasses import dataclass
from functools import cached_property


class KupischError(ValueError):
    pass


class EmptySeries(KupischError):
    def __init__(self):
        super().__init__("Kupisch series must be nonempty")


class FirstNotOne(KupischError):
    def __init__(self, first):
        super().__init__(f"first entry must be 1, got {first}")


class GrowthViolation(KupischError):
    def __init__(self, i, c):
        self.index = i
        super().__init__(f"c[{i + 1}] = {c[i]} exceeds c[{i}] + 1 = {c[i - 1] + 1}")


class Disconnected(KupischError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"c[{i}] = 1 for an index i >= 2 (algebra is disconnected)")


class OutOfRange(ValueError):
    pass


class TopNotOmega(ValueError):
    pass


class NotConcave(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Module:
    """The uniserial module M(top, length)."""

    top: int
    length: int

    @property
    def socle(self):
        return self.top - self.length + 1

    def factors(self):
        """Indices of the composition factors, socle first."""
        return list(range(self.socle, self.top + 1))

    def __str__(self):
        return f"M({self.top},{self.length})"


def simple(i):
    return Module(i, 1)


@dataclass(frozen=True, order=True)
class Kupisch:
    """A validated Kupisch series c[1..n] (stored 0-based in ``c``)."""

    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        _check(self.c)

    @property
    def n(self):
        return len(self.c)

    @cached_property
    def h(self):
        return max(self.c)

    def plen(self, t):
        """|P S_t|, the length of the projective cover of S_t."""
        return self.c[t - 1]

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __str__(self):
        return ",".join(map(str, self.c))


def _check(c):
    if not c:
        raise EmptySeries()
    if c[0] != 1:
        raise FirstNotOne(c[0])
    for i in range(1, len(c)):
        if c[i] > c[i - 1] + 1:
            raise GrowthViolation(i, c)
        if c[i] < 2:
            raise Disconnected(i + 1)


def validate_kupisch(raw):
    return Kupisch(tuple(raw))


def parse_kupisch(text):
    text = text.strip().strip("()")
    try:
        raw = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise KupischError(f"not a comma-separated integer list: {text!r}") from None
    return Kupisch(tuple(raw))


def make_module(A, t, l):
    if not 1 <= t <= A.n:
        raise OutOfRange(f"top index {t} outside 1..{A.n}")
    if l < 1 or l > A.plen(t):
        raise OutOfRange(f"length {l} outside 1..{A.plen(t)} for top {t}")
    return Module(t, l)


def is_module(A, M):
    return 1 <= M.top <= A.n and 1 <= M.length <= A.plen(M.top)


# structure

def is_projective(A, M):
    return M.length == A.plen(M.top)


def is_injective(A, M):
    return M.top == A.n or A.plen(M.top + 1) < M.length + 1


def is_simple(M):
    return M.length == 1


def radical(M):
    return Module(M.top - 1, M.length - 1) if M.length > 1 else None


def soc_quotient(M):
    return Module(M.top, M.length - 1) if M.length > 1 else None


def rad_power(M, k):
    if not 0 <= k <= M.length:
        raise OutOfRange(f"radical power {k} outside 0..{M.length}")
    return Module(M.top - k, M.length - k) if k < M.length else None


def socle(M):
    return simple(M.socle)


def top_of(M):
    return simple(M.top)


def composition_factors(M):
    return M.factors()


def projective_cover(A, M):
    return Module(M.top, A.plen(M.top))


def syzygy(A, M):
    p = A.plen(M.top)
    if M.length == p:
        return None
    return Module(M.top - M.length, p - M.length)


def injective_envelope(A, M):
    s = M.socle
    l = M.length
    while s + l <= A.n and A.plen(s + l) >= l + 1:
        l += 1
    return Module(s + l - 1, l)


def cosyzygy(A, M):
    env = injective_envelope(A, M)
    if env.length == M.length:
        return None
    return Module(env.top, env.length - M.length)


def tau(A, M):
    if is_projective(A, M):
        return None
    return Module(M.top - 1, M.length)


def tau_minus(A, M):
    if is_injective(A, M):
        return None
    return Module(M.top + 1, M.length)


# enumerations

def all_indecomposables(A):
    return [Module(t, l) for t in range(1, A.n + 1) for l in range(1, A.plen(t) + 1)]


def submodules(M):
    return [Module(M.top - k, M.length - k) for k in range(M.length)]


def factor_modules(M):
    return [Module(M.top, M.length - k) for k in range(M.length)]


def subfactors(M):
    s = M.socle
    return [Module(j, j - i + 1) for i in range(s, M.top + 1) for j in range(i, M.top + 1)]


def ray(A, s):
    """All indecomposables with socle S_s, shortest first."""
    out = []
    l = 1
    while s + l - 1 <= A.n and A.plen(s + l - 1) >= l:
        out.append(Module(s + l - 1, l))
        l += 1
    return out


# structural queries

def omega(A):
    return A.n


def is_ascending(A):
    return all(a <= b for a, b in zip(A.c, A.c[1:]))


def is_concave(A):
    c = A.c
    p = 0
    while p + 1 < len(c) and c[p] <= c[p + 1]:
        p += 1
    while p + 1 < len(c) and c[p] >= c[p + 1]:
        p += 1
    return p == len(c) - 1


def summits(A):
    return [t for t in range(1, A.n + 1) if A.plen(t) == A.h]


def _need_concave(A):
    if not is_concave(A):
        raise NotConcave(f"({A}) is not concave")


def first_summit(A):
    _need_concave(A)
    return Module(summits(A)[0], A.h)


def last_summit(A):
    _need_concave(A)
    return Module(summits(A)[-1], A.h)


def principal_cliff(A):
    return soc_quotient(last_summit(A))


def serre_restrict(A, i, j):
    if not 1 <= i <= j <= A.n:
        raise OutOfRange(f"interval [{i},{j}] outside 1..{A.n}")
    return Kupisch(tuple(min(A.plen(i + k - 1), k) for k in range(1, j - i + 2)))


def one_point_extension(A, M):
    if M is None or M.top != A.n:
        raise TopNotOmega(f"{M} does not have top omega = S_{A.n}")
    return Kupisch(A.c + (M.length + 1,))
