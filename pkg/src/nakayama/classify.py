"""Enumeration, the census of concave higher Auslander algebras, piles and
machine checks of the classification theorems."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import algebra as alg
from .algebra import Kupisch, Module, NotConcave
from .charseq import (
    char_of,
    format_seq,
    is_d_pile,
    is_decreasing,
    is_minus_strictly_increasing,
    is_plus_decreasing,
    is_plus_strictly_increasing,
    is_strictly_increasing_odd,
    memory_pile,
    parse_seq,
    pile_from_algebra,
)
from .constructions import h_algebra, is_d_closed, legal_sequences
from .homology import (
    dominant_dimension,
    global_dimension,
    inj_dim,
    is_higher_auslander,
    is_torsionless,
    pd,
)


class VerificationFailure(AssertionError):
    def __init__(self, report):
        self.report = report
        super().__init__(report.text())


@dataclass
class Report:
    name: str
    checks: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values()) and not self.counterexamples

    def check(self, label, ok, payload=None):
        self.checks[label] = self.checks.get(label, True) and bool(ok)
        if not ok:
            self.counterexamples.append((label, payload))
        return ok

    def text(self):
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  {k}: {'ok' if v else 'FAILED'}" for k, v in self.checks.items()]
        lines += [f"  note: {x}" for x in self.notes]
        lines += [f"  counterexample [{k}]: {v}" for k, v in self.counterexamples[:20]]
        return "\n".join(lines)

    def raise_if_failed(self):
        if not self.passed:
            raise VerificationFailure(self)
        return self


# enumeration

def enumerate_kupisch(n):
    def walk(c):
        if len(c) == n:
            yield Kupisch(tuple(c))
            return
        for x in range(2, c[-1] + 2):
            yield from walk(c + [x])

    yield from walk([1])


def enumerate_concave(n):
    def walk(c, falling):
        if len(c) == n:
            yield Kupisch(tuple(c))
            return
        hi = c[-1] if falling else c[-1] + 1
        for x in range(2, hi + 1):
            yield from walk(c + [x], falling or x < c[-1])

    yield from walk([1], False)


# census

@dataclass(frozen=True)
class CensusRecord:
    kupisch: Kupisch
    n: int
    h: int
    gldim: int
    domdim: float
    is_ha: bool
    d: int = None
    parity: str = None
    summit_count: int = None
    first_summit_char: tuple = None
    last_summit_char: tuple = None
    z_char: tuple = None

    def to_line(self):
        def f(v):
            if v is None:
                return "-"
            if isinstance(v, tuple):
                return format_seq(v)
            if v == float("inf"):
                return "inf"
            return str(v)

        fields = [
            ("kupisch", str(self.kupisch)),
            ("n", self.n),
            ("h", self.h),
            ("gldim", self.gldim),
            ("domdim", self.domdim),
            ("d", self.d),
            ("parity", self.parity),
            ("summit_count", self.summit_count),
            ("first_char", self.first_summit_char),
            ("last_char", self.last_summit_char),
            ("z_char", self.z_char),
        ]
        return " ".join(f"{k}={f(v) if k != 'kupisch' else v}" for k, v in fields)

    @classmethod
    def from_line(cls, line):
        kv = dict(item.split("=", 1) for item in line.split())

        def num(v):
            return None if v == "-" else float("inf") if v == "inf" else int(v)

        def seq(v):
            return None if v == "-" else parse_seq(v)

        d = num(kv["d"])
        return cls(
            kupisch=alg.parse_kupisch(kv["kupisch"]),
            n=int(kv["n"]),
            h=int(kv["h"]),
            gldim=int(kv["gldim"]),
            domdim=num(kv["domdim"]),
            is_ha=d is not None,
            d=d,
            parity=None if kv["parity"] == "-" else kv["parity"],
            summit_count=num(kv["summit_count"]),
            first_summit_char=seq(kv["first_char"]),
            last_summit_char=seq(kv["last_char"]),
            z_char=seq(kv["z_char"]),
        )


def z_module(A, d):
    """rad P/soc P for odd d, rad^2 P for even d, P the first summit."""
    P = alg.first_summit(A)
    if d % 2:
        R = alg.radical(P)
        return None if R is None else alg.soc_quotient(R)
    return alg.rad_power(P, 2) if P.length >= 2 else None


def analyze(A):
    g = global_dimension(A)
    dd = dominant_dimension(A)
    ha, d = is_higher_auslander(A)
    rec = dict(kupisch=A, n=A.n, h=A.h, gldim=g, domdim=dd, is_ha=ha)
    if ha:
        rec.update(d=d, parity="odd" if d % 2 else "even")
    if alg.is_concave(A):
        rec.update(
            summit_count=len(alg.summits(A)),
            first_summit_char=char_of(A, alg.first_summit(A)),
            last_summit_char=char_of(A, alg.last_summit(A)),
        )
        if ha:
            rec["z_char"] = char_of(A, z_module(A, d))
    return CensusRecord(**rec)


def _census_rank(n):
    out = []
    for A in enumerate_concave(n):
        ha, _ = is_higher_auslander(A)
        if ha:
            out.append(analyze(A))
    return out


def census(max_n, jobs=1):
    ranks = range(1, max_n + 1)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_census_rank, ranks))
    else:
        parts = [_census_rank(n) for n in ranks]
    return [r for part in parts for r in part]


# piles

def extract_summit_pile(A):
    P = alg.first_summit(A)
    return pile_from_algebra(A, alg.radical(P), len(alg.summits(A)))


def injective_nonprojectives(A):
    """I_i for 0 <= i <= h-2: the injective non-projective of length h-i-1."""
    out = []
    for i in range(A.h - 1):
        l = A.h - i - 1
        found = [
            Module(t, l)
            for t in range(l, A.n + 1)
            if A.plen(t) >= l and alg.is_injective(A, Module(t, l)) and not alg.is_projective(A, Module(t, l))
        ]
        out.append(found)
    return out


def extract_descent_piles(A):
    if not alg.is_concave(A):
        raise NotConcave(f"({A}) is not concave")
    inj = injective_nonprojectives(A)
    piles = []
    for i in range(1, A.h - 1):
        (prev,), (cur,) = inj[i - 1], inj[i]
        if cur.top == prev.top:
            continue
        R = alg.soc_quotient(prev)
        piles.append(pile_from_algebra(A, R, cur.top - R.top))
    return piles


# theorem checks

def _is_concave_ha(A, d):
    return alg.is_concave(A) and global_dimension(A) == d and dominant_dimension(A) == d


def verify_theorem_1(d, max_u, max_n, records=None):
    if d % 2 == 0:
        raise ValueError("verify_theorem_1 needs odd d")
    return _verify_bijection(f"theorem 1 (d={d}, u<={max_u}, n<={max_n})", d, legal_sequences(d, max_u), max_n, records)


def verify_theorem_1p(d, max_n, records=None):
    if d % 2:
        raise ValueError("verify_theorem_1p needs even d")
    return _verify_bijection(f"theorem 1' (d={d}, n<={max_n})", d, legal_sequences(d, d), max_n, records)


def _verify_bijection(name, d, seqs, max_n, records):
    rep = Report(name)
    seen = {}
    for cs in seqs:
        H = h_algebra(d, cs)
        rep.check("concave HA with gldim = domdim = d", _is_concave_ha(H, d), (cs, str(H)))
        if _is_concave_ha(H, d):
            rep.check("z_char recovers the sequence", char_of(H, z_module(H, d)) == cs, (cs, str(H)))
        rep.check("injective", H not in seen, (cs, seen.get(H)))
        seen[H] = cs
    if records is None:
        records = census(max_n)
    hits = 0
    for r in records:
        if r.d != d or r.n > max_n:
            continue
        hits += 1
        rep.check("census algebra equals h_algebra(d, z_char)", h_algebra(d, r.z_char) == r.kupisch, str(r.kupisch))
    rep.notes.append(f"{len(seqs)} sequences, {hits} census algebras with n <= {max_n}")
    return rep.raise_if_failed()


def theorem_3_prediction(d, cs):
    """(summit count, char P, char Q) as given by the closed forms."""
    cs = tuple(cs)
    u = len(cs)
    if d % 2:
        if u == 0:
            return d, (0, 1), (0, d)
        t = (d - cs[0]) // 2
        return (u + 2) * t + 1, (0, *cs, 1), (0, *(c + 2 * t for c in cs), 1 + 2 * t)
    if u == 0:
        return d, (0, 1), (d - 1, 0)
    t = (d - cs[-1] - 1) // 2
    q = (d - 1, 0, 1 + 2 * t, *(c + 2 * t + 2 for c in cs[:-1]))
    return (u + 2) * t + u, (*cs, 0, 1), q


def verify_theorem_3(d, cs):
    cs = tuple(cs)
    rep = Report(f"theorem 3{'' if d % 2 else chr(39)} (d={d}, c={format_seq(cs)})")
    H = h_algebra(d, cs)
    s, cp, cq = theorem_3_prediction(d, cs)
    got = (len(alg.summits(H)), char_of(H, alg.first_summit(H)), char_of(H, alg.last_summit(H)))
    rep.check("summit count", got[0] == s, (s, got[0]))
    rep.check("char P", got[1] == cp, (cp, got[1]))
    rep.check("char Q", got[2] == cq, (cq, got[2]))
    return rep.raise_if_failed()


# propositions on concave algebras

def _length_m_modules(A, m):
    return [Module(t, m) for t in range(m, A.n + 1) if A.plen(t) >= m]


def _conditions(A, d, literal=False):
    m = A.h - 1
    mods = [(M, char_of(A, M)) for M in _length_m_modules(A, m)]
    # (3)-(3'') are read with R non-injective, as R = tau Y in the proofs;
    # literally, an injective projective of length m can satisfy them
    rs = mods if literal else [(M, z) for M, z in mods if not alg.is_injective(A, M)]
    ha, dd = is_higher_auslander(A)
    c = {"1": ha and dd == d}
    if d % 2:
        c["2"] = any(is_decreasing(z) and pd(A, alg.top_of(M)) == 1 for M, z in mods)
        c["2'"] = any(is_decreasing(z) for M, z in mods)
        c["2''"] = any(is_decreasing(z) and alg.is_injective(A, M) for M, z in mods)
        c["3"] = any(is_plus_decreasing(z) and alg.is_projective(A, M) for M, z in rs)
        c["3'"] = any(is_plus_decreasing(z) for M, z in rs)
        c["3''"] = any(is_plus_decreasing(z) and pd(A, alg.socle(M)) == d - 1 for M, z in rs)
    else:
        c["2"] = any(is_plus_strictly_increasing(z) and pd(A, Module(M.socle + 1, 1)) == 1 for M, z in mods)
        c["2'"] = any(is_plus_strictly_increasing(z) for M, z in mods)
        c["2''"] = any(is_plus_strictly_increasing(z) and alg.is_injective(A, M) for M, z in mods)
        c["3"] = any(is_minus_strictly_increasing(z) and alg.is_projective(A, M) for M, z in rs)
        c["3'"] = any(is_minus_strictly_increasing(z) for M, z in rs)
        c["3''"] = any(is_minus_strictly_increasing(z) and pd(A, alg.top_of(M)) == d for M, z in rs)
    legal = [cs for cs in legal_sequences(d, m - 1) if len(cs) == m - 1]
    c["4"] = any(h_algebra(d, cs) == A for cs in legal)
    if d % 2 == 0:
        c["5"] = any(is_strictly_increasing_odd(z) for M, z in mods)
    return c


def check_equivalent_conditions(A, d, literal=False):
    """Evaluate the listed conditions on a concave d-bound algebra.

    The conditions 1..4 must agree; for even d the extra condition 5 must
    imply them.  Conditions 3, 3' and 3'' ask for a module R of length h-1
    with tau^- R defined; pass ``literal=True`` to drop that requirement.
    """
    if not alg.is_concave(A):
        raise NotConcave(f"({A}) is not concave")
    if A.h < 2 or (d % 2 == 0 and A.h < 3):
        raise ValueError("height too small for these conditions")
    rep = Report(f"equivalent conditions for ({A}), d={d}")
    c = _conditions(A, d, literal)
    main = {k: v for k, v in c.items() if k != "5"}
    rep.check("conditions agree", len(set(main.values())) == 1, main)
    if "5" in c:
        rep.check("(5) implies (1)", not c["5"] or c["1"], c)
    rep.notes.append(" ".join(f"({k})={'T' if v else 'F'}" for k, v in c.items()))
    rep.details.update(c)
    return rep.raise_if_failed()


def check_simple_criteria(A, d):
    """The tau-orbit criterion on simples, for odd or even d."""
    h = A.h
    if h < 2 or not is_d_closed(A, d):
        return False
    sp = [pd(A, Module(i, 1)) for i in range(1, A.n + 1)]
    if d % 2:
        for j in range(h - 1, A.n + 1):
            z = [sp[j - 1 - i] for i in range(h - 1)]  # pd tau^i S_j
            if all(x % 2 for x in z) and d >= z[-1] and all(a <= b for a, b in zip(z, z[1:])):
                return True
        return False
    m = h - 1
    for j in range(m, A.n + 1):
        z = [sp[j - 1 - i] for i in range(m)]
        if all(x % 2 for x in z[:-1]) and z[-1] % 2 == 0:
            chain = z[-2::-1] + [z[-1]]  # z_{m-2}, .., z_0, z_{m-1}
            if all(a < b for a, b in zip(chain, chain[1:])):
                return True
    return False


def check_structural_props(A):
    ha, d = is_higher_auslander(A)
    rep = Report(f"structural properties of ({A})")
    if not rep.check("higher Auslander", ha, str(A)):
        return rep.raise_if_failed()
    mods = alg.all_indecomposables(A)
    for M in mods:
        tl = is_torsionless(A, M)
        rep.check("torsionless xor pd = d", tl != (pd(A, M) == d), str(M))
        if alg.is_projective(A, M):
            rep.check("id P in {0,d}", inj_dim(A, M) in (0, d), str(M))
        if alg.is_injective(A, M):
            rep.check("pd I in {0,d}", pd(A, M) in (0, d), str(M))
    for s in range(1, A.n + 1):
        R = alg.ray(A, s)
        ok = all(is_torsionless(A, M) for M in R) or all(pd(A, M) == d for M in R)
        rep.check("ray property", ok, s)
    inj_np = [M for M in mods if alg.is_injective(A, M) and not alg.is_projective(A, M)]
    if d % 2:
        for M in mods:
            if pd(A, M) % 2:
                rep.check("odd modules are decreasing", is_decreasing(char_of(A, M)), str(M))
        for M in inj_np:
            rep.check("injective non-projective: pd d, decreasing", pd(A, M) == d and is_decreasing(char_of(A, M)), str(M))
    else:
        proj = [M for M in mods if alg.is_projective(A, M)]
        by_socle = {}
        for P in proj:
            by_socle.setdefault(P.socle, []).append(P)
        rep.check("no 3-chain of projectives", all(len(v) <= 2 for v in by_socle.values()), by_socle)
        inj = [M for M in mods if alg.is_injective(A, M)]
        by_top = {}
        for I in inj:
            by_top.setdefault(I.top, []).append(I)
        rep.check("no 2-chain of proper epis between injectives", all(len(v) <= 2 for v in by_top.values()), by_top)
        for M in inj_np:
            if M.length >= 2:
                rep.check(
                    "injective non-projective: plus-strictly-increasing, pd d",
                    is_plus_strictly_increasing(char_of(A, M)) and pd(A, M) == d,
                    str(M),
                )
    if alg.is_concave(A):
        rep.check("summit pile is a d-pile", is_d_pile(extract_summit_pile(A), d), str(A))
        for p in extract_descent_piles(A):
            rep.check("descent pile is a d-pile", is_d_pile(p, d), str(A))
    return rep.raise_if_failed()


def pile_is_unique(pile, d, search=None):
    """The given d-pile is the only one with its radical characteristic."""
    z = pile.radical_char
    if memory_pile(z, pile.summit_count).mu != pile.mu:
        return False
    limit = search or pile.summit_count + 2 * pile.height + 2
    return [s for s in range(1, limit + 1) if is_d_pile(memory_pile(z, s), d)] == [pile.summit_count]


def conditions_apply(A, d):
    """Whether the equivalent-condition lists make sense for (A, d)."""
    return alg.is_concave(A) and (A.h >= 2 if d % 2 else A.h >= 3)


def verify_props(max_n, records=None):
    """Structural properties, condition lists and simple criteria over the census."""
    recs = census(max_n) if records is None else records
    rep = Report(f"census properties (n<={max_n})")
    for r in recs:
        A, d = r.kupisch, r.d
        for label, fn in (
            ("structural properties", lambda: check_structural_props(A)),
            ("equivalent conditions", lambda: conditions_apply(A, d) and check_equivalent_conditions(A, d)),
        ):
            try:
                fn()
                rep.check(label, True)
            except VerificationFailure as e:
                rep.check(label, False, (str(A), e.report.counterexamples[:3]))
        if conditions_apply(A, d):
            rep.check("simple criterion", check_simple_criteria(A, d), str(A))
    rep.notes.append(f"{len(recs)} census algebras")
    return rep.raise_if_failed()
