"""Brute-force reference computations.

Nothing here uses Apery sets, round-robin relaxation or the closed forms:
membership is a dense sieve, PF is the definition scanned over [0, F], the
trace is the literal sumset K(H) + (H - K(H)), and factorization lengths are
found breadth first. Slow by design.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable

import numpy as np

from . import core, family
from .errors import CapExceeded, NotNumerical, SemigroupError

DEFAULT_CAP = 10**8


def brute_membership(gens: Iterable[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Boolean table of <gens> over [0, F + 1 + max(gens)], found by sieving
    blocks of width min(gens) until a full block is in the monoid."""
    gens = sorted(set(int(g) for g in gens))
    if reduce(gcd, gens) != 1:
        raise NotNumerical(f"gcd{tuple(gens)} != 1")
    m, top = gens[0], gens[-1]
    size = max(4 * top, 1024)
    table = np.zeros(size, dtype=bool)
    table[0] = True
    start = 1
    while True:
        # every entry of a block only depends on entries at least m earlier
        while start + m <= size:
            blk = slice(start, start + m)
            acc = np.zeros(m, dtype=bool)
            for g in gens:
                if g <= start:
                    acc |= table[start - g:start - g + m]
                else:
                    lo = g - start
                    if lo < m:
                        acc[lo:] |= table[0:m - lo]
            table[blk] = acc
            if acc.all():
                # m consecutive members: everything beyond is a member too
                return table[:start + m]
            start += m
        if size > cap + top + m:
            raise CapExceeded(f"Frobenius number of {tuple(gens)} exceeds cap {cap}")
        table = np.concatenate([table, np.zeros(size, dtype=bool)])
        size *= 2


def brute_frobenius(gens: Iterable[int], cap: int = DEFAULT_CAP) -> int:
    table = brute_membership(gens, cap)
    holes = np.flatnonzero(~table)
    return int(holes[-1]) if len(holes) else -1


def brute_pf(gens: Iterable[int], cap: int = DEFAULT_CAP) -> list[int]:
    """{x not in H : x + g in H for every generator g}, scanned on [-1, F]."""
    gens = sorted(set(int(g) for g in gens))
    table = brute_membership(gens, cap)
    F = int(np.flatnonzero(~table)[-1]) if (~table).any() else -1
    if F > cap:
        raise CapExceeded(f"F = {F} exceeds cap {cap}")
    if F < 0:
        return [-1]
    ext = np.concatenate([table, np.ones(gens[-1] + 2, dtype=bool)])
    xs = np.arange(F + 1)
    ok = ~ext[xs]
    for g in gens:
        ok &= ext[xs + g]
    return [int(x) for x in np.flatnonzero(ok)]


@dataclass(frozen=True)
class BruteTrace:
    holes: tuple[int, ...]
    canonical: tuple[int, ...] = field(repr=False)  # K(H) in [0, F]
    dual: tuple[int, ...] = field(repr=False)  # (H - K(H)) in the window [-F, 2F]

    @property
    def residue(self) -> int:
        return len(self.holes)


def brute_trace(gens: Iterable[int], cap: int = 10**6) -> BruteTrace:
    """Holes of tr(H) = K(H) + (H - K(H)) from the definitions.

    H - K(H) is enumerated on [-F, 2F]; since K(H) contains [F + 1, oo) and
    every hole lies in [0, F], nothing outside that window can matter.
    """
    gens = sorted(set(int(g) for g in gens))
    table = brute_membership(gens, cap)
    F = int(np.flatnonzero(~table)[-1]) if (~table).any() else -1
    if F > cap:
        raise CapExceeded(f"F = {F} exceeds cap {cap}")
    if F < 0:
        return BruteTrace((), (0,), (0,))

    def member(x):
        x = np.asarray(x)
        inside = np.clip(x, 0, len(table) - 1)
        return np.where(x < 0, False, np.where(x >= len(table), True, table[inside]))

    xs = np.arange(0, 2 * F + 2)
    in_K = ~member(F - xs)  # K(H) on [0, 2F + 1]; all of [F + 1, oo) is in
    K = xs[in_K]
    ys = np.arange(-F, 2 * F + 1)
    dual = [int(y) for y in ys if member(y + K).all()]
    in_tr = np.zeros(F + 1, dtype=bool)
    Kf = K[K <= F]
    for y in dual:
        s = Kf + y
        s = s[(s >= 0) & (s <= F)]
        in_tr[s] = True
    H_low = table[:F + 1]
    holes = tuple(int(h) for h in np.flatnonzero(H_low & ~in_tr))
    return BruteTrace(holes, tuple(int(x) for x in Kf), tuple(dual))


def brute_min_length(x: int, coins: Iterable[int]) -> int | None:
    """Fewest coins summing to x, by breadth-first layers of reachable sums."""
    coins = sorted(set(int(c) for c in coins))
    if x == 0:
        return 0
    layer = np.zeros(x + 1, dtype=bool)
    layer[0] = True
    seen = layer.copy()
    for length in range(1, x // coins[0] + 1):
        nxt = np.zeros_like(layer)
        for c in coins:
            if c <= x:
                nxt[c:] |= layer[:x + 1 - c]
        nxt &= ~seen
        if nxt[x]:
            return length
        if not nxt.any():
            return None
        seen |= nxt
        layer = nxt
    return None


def brute_apery_rep(S: core.Submonoid, x: int, n: int) -> int:
    """The element i of Ap(S, dn) with i = x mod n, by direct search."""
    dn = S.d * n
    i = x % n
    while True:
        if i in S and (i - dn) not in S:
            return i
        i += n


@dataclass(frozen=True)
class DiffReport:
    subject: str
    instance: dict
    expected: object
    actual: object

    @property
    def match(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"subject": self.subject, "instance": self.instance,
                "expected": self.expected, "actual": self.actual, "match": self.match}


def brute_shift_check(spec: family.ShiftSpec, n: int, lam_max: int, *,
                      wrong_bijection: bool = False,
                      cap: int = DEFAULT_CAP) -> list[DiffReport]:
    """Compare every closed form at n against direct recomputation at
    n + lam*rk for lam = 0..lam_max.

    Checked: the P-sets (via psi, or via the earlier published map when
    ``wrong_bijection``), phi_lambda on all of PF, m_shift, and, once
    n >= rk**4, frobenius_closed_form and reduced_type_formula (their proven
    range); use :func:`brute_threshold_check` to force them below it.
    """
    reports = []
    rk, d = spec.rk, spec.d
    prof = family.p_profile(spec, n)
    forms = family.closed_forms(spec, n)
    for lam in range(lam_max + 1):
        nl = n + lam * rk
        inst = {"shifts": list(spec.r), "n": n, "lambda": lam}
        pf = brute_pf((nl,) + tuple(nl + x for x in spec.r), cap)
        reports.append(DiffReport("phi_lambda", inst, pf, sorted(c(lam) for c in forms)))

        P_true = sorted(brute_apery_rep(spec.S, f, nl) for f in pf)
        if wrong_bijection:
            P_pred = list(prof.P) if lam == 0 else _iterate_wrong(spec, n, lam)
        else:
            P_pred = sorted(family.psi(spec, n, i, lam) for i in prof.P)
        reports.append(DiffReport("wrong_bijection" if wrong_bijection else "psi",
                                  inst, P_true, P_pred))

        for i, _ in prof.p_prime + prof.p_double:
            j = i if i < prof.split else i + lam * d * rk
            reports.append(DiffReport("m_shift", {**inst, "i": i},
                                      brute_min_length(j, spec.r),
                                      family.m_shift(spec, n, i, lam)))
        if n >= spec.rk4:
            reports.extend(_threshold_reports(spec, n, lam, pf, inst))
    return reports


def brute_threshold_check(spec: family.ShiftSpec, n: int, lam_max: int, *,
                          cap: int = DEFAULT_CAP) -> list[DiffReport]:
    """frobenius_closed_form and reduced_type_formula against brute force at
    any n > N0, evaluated in observed mode below rk**4."""
    import warnings

    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for lam in range(lam_max + 1):
            nl = n + lam * spec.rk
            inst = {"shifts": list(spec.r), "n": n, "lambda": lam}
            pf = brute_pf((nl,) + tuple(nl + x for x in spec.r), cap)
            out.extend(_threshold_reports(spec, n, lam, pf, inst, observed=True))
    return out


def _threshold_reports(spec, n, lam, pf, inst, observed=False):
    nl = n + lam * spec.rk
    out = []
    try:
        actual = family.frobenius_closed_form(spec, n, lam, observed=observed)
    except SemigroupError as exc:
        actual = f"error: {exc}"
    out.append(DiffReport("frobenius_closed_form", inst, max(pf), actual))
    F = max(pf)
    direct = sum(1 for f in pf if F - nl <= f <= F)
    try:
        actual = family.reduced_type_formula(spec, nl, observed=observed)
    except SemigroupError as exc:
        actual = f"error: {exc}"
    out.append(DiffReport("reduced_type_formula", inst, direct, actual))
    return out


def _iterate_wrong(spec, n, lam):
    P = list(family.p_profile(spec, n).P)
    for step in range(lam):
        base = n + step * spec.rk
        P = [i if i <= spec.d * base else i + spec.rk for i in P]
    return sorted(P)


class XorShift64Star:
    """xorshift64* generator: state ^= state >> 12; state ^= state << 25;
    state ^= state >> 27; output = state * 0x2545F4914F6CDD1D (mod 2**64).
    The seed is scrambled once with splitmix64 so that seed 0 is usable."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        z = (int(seed) + 0x9E3779B97F4A7C15) & self.MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        self.state = (z ^ (z >> 31)) or 1

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & self.MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & self.MASK

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            v = self.next()
            if v < limit:
                return v % bound


def random_family(seed: int, r_k_max: int = 12, k_range: tuple[int, int] = (2, 4)) -> family.ShiftSpec:
    """A reproducible spec with k in k_range (inclusive) distinct shifts
    drawn from [1, r_k_max]."""
    lo, hi = k_range
    if lo < 2 or hi < lo or hi > r_k_max:
        raise ValueError(f"bad k_range {k_range} for r_k_max {r_k_max}")
    rng = XorShift64Star(seed)
    k = lo + rng.below(hi - lo + 1)
    pool = list(range(1, r_k_max + 1))
    for a in range(k):  # partial Fisher-Yates
        b = a + rng.below(len(pool) - a)
        pool[a], pool[b] = pool[b], pool[a]
    return family.make_spec(sorted(pool[:k]))


def random_specs(seed: int, count: int, r_k_max: int = 12,
                 k_range: tuple[int, int] = (2, 4)) -> list[family.ShiftSpec]:
    rng = XorShift64Star(seed)
    return [random_family(rng.next(), r_k_max, k_range) for _ in range(count)]


def valid_ns(spec: family.ShiftSpec, above: int, count: int) -> list[int]:
    """The first ``count`` n > above with gcd(n, d) = 1."""
    out, n = [], above + 1
    while len(out) < count:
        if gcd(n, spec.d) == 1:
            out.append(n)
        n += 1
    return out
