"""Shifted families M_n = <n, n + r_1, ..., n + r_k>.

Notation used throughout:

* ``r`` the shift vector, ``rk`` its largest entry, ``d = gcd(r)``;
* ``S = <r_1, ..., r_k>`` and ``FS`` its Frobenius number;
* ``N0 = max(rk**2, rk**2 + FS*rk)``;
* ``m(i)`` the least number of shifts (from the listed r, minimal or not)
  summing to i;
* ``P_n`` the elements i of Ap(S, dn) with i + (m(i) - 1) n in PF(M_n),
  split into the prime part (i < dn - rk) and the double part.

Statements proved for large n are applied here with an explicit threshold.
Below it, ``observed=True`` evaluates anyway and emits a
:class:`~shiftsg.errors.ThresholdWarning`; otherwise :class:`BelowThreshold`
is raised.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import core, kernels
from .errors import (
    BaseNotNearlyGorenstein,
    BelowThreshold,
    NotCoprime,
    NotInP,
    NotPseudoFrobenius,
    ThresholdWarning,
    TooFewShifts,
    TransportMismatch,
    checked,
)

PRIME = "prime"
DOUBLE = "double"


@dataclass(frozen=True)
class ShiftSpec:
    r: tuple[int, ...]
    S: core.Submonoid = field(compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.r)

    @property
    def rk(self) -> int:
        return self.r[-1]

    @property
    def d(self) -> int:
        return self.S.d

    @property
    def FS(self) -> int:
        return self.S.frobenius

    @property
    def FS_over_d(self) -> int:
        return self.S.reduced.frobenius

    @property
    def N0(self) -> int:
        return max(self.rk**2, self.rk**2 + self.FS * self.rk)

    @property
    def rk4(self) -> int:
        return self.rk**4


def make_spec(r: Iterable[int]) -> ShiftSpec:
    r = core.normalize_generators(r)
    if len(r) < 2:
        raise TooFewShifts(f"need at least two shifts, got {r}")
    return ShiftSpec(r, core.make_submonoid(r))


def _require_coprime(spec: ShiftSpec, n: int) -> None:
    if n <= 0 or gcd(n, spec.d) != 1:
        raise NotCoprime(f"gcd({n}, {spec.d}) != 1")


def _threshold(n: int, bound: int, what: str, observed: bool, strict_floor=None) -> None:
    """Enforce ``n >= bound``; in observed mode only warn.

    ``strict_floor`` is a bound that even observed mode may not cross.
    """
    if strict_floor is not None and n <= strict_floor:
        raise BelowThreshold(f"{what}: n = {n} must exceed {strict_floor}")
    if n < bound:
        if not observed:
            raise BelowThreshold(f"{what}: n = {n} below proven bound {bound}")
        warnings.warn(f"{what}: n = {n} below proven bound {bound}; value is observed only",
                      ThresholdWarning, stacklevel=3)


@lru_cache(maxsize=512)
def member_semigroup(spec: ShiftSpec, n: int) -> core.NumericalSemigroup:
    n = int(n)
    _require_coprime(spec, n)
    return core.build_semigroup((n,) + tuple(n + x for x in spec.r))


@lru_cache(maxsize=64)
def _m_table(r: tuple[int, ...], upto: int) -> np.ndarray:
    t = kernels.min_lengths(r, upto)
    t.setflags(write=False)
    return t


def m_value(spec: ShiftSpec, i: int) -> int | None:
    """Minimum factorization length of i over the listed shifts."""
    i = int(i)
    if i < 0:
        return None
    # round the table size up so that nearby queries share one table
    upto = max(1024, 1 << (i.bit_length()))
    v = int(_m_table(spec.r, upto)[i])
    return None if v < 0 else v


@dataclass(frozen=True, eq=False)
class _AperyData:
    n: int
    elements: np.ndarray  # Ap(S, dn), indexed by residue mod n
    m: np.ndarray  # m(i) aligned with ``elements``


@lru_cache(maxsize=256)
def _apery_data(spec: ShiftSpec, n: int) -> _AperyData:
    d = spec.d
    ap = core.apery_set(spec.S, d * n)
    elems = ap.weights[ap.weights >= 0]
    by_res = np.empty(n, dtype=np.int64)
    by_res[elems % n] = elems
    mt = _m_table(spec.r, int(elems.max()))
    return _AperyData(n, by_res, mt[by_res])


def apery_structure(spec: ShiftSpec, n: int) -> list[tuple[int, int, int]]:
    """Ap(M_n, n) as triples (i, m(i), i + m(i) n), i running over Ap(S, dn),
    sorted by i. Requires n > rk**2."""
    n = int(n)
    _require_coprime(spec, n)
    if n <= spec.rk**2:
        raise BelowThreshold(f"apery_structure needs n > rk^2 = {spec.rk ** 2}")
    data = _apery_data(spec, n)
    order = np.argsort(data.elements)
    return [(int(data.elements[j]), int(data.m[j]), int(data.elements[j] + data.m[j] * n))
            for j in order]


@dataclass(frozen=True)
class PFEntry:
    f: int
    i: int
    m: int
    cls: str


@dataclass(frozen=True)
class PProfile:
    n: int
    split: int  # dn - rk
    p_prime: tuple[tuple[int, int], ...]
    p_double: tuple[tuple[int, int], ...]
    pf: tuple[PFEntry, ...]

    @property
    def P(self) -> tuple[int, ...]:
        return tuple(sorted(i for i, _ in self.p_prime + self.p_double))

    def entry(self, f: int) -> PFEntry:
        for e in self.pf:
            if e.f == f:
                return e
        raise NotPseudoFrobenius(f"{f} is not a pseudo-Frobenius number of M_{self.n}")

    def m_of(self, i: int) -> int:
        for j, mj in self.p_prime + self.p_double:
            if j == i:
                return mj
        raise NotInP(f"{i} is not in P_{self.n}")


def _profile(spec: ShiftSpec, n: int) -> PProfile:
    # no threshold check; callers decide what n they accept
    H = member_semigroup(spec, n)
    data = _apery_data(spec, n)
    split = spec.d * n - spec.rk
    entries = []
    for f in H.pf:
        c = f % n
        i, mi = int(data.elements[c]), int(data.m[c])
        if i + (mi - 1) * n != f:
            raise RuntimeError(f"Apery structure mismatch at n={n}, f={f}")
        entries.append(PFEntry(f, i, mi, PRIME if i < split else DOUBLE))
    prime = tuple(sorted((e.i, e.m) for e in entries if e.cls == PRIME))
    double = tuple(sorted((e.i, e.m) for e in entries if e.cls == DOUBLE))
    return PProfile(n, split, prime, double, tuple(entries))


_profile_cached = lru_cache(maxsize=256)(_profile)


def p_profile(spec: ShiftSpec, n: int) -> PProfile:
    n = int(n)
    _require_coprime(spec, n)
    if n <= spec.N0:
        raise BelowThreshold(f"p_profile needs n > N0 = {spec.N0}")
    return _profile_cached(spec, n)


def psi(spec: ShiftSpec, n: int, i: int, lam: int = 1) -> int:
    """Image of i in P_{n + lam*rk} under the corrected bijection (iterated)."""
    prof = p_profile(spec, n)
    prof.m_of(i)
    if i < prof.split:
        return i
    return checked(i + lam * spec.d * spec.rk)


def psi_wrong(spec: ShiftSpec, n: int, i: int) -> int:
    """The earlier published map i -> i (i <= dn), i + rk (i > dn).

    Kept only to demonstrate where it disagrees with :func:`psi`.
    """
    prof = p_profile(spec, n)
    prof.m_of(i)
    return i if i <= spec.d * n else i + spec.rk


@dataclass(frozen=True)
class ClosedForm:
    """phi_n^lam(f) = f + c1*lam + c2*lam**2 for one f in PF(M_n)."""

    base_f: int
    cls: str
    i: int
    m: int
    n: int
    d: int
    rk: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        if self.cls == PRIME:
            return self.base_f, (self.m - 1) * self.rk, 0
        return (self.base_f,
                (self.m + self.d - 1) * self.rk + self.d * self.n,
                self.d * self.rk)

    def __call__(self, lam: int) -> int:
        lam = int(lam)
        if lam < 0:
            raise ValueError("lambda must be nonnegative")
        if self.cls == PRIME:
            return checked(self.base_f + (self.m - 1) * lam * self.rk)
        return checked(self.base_f
                       + (self.m + (lam + 1) * self.d - 1) * lam * self.rk
                       + lam * self.d * self.n)

    def i_at(self, lam: int) -> int:
        return self.i if self.cls == PRIME else self.i + lam * self.d * self.rk

    def m_at(self, lam: int) -> int:
        return self.m if self.cls == PRIME else self.m + lam * self.d


def closed_forms(spec: ShiftSpec, n: int) -> list[ClosedForm]:
    prof = p_profile(spec, n)
    return [ClosedForm(e.f, e.cls, e.i, e.m, prof.n, spec.d, spec.rk) for e in prof.pf]


def _closed_form(spec, n, f) -> ClosedForm:
    prof = p_profile(spec, n)
    e = prof.entry(f)
    return ClosedForm(e.f, e.cls, e.i, e.m, prof.n, spec.d, spec.rk)


def phi(spec: ShiftSpec, n: int, f: int) -> int:
    return _closed_form(spec, n, f)(1)


def phi_lambda(spec: ShiftSpec, n: int, f: int, lam: int) -> int:
    return _closed_form(spec, n, f)(lam)


def m_shift(spec: ShiftSpec, n: int, i: int, lam: int) -> int:
    prof = p_profile(spec, n)
    mi = prof.m_of(i)
    return mi if i < prof.split else mi + lam * spec.d


@dataclass(frozen=True)
class BoundN:
    n_star: int
    N1: int
    N2: int
    N3: int
    N: int


def _class_base(spec: ShiftSpec, n: int | None) -> int:
    """Smallest valid n' > N0, in the class of n mod rk when n is given."""
    N0, rk = spec.N0, spec.rk
    if n is None:
        x = N0 + 1
        while gcd(x, spec.d) != 1:
            x += 1
        return x
    _require_coprime(spec, n)
    return N0 + 1 + (n - N0 - 1) % rk


def bound_N(spec: ShiftSpec, n: int | None = None) -> BoundN:
    """The bound N past which nearly Gorenstein vectors transport.

    N depends on n only through its class mod rk; it is computed at the
    smallest n' > N0 of that class (or of the first valid class when n is
    omitted).
    """
    return bound_at(spec, _class_base(spec, n))


def bound_at(spec: ShiftSpec, ns: int) -> BoundN:
    """N evaluated from P_ns itself, for any valid ns > N0."""
    prof = p_profile(spec, ns)
    rk, d = spec.rk, spec.d
    pp, pd = prof.p_prime, prof.p_double
    N1 = max([0] + [max(rk + l - i, (ml - mi) * rk - l + i)
                    for i, mi in pp for l, ml in pp])
    N2 = max([0] + [(ml - mi) * rk - l + i for i, mi in pd for l, ml in pd])
    # n > x and n > floor(x) agree for integer n, so the floor is exact here
    N3 = max([0] + [(ml * rk + 3 * rk) // d for _, ml in pp])
    N = max(spec.N0 + rk + spec.FS_over_d, N1, N2, N3)
    return BoundN(ns, N1, N2, N3, N)


def frobenius_representative(spec: ShiftSpec, n: int) -> PFEntry:
    prof = p_profile(spec, n)
    return prof.entry(member_semigroup(spec, n).frobenius)


def frobenius_closed_form(spec: ShiftSpec, n: int, lam: int, *, observed: bool = False) -> int:
    """F(M_{n + lam*rk}) from the data of M_n."""
    _threshold(n, spec.rk4, "frobenius_closed_form", observed, strict_floor=spec.N0)
    e = frobenius_representative(spec, n)
    if e.cls != DOUBLE:
        raise BelowThreshold(f"Frobenius representative {e.i} of M_{n} is not in the double part")
    return _closed_form(spec, n, e.f)(lam)


@dataclass(frozen=True)
class OrderCheck:
    ok: bool
    witness: dict | None = None


def order_preservation_check(spec: ShiftSpec, n: int, lam_max: int, *,
                             observed: bool = False) -> OrderCheck:
    """Sorted PF(M_n) is a prime block followed by a double block, and every
    phi_n^lam (lam <= lam_max) is strictly increasing on it."""
    _threshold(n, spec.rk4, "order_preservation_check", observed, strict_floor=spec.N0)
    forms = sorted(closed_forms(spec, n), key=lambda c: c.base_f)
    seen_double = False
    for c in forms:
        if c.cls == DOUBLE:
            seen_double = True
        elif seen_double:
            return OrderCheck(False, {"kind": "block", "f": c.base_f})
    for lam in range(lam_max + 1):
        vals = [c(lam) for c in forms]
        for a in range(len(vals) - 1):
            if vals[a] >= vals[a + 1]:
                return OrderCheck(False, {"kind": "monotone", "lambda": lam,
                                          "f": [forms[a].base_f, forms[a + 1].base_f],
                                          "values": vals[a:a + 2]})
    return OrderCheck(True)


def ng_transport(spec: ShiftSpec, n: int, lam: int, *, observed: bool = False):
    """Transport the NG-vector of M_n to M_{n + lam*rk}, coordinate-wise via
    phi_n^lam, and confirm it against the direct certificate.

    Returns the vector, or None in observed mode when the check fails.
    """
    bound = bound_N(spec, n)
    _threshold(n, bound.N + 1, "ng_transport", observed, strict_floor=spec.N0)
    base = core.ng_certificate(member_semigroup(spec, n))
    if base.vector is None:
        raise BaseNotNearlyGorenstein(f"M_{n} is not nearly Gorenstein")
    vec = tuple(phi_lambda(spec, n, f, lam) for f in base.vector)
    target = core.ng_certificate(member_semigroup(spec, n + lam * spec.rk))
    ok = all(v in c for v, c in zip(vec, target.per_generator_candidates))
    if not ok:
        if observed:
            return None
        raise TransportMismatch(f"transported vector {vec} fails at n={n + lam * spec.rk}")
    return vec


def _transport_bool(prop, name, spec, n, lam, observed):
    bound = bound_N(spec, n)
    _threshold(n, bound.N + 1, name, observed)
    if not prop(member_semigroup(spec, n)):
        return False
    shifted = prop(member_semigroup(spec, n + lam * spec.rk))
    if not shifted and n > bound.N:
        raise TransportMismatch(f"{name}: property lost at n={n + lam * spec.rk}")
    return shifted


def almost_symmetric_transport(spec: ShiftSpec, n: int, lam: int, *,
                               observed: bool = False) -> bool:
    """False when M_n is not almost symmetric (no claim); otherwise the
    directly checked almost symmetry of M_{n + lam*rk}."""
    return _transport_bool(core.is_almost_symmetric, "almost_symmetric_transport",
                           spec, n, lam, observed)


def canonical_reduction_transport(spec: ShiftSpec, n: int, lam: int, *,
                                  observed: bool = False) -> bool:
    return _transport_bool(core.has_canonical_reduction, "canonical_reduction_transport",
                           spec, n, lam, observed)


def even_type_exclusion(spec: ShiftSpec, n: int, *, observed: bool = False) -> bool:
    """True iff M_n is not almost symmetric of even type."""
    _threshold(n, spec.rk4, "even_type_exclusion", observed)
    H = member_semigroup(spec, n)
    return not (core.is_almost_symmetric(H) and H.type % 2 == 0)


def reduce_base(spec: ShiftSpec, n: int) -> int:
    """Smallest p = n - mu*rk (mu >= 0) with p > N0."""
    if n <= spec.N0:
        raise BelowThreshold(f"n = {n} must exceed N0 = {spec.N0}")
    return spec.N0 + 1 + (n - spec.N0 - 1) % spec.rk


def reduced_type_formula(spec: ShiftSpec, n: int, *, base: int | None = None,
                         observed: bool = False) -> int:
    """Reduced type of M_n counted from P'' of a base p:
    #{j : m(j) = m(i)} + #{j : m(j) = m(i) - 1, j > i}, where
    F(M_p) = i + (m(i) - 1) p.

    p defaults to :func:`reduce_base`; any ``base`` with N0 < p <= n and
    p = n mod rk gives the same count.
    """
    _require_coprime(spec, n)
    _threshold(n, spec.rk4, "reduced_type_formula", observed, strict_floor=spec.N0)
    if base is None:
        p = reduce_base(spec, n)
    else:
        p = int(base)
        if not (spec.N0 < p <= n and (n - p) % spec.rk == 0):
            raise BelowThreshold(f"base {p} must satisfy N0 < p <= n and p = n mod rk")
    e = frobenius_representative(spec, p)
    if e.cls != DOUBLE:
        raise BelowThreshold(f"Frobenius representative of M_{p} is not in the double part")
    prof = p_profile(spec, p)
    same = sum(1 for j, mj in prof.p_double if mj == e.m)
    below = sum(1 for j, mj in prof.p_double if mj == e.m - 1 and j > e.i)
    return same + below


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    max_deviation: float


@dataclass(frozen=True)
class ResidueScan:
    rows: tuple[tuple[int, int, int], ...]  # (lambda, n + lambda*rk, residue)
    fit: LinearFit | None  # empirical least-squares line, no claim attached


def residue_scan(spec: ShiftSpec, n: int, lams: Sequence[int]) -> ResidueScan:
    rows = []
    for lam in sorted(set(int(x) for x in lams)):
        nl = checked(n + lam * spec.rk)
        rows.append((lam, nl, core.residue(member_semigroup(spec, nl))))
    fit = None
    if len(rows) >= 2:
        x = np.array([r[0] for r in rows], dtype=float)
        y = np.array([r[2] for r in rows], dtype=float)
        slope, intercept = np.polyfit(x, y, 1)
        dev = float(np.max(np.abs(y - (slope * x + intercept))))
        fit = LinearFit(round(float(slope), 12), round(float(intercept), 12), round(dev, 12))
    return ResidueScan(tuple(rows), fit)


@dataclass
class FamilyReport:
    spec: ShiftSpec
    n: int
    lam_max: int
    bound: BoundN
    profile: PProfile | None
    closed_forms: list[ClosedForm]
    flags: dict  # name -> {"value": bool | None, "basis": "theorem" | "observed"}
    warnings: list[str]


def family_report(spec: ShiftSpec, n: int, lam_max: int) -> FamilyReport:
    """Everything about M_n and its shifts up to lam_max, with each flag
    labelled by whether the relevant bound covers n."""
    _require_coprime(spec, n)
    notes: list[str] = []
    bound = bound_N(spec, n)
    profile, forms = None, []
    if n > spec.N0:
        profile = p_profile(spec, n)
        forms = closed_forms(spec, n)
    else:
        notes.append(f"n = {n} <= N0 = {spec.N0}: no pseudo-Frobenius transport")

    H = member_semigroup(spec, n)
    past_N = n > bound.N
    past_rk4 = n >= spec.rk4

    def basis(ok):
        return "theorem" if ok else "observed"

    flags = {
        "nearly_gorenstein": {"value": core.ng_certificate(H).nearly_gorenstein,
                              "basis": basis(past_N)},
        "almost_symmetric": {"value": core.is_almost_symmetric(H), "basis": basis(past_N)},
        "canonical_reduction": {"value": core.has_canonical_reduction(H),
                                "basis": basis(past_N)},
        "even_type_excluded": {"value": not (core.is_almost_symmetric(H) and H.type % 2 == 0),
                               "basis": basis(past_rk4)},
    }
    if profile is not None:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ThresholdWarning)
            check = order_preservation_check(spec, n, lam_max, observed=True)
        flags["order_preserved"] = {"value": check.ok, "basis": basis(past_rk4)}
    else:
        flags["order_preserved"] = {"value": None, "basis": "observed"}
    if not past_N:
        notes.append(f"n = {n} <= N = {bound.N}: transport flags are observed only")
    if not past_rk4:
        notes.append(f"n = {n} < rk^4 = {spec.rk4}: order and Frobenius formulas are observed only")
    return FamilyReport(spec, n, lam_max, bound, profile, forms, flags, notes)
