"""Invariants of a single numerical semigroup.

Membership is carried by the Apery set with respect to the multiplicity:
x is in H iff x >= w[x mod m]. That set is built by round-robin shortest-path
relaxation over the residues mod m, and everything else (Frobenius number,
pseudo-Frobenius numbers, trace, ...) is read off it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    BaseNotMember,
    EmptyInput,
    NonPositiveEntry,
    NotNumerical,
)


def normalize_generators(raw: Iterable[int]) -> tuple[int, ...]:
    """Sort and deduplicate a list of positive integers."""
    vals = [int(x) for x in raw]
    if not vals:
        raise EmptyInput("no generators given")
    bad = [x for x in vals if x <= 0]
    if bad:
        raise NonPositiveEntry(f"generators must be positive, got {bad}")
    return tuple(sorted(set(vals)))


def minimal_generators(gens: Iterable[int]) -> tuple[int, ...]:
    """Drop every generator that is an N-combination of the others.

    Works for any gcd. Generators are added in increasing order; one is kept
    only if the monoid of the smaller ones does not reach it, which is
    decided from the running residue weights modulo the smallest generator.
    """
    gens = normalize_generators(gens)
    m = gens[0]
    w = kernels.new_weights(m)
    kept = [m]
    for a in gens[1:]:
        if w[a % m] <= a:
            continue
        kept.append(a)
        kernels.round_robin_pass(w, a)
    return tuple(kept)


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    generators: tuple[int, ...]
    minimal_generators: tuple[int, ...]
    apery: np.ndarray = field(repr=False)  # least member per class mod multiplicity
    pf: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def frobenius(self) -> int:
        return self.pf[-1]

    @property
    def type(self) -> int:
        return len(self.pf)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def __contains__(self, x) -> bool:
        x = int(x)
        return x >= 0 and x >= self.apery[x % self.multiplicity]

    def contains_array(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        w = self.apery[np.mod(xs, self.multiplicity)]
        return (xs >= 0) & (xs >= w)

    def membership_table(self) -> np.ndarray:
        """Dense boolean table over [0, F(H) + 1]."""
        return self.contains_array(np.arange(self.frobenius + 2))

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self):
        return hash(self.minimal_generators)


def build_semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    gens = normalize_generators(gens)
    if reduce(gcd, gens) != 1:
        raise NotNumerical(f"gcd{gens} = {reduce(gcd, gens)} != 1")
    mins = minimal_generators(gens)
    m = mins[0]
    w = kernels.apery_weights(mins[1:], m)
    w.setflags(write=False)
    classes = kernels.maximal_classes(w, mins[1:])
    pf = tuple(sorted(int(w[c]) - m for c in classes))
    return NumericalSemigroup(gens, mins, w, pf)


@dataclass(frozen=True, eq=False)
class Submonoid:
    """A submonoid of N of any gcd d; membership of x needs d | x and
    x/d in the reduced numerical semigroup."""

    generators: tuple[int, ...]
    d: int
    reduced: NumericalSemigroup

    @property
    def frobenius(self) -> int:
        return self.d * self.reduced.frobenius

    def __contains__(self, x) -> bool:
        x = int(x)
        return x % self.d == 0 and (x // self.d) in self.reduced

    def contains_array(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        return (xs % self.d == 0) & self.reduced.contains_array(xs // self.d)


def make_submonoid(gens: Iterable[int]) -> Submonoid:
    gens = normalize_generators(gens)
    d = reduce(gcd, gens)
    return Submonoid(gens, d, build_semigroup(g // d for g in gens))


@dataclass(frozen=True, eq=False)
class AperySet:
    base: int
    weights: np.ndarray = field(repr=False)  # per residue mod base, -1 if absent

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(int(x) for x in self.weights if x >= 0))

    def __len__(self):
        return int(np.count_nonzero(self.weights >= 0))

    def __contains__(self, x) -> bool:
        x = int(x)
        return x >= 0 and int(self.weights[x % self.base]) == x

    def representative(self, x: int) -> int:
        """The Apery element congruent to x mod base (-1 if none)."""
        return int(self.weights[int(x) % self.base])


def apery_set(H: NumericalSemigroup | Submonoid, base: int) -> AperySet:
    base = int(base)
    if base <= 0 or base not in H:
        raise BaseNotMember(f"{base} is not a nonzero member")
    if isinstance(H, Submonoid):
        if base > H.frobenius:
            return AperySet(base, _apery_above_frobenius(H, base))
        return AperySet(base, kernels.apery_weights(H.generators, base))
    if base == H.multiplicity:
        return AperySet(base, np.array(H.apery))
    return AperySet(base, kernels.apery_weights(H.minimal_generators, base))


def _apery_above_frobenius(S: Submonoid, base: int) -> np.ndarray:
    # Ap(S, dn) = {dj if dj in S else dj + dn : 0 <= j < n} once dn > F(S).
    d = S.d
    n = base // d
    dj = d * np.arange(n, dtype=np.int64)
    elems = np.where(S.contains_array(dj), dj, dj + base)
    w = np.full(base, -1, dtype=np.int64)
    w[elems % base] = elems
    return w


def pseudo_frobenius(H: NumericalSemigroup) -> tuple[int, ...]:
    return H.pf


def min_fact_length(x: int, coins: Iterable[int]) -> int | None:
    """Minimum total count of a factorization x = sum(c_i * coin_i) over the
    listed coins (not reduced to minimal generators); None when there is no
    factorization."""
    x = int(x)
    if x < 0:
        return None
    coins = normalize_generators(coins)
    v = int(kernels.min_lengths(coins, x)[x])
    return None if v < 0 else v


def min_fact_length_minimal(x: int, H: NumericalSemigroup | Submonoid) -> int | None:
    """Like :func:`min_fact_length` but over the minimal generators of H."""
    if isinstance(H, Submonoid):
        coins = minimal_generators(H.generators)
    else:
        coins = H.minimal_generators
    return min_fact_length(x, coins)


@dataclass(frozen=True)
class CanonicalIdeal:
    finite: tuple[int, ...]  # members of K(H) in [0, F(H)]
    threshold: int  # every x >= threshold lies in K(H)

    def __contains__(self, x) -> bool:
        x = int(x)
        return x >= self.threshold or x in set(self.finite)


def canonical_ideal(H: NumericalSemigroup) -> CanonicalIdeal:
    F = H.frobenius
    xs = np.arange(F + 1, dtype=np.int64)
    finite = xs[~H.contains_array(F - xs)]
    return CanonicalIdeal(tuple(int(x) for x in finite), F + 1)


def trace_witness(H: NumericalSemigroup, h: int) -> int | None:
    """Some f* in PF(H) with h + f* - f in H for all f in PF(H), or None."""
    if h not in H:
        return None
    for fs in H.pf:
        if all(h + fs - f in H for f in H.pf):
            return fs
    return None


@dataclass(frozen=True)
class TraceData:
    holes: tuple[int, ...]
    semigroup: NumericalSemigroup = field(repr=False, compare=False)

    @property
    def residue(self) -> int:
        return len(self.holes)

    def witness(self, h: int) -> int | None:
        return trace_witness(self.semigroup, h)

    def __contains__(self, h) -> bool:
        """Membership of h in tr(H)."""
        return h in self.semigroup and int(h) not in set(self.holes)


def trace(H: NumericalSemigroup) -> TraceData:
    holes = kernels.trace_holes(H.apery, H.pf, H.frobenius)
    return TraceData(tuple(holes), H)


def residue(H: NumericalSemigroup) -> int:
    return trace(H).residue


@dataclass(frozen=True)
class NGCertificate:
    generators: tuple[int, ...]
    per_generator_candidates: tuple[tuple[int, ...], ...]
    vector: tuple[int, ...] | None

    @property
    def nearly_gorenstein(self) -> bool:
        return self.vector is not None


def ng_certificate(H: NumericalSemigroup) -> NGCertificate:
    cands = []
    for h in H.minimal_generators:
        cands.append(tuple(fi for fi in H.pf if all(h + fi - f in H for f in H.pf)))
    vector = tuple(c[0] for c in cands) if all(cands) else None
    return NGCertificate(H.minimal_generators, tuple(cands), vector)


def is_symmetric(H: NumericalSemigroup) -> bool:
    return H.type == 1


def is_almost_symmetric(H: NumericalSemigroup) -> bool:
    pf, F, t = H.pf, H.frobenius, H.type
    return all(pf[a - 1] + pf[t - a - 1] == F for a in range(1, t))


def has_canonical_reduction(H: NumericalSemigroup) -> bool:
    m, F = H.multiplicity, H.frobenius
    return all(m + F - f in H for f in H.pf)


def reduced_type(H: NumericalSemigroup) -> int:
    F = H.frobenius
    lo = F - H.multiplicity
    return sum(1 for f in H.pf if lo <= f <= F)
