"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its wall time and budget; the
lines are repeated in the pytest terminal summary. Comparisons are exact
integer equality. Caches are cleared before each criterion so the timings
are cold.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python3 tests/test_acceptance.py``.
"""

import sys
import warnings
from contextlib import contextmanager
from math import gcd
from time import perf_counter

import pytest

from conftest import ACCEPTANCE_LINES
from shiftsg import core, family, kernels, oracle
from shiftsg.errors import ThresholdWarning

spec = family.make_spec


def clear_caches():
    for fn in (family.member_semigroup, family._m_table, family._apery_data,
               family._profile_cached):
        fn.cache_clear()


@contextmanager
def criterion(num, title, budget):
    clear_caches()
    t0 = perf_counter()
    ok, why = False, "assertion failed"
    try:
        yield
        ok, why = True, ""
    finally:
        elapsed = perf_counter() - t0
        if ok and elapsed > budget:
            ok, why = False, "over time budget"
        line = (f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}"
                f" ({elapsed:.3f} s / {budget:g} s, {kernels.BACKEND} kernels)"
                + (f": {why}" if why else ""))
        print(line)
        ACCEPTANCE_LINES.append(line)
    assert elapsed <= budget, f"criterion {num} took {elapsed:.2f} s > {budget} s"


def pf(r, n):
    return list(family.member_semigroup(spec(r), n).pf)


def P(r, n):
    return list(family.p_profile(spec(r), n).P)


def true_P(r, n):
    """P_n from brute-force PF and a direct Apery search."""
    s = spec(r)
    gens = (n,) + tuple(n + x for x in s.r)
    return sorted(oracle.brute_apery_rep(s.S, f, n) for f in oracle.brute_pf(gens))


def test_01_regression_corpus():
    with criterion(1, "published regression corpus", 5):
        assert pf((2, 6, 7), 88) == [281, 1141, 1145, 1237]
        assert P((2, 6, 7), 88) == [17, 85, 89, 93]
        assert P((2, 6, 7), 95) == [17, 92, 96, 100]
        assert pf((2, 6, 7), 95) == [302, 1327, 1331, 1430]
        assert pf((8, 12, 14), 449) == [29171, 29636, 30101]
        assert P((8, 12, 14), 449) == [884, 900, 916]
        assert P((8, 12, 14), 463) == [912, 928, 944]
        assert pf((8, 12, 14), 463) == [31007, 31486, 31965]

        s = spec((2, 7, 11))
        table = {19: (5, 819, 863), 12: (6, 1012, 1067), 191: (19, 3791, 4211),
                 205: (19, 3805, 4225), 195: (20, 3995, 4426), 199: (20, 3999, 4430),
                 203: (20, 4003, 4434)}
        prof = family.p_profile(s, 200)
        assert pf((2, 7, 11), 200) == sorted(v[1] for v in table.values())
        assert pf((2, 7, 11), 211) == sorted(v[2] for v in table.values())
        assert [i for i, _ in prof.p_prime] == [12, 19]
        assert [i for i, _ in prof.p_double] == [191, 195, 199, 203, 205]
        for i, (m, f200, f211) in table.items():
            assert prof.m_of(i) == m
            assert f200 == i + (m - 1) * 200
            assert family.phi(s, 200, f200) == f211

        assert core.build_semigroup([2, 7]).frobenius == 5
        assert core.make_submonoid([8, 12, 14]).frobenius == 18
        assert core.build_semigroup([1]).frobenius == -1


def test_02_wrong_bijection_divergence():
    with criterion(2, "wrong-bijection divergence", 1):
        s = spec((2, 6, 7))
        wrong = sorted(family.psi_wrong(s, 88, i) for i in P((2, 6, 7), 88))
        right = sorted(family.psi(s, 88, i) for i in P((2, 6, 7), 88))
        assert wrong == [17, 85, 96, 100]
        assert right == [17, 92, 96, 100] == true_P((2, 6, 7), 95)
        assert sorted(set(right) ^ set(wrong)) == [85, 92]

        s = spec((8, 12, 14))
        wrong = sorted(family.psi_wrong(s, 449, i) for i in P((8, 12, 14), 449))
        right = sorted(family.psi(s, 449, i) for i in P((8, 12, 14), 449))
        assert wrong == [884, 914, 930]
        assert right == [912, 928, 944] == true_P((8, 12, 14), 463)
        assert not set(wrong) & set(right)


def test_03_closed_forms_vs_oracle():
    with criterion(3, "closed forms vs brute force, 20 random specs", 600):
        specs = oracle.random_specs(2024, 20, r_k_max=10, k_range=(2, 4))
        assert {s.k for s in specs} <= {2, 3, 4} and max(s.rk for s in specs) <= 10
        checked, bad = 0, []
        for s in specs:
            ns = oracle.valid_ns(s, s.N0, 2) + oracle.valid_ns(s, s.rk4, 2)
            for n in ns:
                reps = oracle.brute_shift_check(s, n, 3)
                if n < s.rk4:
                    reps += oracle.brute_threshold_check(s, n, 3)
                subjects = {r.subject for r in reps}
                assert {"phi_lambda", "m_shift", "frobenius_closed_form",
                        "reduced_type_formula"} <= subjects
                checked += len(reps)
                bad += [r.to_dict() for r in reps if not r.match]
        print(f"    {checked} comparisons, {len(bad)} mismatches")
        assert bad == []


def test_04_ng_transport():
    with criterion(4, "nearly Gorenstein transport for (2,3,5) from n=40", 5):
        s = spec((2, 3, 5))
        assert family.bound_N(s, 40).N == 36
        for lam in range(5):
            a, b = 361 + 85 * lam + 5 * lam**2, 359 + 85 * lam + 5 * lam**2
            vec = family.ng_transport(s, 40, lam)
            assert vec == (a, b, a, b)
            cert = core.ng_certificate(family.member_semigroup(s, 40 + 5 * lam))
            assert cert.nearly_gorenstein
            assert all(v in c for v, c in zip(vec, cert.per_generator_candidates))


def test_05_almost_symmetric_family():
    with criterion(5, "almost symmetric family (1,3,4) from n=10", 5):
        s = spec((1, 3, 4))
        for lam in range(7):
            H = family.member_semigroup(s, 10 + 4 * lam)
            assert list(H.pf) == [12 + 4 * lam, 17 + 18 * lam + 4 * lam**2,
                                  29 + 22 * lam + 4 * lam**2]
            assert core.is_almost_symmetric(H) and H.type == 3


def test_06_even_type_exclusion():
    with criterion(6, "no almost symmetric member of even type above rk^4", 300):
        specs = oracle.random_specs(606, 10, r_k_max=8)
        scanned = 0
        for s in specs:
            for n in oracle.valid_ns(s, s.rk4 - 1, 5):
                assert family.even_type_exclusion(s, n)
                H = family.member_semigroup(s, n)
                assert not (core.is_almost_symmetric(H) and H.type % 2 == 0)
                scanned += 1
        assert scanned == 50


def test_07_residue_growth():
    with criterion(7, "residue growth", 30):
        s = spec((2, 3, 7))
        for lam in range(6):
            n = 63 + 7 * lam
            tr = core.trace(family.member_semigroup(s, n))
            m = n + 7
            assert tr.residue == lam + 9
            assert tr.holes == tuple(j * m for j in range(lam + 9))
        scan = family.residue_scan(spec((2, 6, 11)), 46, range(4))
        assert family.member_semigroup(spec((2, 6, 11)), 46).generators == (46, 48, 52, 57)
        assert [r for _, _, r in scan.rows] == [8, 9, 10, 11]


def test_08_canonical_reduction_not_ng():
    with criterion(8, "canonical reduction without nearly Gorenstein, (2,3,4) n=26", 5):
        s = spec((2, 3, 4))
        H = family.member_semigroup(s, 26)
        assert H.generators == (26, 28, 29, 30)
        assert core.has_canonical_reduction(H)
        assert not core.ng_certificate(H).nearly_gorenstein
        assert family.bound_N(s, 26).N == 25
        for lam in range(5):
            assert core.has_canonical_reduction(family.member_semigroup(s, 26 + 4 * lam))


def test_09_reduced_type():
    with criterion(9, "reduced type of <14643,14645,14650,14654>", 30):
        s = spec((2, 7, 11))
        H = family.member_semigroup(s, 14643)
        assert H.generators == (14643, 14645, 14650, 14654)
        formula = family.reduced_type_formula(s, 14643, base=200)
        F = H.frobenius
        direct = sum(1 for f in H.pf if F - 14643 <= f <= F)
        assert formula == direct == 4
        assert core.reduced_type(H) == 4


def test_10_bound_sanity():
    with criterion(10, "bound N below rk^4 and shift invariant, 50 random specs", 60):
        for s in oracle.random_specs(1010, 50, r_k_max=12):
            b = family.bound_N(s)
            assert b.N < s.rk4
            assert family.bound_at(s, b.n_star + s.rk).N == b.N


def test_11_sylvester():
    with criterion(11, "Frobenius number of two generators", 1):
        for a in range(2, 30):
            for b in range(a + 1, 31):
                if gcd(a, b) == 1:
                    assert core.build_semigroup([a, b]).frobenius == a * b - a - b


@pytest.fixture(autouse=True)
def _quiet_threshold_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ThresholdWarning)
        yield


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
