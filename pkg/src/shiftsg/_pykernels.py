"""Pure-Python versions of the hot loops.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference side of the backend-equivalence tests. Every function here has the
same signature and semantics as its counterpart in ``_ckernels.pyx``.
"""

from math import gcd

# Sentinel for "class not reached yet"; large enough that adding any
# generator cannot wrap a signed 64-bit integer.
INF = 1 << 62


def round_robin_pass(w, a):
    """Relax the residue weights ``w`` (an int64 array, modulus ``len(w)``)
    with generator ``a``, in place.

    Each residue cycle r, r+a, r+2a, ... is walked once starting from its
    current minimum, which is enough to propagate every improvement.
    """
    m = len(w)
    vals = w.tolist()
    step = a % m
    g = gcd(step, m) if step else m
    cycle = m // g
    for p in range(g):
        best = p
        r = p
        for _ in range(cycle):
            if vals[r] < vals[best]:
                best = r
            r += step
            if r >= m:
                r -= m
        if vals[best] >= INF:
            continue
        r = best
        for _ in range(cycle - 1):
            nxt = r + step
            if nxt >= m:
                nxt -= m
            cand = vals[r] + a
            if cand < vals[nxt]:
                vals[nxt] = cand
            r = nxt
    w[:] = vals


def min_lengths(coins, upto):
    """Minimum number of coins summing to each x in [0, upto]; -1 if none."""
    best = [-1] * (upto + 1)
    best[0] = 0
    coins = sorted(coins)
    for x in range(1, upto + 1):
        lo = -1
        for c in coins:
            if c > x:
                break
            prev = best[x - c]
            if prev >= 0 and (lo < 0 or prev + 1 < lo):
                lo = prev + 1
        best[x] = lo
    return best


def maximal_classes(w, gens):
    """Residues c whose Apery element w[c] is maximal w.r.t. <=_H.

    w[c] is maximal iff w[c] + g leaves the Apery set for every generator g,
    i.e. w[(c + g) % m] != w[c] + g.
    """
    m = len(w)
    vals = w.tolist()
    out = []
    for c in range(m):
        x = vals[c]
        if x < 0:
            continue
        for g in gens:
            if vals[(c + g) % m] == x + g:
                break
        else:
            out.append(c)
    return out


def trace_holes(w, pf, frobenius):
    """Members h in [0, frobenius] for which no f* in ``pf`` has
    h + f* - f in H for every f in ``pf``."""
    m = len(w)
    vals = w.tolist()

    def member(x):
        if x < 0:
            return False
        e = vals[x % m]
        return 0 <= e <= x

    holes = []
    for h in range(frobenius + 1):
        if not member(h):
            continue
        for fs in pf:
            base = h + fs
            if all(member(base - f) for f in pf):
                break
        else:
            holes.append(h)
    return holes
