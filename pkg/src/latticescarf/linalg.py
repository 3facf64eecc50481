"""Exact integer linear algebra used throughout the package.

Everything works on plain Python ints (arbitrary precision) or Fractions;
no floating point anywhere.  Matrices are sequences of row tuples.

The pieces:

* row-style Hermite normal form with transform (kernels, coset reduction,
  integer linear solves),
* Fourier-Motzkin elimination over the integers/rationals (bounded lattice
  point enumeration, cone feasibility, positive functionals),
* fraction-free (Bareiss) and mod-p rank for homology.
"""

from fractions import Fraction
from math import gcd


def _ceil_div(p, q):
    # q > 0
    return -((-p) // q)


def row_hermite(rows, ncols):
    """Row Hermite normal form.

    Returns (H, U, pivots) with U unimodular, H = U * rows, the nonzero
    rows of H in echelon position with positive pivots, entries above each
    pivot reduced into [0, pivot), and pivots[k] = pivot column of row k.
    Zero rows of H (dependent input rows) sink to the bottom.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    k = 0
    pivots = []
    for col in range(ncols):
        while True:
            nz = [i for i in range(k, nr) if m[i][col]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: abs(m[i][col]))
            for i in nz:
                if i == piv:
                    continue
                q = m[i][col] // m[piv][col]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[piv])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[piv])]
        nz = [i for i in range(k, nr) if m[i][col]]
        if not nz:
            continue
        i = nz[0]
        if i != k:
            m[i], m[k] = m[k], m[i]
            u[i], u[k] = u[k], u[i]
        if m[k][col] < 0:
            m[k] = [-a for a in m[k]]
            u[k] = [-a for a in u[k]]
        p = m[k][col]
        for a in range(k):
            q = m[a][col] // p
            if q:
                m[a] = [x - q * y for x, y in zip(m[a], m[k])]
                u[a] = [x - q * y for x, y in zip(u[a], u[k])]
        pivots.append(col)
        k += 1
    H = tuple(tuple(r) for r in m)
    U = tuple(tuple(r) for r in u)
    return H, U, tuple(pivots)


def integer_kernel(rows, ncols):
    """Basis of {u in Z^ncols : M u = 0} for the matrix with the given rows.

    The returned rows span the *saturated* kernel lattice (every integer
    solution is an integer combination of them).
    """
    at = [tuple(r[j] for r in rows) for j in range(ncols)]  # transpose
    d = len(rows)
    H, U, pivots = row_hermite(at, d)
    rank = len(pivots)
    return tuple(U[i] for i in range(rank, ncols))


def solve_combination(rows, target):
    """Integer coefficients u with sum(u_i * rows_i) = target, or None."""
    if not rows:
        return () if not any(target) else None
    H, U, pivots = row_hermite(rows, len(target))
    t = list(target)
    y = [0] * len(rows)
    for k, col in enumerate(pivots):
        p = H[k][col]
        if t[col] % p:
            return None
        q = t[col] // p
        y[k] = q
        if q:
            t = [a - q * b for a, b in zip(t, H[k])]
    if any(t):
        return None
    out = [0] * len(rows)
    for k in range(len(pivots)):
        if y[k]:
            out = [a + y[k] * b for a, b in zip(out, U[k])]
    return tuple(out)


def canonical_rep(v, H, pivots):
    """Reduce v modulo the row span of the Hermite form H.

    Subtracts integer multiples of the pivot rows so that the pivot
    coordinates land in [0, pivot).  Two vectors get the same output iff
    they differ by an integer combination of the rows.
    """
    w = list(v)
    for k, col in enumerate(pivots):
        q = w[col] // H[k][col]
        if q:
            w = [a - q * b for a, b in zip(w, H[k])]
    return tuple(w)


# ---------------------------------------------------------------------------
# Fourier-Motzkin.  A system is a collection of rows (a, c) meaning
# a . z + c >= 0, with a a coefficient tuple over variables z_0..z_{k-1}.
# Eliminating the last variable gives an equivalent system over a prefix;
# projections are exact over the rationals.


def _normalize_row(a, c):
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    g = gcd(g, abs(c))
    if g > 1:
        a = tuple(x // g for x in a)
        c = c // g
    return a, c


def fm_eliminate(rows, v):
    """Project the system onto the variables other than z_v.

    Returns rows whose v-coefficient is zero.  Raises ValueError carrying
    "unbounded" semantics nowhere -- unboundedness shows up later as a
    missing bound in interval queries, which callers treat explicitly.
    """
    pos, neg, rest = [], [], []
    for a, c in rows:
        if a[v] > 0:
            pos.append((a, c))
        elif a[v] < 0:
            neg.append((a, c))
        else:
            rest.append((a, c))
    out = set()
    for a, c in rest:
        a, c = _normalize_row(a, c)
        if any(a) or c < 0:
            out.add((a, c))
    for ap, cp in pos:
        for an, cn in neg:
            mp = -an[v]
            mn = ap[v]
            a = tuple(mp * x + mn * y for x, y in zip(ap, an))
            c = mp * cp + mn * cn
            a, c = _normalize_row(a, c)
            if any(a) or c < 0:
                out.add((a, c))
    return sorted(out)


def fm_feasible(rows, nvars):
    """Rational feasibility of a . z + c >= 0 for all rows."""
    cur = sorted({_normalize_row(a, c) for a, c in rows})
    for v in range(nvars - 1, -1, -1):
        for a, c in cur:
            if not any(a) and c < 0:
                return False
        cur = fm_eliminate(cur, v)
    return all(c >= 0 for a, c in cur)


def _interval(rows, v, prefix):
    """Integer bounds for z_v given fixed prefix z_0..z_{v-1}.

    rows must involve no variable beyond z_v.  Returns (lo, hi) where either
    side may be None (unbounded), or "empty" when a constant row fails.
    """
    lo, hi = None, None
    for a, c in rows:
        s = c + sum(a[i] * prefix[i] for i in range(v))
        av = a[v]
        if av == 0:
            if s < 0:
                return "empty"
        elif av > 0:
            b = _ceil_div(-s, av)
            if lo is None or b > lo:
                lo = b
        else:
            b = s // (-av)
            if hi is None or b < hi:
                hi = b
    return lo, hi


def integer_points(rows, nvars):
    """All integer solutions of a . z + c >= 0, via elimination + descent.

    Raises ValueError if the solution set is unbounded in some direction
    (callers use this only for systems known to be bounded -- fibers of a
    pointed lattice).
    """
    systems = [None] * (nvars + 1)
    systems[nvars] = sorted({_normalize_row(a, c) for a, c in rows})
    for v in range(nvars - 1, 0, -1):
        systems[v] = fm_eliminate(systems[v + 1], v)
    out = []
    prefix = [0] * nvars

    def descend(v):
        iv = _interval(systems[v + 1], v, prefix)
        if iv == "empty":
            return
        lo, hi = iv
        if lo is None or hi is None:
            raise ValueError("unbounded solution set")
        for z in range(lo, hi + 1):
            prefix[v] = z
            if v == nvars - 1:
                out.append(tuple(prefix))
            else:
                descend(v + 1)

    if nvars == 0:
        return [()] if all(c >= 0 for a, c in systems[0]) else []
    descend(0)
    return out


def rational_point(rows, nvars):
    """Some exact rational solution of a . z + c >= 0, or None.

    Chooses interval midpoints on the way down; Fourier-Motzkin projections
    being exact over Q, every prefix admissible at level v extends.
    """
    systems = [None] * (nvars + 1)
    systems[nvars] = sorted({_normalize_row(a, c) for a, c in rows})
    for v in range(nvars - 1, 0, -1):
        systems[v] = fm_eliminate(systems[v + 1], v)
    for a, c in systems[1] if nvars else systems[0]:
        if not any(a) and c < 0:
            return None
    if nvars == 0:
        return ()
    point = []
    for v in range(nvars):
        lo, hi = None, None
        for a, c in systems[v + 1]:
            s = Fraction(c) + sum(Fraction(a[i]) * point[i] for i in range(v))
            av = a[v]
            if av == 0:
                if s < 0:
                    return None  # cannot happen after projection, but be safe
            elif av > 0:
                b = -s / av
                if lo is None or b > lo:
                    lo = b
            else:
                b = s / (-av)
                if hi is None or b < hi:
                    hi = b
        if lo is None and hi is None:
            z = Fraction(0)
        elif lo is None:
            z = min(hi, Fraction(0))
        elif hi is None:
            z = max(lo, Fraction(0))
        else:
            if lo > hi:
                return None
            z = (lo + hi) / 2
        point.append(z)
    return tuple(point)


# ---------------------------------------------------------------------------
# Rank computations for homology.


def rank_rational(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = None
        best = None
        for i in range(rank, nr):
            v = abs(m[i][col])
            if v and (best is None or v < best):
                piv, best = i, v
                if v == 1:
                    break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nr):
            mi = m[i]
            mic = mi[col]
            row = m[rank]
            for j in range(col + 1, nc):
                mi[j] = (mi[j] * p - mic * row[j]) // prev
            mi[col] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def rank_mod_p(rows, p):
    """Rank of an integer matrix over GF(p)."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank
