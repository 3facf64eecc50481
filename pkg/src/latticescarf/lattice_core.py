"""Pointed integer lattices, degree classes, and the divisibility order.

A lattice here is a subgroup L of Z^n given by a basis of independent
integer rows.  Pointed means L meets the nonnegative orthant only in 0;
exactly then every congruence class b in Z^n/L contains finitely many
nonnegative vectors (the fiber of b), and everything downstream -- Betti
scans, Scarf posets -- makes sense.
"""

from math import gcd

from .linalg import (
    canonical_rep,
    fm_eliminate,
    integer_kernel,
    rational_point,
    row_hermite,
)


class NotPointedError(ValueError):
    """The lattice contains a nonzero nonnegative vector."""


class SemigroupMatrix:
    """Integer matrix whose columns generate the grading semigroup.

    Rows are degree coordinates, columns correspond to variables.  Columns
    must be nonzero (a zero column would make the induced lattice contain a
    unit vector, hence not pointed).
    """

    def __init__(self, rows):
        rows = tuple(tuple(x for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("semigroup matrix must be nonempty")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("semigroup matrix rows have unequal lengths")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("semigroup matrix entries must be integers")
        for j in range(n):
            if not any(r[j] for r in rows):
                raise ValueError("zero generator: semigroup column %d is zero" % j)
        self.rows = rows
        self.d = len(rows)
        self.n = n

    def degree_of(self, u):
        """Image A*u of an exponent vector."""
        return tuple(sum(r[j] * u[j] for j in range(self.n)) for r in self.rows)

    def column_sums(self):
        return tuple(sum(r[j] for r in self.rows) for j in range(self.n))

    def __repr__(self):
        return "SemigroupMatrix(%r)" % (self.rows,)


class LatticeBasis:
    """A pointed lattice L in Z^n, stored as an independent row basis.

    Construction verifies independence over Q and (unless check=False)
    pointedness; a Hermite form of the basis is kept for coset reduction,
    and enumerated fibers are cached per congruence class.
    """

    def __init__(self, rows, n=None, check=True):
        rows = tuple(tuple(x for x in r) for r in rows)
        if rows:
            if n is None:
                n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("lattice rows have unequal lengths")
        elif n is None:
            raise ValueError("ambient dimension required for the zero lattice")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("lattice entries must be integers")
        H, U, pivots = row_hermite(rows, n)
        if len(pivots) != len(rows):
            raise ValueError("lattice rows are linearly dependent")
        self.rows = rows
        self.n = n
        self.r = len(rows)
        self._hnf = H
        self._pivots = pivots
        self._fiber_cache = {}
        self._functional = None
        if check and not _cone_trivial(rows, n):
            raise NotPointedError("lattice contains a nonzero nonnegative vector")

    def canonical_key(self, v):
        """Canonical coset representative of v; equal iff congruent mod L."""
        if len(v) != self.n:
            raise ValueError("vector has wrong dimension")
        return canonical_rep(v, self._hnf, self._pivots)

    def __repr__(self):
        return "LatticeBasis(%r, n=%d)" % (self.rows, self.n)


def _cone_trivial(rows, n):
    """True iff {z : z*rows >= 0} = {0}, i.e. span(rows) meets N^n in 0 only.

    The cone is a union of rays; it is nontrivial iff some slice z_i = +-1
    admits a rational solution of z*rows >= 0.
    """
    r = len(rows)
    if r == 0:
        return True
    base = []
    for j in range(n):
        a = tuple(rows[i][j] for i in range(r))
        base.append((a, 0))
    for i in range(r):
        for s in (1, -1):
            # substitute z_i = s
            rows2 = []
            feas = True
            for a, c in base:
                c2 = c + a[i] * s
                a2 = a[:i] + (0,) + a[i + 1 :]
                rows2.append((a2, c2))
            if _fm_feasible_rows(rows2, r):
                return False
    return True


def _fm_feasible_rows(rows, nvars):
    cur = rows
    for v in range(nvars - 1, -1, -1):
        if any(not any(a) and c < 0 for a, c in cur):
            return False
        cur = fm_eliminate(cur, v)
    return all(c >= 0 for a, c in cur)


def is_pointed(L):
    """Does L meet the nonnegative orthant only in the origin?"""
    return _cone_trivial(L.rows, L.n)


def lattice_from_semigroup(A):
    """Saturated lattice of integer relations among the columns of A.

    Raises NotPointedError when the relation lattice is not pointed (e.g.
    when some column is zero or the semigroup has units).
    """
    K = integer_kernel(A.rows, A.n)
    return LatticeBasis(K, n=A.n)


def contains(L, v):
    """Is v an element of the lattice?"""
    return not any(L.canonical_key(v))


class DegreeClass:
    """A congruence class of Z^n modulo L, held as some representative.

    Equality and hashing go through the canonical coset representative, so
    two classes compare equal iff their representatives are congruent.
    """

    __slots__ = ("lattice", "representative", "_key")

    def __init__(self, lattice, representative):
        self.lattice = lattice
        self.representative = tuple(representative)
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = self.lattice.canonical_key(self.representative)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, DegreeClass):
            return NotImplemented
        if self.lattice is not other.lattice and (
            self.lattice.rows != other.lattice.rows or self.lattice.n != other.lattice.n
        ):
            return False
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "DegreeClass(%r)" % (self.representative,)


def class_of(L, u):
    return DegreeClass(L, u)


def class_eq(b1, b2):
    return b1 == b2


def class_leq(d, b):
    """The divisibility (semigroup) order: d <= b iff b - d has a
    nonnegative representative, i.e. the fiber of b - d is nonempty."""
    from .fibers import enumerate_fiber

    if d.lattice is not b.lattice and d.lattice.rows != b.lattice.rows:
        raise ValueError("classes live over different lattices")
    diff = tuple(x - y for x, y in zip(b.representative, d.representative))
    return len(enumerate_fiber(b.lattice, diff)) > 0


def positive_functional(L):
    """A strictly positive integer w with w orthogonal to L.

    Exists precisely because L is pointed; w induces the grading functional
    sigma(u) = w . u, constant on fibers and >= 1 on every unit vector, so
    degree scans bounded by sigma terminate.
    """
    if L._functional is not None:
        return L._functional
    n = L.n
    if L.r == 0:
        w = (1,) * n
        L._functional = w
        return w
    K = integer_kernel(L.rows, n)  # rows span {w : L w = 0 componentwise}
    k = len(K)
    rows = []
    for j in range(n):
        a = tuple(K[i][j] for i in range(k))
        rows.append((a, -1))  # sum_i c_i K[i][j] >= 1
    pt = rational_point(rows, k)
    if pt is None:
        raise NotPointedError("no strictly positive functional exists")
    denom = 1
    for f in pt:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    c = [int(f * denom) for f in pt]
    w = tuple(sum(c[i] * K[i][j] for i in range(k)) for j in range(n))
    g = 0
    for x in w:
        g = gcd(g, x)
    w = tuple(x // g for x in w)
    assert all(x >= 1 for x in w)
    L._functional = w
    return w
