"""Fiber enumeration and monomial arithmetic on exponent vectors.

A monomial is an exponent tuple u in N^n.  The fiber of a degree class b
is the finite set of monomials congruent to a representative of b modulo
the lattice; monomials are kept in a fixed canonical order (descending
lexicographic, first coordinate most significant) so that every structure
built on fibers is deterministic.
"""

import itertools

from .lattice_core import class_of
from .linalg import integer_points

# Exponent vectors are plain tuples of nonnegative ints.
ExponentVector = tuple


def canonical_order(monomials):
    """Descending lexicographic order, first coordinate most significant."""
    return tuple(sorted(monomials, reverse=True))


class Fiber:
    """The set of monomials in one degree class, canonically ordered."""

    __slots__ = ("degree", "members")

    def __init__(self, degree, members):
        self.degree = degree
        self.members = canonical_order(members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m):
        return tuple(m) in self.members

    def __eq__(self, other):
        return (
            isinstance(other, Fiber)
            and self.members == other.members
            and self.degree == other.degree
        )

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "Fiber(%r, %d monomials)" % (self.degree.representative, len(self))


def enumerate_fiber(L, u0):
    """All monomials congruent to u0 mod L, as a Fiber.

    u0 may have negative entries (any class representative).  Results are
    cached on the lattice, keyed by the canonical coset representative.
    """
    u0 = tuple(u0)
    key = L.canonical_key(u0)
    cached = L._fiber_cache.get(key)
    if cached is not None:
        return cached
    n, r = L.n, L.r
    if r == 0:
        members = [u0] if all(x >= 0 for x in u0) else []
    else:
        # u = u0 + z * B >= 0, coordinatewise, over z in Z^r
        rows = []
        for j in range(n):
            a = tuple(L.rows[i][j] for i in range(r))
            rows.append((a, u0[j]))
        members = []
        for z in integer_points(rows, r):
            u = tuple(u0[j] + sum(z[i] * L.rows[i][j] for i in range(r)) for j in range(n))
            members.append(u)
    fib = Fiber(class_of(L, u0), members)
    for m in fib.members:
        assert all(x >= 0 for x in m)
    L._fiber_cache[key] = fib
    return fib


def enumerate_fiber_box_oracle(L, u0, box_bound):
    """Brute-force oracle: scan the integer box [0, box_bound]^n for
    vectors congruent to u0.  Exponential; for cross-checks only."""
    u0 = tuple(u0)
    key = L.canonical_key(u0)
    members = [
        u
        for u in itertools.product(range(box_bound + 1), repeat=L.n)
        if L.canonical_key(u) == key
    ]
    return Fiber(class_of(L, u0), members)


def gcd_of(monomials):
    """Componentwise min -- the gcd of the monomials as an exponent vector."""
    ms = list(monomials)
    if not ms:
        raise ValueError("gcd of an empty set of monomials")
    return tuple(min(col) for col in zip(*ms))


def reduce_by_gcd(monomials):
    """Divide every monomial by the common gcd; the result has gcd 1."""
    ms = list(monomials)
    g = gcd_of(ms)
    return tuple(tuple(x - y for x, y in zip(m, g)) for m in canonical_order(ms))


def monomial_str(u, variables):
    """Render an exponent vector, e.g. (2,0,1) -> 'a^2*c'."""
    parts = []
    for x, v in zip(u, variables):
        if x == 1:
            parts.append(v)
        elif x > 1:
            parts.append("%s^%d" % (v, x))
    return "*".join(parts) if parts else "1"
