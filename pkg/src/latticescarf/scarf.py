"""Basic fiber components and the generalized Scarf chain complexes.

The objects here live over a pointed lattice L in Z^n:

* finite subsets J of L with the "strictly shrinking maximum" property,
  their monomial sets C_J = {x^(bmax(J) - a) : a in J},
* basic components of fibers (the C_J that are gcd-free, minimally so,
  and full connected components of the gcd complex),
* the poset of basic components under divisibility translation, and
* the chain complexes built on them: the generalized algebraic Scarf
  complex, its algebraic Scarf subcomplex (components that are whole
  fibers), and the strongly algebraic subcomplex (cut down by Betti
  minimality and multiplicity one).

Monomials inside one structure are always kept in descending
lexicographic order (first coordinate most significant); the boundary map
signs are read off positions in that order.
"""

from .fibers import canonical_order, enumerate_fiber, gcd_of, reduce_by_gcd
from .homology import (
    connected_components,
    gcd_complex,
    minimal_betti_degrees,
    scan_degree_classes,
)
from .lattice_core import class_of, contains, positive_functional


class LatticeSubset:
    """A finite set of lattice elements, kept in a fixed order."""

    __slots__ = ("lattice", "members")

    def __init__(self, lattice, members):
        ms = canonical_order(set(tuple(m) for m in members))
        for m in ms:
            if not contains(lattice, m):
                raise ValueError("%r is not a lattice element" % (m,))
        self.lattice = lattice
        self.members = ms

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        return (
            isinstance(other, LatticeSubset)
            and self.members == other.members
            and self.lattice.rows == other.lattice.rows
        )

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "LatticeSubset(%r)" % (self.members,)


def bmax(J):
    """Componentwise maximum of the members; None for the empty set
    (a formal bottom below every vector)."""
    ms = J.members if isinstance(J, LatticeSubset) else tuple(tuple(m) for m in J)
    if not ms:
        return None
    return tuple(max(col) for col in zip(*ms))


def vsupp(K, J):
    """Variables where some member of J sits strictly below bmax(K):
    {i : bmax(K)_i - a_i > 0 for some a in J}."""
    top = bmax(K)
    out = set()
    for a in J:
        for i, x in enumerate(a):
            if top[i] - x > 0:
                out.add(i)
    return frozenset(out)


def monomials_of(J):
    """C_J = {x^(bmax(J) - a) : a in J}, in canonical order."""
    ms = J.members if isinstance(J, LatticeSubset) else tuple(tuple(m) for m in J)
    top = bmax(ms)
    if top is None:
        return ()
    return canonical_order(tuple(x - y for x, y in zip(top, a)) for a in ms)


def in_generalized_scarf(J):
    """Membership of J in the generalized Scarf set of its lattice.

    Three conditions: every proper subset has a strictly smaller
    componentwise maximum; and any other lattice element below bmax(J)
    is ruled out entirely (|J| <= 2) or must give a monomial whose
    support avoids every variable seen in C_J (|J| > 2).
    """
    if not isinstance(J, LatticeSubset):
        raise TypeError("in_generalized_scarf expects a LatticeSubset")
    ms = J.members
    if not ms:
        return True
    top = bmax(ms)
    # dropping any single element must strictly lower the maximum
    for k in range(len(ms)):
        rest = ms[:k] + ms[k + 1 :]
        if rest and bmax(rest) == top:
            return False
    # other lattice elements a <= top correspond to extra fiber monomials
    L = J.lattice
    fib = enumerate_fiber(L, top)
    cj = set(monomials_of(J))
    extra = [u for u in fib if u not in cj]
    if len(ms) <= 2:
        return not extra
    vs = vsupp(J, J)
    for u in extra:
        if any(u[i] > 0 for i in vs):
            return False
    return True


class BasicComponent:
    """A basic component of a fiber: its degree class, its monomials
    (canonical order), and a witness subset J with C_J equal to it."""

    __slots__ = ("degree", "monomials", "witness")

    def __init__(self, degree, monomials, witness):
        self.degree = degree
        self.monomials = canonical_order(monomials)
        self.witness = witness

    @property
    def cardinality(self):
        return len(self.monomials)

    def __eq__(self, other):
        return (
            isinstance(other, BasicComponent)
            and self.monomials == other.monomials
            and self.degree == other.degree
        )

    def __hash__(self):
        return hash((self.degree.key, self.monomials))

    def __repr__(self):
        return "BasicComponent(%r)" % (self.monomials,)


def _recover_witness(L, degree, monomials):
    """J = {u0 - u : u in G} for the first monomial u0; then bmax(J) = u0
    (the gcd of G is 1) and C_J = G."""
    u0 = monomials[0]
    J = LatticeSubset(L, (tuple(a - b for a, b in zip(u0, u)) for u in monomials))
    return BasicComponent(degree, monomials, J)


def basic_components(L, b):
    """All basic components of the fiber of b.

    A subset G of the fiber qualifies when gcd(G) = 1, every proper
    puncture G minus a monomial has a nontrivial gcd, and -- whenever the
    fiber has more than two monomials -- G is a connected component of
    the gcd complex.  The zero class contributes the single component
    {1}.  Every returned component is cross-checked through the scarf
    membership test of its recovered witness.
    """
    if not isinstance(b, (tuple, list)):
        b = b.representative
    degree = class_of(L, b)
    fib = enumerate_fiber(L, b)
    if len(fib) == 0:
        return []
    if len(fib) == 1:
        m = fib.members[0]
        if any(m):
            return []  # single monomial != 1: gcd is never 1
        return [BasicComponent(degree, fib.members, LatticeSubset(L, ((0,) * L.n,)))]
    zero = (0,) * L.n
    candidates = []
    if len(fib) == 2:
        if gcd_of(fib.members) == zero:
            candidates.append(fib.members)
    else:
        for comp in connected_components(gcd_complex(fib)):
            if len(comp) < 2:
                continue
            if gcd_of(comp) != zero:
                continue
            if any(
                gcd_of(comp[:k] + comp[k + 1 :]) == zero for k in range(len(comp))
            ):
                continue
            candidates.append(comp)
    out = []
    for G in candidates:
        c = _recover_witness(L, degree, G)
        assert in_generalized_scarf(c.witness), "recovered witness failed membership"
        out.append(c)
    return out


def is_basic_fiber(L, b):
    """Is the whole fiber of b a single basic component?"""
    if not isinstance(b, (tuple, list)):
        b = b.representative
    fib = enumerate_fiber(L, b)
    comps = basic_components(L, b)
    return len(comps) == 1 and comps[0].monomials == fib.members


class ScarfPoset:
    """Basic components found within a scan bound, with the divisibility
    order: C' <= C iff some monomial translate x^r * C' lands inside C."""

    def __init__(self, lattice, elements, leq, bound, functional):
        self.lattice = lattice
        self.elements = tuple(elements)
        self.leq = frozenset(leq)  # strict pairs (i, j): element i < element j
        self.bound = bound
        self.functional = functional

    def by_cardinality(self, k):
        return tuple(c for c in self.elements if c.cardinality == k)

    def max_cardinality(self):
        return max((c.cardinality for c in self.elements), default=0)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "ScarfPoset(%d elements, bound=%r)" % (len(self.elements), self.bound)


def _translate_into(small, big):
    """Is there r >= 0 with r + small a subset of big (as monomial sets)?"""
    anchor = small[0]
    bigset = set(big)
    for m in big:
        r = tuple(a - b for a, b in zip(m, anchor))
        if any(x < 0 for x in r):
            continue
        if all(tuple(a + b for a, b in zip(r, u)) in bigset for u in small):
            return True
    return False


def enumerate_scarf_poset(L, bound, functional=None):
    """All basic components whose degree lies within the scan bound,
    ordered deterministically, together with the translation order."""
    w = tuple(functional) if functional is not None else positive_functional(L)
    elements = []
    for b, s in scan_degree_classes(L, bound, w):
        for c in basic_components(L, b.representative):
            elements.append((s, c))
    elements.sort(key=lambda t: (t[0], t[1].degree.key, t[1].monomials))
    comps = [c for _, c in elements]
    leq = set()
    for i, ci in enumerate(comps):
        for j, cj in enumerate(comps):
            if i == j or ci.cardinality > cj.cardinality:
                continue
            if ci == cj:
                continue
            if _translate_into(ci.monomials, cj.monomials):
                leq.add((i, j))
    for i, j in leq:
        assert (j, i) not in leq, "translation order is not antisymmetric"
    return ScarfPoset(L, comps, leq, bound, w)


class AlgebraicComplex:
    """A chain complex of free modules with monomial-times-sign entries.

    basis[i] is the tuple of basic components in homological degree i
    (components of cardinality i+1); differentials[i] maps (row, col) to
    a tuple of (sign, exponent) terms sending basis[i][col] into
    basis[i-1][row].
    """

    def __init__(self, lattice, basis, differentials):
        self.lattice = lattice
        self.basis = tuple(tuple(bs) for bs in basis)
        self.differentials = tuple(dict(d) for d in differentials)

    def ranks(self):
        return tuple(len(bs) for bs in self.basis)

    def top_degree(self):
        return len(self.basis) - 1

    def column_terms(self, i, col):
        """The differential of basis[i][col], as (row, sign, exponent)."""
        out = []
        for (r, c), terms in self.differentials[i].items():
            if c == col:
                for s, e in terms:
                    out.append((r, s, e))
        return sorted(out)

    def __repr__(self):
        return "AlgebraicComplex(ranks=%r)" % (self.ranks(),)


def build_generalized_scarf_complex(poset):
    """The chain complex on all poset elements: E_C sits in homological
    degree |C| - 1, and

        theta(E_C) = sum over m in C of
            (-1)^(position of m in C) * gcd(C minus m) * E_[C minus m]

    with [G] the gcd-free reduction of G, positions 1-based in the
    canonical descending order (so the first position gets +)."""
    L = poset.lattice
    if not poset.elements:
        return AlgebraicComplex(L, (), ())
    top = poset.max_cardinality() - 1
    basis = [poset.by_cardinality(i + 1) for i in range(top + 1)]
    index = [
        {(c.degree.key, c.monomials): k for k, c in enumerate(bs)} for bs in basis
    ]
    diffs = [dict() for _ in range(top + 1)]  # diffs[0] stays empty
    for i in range(1, top + 1):
        d = {}
        for col, c in enumerate(basis[i]):
            ms = c.monomials
            for pos, m in enumerate(ms):
                rest = ms[:pos] + ms[pos + 1 :]
                g = gcd_of(rest)
                target = reduce_by_gcd(rest)
                tkey = (class_of(L, target[0]).key, target)
                row = index[i - 1].get(tkey)
                if row is None:
                    raise ValueError(
                        "differential target %r missing below degree %r; "
                        "the scan bound does not close the complex" % (target, c)
                    )
                sign = 1 if pos % 2 == 0 else -1
                d.setdefault((row, col), []).append((sign, g))
        diffs[i] = {k: tuple(v) for k, v in d.items()}
    return AlgebraicComplex(L, basis, diffs)


def verify_zero_composition(X):
    """Check theta_i . theta_{i+1} = 0 for every consecutive pair."""
    for i in range(2, X.top_degree() + 1):
        lo, hi = X.differentials[i - 1], X.differentials[i]
        acc = {}
        for (mid, col), terms2 in hi.items():
            for (row, mid2), terms1 in lo.items():
                if mid2 != mid:
                    continue
                for s2, e2 in terms2:
                    for s1, e1 in terms1:
                        e = tuple(a + b for a, b in zip(e1, e2))
                        k = (row, col, e)
                        acc[k] = acc.get(k, 0) + s1 * s2
        if any(v for v in acc.values()):
            return False
    return True


def _restrict(X, keep):
    """Subcomplex on the kept column indices (keep[i] a sorted list).

    Every differential entry leaving a kept column must land in a kept
    row -- the callers only restrict to families closed under theta."""
    while keep and not keep[-1]:
        keep = keep[:-1]
    basis = []
    remap = []
    for i in range(len(keep)):
        basis.append(tuple(X.basis[i][k] for k in keep[i]))
        remap.append({k: t for t, k in enumerate(keep[i])})
    diffs = [dict() for _ in range(len(keep))]
    for i in range(1, len(keep)):
        d = {}
        for (r, c), terms in X.differentials[i].items():
            if c not in remap[i]:
                continue
            if r not in remap[i - 1]:
                raise ValueError("restriction is not closed under the differential")
            d[(remap[i - 1][r], remap[i][c])] = terms
        diffs[i] = d
    return AlgebraicComplex(X.lattice, basis, diffs)


def algebraic_scarf_subcomplex(X):
    """Restrict to the components that are entire fibers."""
    L = X.lattice
    keep = []
    for i, bs in enumerate(X.basis):
        keep.append(
            [
                k
                for k, c in enumerate(bs)
                if c.monomials == enumerate_fiber(L, c.degree.representative).members
            ]
        )
    return _restrict(X, keep)


def strongly_algebraic_subcomplex(X, T, mode="strict"):
    """Restrict to components at minimal Betti degrees of multiplicity one.

    Both modes require beta_{i,b(C)} = 1 for E_C in homological degree
    i = |C| - 1 >= 1.  They differ in the minimality test on b(C):

    mode="strict" demands that b(C) be minimal (in the divisibility
    order, literally applied) among the scanned j-Betti degrees for
    every index j at which b(C) carries a nonzero Betti number -- in
    particular at j = i.
    mode="paper-example" is the relaxation under which every i-Betti
    degree strictly below b(C) must also have beta = 1; it retains
    everything strict keeps and possibly more.

    Degree 0 (the unit component) is always kept.  Components that are
    entire fibers satisfy both modes (their Betti number sits alone at
    its own index with multiplicity one, at a minimal degree), so both
    results contain the algebraic Scarf subcomplex and are closed under
    the differential.
    """
    if mode not in ("strict", "paper-example"):
        raise ValueError("mode must be 'strict' or 'paper-example'")
    from .lattice_core import class_leq

    minimal = {}

    def minimal_at(i):
        if i not in minimal:
            minimal[i] = set(minimal_betti_degrees(T, i))
        return minimal[i]

    indices = T.homological_degrees()
    keep = [list(range(len(X.basis[0]))) if X.basis else []]
    for i in range(1, len(X.basis)):
        kept = []
        for k, c in enumerate(X.basis[i]):
            b = c.degree
            if T.get(i, b) != 1:
                continue
            if mode == "strict":
                if any(T.get(j, b) and b not in minimal_at(j) for j in indices):
                    continue
            else:
                below = [
                    d
                    for d in T.degrees(i)
                    if d != b and class_leq(d, b) and T.get(i, d) != 1
                ]
                if below:
                    continue
            kept.append(k)
        keep.append(kept)
    return _restrict(X, keep)


def indispensable_binomials(L, bound, functional=None):
    """Binomials whose degree is a minimal 1-Betti degree with a two-
    monomial gcd-free fiber: x^m1 - x^m2 written as the ordered pair
    (m1, m2), m1 the lexicographically larger exponent."""
    degs = _one_betti_classes(L, bound, functional)
    minimal = _minimal_classes([b for b, _ in degs])
    out = []
    for b, comps in degs:
        if b not in minimal:
            continue
        fib = enumerate_fiber(L, b.representative)
        if len(fib) == 2:
            m1, m2 = fib.members
            out.append((b, (m1, m2)))
    return out


def minimal_generators(L, bound, functional=None):
    """A minimal generating set for the lattice ideal, within the bound.

    For each 1-Betti degree the gcd complex of the fiber splits into
    k >= 2 connected components; one representative monomial per
    component, connected to the first component's representative, gives
    k - 1 binomials, and all of them together generate minimally."""
    degs = _one_betti_classes(L, bound, functional)
    out = []
    for b, comps in degs:
        base = comps[0][0]
        for comp in comps[1:]:
            m = comp[0]
            pair = (m, base) if m > base else (base, m)
            out.append((b, pair))
    return out


def _one_betti_classes(L, bound, functional=None):
    """Scanned classes with disconnected gcd complex, with components."""
    w = tuple(functional) if functional is not None else positive_functional(L)
    out = []
    for b, _s in scan_degree_classes(L, bound, w):
        fib = enumerate_fiber(L, b.representative)
        if len(fib) < 2:
            continue
        comps = connected_components(gcd_complex(fib))
        if len(comps) >= 2:
            out.append((b, comps))
    return out


def _minimal_classes(classes):
    from .lattice_core import class_leq

    out = set()
    for b in classes:
        if not any(d != b and class_leq(d, b) for d in classes):
            out.add(b)
    return out
