"""Simplicial complexes attached to fibers, and Betti number scans.

Two complexes are built from a fiber: the gcd complex (vertices = fiber
monomials, faces = subsets with a nontrivial common divisor) and the
support complex (vertices = variables, faces = subsets of monomial
supports).  The gcd complex is covered by the full simplices
V_i = {m : x_i divides m}, and the support complex is the nerve of that
cover, so the two have the same reduced homology; the scan invariant
checks this on every degree it visits.

Multigraded Betti numbers follow the convention

    beta_{i,b} = dim H~_{i-1}(gcd complex of the fiber of b),   i >= 1.
"""

from .fibers import enumerate_fiber
from .lattice_core import class_leq, class_of, positive_functional
from .linalg import rank_mod_p, rank_rational


def _maximal_sets(sets):
    """Distinct sets none of which is contained in another."""
    uniq = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    out = []
    for s in uniq:
        if not any(s < t for t in out):
            out.append(s)
    return out


class SimplicialComplex:
    """An abstract simplicial complex given by vertex labels and facets.

    Facets are sets of indices into vertex_labels.  The faces are exactly
    the downward closure of the facets; a label occurring in no facet
    carries no 0-face (the complex on an empty facet list is {empty set}).
    """

    def __init__(self, vertex_labels, facets):
        self.vertex_labels = tuple(vertex_labels)
        fs = [frozenset(f) for f in facets if f]
        for f in fs:
            for v in f:
                if not 0 <= v < len(self.vertex_labels):
                    raise ValueError("facet vertex %r out of range" % (v,))
        fs = _maximal_sets(fs)
        self.facets = tuple(sorted(fs, key=lambda s: sorted(s)))
        self._faces = None

    def vertices(self):
        """Indices of the vertices that are actual 0-faces."""
        seen = set()
        for f in self.facets:
            seen |= f
        return sorted(seen)

    def faces(self):
        """Downward closure, as {dim: sorted list of index tuples}.

        Materializes every face; meant for the small complexes this
        package builds (homology goes through a collapsed core first).
        """
        if self._faces is None:
            allf = set()
            for f in self.facets:
                _close(tuple(sorted(f)), allf)
            byd = {}
            for f in allf:
                byd.setdefault(len(f) - 1, []).append(f)
            self._faces = {d: sorted(v) for d, v in sorted(byd.items())}
        return self._faces

    def f_vector(self):
        fs = self.faces()
        return tuple(len(fs.get(d, ())) for d in range(0, max(fs, default=-1) + 1))

    def __repr__(self):
        return "SimplicialComplex(%d vertices, %d facets)" % (
            len(self.vertex_labels),
            len(self.facets),
        )


def _close(face, acc):
    if face in acc:
        return
    stack = [face]
    while stack:
        f = stack.pop()
        if f in acc:
            continue
        acc.add(f)
        if len(f) > 1:
            for t in range(len(f)):
                g = f[:t] + f[t + 1 :]
                if g not in acc:
                    stack.append(g)


def _collapse(facets):
    """Strong collapse: repeatedly delete dominated vertices.

    A vertex is dominated when every facet containing it contains some
    fixed other vertex; deleting it preserves the homotopy type.  On gcd
    complexes this prunes the vertex set down to one monomial per maximal
    support, which keeps face enumeration small.
    """
    fs = [set(f) for f in facets]
    changed = True
    while changed:
        changed = False
        verts = sorted({v for f in fs for v in f})
        membership = {v: frozenset(i for i, f in enumerate(fs) if v in f) for v in verts}
        for v in verts:
            mv = membership[v]
            dominated = False
            for w in verts:
                if w != v and mv <= membership[w]:
                    dominated = True
                    break
            if dominated:
                for f in fs:
                    f.discard(v)
                fs = [set(s) for s in _maximal_sets([frozenset(f) for f in fs if f])]
                changed = True
                break
    return [frozenset(f) for f in fs]


def connected_components(K):
    """Partition of the 0-faces by 1-skeleton connectivity.

    Returns a tuple of components, each a tuple of vertex labels in index
    order; components are ordered by their smallest vertex index.
    """
    verts = K.vertices()
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in K.facets:
        it = iter(sorted(f))
        try:
            a = find(next(it))
        except StopIteration:
            continue
        for v in it:
            b = find(v)
            if b != a:
                parent[b] = a
    groups = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    comps = sorted(groups.values(), key=lambda g: g[0])
    return tuple(tuple(K.vertex_labels[v] for v in sorted(g)) for g in comps)


def _boundary_rank(lower, upper, field):
    """Rank of the boundary map from span(upper) to span(lower)."""
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = [0] * len(lower)
        for t in range(len(f)):
            g = f[:t] + f[t + 1 :]
            row[index[g]] = 1 if t % 2 == 0 else -1
        rows.append(row)
    if field in ("q", "Q"):
        return rank_rational(rows)
    return rank_mod_p(rows, field)


def reduced_homology_dims(K, field="q"):
    """Reduced homology dimensions {j: dim} for j = -1 .. dim K.

    Uses the augmented chain complex, so the empty complex {emptyset}
    reports {-1: 1} and any nonempty complex reports {-1: 0, ...}.
    field is "q" for the rationals or an int prime p for GF(p).
    """
    if isinstance(field, str):
        if field not in ("q", "Q"):
            raise ValueError("field must be 'q' or a prime integer")
    elif not isinstance(field, int) or field < 2:
        raise ValueError("field must be 'q' or a prime integer")
    core = SimplicialComplex(K.vertex_labels, _collapse(K.facets))
    fs = core.faces()
    if not fs:
        return {-1: 1}
    maxd = max(fs)
    counts = {d: len(fs[d]) for d in fs}
    ranks = {0: 1}  # augmentation C_0 -> C_{-1}
    for d in range(1, maxd + 1):
        ranks[d] = _boundary_rank(fs[d - 1], fs[d], field)
    dims = {-1: 1 - ranks[0]}
    for d in range(0, maxd + 1):
        dims[d] = counts.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return dims


def gcd_complex(F):
    """The complex on the fiber's monomials whose faces are the subsets
    with gcd != 1.  Facets are the maximal sets V_i = {m : m_i > 0}."""
    ms = F.members
    if not ms:
        return SimplicialComplex((), ())
    n = len(ms[0])
    vs = []
    for i in range(n):
        vi = frozenset(k for k, m in enumerate(ms) if m[i] > 0)
        if vi:
            vs.append(vi)
    return SimplicialComplex(ms, vs)


def support_complex(F):
    """The complex on the variable indices whose faces are the subsets of
    the monomial supports supp(m), m in the fiber."""
    ms = F.members
    if not ms:
        return SimplicialComplex((), ())
    n = len(ms[0])
    sups = [frozenset(i for i in range(n) if m[i] > 0) for m in ms]
    return SimplicialComplex(tuple(range(n)), [s for s in sups if s])


def betti_at(L, i, b, field="q"):
    """beta_{i,b} = dim H~_{i-1} of the gcd complex of the fiber of b."""
    if i < 1:
        raise ValueError("betti_at is defined for homological degree i >= 1")
    if not isinstance(b, (tuple, list)):
        b = b.representative
    fib = enumerate_fiber(L, b)
    if len(fib) <= 1:
        return 0
    dims = reduced_homology_dims(gcd_complex(fib), field)
    return dims.get(i - 1, 0)


def scan_degree_classes(L, bound, functional=None):
    """All degree classes with a nonnegative representative of functional
    value <= bound, as a list of (DegreeClass, value) sorted by value.

    The functional must be strictly positive and constant on fibers
    (orthogonal to L); by default one is computed from the lattice.
    """
    w = tuple(functional) if functional is not None else positive_functional(L)
    if len(w) != L.n or any(x < 1 for x in w):
        raise ValueError("functional must be strictly positive of length n")
    zero = (0,) * L.n
    start = class_of(L, zero)
    seen = {start.key: (start, 0)}
    queue = [(zero, 0)]
    while queue:
        rep, s = queue.pop()
        for j in range(L.n):
            s2 = s + w[j]
            if s2 > bound:
                continue
            rep2 = rep[:j] + (rep[j] + 1,) + rep[j + 1 :]
            b2 = class_of(L, rep2)
            if b2.key not in seen:
                seen[b2.key] = (b2, s2)
                queue.append((rep2, s2))
    return sorted(seen.values(), key=lambda t: (t[1], t[0].key))


class BettiTable:
    """Nonzero multigraded Betti numbers found by a bounded scan."""

    def __init__(self, lattice, entries, bound, field, functional):
        self.lattice = lattice
        self.entries = dict(entries)  # (i, DegreeClass) -> positive int
        self.bound = bound
        self.field = field
        self.functional = functional

    def get(self, i, b):
        return self.entries.get((i, b), 0)

    def homological_degrees(self):
        return sorted({i for i, _ in self.entries})

    def degrees(self, i):
        """Degree classes with beta_{i,.} > 0, sorted by functional value."""
        w = self.functional
        ds = [b for (j, b) in self.entries if j == i]
        return sorted(
            ds, key=lambda b: (sum(x * y for x, y in zip(w, b.representative)), b.key)
        )

    def total(self, i):
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def __repr__(self):
        tot = {i: self.total(i) for i in self.homological_degrees()}
        return "BettiTable(bound=%r, totals=%r)" % (self.bound, tot)


def betti_scan(L, bound, field="q", functional=None):
    """Betti numbers of every congruence class within the scan bound.

    Visits each class with a fiber of size >= 2 whose functional value is
    <= bound and records the nonzero beta_{i,b} for i >= 1.
    """
    w = tuple(functional) if functional is not None else positive_functional(L)
    entries = {}
    for b, _s in scan_degree_classes(L, bound, w):
        fib = enumerate_fiber(L, b.representative)
        if len(fib) < 2:
            continue
        dims = reduced_homology_dims(gcd_complex(fib), field)
        for j, dim in dims.items():
            if j >= 0 and dim:
                entries[(j + 1, b)] = dim
    return BettiTable(L, entries, bound, field, w)


def minimal_betti_degrees(T, i):
    """Degrees minimal in the divisibility order among {b : beta_{i,b} > 0}."""
    degs = T.degrees(i)
    out = []
    for b in degs:
        if not any(d is not b and d != b and class_leq(d, b) for d in degs):
            out.append(b)
    return out


def euler_characteristic_checks(K, field="q"):
    """Consistency helper: reduced Euler characteristic from the f-vector
    must match the alternating sum of reduced homology dimensions."""
    fs = K.faces()
    chi_f = -1 + sum(
        (-1) ** d * len(faces) for d, faces in fs.items() if d >= 0
    )
    dims = reduced_homology_dims(K, field)
    chi_h = sum((-1) ** j * v for j, v in dims.items())
    return chi_f, chi_h
