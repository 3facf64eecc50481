"""Shared property-suite routines.

Each check_* function raises AssertionError with a pointed message on the
first violation and returns a short human-readable summary on success.
They are exercised twice: individually by test_properties.py, and as a
block by the acceptance gate.
"""

import itertools

from latticescarf.fibers import enumerate_fiber, gcd_of, reduce_by_gcd
from latticescarf.homology import (
    betti_scan,
    gcd_complex,
    reduced_homology_dims,
    scan_degree_classes,
    support_complex,
)
from latticescarf.lattice_core import LatticeBasis, positive_functional
from latticescarf.scarf import (
    LatticeSubset,
    algebraic_scarf_subcomplex,
    basic_components,
    build_generalized_scarf_complex,
    enumerate_scarf_poset,
    in_generalized_scarf,
    indispensable_binomials,
    minimal_generators,
    monomials_of,
    strongly_algebraic_subcomplex,
    verify_zero_composition,
)


def random_pointed_lattice(rng, r, n, lo=-3, hi=3):
    """Rejection-sample an independent r x n basis of a pointed lattice."""
    while True:
        rows = [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(r)]
        try:
            return LatticeBasis(rows)
        except ValueError:
            continue


def small_scan_bound(L):
    """A bound that certifies at least every basis row's own fiber."""
    w = positive_functional(L)
    tops = [sum(wi * x for wi, x in zip(w, row) if x > 0) for row in L.rows]
    return max(tops, default=0) + 2 * max(w)


def catalog_fibers(data, max_size=6):
    """Small named fibers of one fixture: every 1-Betti degree, every poset
    element degree, capped at max_size monomials (for subset brute force)."""
    L = data.lattice
    reps = []
    seen = set()
    for b in data.table.degrees(1):
        reps.append(b.representative)
    for c in data.poset.elements:
        reps.append(c.degree.representative)
    out = []
    for rep in reps:
        fib = enumerate_fiber(L, rep)
        if not 1 <= len(fib) <= max_size:
            continue
        if fib.members in seen:
            continue
        seen.add(fib.members)
        out.append(fib)
    return out


def complexes_equal(X, Y):
    if X.ranks() != Y.ranks():
        return False
    for bs1, bs2 in zip(X.basis, Y.basis):
        for c1, c2 in zip(bs1, bs2):
            if c1.degree != c2.degree or c1.monomials != c2.monomials:
                return False
    return X.differentials == Y.differentials


# ---------------------------------------------------------------------------
# (a) gcd complex and support complex have the same homology.


def check_gcd_support_homology(suite):
    checked = 0
    for data in suite.values():
        L = data.lattice
        for b, _s in scan_degree_classes(L, data.bound, data.functional):
            fib = enumerate_fiber(L, b.representative)
            if not fib.members:
                continue
            d1 = reduced_homology_dims(gcd_complex(fib))
            d2 = reduced_homology_dims(support_complex(fib))
            top = max(max(d1), max(d2))
            for j in range(-1, top + 1):
                assert d1.get(j, 0) == d2.get(j, 0), (
                    "homology mismatch at %s degree %r index %d: gcd %r vs support %r"
                    % (data.name, b.representative, j, d1, d2)
                )
            checked += 1
    return "%d degrees" % checked


# ---------------------------------------------------------------------------
# (b) theta composed with theta vanishes, fixtures and random lattices.


def check_theta_squared(suite, rng, count=50):
    for data in suite.values():
        X = data.complex
        assert verify_zero_composition(X), "theta^2 != 0 on %s" % data.name
        S = algebraic_scarf_subcomplex(X)
        assert verify_zero_composition(S), "theta^2 != 0 on %s scarf" % data.name
        for mode in ("strict", "paper-example"):
            SS = strongly_algebraic_subcomplex(X, data.table, mode=mode)
            assert verify_zero_composition(SS), (
                "theta^2 != 0 on %s strongly (%s)" % (data.name, mode)
            )
    shapes = [(2, 4)] * (count // 2) + [(2, 5)] * (count - count // 2)
    for k, (r, n) in enumerate(shapes):
        L = random_pointed_lattice(rng, r, n)
        bound = small_scan_bound(L)
        P = enumerate_scarf_poset(L, bound)
        X = build_generalized_scarf_complex(P)
        assert verify_zero_composition(X), (
            "theta^2 != 0 on random lattice #%d %r" % (k, L.rows)
        )
        assert verify_zero_composition(algebraic_scarf_subcomplex(X))
        T = betti_scan(L, bound)
        for mode in ("strict", "paper-example"):
            SS = strongly_algebraic_subcomplex(X, T, mode=mode)
            assert verify_zero_composition(SS), (
                "theta^2 != 0 on random lattice #%d strongly (%s)" % (k, mode)
            )
    return "3 fixtures + %d random lattices" % count


# ---------------------------------------------------------------------------
# (c) a subset of a fiber is some C_J exactly when its gcd is 1.


def expressible_as_witness_set(L, G):
    """Does the anchored J = {u0 - u} reproduce G as its monomial set?"""
    u0 = G[0]
    J = LatticeSubset(L, (tuple(a - b for a, b in zip(u0, u)) for u in G))
    return monomials_of(J) == G


def check_gcd_free_characterization(suite):
    checked = 0
    for data in suite.values():
        L = data.lattice
        zero = (0,) * L.n
        fibs = catalog_fibers(data)
        assert len(fibs) >= 3, "catalog too small for %s" % data.name
        for fib in fibs:
            ms = fib.members
            for size in range(1, len(ms) + 1):
                for G in itertools.combinations(ms, size):
                    expr = expressible_as_witness_set(L, G)
                    free = gcd_of(G) == zero
                    assert expr == free, (
                        "gcd-free criterion failed on %s subset %r: "
                        "expressible=%r gcd-free=%r" % (data.name, G, expr, free)
                    )
                    checked += 1
    assert checked >= 100, "only %d subsets exercised" % checked
    return "%d subsets" % checked


# ---------------------------------------------------------------------------
# (d) component lemmas: punctured gcds, reduced subsets stay basic fibers.


def check_component_lemmas(suite):
    from latticescarf.fibers import Fiber
    from latticescarf.scarf import bmax, is_basic_fiber

    comps = 0
    for data in suite.values():
        L = data.lattice
        for c in data.poset.elements:
            ms = c.monomials
            J = c.witness.members
            top = bmax(J)
            # gcd(C \ {m_a}) = bmax(J) - bmax(J \ {a}), for every a in J
            if len(ms) >= 2:
                for k, a in enumerate(J):
                    m = tuple(x - y for x, y in zip(top, a))
                    rest = tuple(u for u in ms if u != m)
                    sub = J[:k] + J[k + 1 :]
                    want = tuple(x - y for x, y in zip(top, bmax(sub)))
                    assert gcd_of(rest) == want, (
                        "punctured gcd identity failed on %s %r at %r"
                        % (data.name, ms, m)
                    )
            # [C \ I] is a basic fiber for every nonempty I properly inside C
            for size in range(1, len(ms)):
                for rest in itertools.combinations(ms, size):
                    red = reduce_by_gcd(rest)
                    rep = red[0]
                    assert enumerate_fiber(L, rep).members == red, (
                        "[C \\ I] is not a whole fiber on %s: %r" % (data.name, red)
                    )
                    assert is_basic_fiber(L, rep), (
                        "[C \\ I] is not basic on %s: %r" % (data.name, red)
                    )
            # a component of cardinality s carries one dimension of reduced
            # homology, concentrated at index s-2 of its induced gcd complex
            s = len(ms)
            if s >= 2:
                dims = reduced_homology_dims(gcd_complex(Fiber(c.degree, ms)))
                for j, d in dims.items():
                    want = 1 if j == s - 2 else 0
                    assert d == want, (
                        "size lemma failed on %s component %r: H~_%d = %d"
                        % (data.name, ms, j, d)
                    )
            # cardinality-2 components fill their whole fiber
            if s == 2:
                fib = enumerate_fiber(L, c.degree.representative)
                assert fib.members == ms, (
                    "two-element component %r is not its whole fiber" % (ms,)
                )
            comps += 1
    return "%d components" % comps


# ---------------------------------------------------------------------------
# (e) the c-basic test and in_generalized_scarf accept the same sets.


def _anchored_membership(L, G):
    u0 = G[0]
    J = LatticeSubset(L, (tuple(a - b for a, b in zip(u0, u)) for u in G))
    return in_generalized_scarf(J)


def _subset_family(rng, ms, comps, cap):
    """Subsets of a fiber to probe: exhaustive when small, else pairs,
    whole components, their unions and perturbations, plus random picks."""
    if len(ms) <= cap:
        for size in range(2, len(ms) + 1):
            for G in itertools.combinations(ms, size):
                yield G
        return
    for G in itertools.combinations(ms, 2):
        yield G
    outside = set(ms)
    for comp in comps:
        whole = tuple(sorted(comp, reverse=True))
        yield whole
        if len(comp) > 1:
            yield whole[:-1]
        extra = sorted(outside - set(comp), reverse=True)
        if extra:
            yield tuple(sorted(whole + (rng.choice(extra),), reverse=True))
    for c1, c2 in itertools.combinations(comps, 2):
        yield tuple(sorted(tuple(c1) + tuple(c2), reverse=True))
    for _ in range(60):
        size = rng.randint(3, min(8, len(ms)))
        yield tuple(sorted(rng.sample(ms, size), reverse=True))


def check_characterization(suite, rng, cap=12):
    from latticescarf.homology import connected_components

    checked = 0
    for data in suite.values():
        L = data.lattice
        zero = (0,) * L.n
        for b, _s in scan_degree_classes(L, data.bound, data.functional):
            fib = enumerate_fiber(L, b.representative)
            ms = fib.members
            if not ms:
                continue
            accepted = {c.monomials for c in basic_components(L, b.representative)}
            if len(ms) == 1:
                # a singleton is gcd-free only when it is the unit monomial
                assert (accepted == {ms}) == (ms[0] == zero), (
                    "singleton fiber misclassified at %s %r"
                    % (data.name, b.representative)
                )
                checked += 1
                continue
            comps = (
                connected_components(gcd_complex(fib)) if len(ms) > 2 else [ms]
            )
            seen = set()
            for G in _subset_family(rng, ms, comps, cap):
                if G in seen:
                    continue
                seen.add(G)
                if gcd_of(G) != zero:
                    continue  # not expressible at this degree (Lemma 4.3)
                got = _anchored_membership(L, G)
                want = G in accepted
                assert got == want, (
                    "characterization mismatch on %s degree %r subset %r: "
                    "in_generalized_scarf=%r basic-component=%r"
                    % (data.name, b.representative, G, got, want)
                )
                checked += 1
    return "%d anchored subsets" % checked


# ---------------------------------------------------------------------------
# (f) fiber enumeration against the brute-force box oracle.


def check_box_oracle(rng, count=100, box=8, classes_per_lattice=30):
    checked = 0
    for k in range(count):
        L = random_pointed_lattice(rng, 2, 4)
        groups = {}
        for u in itertools.product(range(box + 1), repeat=4):
            groups.setdefault(L.canonical_key(u), []).append(u)
        keys = sorted(groups, key=lambda key: (-len(groups[key]), key))
        keys = keys[:classes_per_lattice]
        zero_key = L.canonical_key((0, 0, 0, 0))
        if zero_key not in keys:
            keys.append(zero_key)
        for key in keys:
            members = groups[key]
            fib = enumerate_fiber(L, members[0])
            boxed = sorted(m for m in fib.members if max(m) <= box)
            assert boxed == sorted(members), (
                "box oracle mismatch on lattice #%d %r class %r: %r vs %r"
                % (k, L.rows, key, boxed, sorted(members))
            )
            checked += 1
    return "%d classes over %d lattices" % (checked, count)


# ---------------------------------------------------------------------------
# Extra spec invariants reused by granular tests.


def check_homogeneity(suite):
    entries = 0
    from latticescarf.lattice_core import class_leq

    for data in suite.values():
        L = data.lattice
        X = data.complex
        for i in range(1, len(X.basis)):
            for (r, c), terms in X.differentials[i].items():
                src = X.basis[i][c].degree
                dst = X.basis[i - 1][r].degree
                assert class_leq(dst, src) and dst != src, (
                    "degree must strictly decrease on %s" % data.name
                )
                diff = tuple(
                    a - b for a, b in zip(src.representative, dst.representative)
                )
                for _sign, e in terms:
                    assert L.canonical_key(diff) == L.canonical_key(e), (
                        "inhomogeneous entry on %s: %r vs %r" % (data.name, diff, e)
                    )
                    entries += 1
    return "%d differential terms" % entries


def check_indispensable_generation(rng, count=25):
    """When every minimal generator is indispensable, the generalized
    complex collapses to the algebraic Scarf subcomplex."""
    hits = 0
    for _ in range(count):
        L = random_pointed_lattice(rng, 2, 4)
        bound = small_scan_bound(L)
        gens = minimal_generators(L, bound)
        indis = indispensable_binomials(L, bound)

        def by_degree(pairs):
            out = {}
            for b, _ in pairs:
                out[b.key] = out.get(b.key, 0) + 1
            return out

        if by_degree(gens) != by_degree(indis):
            continue
        P = enumerate_scarf_poset(L, bound)
        X = build_generalized_scarf_complex(P)
        S = algebraic_scarf_subcomplex(X)
        assert complexes_equal(X, S), (
            "indispensably generated lattice %r has G_L != Scarf" % (L.rows,)
        )
        hits += 1
    assert hits, "no indispensably generated lattice sampled"
    return "%d/%d lattices indispensably generated" % (hits, count)
