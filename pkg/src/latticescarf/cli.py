"""Command line interface: JSON problem specs in, JSON reports out.

A problem spec is a JSON object with exactly one of

    {"name": "...", "semigroup": [[...], ...], "variables": [...]}
    {"name": "...", "lattice":   [[...], ...], "variables": [...]}

where "semigroup" columns generate the grading (the lattice is its
integer kernel) and "lattice" rows are an explicit basis.  Reports are
deterministic JSON on stdout.  Exit codes: 0 success, 1 verification
mismatch, 2 malformed input / unsolvable degree / non-pointed lattice.
"""

import argparse
import json
import sys

from . import __version__
from .fibers import enumerate_fiber, gcd_of, monomial_str
from .homology import betti_scan, minimal_betti_degrees
from .lattice_core import (
    LatticeBasis,
    NotPointedError,
    SemigroupMatrix,
    class_of,
    lattice_from_semigroup,
    positive_functional,
)
from .linalg import solve_combination
from .scarf import (
    algebraic_scarf_subcomplex,
    basic_components,
    build_generalized_scarf_complex,
    enumerate_scarf_poset,
    indispensable_binomials,
    minimal_generators,
    strongly_algebraic_subcomplex,
    verify_zero_composition,
)


class ParseError(ValueError):
    """Malformed problem spec or command input."""


class ProblemSpec:
    """A parsed problem: lattice, optional semigroup, variable names."""

    def __init__(self, name, lattice, semigroup, variables, source=None):
        self.name = name
        self.lattice = lattice
        self.semigroup = semigroup
        self.variables = tuple(variables)
        self.source = source

    def functional(self):
        """Grading functional for scan bounds: semigroup column sums when
        they are strictly positive, else a computed positive functional."""
        if self.semigroup is not None:
            w = self.semigroup.column_sums()
            if all(x >= 1 for x in w):
                return w
        return positive_functional(self.lattice)

    def degree_view(self, b):
        """Render a degree class for a report."""
        rep = list(b.representative)
        out = {"representative": rep}
        if self.semigroup is not None:
            out["semigroup_degree"] = list(self.semigroup.degree_of(b.representative))
        return out

    def monomials_view(self, ms):
        return [monomial_str(m, self.variables) for m in ms]


def _int_matrix(value, field):
    if (
        not isinstance(value, list)
        or not value
        or not all(isinstance(r, list) and r for r in value)
    ):
        raise ParseError("%s must be a nonempty 2D integer array" % field)
    width = len(value[0])
    for r in value:
        if len(r) != width:
            raise ParseError("%s rows have unequal lengths" % field)
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError("%s entries must be integers" % field)
    return [list(r) for r in value]


def problem_from_dict(d, source=None):
    if not isinstance(d, dict):
        raise ParseError("problem spec must be a JSON object")
    unknown = set(d) - {"name", "semigroup", "lattice", "variables"}
    if unknown:
        raise ParseError("unknown fields in problem spec: %s" % ", ".join(sorted(unknown)))
    has_sg = "semigroup" in d
    has_lat = "lattice" in d
    if has_sg == has_lat:
        raise ParseError("exactly one of 'semigroup' or 'lattice' is required")
    if has_sg:
        mat = _int_matrix(d["semigroup"], "semigroup")
        try:
            A = SemigroupMatrix(mat)
        except ValueError as e:
            raise ParseError("semigroup: %s" % e) from e
        lattice = lattice_from_semigroup(A)
        semigroup = A
        n = A.n
    else:
        mat = _int_matrix(d["lattice"], "lattice")
        try:
            lattice = LatticeBasis(mat)
        except NotPointedError:
            raise
        except ValueError as e:
            raise ParseError("lattice: %s" % e) from e
        semigroup = None
        n = lattice.n
    variables = d.get("variables")
    if variables is None:
        variables = ["x%d" % (i + 1) for i in range(n)]
    if (
        not isinstance(variables, list)
        or len(variables) != n
        or len(set(variables)) != n
        or not all(isinstance(v, str) and v for v in variables)
    ):
        raise ParseError("variables must be %d distinct nonempty names" % n)
    name = d.get("name")
    if name is None:
        name = "problem"
    if not isinstance(name, str):
        raise ParseError("name must be a string")
    return ProblemSpec(name, lattice, semigroup, variables, source=source)


def parse_spec(path):
    """Load and validate a problem spec file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e)) from e
    except json.JSONDecodeError as e:
        raise ParseError("%s is not valid JSON: %s" % (path, e)) from e
    spec = problem_from_dict(data, source=path)
    if spec.name == "problem" and "name" not in data:
        import os

        spec.name = os.path.splitext(os.path.basename(path))[0]
    return spec


def _parse_degree(spec, text):
    """A --degree argument: a semigroup degree when the problem has a
    semigroup (solved exactly for a representative), else a class
    representative of length n."""
    try:
        vec = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ParseError("--degree expects comma-separated integers") from None
    if spec.semigroup is None:
        if len(vec) != spec.lattice.n:
            raise ParseError(
                "--degree needs %d components for this lattice" % spec.lattice.n
            )
        return vec
    A = spec.semigroup
    if len(vec) != A.d:
        raise ParseError("--degree needs %d components for this semigroup" % A.d)
    cols = [tuple(r[j] for r in A.rows) for j in range(A.n)]
    u = solve_combination(cols, vec)
    if u is None:
        raise ParseError("degree %s is not in the grading group image" % (text,))
    return u


class Report:
    """A command report: provenance plus a result payload."""

    FORMAT = 1

    def __init__(self, spec, command, provenance, result):
        self.spec = spec
        self.command = command
        self.provenance = provenance
        self.result = result

    def to_dict(self):
        prov = {"version": __version__, "format": self.FORMAT}
        prov.update(self.provenance)
        return {
            "problem": self.spec.name,
            "command": self.command,
            "provenance": prov,
            "result": self.result,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _betti_payload(spec, T):
    entries = []
    w = T.functional
    for i in sorted(T.homological_degrees()):
        for b in T.degrees(i):
            entries.append(
                {
                    "i": i,
                    "degree": spec.degree_view(b),
                    "beta": T.get(i, b),
                }
            )
    return {
        "entries": entries,
        "totals": {str(i): T.total(i) for i in T.homological_degrees()},
        "minimal_degrees": {
            str(i): [spec.degree_view(b) for b in minimal_betti_degrees(T, i)]
            for i in T.homological_degrees()
        },
    }


def _complex_payload(spec, X):
    basis = []
    for i, bs in enumerate(X.basis):
        basis.append(
            [
                {
                    "degree": spec.degree_view(c.degree),
                    "monomials": spec.monomials_view(c.monomials),
                }
                for c in bs
            ]
        )
    diffs = []
    for i in range(1, len(X.basis)):
        entries = []
        for (r, c), terms in sorted(X.differentials[i].items()):
            entries.append(
                {
                    "row": r,
                    "col": c,
                    "terms": [
                        ("+" if s > 0 else "-") + monomial_str(e, spec.variables)
                        for s, e in terms
                    ],
                }
            )
        diffs.append({"i": i, "entries": entries})
    return {
        "ranks": list(X.ranks()),
        "basis": basis,
        "differentials": diffs,
        "zero_composition": verify_zero_composition(X),
    }


def _binomials_payload(spec, pairs):
    out = []
    for b, (m1, m2) in pairs:
        out.append(
            {
                "degree": spec.degree_view(b),
                "binomial": "%s - %s"
                % (monomial_str(m1, spec.variables), monomial_str(m2, spec.variables)),
                "exponents": [list(m1), list(m2)],
            }
        )
    return out


def export_dot(fiber, variables, kind="gcd"):
    """DOT source for the 1-skeleton of a fiber's complex.

    kind="gcd": vertices are the fiber monomials, edges join pairs with a
    common divisor.  kind="support": vertices are the variables that
    occur, edges join variables appearing in a common monomial support.
    """
    if not fiber.members:
        raise ValueError("empty fiber")
    lines = ["graph fiber {"]
    edges = []
    if kind == "gcd":
        ms = fiber.members
        for k, m in enumerate(ms):
            lines.append('  n%d [label="%s"];' % (k, monomial_str(m, variables)))
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                if any(x > 0 for x in gcd_of([ms[a], ms[b]])):
                    edges.append("  n%d -- n%d;" % (a, b))
    elif kind == "support":
        sups = [frozenset(i for i, x in enumerate(m) if x > 0) for m in fiber.members]
        used = sorted(set().union(*sups) if sups else ())
        for i in used:
            lines.append('  v%d [label="%s"];' % (i, variables[i]))
        seen = set()
        for s in sups:
            ss = sorted(s)
            for a in range(len(ss)):
                for b in range(a + 1, len(ss)):
                    if (ss[a], ss[b]) not in seen:
                        seen.add((ss[a], ss[b]))
                        edges.append("  v%d -- v%d;" % (ss[a], ss[b]))
        edges.sort()
    else:
        raise ParseError("--kind must be 'gcd' or 'support'")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_command(spec, command, options):
    """Execute one command against a parsed problem; returns a Report."""
    L = spec.lattice
    w = spec.functional()
    field = options.get("field", "q")
    if command == "fiber":
        u = _parse_degree(spec, options["degree"])
        fib = enumerate_fiber(L, u)
        view = class_of(L, fib.members[0]) if fib.members else fib.degree
        result = {
            "degree": spec.degree_view(view),
            "count": len(fib),
            "monomials": spec.monomials_view(fib.members),
            "exponents": [list(m) for m in fib.members],
        }
        prov = {}
    elif command == "betti":
        bound = options["bound"]
        T = betti_scan(L, bound, field=field, functional=w)
        result = _betti_payload(spec, T)
        prov = {"bound": bound, "field": str(field), "functional": list(w)}
    elif command == "components":
        if options.get("degree") is not None:
            u = _parse_degree(spec, options["degree"])
            comps = basic_components(L, u)
            result = {
                "degree": spec.degree_view(enumerate_fiber(L, u).degree),
                "components": [
                    {
                        "monomials": spec.monomials_view(c.monomials),
                        "witness": [list(v) for v in c.witness],
                    }
                    for c in comps
                ],
            }
            prov = {}
        elif options.get("bound") is not None:
            bound = options["bound"]
            P = enumerate_scarf_poset(L, bound, w)
            counts = {}
            for c in P.elements:
                counts[c.cardinality] = counts.get(c.cardinality, 0) + 1
            result = {
                "count": len(P.elements),
                "by_cardinality": {str(k): v for k, v in sorted(counts.items())},
                "components": [
                    {
                        "degree": spec.degree_view(c.degree),
                        "monomials": spec.monomials_view(c.monomials),
                    }
                    for c in P.elements
                ],
            }
            prov = {"bound": bound, "functional": list(w)}
        else:
            raise ParseError("components needs --degree or --bound")
    elif command == "complex":
        bound = options["bound"]
        kind = options.get("kind", "generalized")
        if kind == "strongly":
            kind = "strong"
        P = enumerate_scarf_poset(L, bound, w)
        X = build_generalized_scarf_complex(P)
        prov = {"bound": bound, "functional": list(w), "kind": kind}
        if kind == "scarf":
            X = algebraic_scarf_subcomplex(X)
        elif kind == "strong":
            mode = options.get("mode", "strict")
            if mode == "paper":
                mode = "paper-example"
            T = betti_scan(L, bound, field=field, functional=w)
            X = strongly_algebraic_subcomplex(X, T, mode=mode)
            prov["mode"] = mode
            prov["field"] = str(field)
        elif kind != "generalized":
            raise ParseError("--kind must be generalized, scarf, or strong")
        result = _complex_payload(spec, X)
    elif command == "indispensable":
        bound = options["bound"]
        result = {
            "binomials": _binomials_payload(spec, indispensable_binomials(L, bound, w))
        }
        prov = {"bound": bound, "functional": list(w)}
    elif command == "generators":
        bound = options["bound"]
        result = {
            "binomials": _binomials_payload(spec, minimal_generators(L, bound, w))
        }
        prov = {"bound": bound, "functional": list(w)}
    elif command == "export-dot":
        u = _parse_degree(spec, options["degree"])
        fib = enumerate_fiber(L, u)
        if not fib.members:
            raise ParseError("empty fiber: no monomials in this degree class")
        kind = options.get("kind", "gcd")
        dot = export_dot(fib, spec.variables, kind=kind)
        out = options.get("out")
        if out and out != "-":
            with open(out, "w") as fh:
                fh.write(dot)
        nodes = sum(1 for line in dot.splitlines() if "[label=" in line)
        edgecount = sum(1 for line in dot.splitlines() if " -- " in line)
        view = class_of(L, fib.members[0]) if fib.members else fib.degree
        result = {
            "degree": spec.degree_view(view),
            "kind": kind,
            "nodes": nodes,
            "edges": edgecount,
            "out": out,
            "dot": None if out and out != "-" else dot,
        }
        prov = {"kind": kind}
    else:
        raise ParseError("unknown command %r" % command)
    return Report(spec, command, prov, result)


# --------------------------------------------------------------------------
# verify: recompute the bundled problems and compare with expectations.


def _verify_fixture(name, bound=None):
    from .fixtures import EXPECTED, fixture_bound, fixture_problem

    spec = fixture_problem(name)
    exp = EXPECTED[name]
    if bound is None:
        bound = fixture_bound(name)
    L = spec.lattice
    w = spec.functional()
    A = spec.semigroup

    def sdeg(b):
        return list(A.degree_of(b.representative))

    T = betti_scan(L, bound, functional=w)
    P = enumerate_scarf_poset(L, bound, w)
    X = build_generalized_scarf_complex(P)
    S = algebraic_scarf_subcomplex(X)
    checks = []

    def check(label, expected, got):
        checks.append(
            {"name": label, "expected": expected, "got": got, "ok": expected == got}
        )

    if "betti_totals" in exp:
        check(
            "betti_totals",
            {str(k): v for k, v in exp["betti_totals"].items()},
            {str(i): T.total(i) for i in T.homological_degrees()},
        )
    if "betti_degrees" in exp:
        got = {
            str(i): sorted(sdeg(b) for b in T.degrees(i))
            for i in T.homological_degrees()
        }
        check(
            "betti_degrees",
            {str(k): sorted(v) for k, v in exp["betti_degrees"].items()},
            got,
        )
    if "beta_2_at_182" in exp:
        got = sum(v for (i, b), v in T.entries.items() if i == 2 and sdeg(b) == [182])
        check("beta_2_at_182", exp["beta_2_at_182"], got)
    if "complex_ranks" in exp:
        check("complex_ranks", exp["complex_ranks"], list(X.ranks()))
    if "zero_composition" in exp:
        check("zero_composition", exp["zero_composition"], verify_zero_composition(X))
    if "degree2_basis_degrees" in exp:
        got = sorted(sdeg(c.degree) for c in X.basis[2]) if len(X.basis) > 2 else []
        check("degree2_basis_degrees", sorted(exp["degree2_basis_degrees"]), got)
    if "scarf_ranks" in exp:
        check("scarf_ranks", exp["scarf_ranks"], list(S.ranks()))
    if "scarf_equals_generalized" in exp:
        same = S.ranks() == X.ranks() and all(
            tuple(a) == tuple(b) for a, b in zip(S.basis, X.basis)
        )
        check("scarf_equals_generalized", exp["scarf_equals_generalized"], same)
    if "strongly_ranks" in exp or "strongly_equals_scarf" in exp:
        for mode in ("strict", "paper-example"):
            SS = strongly_algebraic_subcomplex(X, T, mode=mode)
            if "strongly_ranks" in exp:
                check("strongly_ranks[%s]" % mode, exp["strongly_ranks"][mode], list(SS.ranks()))
            if "strongly_equals_scarf" in exp:
                same = SS.ranks() == S.ranks() and all(
                    tuple(a) == tuple(b) for a, b in zip(SS.basis, S.basis)
                )
                check("strongly_equals_scarf[%s]" % mode, exp["strongly_equals_scarf"], same)
    if "graded_ranks_match_scan" in exp:
        match = True
        for i in range(1, len(X.basis)):
            lhs = {}
            for c in X.basis[i]:
                lhs[c.degree.key] = lhs.get(c.degree.key, 0) + 1
            rhs = {}
            for (j, b), v in T.entries.items():
                if j == i:
                    rhs[b.key] = rhs.get(b.key, 0) + v
            if lhs != rhs:
                match = False
        check("graded_ranks_match_scan", exp["graded_ranks_match_scan"], match)
    if "three_element_basic_fibers" in exp:
        got = sorted(
            sdeg(c.degree)
            for c in P.elements
            if c.cardinality == 3
            and c.monomials == enumerate_fiber(L, c.degree.representative).members
        )
        check("three_element_basic_fibers", exp["three_element_basic_fibers"], got)
    if "components_at_182" in exp:
        got = sum(
            1 for c in P.elements if c.cardinality == 3 and sdeg(c.degree) == [182]
        )
        check("components_at_182", exp["components_at_182"], got)
    if "max_component_cardinality" in exp:
        check("max_component_cardinality", exp["max_component_cardinality"], P.max_cardinality())
    if "indispensable_degrees" in exp:
        got = sorted(sdeg(b) for b, _ in indispensable_binomials(L, bound, w))
        check("indispensable_degrees", sorted(exp["indispensable_degrees"]), got)
    if "generator_degrees" in exp:
        got = sorted(sdeg(b) for b, _ in minimal_generators(L, bound, w))
        check("generator_degrees", sorted(exp["generator_degrees"]), got)
    if "generator_count" in exp:
        check("generator_count", exp["generator_count"], len(minimal_generators(L, bound, w)))

    ok = all(c["ok"] for c in checks)
    prov = {"bound": bound, "functional": list(w)}
    report = Report(spec, "verify", prov, {"fixture": name, "ok": ok, "checks": checks})
    return report, ok


def _build_parser():
    p = argparse.ArgumentParser(
        prog="latticescarf",
        description="Fibers, Betti numbers and Scarf complexes of pointed lattice ideals.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_source(sp, need_spec=True):
        g = sp.add_mutually_exclusive_group(required=need_spec)
        g.add_argument("--spec", help="path to a JSON problem spec")
        g.add_argument("--fixture", help="name of a bundled problem")

    sp = sub.add_parser("fiber", help="enumerate the monomials of one degree")
    add_source(sp)
    sp.add_argument("--degree", required=True)

    sp = sub.add_parser("betti", help="scan Betti numbers up to a bound")
    add_source(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--field", default="q")

    sp = sub.add_parser("components", help="basic fiber components")
    add_source(sp)
    sp.add_argument("--degree")
    sp.add_argument("--bound", type=int)

    sp = sub.add_parser("complex", help="build a Scarf chain complex")
    add_source(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--kind", default="generalized")
    sp.add_argument("--mode", default="strict")
    sp.add_argument("--field", default="q")

    sp = sub.add_parser("indispensable", help="indispensable binomials")
    add_source(sp)
    sp.add_argument("--bound", type=int, required=True)

    sp = sub.add_parser("generators", help="minimal binomial generators")
    add_source(sp)
    sp.add_argument("--bound", type=int, required=True)

    sp = sub.add_parser("verify", help="recompute a bundled problem and compare")
    sp.add_argument("--fixture", required=True)
    sp.add_argument("--bound", type=int)

    sp = sub.add_parser("export-dot", help="DOT for a fiber's 1-skeleton")
    add_source(sp)
    sp.add_argument("--degree", required=True)
    sp.add_argument("--kind", default="gcd")
    sp.add_argument("--out")

    return p


def _parse_field(text):
    if text in ("q", "Q"):
        return "q"
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError("--field fp:P needs an integer P") from None
        if p < 2:
            raise ParseError("--field fp:P needs a prime P >= 2")
        return p
    raise ParseError("--field must be 'q' or 'fp:P'")


def _load_problem(args):
    if getattr(args, "fixture", None):
        from .fixtures import fixture_problem

        try:
            return fixture_problem(args.fixture)
        except KeyError as e:
            raise ParseError(str(e.args[0])) from e
    return parse_spec(args.spec)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report, ok = _verify_fixture(args.fixture, args.bound)
            print(report.to_json())
            return 0 if ok else 1
        spec = _load_problem(args)
        options = {}
        for key in ("degree", "bound", "kind", "mode", "out"):
            if hasattr(args, key) and getattr(args, key) is not None:
                options[key] = getattr(args, key)
        if hasattr(args, "field"):
            options["field"] = _parse_field(args.field)
        report = run_command(spec, args.command, options)
        print(report.to_json())
        return 0
    except (ParseError, NotPointedError, KeyError) as e:
        msg = e.args[0] if e.args else str(e)
        print("error: %s" % msg, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
