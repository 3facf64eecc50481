import pytest

from latticescarf.fixtures import fixture_bound, fixture_problem
from latticescarf.homology import betti_scan
from latticescarf.scarf import build_generalized_scarf_complex, enumerate_scarf_poset

FIXTURE_NAMES = ("ex61", "ex63", "ex64")


class FixtureData:
    """One bundled problem plus lazily shared scan/poset/complex.

    Property suites reuse these session-wide; the acceptance module builds
    its own fresh objects where a runtime bound is being certified.
    """

    def __init__(self, name):
        self.name = name
        self.spec = fixture_problem(name)
        self.lattice = self.spec.lattice
        self.functional = self.spec.functional()
        self.bound = fixture_bound(name)
        self._table = None
        self._poset = None
        self._complex = None

    @property
    def table(self):
        if self._table is None:
            self._table = betti_scan(
                self.lattice, self.bound, functional=self.functional
            )
        return self._table

    @property
    def poset(self):
        if self._poset is None:
            self._poset = enumerate_scarf_poset(
                self.lattice, self.bound, self.functional
            )
        return self._poset

    @property
    def complex(self):
        if self._complex is None:
            self._complex = build_generalized_scarf_complex(self.poset)
        return self._complex

    def semigroup_degree(self, b):
        return tuple(self.spec.semigroup.degree_of(b.representative))


@pytest.fixture(scope="session")
def suite():
    return {name: FixtureData(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def ex61(suite):
    return suite["ex61"]


@pytest.fixture(scope="session")
def ex63(suite):
    return suite["ex63"]


@pytest.fixture(scope="session")
def ex64(suite):
    return suite["ex64"]
