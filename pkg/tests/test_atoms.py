from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohera.contrib.exceptions import LimitExceeded
from cohera.desirability.models import Assertions, EventSet, Top, Unit
from cohera.desirability.operations import leq
from cohera.embeddings.atom_suites import (
    ATOM_SUITES_MAX_SIZE,
    atom_properties_suite,
    atom_separoid_suite,
    atom_set_algebra_suite,
)
from cohera.embeddings.atoms import (
    atom_equiv,
    atom_partition,
    atom_saturate,
    at_of,
    enum_lex_atoms,
    extract_atom,
    in_AtQ,
)
from cohera.gambles.models import Event, Gamble, make_space, numbered_space
from cohera.partitions.models import Partition
from cohera.partitions.operations import build_lattice, enumerate_partitions
from tests.strategies import gambles


@pytest.fixture
def family(abc):
    return enum_lex_atoms(abc)


@pytest.fixture
def px(abc):
    return Partition.from_labels(abc, [0, 0, 1])


def atom(family, *names):
    return next(m for m in family.atoms if m.names() == list(names))


class TestFamily:
    def test_counts(self, family):
        assert len(family) == 6
        assert len(family.atom_space) == 6

    def test_single_world(self):
        space = make_space(['w'])
        only = enum_lex_atoms(space)
        assert len(only) == 1
        assert only.atoms[0].contains(Gamble.of(space, [1]))
        assert not only.atoms[0].contains(Gamble.of(space, [-1]))

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            enum_lex_atoms(numbered_space(9))

    def test_select_and_members(self, family):
        chosen = family.select(family.atoms[:2])
        assert family.members(chosen) == list(family.atoms[:2])

    def test_maximal(self, family):
        space = family.space
        for values in product(range(-2, 3), repeat=3):
            f = Gamble.of(space, values)
            if f.is_zero:
                continue
            for m in family.atoms:
                assert m.contains(f) != m.contains(-f)


class TestLocalAtoms:
    def test_membership(self, abc, gamble):
        x = Partition.from_labels(abc, [0, 1, 1])
        local = extract_atom(atom(enum_lex_atoms(abc), 'a', 'b', 'c'), x)
        assert local.block_order == (0, 1)
        assert local.contains(gamble(1, -1, -1))
        assert not local.contains(gamble(-1, 5, 5))
        assert local.contains(gamble(0, 1, 1))

    def test_trivial_questions(self, abc, gamble):
        m = atom(enum_lex_atoms(abc), 'a', 'b', 'c')
        bottom = extract_atom(m, Partition.bottom(abc))
        assert isinstance(bottom, Unit)
        assert leq(bottom, EventSet(Event.named(abc, ['a'])))
        assert leq(bottom, Assertions.of(abc, [gamble(1, -1, 0)]))
        assert extract_atom(m, Partition.top(abc)) == m

    @given(st.data())
    def test_membership_is_upward_closed(self, data):
        space = numbered_space(3)
        x = Partition.from_labels(space, data.draw(st.sampled_from([[0, 0, 1], [0, 1, 1], [0, 1, 0]])))
        family = enum_lex_atoms(space)
        local = extract_atom(data.draw(st.sampled_from(family.atoms)), x)
        f = data.draw(gambles(space, -2, 2))
        bump = data.draw(gambles(space, 0, 2))
        if not f.is_zero and local.contains(f):
            assert local.contains(f + bump)

    def test_equivalence_examples(self, abc, family):
        x = Partition.from_labels(abc, [0, 1, 1])
        assert atom_equiv(atom(family, 'a', 'b', 'c'), atom(family, 'a', 'c', 'b'), x)
        assert not atom_equiv(atom(family, 'a', 'b', 'c'), atom(family, 'b', 'a', 'c'), x)
        top = Partition.top(abc)
        for m1, m2 in product(family.atoms, repeat=2):
            assert atom_equiv(m1, m2, top) == (m1 == m2)

    def test_equivalence_relation(self, abc, family):
        for x in enumerate_partitions(abc):
            for m1, m2, m3 in product(family.atoms, repeat=3):
                assert atom_equiv(m1, m1, x)
                assert atom_equiv(m1, m2, x) == atom_equiv(m2, m1, x)
                if atom_equiv(m1, m2, x) and atom_equiv(m2, m3, x):
                    assert atom_equiv(m1, m3, x)


class TestAtomSets:
    def test_at_of(self, ab, abc, family):
        pair = enum_lex_atoms(ab)
        d = Assertions.of(ab, [Gamble.of(ab, [1, -1])])
        assert [m.names() for m in pair.members(at_of(d, pair))] == [['a', 'b']]
        assert at_of(Unit(abc), family).is_full
        assert at_of(Top(abc), family).is_empty

    def test_atom_partition(self, family, px):
        partition = atom_partition(px, family)
        assert sorted(len(b) for b in partition.blocks) == [2, 4]
        chosen = family.select([atom(family, 'a', 'b', 'c')])
        saturated = atom_saturate(chosen, px, family)
        assert len(saturated.members) == 4
        assert all(m.order[0] in (0, 1) for m in family.members(saturated))

    def test_top_partition_gives_singletons(self, abc, family):
        partition = atom_partition(Partition.top(abc), family)
        assert partition.is_top
        chosen = family.select(family.atoms[:3])
        assert atom_saturate(chosen, Partition.top(abc), family) == chosen

    def test_saturated_atom_sets(self, abc, family, px):
        lattice = build_lattice(abc, {'px': px})
        block = atom_saturate(family.select([family.atoms[0]]), px, family)
        assert in_AtQ(block, lattice, family) == 'px'
        assert in_AtQ(family.select([family.atoms[0]]), lattice, family) is None


class TestAtomSuites:
    def test_separoid(self):
        report = atom_separoid_suite(3)
        assert report.ok
        findings = {f.law: f for f in report.exploratory}
        assert findings['join-reverse'].counterexamples > 0

    def test_separoid_two_worlds(self):
        report = atom_separoid_suite(2)
        assert report.ok
        assert all(f.counterexamples == 0 for f in report.exploratory)

    def test_set_algebra(self):
        assert atom_set_algebra_suite(3, 6, 7).ok

    def test_properties(self):
        report = atom_properties_suite(3, 4, 7, n_samples=10)
        assert report.ok
        assert report.counts['disjoint'] == 1 + 4 + 36

    def test_limits(self):
        for suite in (
            lambda: atom_separoid_suite(ATOM_SUITES_MAX_SIZE + 1),
            lambda: atom_set_algebra_suite(ATOM_SUITES_MAX_SIZE + 1, 2, 7),
            lambda: atom_properties_suite(ATOM_SUITES_MAX_SIZE + 1, 2, 7),
        ):
            with pytest.raises(LimitExceeded):
                suite()


@pytest.mark.slow
class TestAtomSuitesOnFourWorlds:
    def test_separoid(self):
        assert atom_separoid_suite(4).ok

    def test_set_algebra(self):
        assert atom_set_algebra_suite(4, 6, 7).ok

    def test_properties(self):
        assert atom_properties_suite(4, 4, 7, n_samples=10).ok
