from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohera.contrib.exceptions import (
    EmptyEvent,
    IncoherentAssertions,
    LimitExceeded,
    ModelValidationError,
    TopNotCoherent,
    ZeroGambleQuery,
)
from cohera.desirability.audits import (
    COHERENCE_MAX_SIZE,
    check_coherence_axioms,
    check_maximality_sampled,
    coherence_suite,
    is_strictly_desirable_event_set,
)
from cohera.desirability.models import Assertions, EventSet, LexAtom, SymbolicExtract, Top, Unit
from cohera.desirability.operations import (
    closure,
    is_coherent_extension,
    leq,
    local_atom_normal_form,
    lower_prevision,
    natural_extension_member,
    set_equal,
    set_member,
)
from cohera.desirability.sampling import GambleSampler
from cohera.gambles.models import Event, Gamble, make_space, numbered_space
from cohera.partitions.models import Partition
from tests.strategies import nonzero_gambles


class LooseEventSet(EventSet):
    """Event set whose membership test lets zero through."""

    def contains(self, f):
        return all(f[w] >= 0 for w in self.event.members)


@pytest.fixture
def d(abc, gamble):
    return Assertions.of(abc, [gamble(1, -1, 0)])


class TestNaturalExtension:
    def test_examples(self, abc, gamble):
        k = [gamble(1, -1, 0)]
        assert natural_extension_member(abc, k, gamble(1, -1, 1))
        assert not natural_extension_member(abc, k, gamble(-1, 1, -1))
        assert natural_extension_member(abc, [], gamble(0, 1, 0))

    def test_zero_query(self, abc, gamble):
        with pytest.raises(ZeroGambleQuery):
            natural_extension_member(abc, [], gamble(0, 0, 0))

    def test_coherence(self, gamble):
        assert is_coherent_extension([gamble(1, -1, 0)])
        assert not is_coherent_extension([gamble(-1, 0, 0)])
        assert is_coherent_extension([])


class TestClosure:
    def test_examples(self, abc, gamble):
        assert closure(abc, [gamble(-1, 0, 0)]).is_top
        assert isinstance(closure(abc, []), Unit)
        assert closure(abc, [gamble(1, -1, 0)]) == Assertions.of(abc, [gamble(1, -1, 0)])

    def test_incoherent_assertions_are_refused(self, abc, gamble):
        with pytest.raises(IncoherentAssertions):
            Assertions.of(abc, [gamble(1, -1, 0), gamble(-1, 1, 0)])

    @given(st.data())
    def test_closure_operator(self, data):
        space = numbered_space(3)
        k = data.draw(st.lists(nonzero_gambles(space, -2, 2), max_size=3))
        extra = data.draw(st.lists(nonzero_gambles(space, -2, 2), max_size=2))
        smaller = closure(space, k)
        larger = closure(space, k + extra)
        assert all(smaller.contains(g) for g in k)
        assert leq(smaller, larger)
        if isinstance(smaller, Assertions):
            assert set_equal(closure(space, list(smaller.gambles)), smaller)


class TestMembership:
    def test_examples(self, abc, gamble, d):
        assert EventSet(Event.named(abc, ['a'])).contains(gamble(1, -5, -5))
        atom = LexAtom.named(abc, ['a', 'b', 'c'])
        assert atom.contains(gamble(0, 1, -9))
        assert not atom.contains(gamble(0, 0, 0))
        assert set_member(d, gamble(1, -1, 1))
        assert not set_member(d, gamble(0, 0, 0))

    def test_top_and_unit(self, abc, gamble):
        assert Top(abc).contains(gamble(-1, -1, -1))
        assert Unit(abc).contains(gamble(0, 0, 1))
        assert not Unit(abc).contains(gamble(1, -1, 0))

    def test_lift(self, abc):
        assert EventSet.lift(Event.empty(abc)).is_top
        assert isinstance(EventSet.lift(Event.full(abc)), Unit)

    def test_empty_and_full_events_must_be_lifted(self, abc):
        with pytest.raises(EmptyEvent):
            EventSet(Event.empty(abc))
        with pytest.raises(ModelValidationError):
            EventSet(Event.full(abc))


class TestOrder:
    def test_examples(self, abc, gamble, d):
        ab = EventSet(Event.named(abc, ['a', 'b']))
        a = EventSet(Event.named(abc, ['a']))
        assert leq(Unit(abc), ab)
        assert leq(d, a)
        assert leq(ab, a)
        assert not leq(a, ab)
        assert not leq(a, Unit(abc))

    def test_equality(self, abc, gamble):
        assert set_equal(closure(abc, []), Unit(abc))
        assert set_equal(EventSet.lift(Event.empty(abc)), Top(abc))
        assert set_equal(Assertions.of(abc, [gamble(1, -1, 0)]), Assertions.of(abc, [gamble(2, -2, 0)]))

    def test_event_below_assertions(self, abc, gamble):
        a = EventSet(Event.named(abc, ['a']))
        assert not leq(a, Assertions.of(abc, [gamble(1, -1, -1)]))
        assert leq(Assertions.of(abc, [gamble(1, -1, -1)]), a)

    def test_lex_atom_is_maximal(self, abc, ab):
        atom = LexAtom.named(abc, ['b', 'a', 'c'])
        assert leq(atom, atom)
        assert not leq(atom, LexAtom.named(abc, ['a', 'b', 'c']))
        assert leq(EventSet(Event.named(abc, ['b'])), atom)
        assert leq(LexAtom.named(ab, ['a', 'b']), EventSet(Event.named(ab, ['a'])))

    def test_partial_order_on_a_pool(self):
        space = numbered_space(3)
        pool = GambleSampler(space, 11).set_pool(6, 3)
        pool += [LexAtom(space, order) for order in [(0, 1, 2), (1, 0, 2), (2, 1, 0)]]
        pool += [
            SymbolicExtract(LexAtom(space, order), Partition.from_labels(space, labels))
            for order, labels in [((0, 1, 2), [0, 1, 1]), ((2, 0, 1), [0, 0, 1]), ((1, 2, 0), [0, 0, 0])]
        ]
        assert len(pool) == 12
        order = {(i, j): leq(x, y) for (i, x), (j, y) in product(enumerate(pool), repeat=2)}
        for i in range(len(pool)):
            assert order[i, i]
        for i, j in product(range(len(pool)), repeat=2):
            if order[i, j] and order[j, i]:
                assert set_equal(pool[i], pool[j])
            for k in range(len(pool)):
                if order[i, j] and order[j, k]:
                    assert order[i, k]

    def test_local_atom_with_two_blocks_is_an_event_set(self, abc, gamble):
        local = SymbolicExtract(LexAtom.named(abc, ['a', 'b', 'c']), Partition.from_labels(abc, [0, 1, 1]))
        a = EventSet(Event.named(abc, ['a']))
        assert leq(a, local)
        assert leq(local, a)
        assert set_equal(local, a)
        assert not leq(local, Assertions.of(abc, [gamble(1, -1, 0)]))

    def test_local_atom_with_three_blocks(self):
        space = make_space(['a', 'b', 'c', 'd'])
        m = LexAtom.named(space, ['a', 'b', 'c', 'd'])
        local = SymbolicExtract(m, Partition.from_labels(space, [0, 1, 2, 2]))
        a = EventSet(Event.named(space, ['a']))
        assert leq(a, local)
        assert not leq(local, a)
        assert leq(local, m)
        assert leq(local, LexAtom.named(space, ['a', 'b', 'd', 'c']))
        assert not leq(local, LexAtom.named(space, ['b', 'a', 'c', 'd']))
        assert not leq(local, Assertions.of(space, [Gamble.of(space, [1, -1, 0, 0])]))

    def test_trivial_local_atoms(self, abc, gamble):
        m = LexAtom.named(abc, ['a', 'b', 'c'])
        assert isinstance(local_atom_normal_form(SymbolicExtract(m, Partition.bottom(abc))), Unit)
        assert local_atom_normal_form(SymbolicExtract(m, Partition.top(abc))) == m

    def test_order_agrees_with_sampled_membership(self):
        space = numbered_space(3)
        sampler = GambleSampler(space, 5)
        pool = sampler.set_pool(6, 3)
        for x in pool:
            for y in pool:
                if leq(x, y):
                    for _ in range(10):
                        f = sampler.member(x)
                        assert y.contains(f)


class TestLowerPrevision:
    def test_examples(self, abc, gamble):
        assert lower_prevision(Event.named(abc, ['a', 'b']), gamble(1, 2, -7)) == 1
        assert lower_prevision(Event.full(abc), gamble(3, 5, 4)) == 3

    def test_empty_event(self, abc, gamble):
        with pytest.raises(EmptyEvent):
            lower_prevision(Event.empty(abc), gamble(1, 2, 3))


class TestAudits:
    def test_unit_and_lex_atom_are_coherent(self, abc):
        assert check_coherence_axioms(Unit(abc), 100, 7).ok
        assert check_coherence_axioms(LexAtom.named(abc, ['a', 'b', 'c']), 100, 7).ok

    def test_top_is_refused(self, abc):
        with pytest.raises(TopNotCoherent):
            check_coherence_axioms(Top(abc), 10, 7)

    def test_loose_membership_is_caught(self, abc):
        report = check_coherence_axioms(LooseEventSet(Event.named(abc, ['a'])), 20, 7)
        assert not report.ok
        assert 'D2' in {f.law for f in report.failures}

    def test_maximality(self, ab, abc, gamble):
        assert check_maximality_sampled(LexAtom.named(abc, ['c', 'a', 'b']), 100, 3).ok
        report = check_maximality_sampled(Unit(ab), 100, 7)
        assert not report.ok
        assert report.failures[0].law == 'maximal'
        assert not check_maximality_sampled(Assertions.of(ab, [gamble(1, -1, space=ab)]), 100, 7).ok

    def test_strict_desirability(self, abc):
        assert is_strictly_desirable_event_set(Event.named(abc, ['a']), 200, 7).ok
        assert is_strictly_desirable_event_set(Event.full(abc), 50, 7).ok
        with pytest.raises(EmptyEvent):
            is_strictly_desirable_event_set(Event.empty(abc), 5, 7)

    def test_strict_witness_example(self, abc, gamble):
        f = gamble(2, -1, -1)
        delta = lower_prevision(Event.named(abc, ['a']), f) / 2
        assert delta == Fraction(1)
        assert EventSet(Event.named(abc, ['a'])).contains(f.shift(-delta))

    def test_coherence_suite(self):
        report = coherence_suite(3, 10, 7, 4, 3)
        assert report.ok
        assert report.counts['D2'] > 0

    def test_coherence_suite_limit(self):
        with pytest.raises(LimitExceeded):
            coherence_suite(COHERENCE_MAX_SIZE + 1, 1, 7, 2, 2)


def test_sampler_is_deterministic(abc):
    first = [GambleSampler(abc, 3).gamble() for _ in range(3)]
    second = [GambleSampler(abc, 3).gamble() for _ in range(3)]
    assert first == second
    assert isinstance(first[0], Gamble)
