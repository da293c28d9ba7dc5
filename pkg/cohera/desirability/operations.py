import logging
from fractions import Fraction
from typing import Sequence

from cohera.cones.operations import (
    cone_member,
    nonpositive_combination,
    ray_family_unbounded,
    singleton_indicators,
)
from cohera.contrib.exceptions import EmptyEvent, Unsupported, ZeroGambleQuery
from cohera.desirability.models import (
    Assertions,
    EventSet,
    LexAtom,
    SetRep,
    SymbolicExtract,
    Top,
    Unit,
)
from cohera.gambles.models import Event, Gamble, PossibilitySpace, is_nonneg_nonzero

logger = logging.getLogger(__name__)


def natural_extension_member(space: PossibilitySpace, assertions: Sequence[Gamble], f: Gamble) -> bool:
    """f in posi(K ∪ L⁺)."""
    space.check(f.space)
    if f.is_zero:
        raise ZeroGambleQuery('membership of the zero gamble is the coherence question')
    return cone_member(list(assertions) + singleton_indicators(space), f).member


def is_coherent_extension(assertions: Sequence[Gamble]) -> bool:
    """0 is not in the natural extension.

    The L⁺ part of a vanishing combination is absorbed by asking only for a convex
    combination of K that is nowhere positive.
    """
    return not nonpositive_combination([g for g in assertions if not g.is_zero]).member


def closure(space: PossibilitySpace, assertions: Sequence[Gamble]) -> SetRep:
    for g in assertions:
        space.check(g.space)
    if not is_coherent_extension(assertions):
        return Top(space)
    kept = [g for g in assertions if not g.is_zero and not is_nonneg_nonzero(g)]
    if not kept:
        return Unit(space)
    return Assertions.of(space, kept)


def set_member(d: SetRep, f: Gamble) -> bool:
    d.space.check(f.space)
    return d.contains(f)


def lower_prevision(event: Event, f: Gamble) -> Fraction:
    event.space.check(f.space)
    if event.is_empty:
        raise EmptyEvent('the lower prevision needs a non-empty event')
    return min(f[w] for w in event.members)


def local_atom_normal_form(d: SymbolicExtract) -> SetRep:
    """A local atom in its simplest exact representation.

    One block gives L⁺, two blocks give D_B for the first block B in the induced
    order, one block per world gives the atom itself. Finer cases stay symbolic.
    """
    blocks = d.partition.blocks
    if len(blocks) == 1:
        return Unit(d.space)
    if len(blocks) == len(d.space):
        return d.inner
    if len(blocks) == 2:
        return EventSet(Event(d.space, blocks[d.block_order[0]]))
    return d


def materialize(d: SetRep) -> SetRep:
    """Evaluate lazy extractions that have a finite representation."""
    if isinstance(d, SymbolicExtract) and isinstance(d.inner, Assertions):
        from cohera.algebra.operations import extract_assertions

        return extract_assertions(d.inner, d.partition)
    if isinstance(d, SymbolicExtract):
        return local_atom_normal_form(d)
    return d


def _lex_leq(d1: LexAtom, d2: SetRep) -> bool:
    # a lexicographic atom is maximal, so only Top and itself lie above it
    n = len(d1.space)
    if n == 1:
        return True
    if isinstance(d2, LexAtom):
        return d1.order == d2.order
    if isinstance(d2, EventSet):
        return n == 2 and d2.event.members == {d1.order[0]}
    return False


def _local_atom_leq(d1: SymbolicExtract, d2: SetRep) -> bool:
    if isinstance(d2, LexAtom):
        return d1.block_order == SymbolicExtract(d2, d1.partition).block_order
    if isinstance(d2, SymbolicExtract) and isinstance(d2.inner, LexAtom):
        if d2.partition == d1.partition:
            return d1.block_order == d2.block_order
        raise Unsupported(
            f'cannot compare local atoms under different questions: {d1.describe()} and {d2.describe()}'
        )
    # with three blocks or more the atom admits gambles unbounded below off its
    # first block, which no event set and no coherent C(K) contains
    return False


def _event_leq(d1: EventSet, d2: SetRep) -> bool:
    s = d1.event
    if isinstance(d2, EventSet):
        return d2.event <= s
    if isinstance(d2, Assertions):
        return ray_family_unbounded(
            d2.cone_generators, s.indicator(), -s.complement().indicator()
        )
    if isinstance(d2, LexAtom):
        return d2.order[0] in s
    if isinstance(d2, SymbolicExtract) and isinstance(d2.inner, LexAtom):
        first = d2.partition.blocks[d2.block_order[0]]
        return first <= s.members
    raise Unsupported(f'no decision for {d1.describe()} <= {d2.describe()}')


def leq(d1: SetRep, d2: SetRep) -> bool:
    """The information order: D1 ⊆ D2."""
    d1.space.check(d2.space)
    d1, d2 = materialize(d1), materialize(d2)
    if d2.is_top:
        return True
    if d1.is_top:
        return False
    if isinstance(d1, Unit):
        return True
    if isinstance(d1, Assertions):
        return all(d2.contains(g) for g in d1.gambles)
    if isinstance(d2, Unit):
        if isinstance(d1, EventSet):
            return d1.event.is_full
        if isinstance(d1, LexAtom):
            return len(d1.space) == 1
        return d1.partition.is_bottom
    if isinstance(d1, EventSet):
        return _event_leq(d1, d2)
    if isinstance(d1, LexAtom):
        return _lex_leq(d1, d2)
    if isinstance(d1, SymbolicExtract):
        return _local_atom_leq(d1, d2)
    raise Unsupported(f'no decision for {d1.describe()} <= {d2.describe()}')


def set_equal(d1: SetRep, d2: SetRep) -> bool:
    return leq(d1, d2) and leq(d2, d1)
