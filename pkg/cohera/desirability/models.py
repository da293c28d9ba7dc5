"""Representations of coherent sets of gambles (plus the top element ``L``).

Every representation answers membership exactly through ``contains``; the
information order and the algebra operations live in the operations modules.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import ClassVar, Iterable, Union

from cohera.cones.operations import (
    cone_member,
    dominated_by_subspace_member,
    nonpositive_combination,
    singleton_indicators,
)
from cohera.contrib.exceptions import EmptyEvent, IncoherentAssertions, ModelValidationError, Unsupported
from cohera.gambles.models import Event, Gamble, PossibilitySpace, is_nonneg_nonzero
from cohera.partitions.models import Partition
from cohera.partitions.operations import (
    blockwise_min,
    first_nonzero_positive,
    induced_block_order,
    measurability_equations,
)


class SetRep:
    kind: ClassVar[str]
    space: PossibilitySpace

    def contains(self, f: Gamble) -> bool:
        raise NotImplementedError

    @property
    def is_top(self) -> bool:
        return False

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class Top(SetRep):
    """The whole of L(Ω): the null element, never coherent."""

    kind: ClassVar[str] = 'top'
    space: PossibilitySpace = field(repr=False)

    def contains(self, f: Gamble) -> bool:
        return True

    @property
    def is_top(self) -> bool:
        return True


@dataclass(frozen=True)
class Unit(SetRep):
    kind: ClassVar[str] = 'unit'
    space: PossibilitySpace = field(repr=False)

    def contains(self, f: Gamble) -> bool:
        return is_nonneg_nonzero(f)


@dataclass(frozen=True)
class Assertions(SetRep):
    """C(K) for a finite list K that is known to be coherent."""

    kind: ClassVar[str] = 'assertions'
    space: PossibilitySpace = field(repr=False)
    gambles: tuple[Gamble, ...]

    def __post_init__(self):
        for g in self.gambles:
            self.space.check(g.space)
            if g.is_zero:
                raise ModelValidationError('assertions', 'the zero gamble is not an assertion')
        if nonpositive_combination(self.gambles):
            raise IncoherentAssertions(
                f'assertions {self.describe()} incur a sure loss; their closure is the top set'
            )

    @classmethod
    def of(cls, space: PossibilitySpace, gambles: Iterable[Gamble]) -> 'Assertions':
        unique: dict[Gamble, None] = {}
        for g in gambles:
            if not g.is_zero:
                unique.setdefault(g, None)
        return cls(space, tuple(unique))

    @cached_property
    def cone_generators(self) -> list[Gamble]:
        return list(self.gambles) + singleton_indicators(self.space)

    def contains(self, f: Gamble) -> bool:
        self.space.check(f.space)
        if f.is_zero:
            return False
        return cone_member(self.cone_generators, f).member

    def describe(self) -> str:
        return 'assertions[' + ';'.join(g.describe() for g in self.gambles) + ']'


@dataclass(frozen=True)
class EventSet(SetRep):
    """D_S: gambles with a strictly positive infimum on S, together with L⁺."""

    kind: ClassVar[str] = 'event'
    event: Event

    def __post_init__(self):
        if self.event.is_empty:
            raise EmptyEvent('the empty event lifts to the top set; use EventSet.lift')
        if self.event.is_full:
            raise ModelValidationError('event', 'the full event lifts to the unit set; use EventSet.lift')

    @property
    def space(self) -> PossibilitySpace:
        return self.event.space

    @classmethod
    def lift(cls, event: Event) -> SetRep:
        if event.is_empty:
            return Top(event.space)
        if event.is_full:
            return Unit(event.space)
        return cls(event)

    def contains(self, f: Gamble) -> bool:
        self.space.check(f.space)
        if is_nonneg_nonzero(f):
            return True
        return all(f[w] > 0 for w in self.event.members)

    def describe(self) -> str:
        return 'event' + self.event.describe()


@dataclass(frozen=True)
class LexAtom(SetRep):
    """The maximal set of gambles whose first nonzero value along ``order`` is positive."""

    kind: ClassVar[str] = 'lex-atom'
    space: PossibilitySpace = field(repr=False)
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.space))):
            raise ModelValidationError('order', f'{self.order} is not a permutation of the worlds')

    @classmethod
    def named(cls, space: PossibilitySpace, names: Iterable[str]) -> 'LexAtom':
        return cls(space, tuple(space.position(n) for n in names))

    def contains(self, f: Gamble) -> bool:
        self.space.check(f.space)
        return first_nonzero_positive(f.values, self.order)

    def names(self) -> list[str]:
        return [self.space.worlds[w] for w in self.order]

    def describe(self) -> str:
        return 'lex(' + ','.join(self.names()) + ')'


@dataclass(frozen=True)
class SymbolicExtract(SetRep):
    """ε_x(inner) kept unevaluated; membership is decided without double description."""

    kind: ClassVar[str] = 'extract'
    inner: Union[Assertions, LexAtom]
    partition: Partition

    def __post_init__(self):
        if not isinstance(self.inner, (Assertions, LexAtom)):
            raise Unsupported(f'no lazy extraction for {self.inner.describe()}')
        self.inner.space.check(self.partition.space)

    @property
    def space(self) -> PossibilitySpace:
        return self.inner.space

    @cached_property
    def block_order(self) -> tuple[int, ...]:
        if not isinstance(self.inner, LexAtom):
            raise Unsupported('only local atoms carry a block order')
        return induced_block_order(self.inner.order, self.partition)

    def contains(self, f: Gamble) -> bool:
        self.space.check(f.space)
        if f.is_zero:
            return False
        if is_nonneg_nonzero(f):
            return True
        if isinstance(self.inner, LexAtom):
            floor = blockwise_min(f, self.partition)
            representative = [min(self.partition.blocks[b]) for b in self.block_order]
            return first_nonzero_positive(floor.values, representative)
        return dominated_by_subspace_member(
            self.inner.cone_generators, measurability_equations(self.partition), f
        ).member

    def describe(self) -> str:
        return f'extract({self.inner.describe()},{self.partition.describe()})'
