"""Finite possibility spaces, gambles and events.

Every value here is immutable; arithmetic is exact over :class:`fractions.Fraction`.
World order is fixed when the space is built and every vector refers to it.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from cohera.contrib.exceptions import (
    DuplicateWorld,
    EmptySpace,
    ParseError,
    SpaceMismatch,
)

RationalLike = Union[int, str, Fraction]

RATIONAL = re.compile(r'[+-]?\d+(/\d+)?')


def parse_rational(text: RationalLike) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    cleaned = str(text).strip()
    if not RATIONAL.fullmatch(cleaned):
        raise ParseError(f'not a rational: {text!r}; expected an integer or p/q')
    try:
        return Fraction(cleaned)
    except ZeroDivisionError as exc:
        raise ParseError(f'not a rational: {text!r}') from exc


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


@dataclass(frozen=True)
class PossibilitySpace:
    worlds: tuple[str, ...]

    def __post_init__(self):
        if not self.worlds:
            raise EmptySpace('a possibility space needs at least one world')
        seen = set()
        for name in self.worlds:
            if name in seen:
                raise DuplicateWorld(f'world {name!r} appears twice')
            seen.add(name)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.worlds)}

    def __len__(self) -> int:
        return len(self.worlds)

    def __iter__(self) -> Iterator[str]:
        return iter(self.worlds)

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise SpaceMismatch(f'unknown world {name!r}') from None

    def check(self, other: 'PossibilitySpace') -> None:
        if other is not self and other.worlds != self.worlds:
            raise SpaceMismatch('objects live on different possibility spaces')


def make_space(names: Iterable[str]) -> PossibilitySpace:
    return PossibilitySpace(tuple(names))


def numbered_space(size: int) -> PossibilitySpace:
    return make_space(f'w{i}' for i in range(size))


@dataclass(frozen=True)
class Gamble:
    space: PossibilitySpace = field(compare=False, repr=False)
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.space):
            raise SpaceMismatch(
                f'gamble has {len(self.values)} values for {len(self.space)} worlds'
            )

    @classmethod
    def of(cls, space: PossibilitySpace, values: Iterable[RationalLike]) -> 'Gamble':
        return cls(space, tuple(parse_rational(v) for v in values))

    @classmethod
    def zero(cls, space: PossibilitySpace) -> 'Gamble':
        return cls(space, (Fraction(0),) * len(space))

    @classmethod
    def constant(cls, space: PossibilitySpace, value: RationalLike) -> 'Gamble':
        return cls(space, (parse_rational(value),) * len(space))

    @classmethod
    def indicator(cls, space: PossibilitySpace, members: Iterable[int]) -> 'Gamble':
        chosen = set(members)
        return cls(space, tuple(Fraction(int(i in chosen)) for i in range(len(space))))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __add__(self, other: 'Gamble') -> 'Gamble':
        return gamble_add(self, other)

    def __sub__(self, other: 'Gamble') -> 'Gamble':
        return gamble_add(self, -other)

    def __neg__(self) -> 'Gamble':
        return Gamble(self.space, tuple(-v for v in self.values))

    def __rmul__(self, scalar: RationalLike) -> 'Gamble':
        return gamble_scale(parse_rational(scalar), self)

    def shift(self, amount: RationalLike) -> 'Gamble':
        c = parse_rational(amount)
        return Gamble(self.space, tuple(v + c for v in self.values))

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def dominates(self, other: 'Gamble') -> bool:
        self.space.check(other.space)
        return all(a >= b for a, b in zip(self.values, other.values))

    def describe(self) -> str:
        return ','.join(format_rational(v) for v in self.values)

    def __str__(self) -> str:
        return f'({self.describe()})'


def gamble_add(f: Gamble, g: Gamble) -> Gamble:
    f.space.check(g.space)
    return Gamble(f.space, tuple(a + b for a, b in zip(f.values, g.values)))


def gamble_scale(c: Fraction, f: Gamble) -> Gamble:
    return Gamble(f.space, tuple(c * v for v in f.values))


def is_nonneg_nonzero(f: Gamble) -> bool:
    return all(v >= 0 for v in f.values) and any(f.values)


def parse_gamble(space: PossibilitySpace, text: Union[str, Sequence[RationalLike]]) -> Gamble:
    if isinstance(text, str):
        parts = [p for p in text.replace(' ', '').split(',') if p != '']
    else:
        parts = list(text)
    if len(parts) != len(space):
        raise ParseError(f'expected {len(space)} values, got {len(parts)}: {text!r}')
    return Gamble.of(space, parts)


@dataclass(frozen=True)
class Event:
    space: PossibilitySpace = field(compare=False, repr=False)
    members: frozenset[int]

    def __post_init__(self):
        if any(not 0 <= i < len(self.space) for i in self.members):
            raise SpaceMismatch('event refers to worlds outside its space')

    @classmethod
    def of(cls, space: PossibilitySpace, members: Iterable[int]) -> 'Event':
        return cls(space, frozenset(members))

    @classmethod
    def named(cls, space: PossibilitySpace, names: Iterable[str]) -> 'Event':
        return cls(space, frozenset(space.position(n) for n in names))

    @classmethod
    def empty(cls, space: PossibilitySpace) -> 'Event':
        return cls(space, frozenset())

    @classmethod
    def full(cls, space: PossibilitySpace) -> 'Event':
        return cls(space, frozenset(range(len(space))))

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return len(self.members) == len(self.space)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __and__(self, other: 'Event') -> 'Event':
        self.space.check(other.space)
        return Event(self.space, self.members & other.members)

    def __or__(self, other: 'Event') -> 'Event':
        self.space.check(other.space)
        return Event(self.space, self.members | other.members)

    def __sub__(self, other: 'Event') -> 'Event':
        self.space.check(other.space)
        return Event(self.space, self.members - other.members)

    def __le__(self, other: 'Event') -> bool:
        self.space.check(other.space)
        return self.members <= other.members

    def complement(self) -> 'Event':
        return Event(self.space, frozenset(range(len(self.space))) - self.members)

    def indicator(self) -> Gamble:
        return Gamble.indicator(self.space, self.members)

    def names(self) -> list[str]:
        return [self.space.worlds[i] for i in sorted(self.members)]

    def describe(self) -> str:
        return '{' + ','.join(self.names()) + '}'


def all_events(space: PossibilitySpace) -> list[Event]:
    n = len(space)
    return [
        Event(space, frozenset(i for i in range(n) if mask >> i & 1))
        for mask in range(1 << n)
    ]
