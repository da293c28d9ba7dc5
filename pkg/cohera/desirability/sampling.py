import random
from fractions import Fraction
from itertools import permutations
from typing import Optional

from cohera.desirability.models import Assertions, EventSet, LexAtom, SetRep, Unit
from cohera.desirability.operations import closure
from cohera.gambles.models import Event, Gamble, PossibilitySpace

LOW, HIGH = -3, 3
REJECTION_TRIES = 40


class GambleSampler:
    """Deterministic gamble generator; coordinates are drawn from LOW..HIGH."""

    def __init__(self, space: PossibilitySpace, seed: int):
        self.space = space
        self.rng = random.Random(seed)

    def gamble(self) -> Gamble:
        return Gamble(self.space, tuple(Fraction(self.rng.randint(LOW, HIGH)) for _ in self.space))

    def nonzero(self) -> Gamble:
        while True:
            f = self.gamble()
            if not f.is_zero:
                return f

    def positive(self) -> Gamble:
        """A member of L⁺."""
        values = [Fraction(self.rng.randint(0, HIGH)) for _ in self.space]
        if not any(values):
            values[self.rng.randrange(len(values))] = Fraction(self.rng.randint(1, HIGH))
        return Gamble(self.space, tuple(values))

    def scalar(self) -> Fraction:
        return Fraction(self.rng.randint(1, 6), self.rng.randint(1, 3))

    def member(self, d: SetRep) -> Gamble:
        """A member of ``d``: rejection first, then a constructed one."""
        for _ in range(REJECTION_TRIES):
            f = self.nonzero()
            if d.contains(f):
                return f
        return self._construct(d)

    def _construct(self, d: SetRep) -> Gamble:
        if isinstance(d, Assertions):
            total = self.positive()
            for g in d.gambles:
                if self.rng.random() < 0.7:
                    total = total + self.scalar() * g
            return total
        if isinstance(d, EventSet):
            f = self.gamble()
            low = min(f[w] for w in d.event.members)
            return f.shift(1 - low) if low <= 0 else f
        if isinstance(d, LexAtom):
            f = self.nonzero()
            return f if d.contains(f) else -f
        return self.positive()

    def event(self, allow_trivial: bool = False) -> Event:
        n = len(self.space)
        while True:
            members = frozenset(w for w in range(n) if self.rng.random() < 0.5)
            if allow_trivial or 0 < len(members) < n:
                return Event(self.space, members)
            if n == 1:
                return Event(self.space, members)

    def assertions(self, max_size: int) -> Optional[SetRep]:
        """A coherent closure of up to ``max_size`` sampled gambles, or None after repeated sure loss."""
        for _ in range(REJECTION_TRIES):
            k = self.rng.randint(1, max_size)
            result = closure(self.space, [self.nonzero() for _ in range(k)])
            if not result.is_top:
                return result
        return None

    def set_pool(self, size: int, max_assertions: int) -> list[SetRep]:
        """Unit plus a mix of event sets and assertion sets, ``size`` in total."""
        pool: list[SetRep] = [Unit(self.space)]
        while len(pool) < size:
            if self.rng.random() < 0.4:
                candidate = EventSet.lift(self.event())
            else:
                candidate = self.assertions(max_assertions)
            if candidate is not None and not candidate.is_top:
                pool.append(candidate)
        return pool


def all_lex_orders(space: PossibilitySpace) -> list[tuple[int, ...]]:
    return list(permutations(range(len(space))))
