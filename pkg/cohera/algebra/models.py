from dataclasses import dataclass, field

from cohera.contrib.exceptions import UnknownEvent, UnknownSet
from cohera.desirability.models import SetRep
from cohera.gambles.models import Event, PossibilitySpace
from cohera.partitions.models import Partition, QuestionLattice


@dataclass(frozen=True)
class AlgebraModel:
    """Named sets of gambles and events over one space, with its question lattice."""

    space: PossibilitySpace
    lattice: QuestionLattice
    sets: dict[str, SetRep] = field(default_factory=dict)
    events: dict[str, Event] = field(default_factory=dict)

    def __post_init__(self):
        self.space.check(self.lattice.space)
        for d in self.sets.values():
            self.space.check(d.space)
        for e in self.events.values():
            self.space.check(e.space)

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.sets), tuple(self.events)))

    def get_set(self, name: str) -> SetRep:
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownSet(f'unknown set {name!r}') from None

    def get_event(self, name: str) -> Event:
        try:
            return self.events[name]
        except KeyError:
            raise UnknownEvent(f'unknown event {name!r}') from None

    def question(self, name: str) -> Partition:
        return self.lattice.get(name)
