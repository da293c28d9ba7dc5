from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from cohera.contrib.exceptions import ModelValidationError, SpaceMismatch, UnknownQuestion
from cohera.gambles.models import PossibilitySpace


def _canonical_labels(labels: Sequence) -> tuple[int, ...]:
    ids: dict = {}
    return tuple(ids.setdefault(label, len(ids)) for label in labels)


@dataclass(frozen=True)
class Partition:
    """A partition of the worlds; block ids are numbered by least member."""

    space: PossibilitySpace = field(compare=False, repr=False)
    block_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.block_of) != len(self.space):
            raise SpaceMismatch(
                f'block vector has {len(self.block_of)} entries for {len(self.space)} worlds'
            )
        if self.block_of != _canonical_labels(self.block_of):
            object.__setattr__(self, 'block_of', _canonical_labels(self.block_of))

    @classmethod
    def from_labels(cls, space: PossibilitySpace, labels: Sequence) -> 'Partition':
        return cls(space, _canonical_labels(labels))

    @classmethod
    def from_blocks(cls, space: PossibilitySpace, blocks: Iterable[Iterable[int]]) -> 'Partition':
        labels = [None] * len(space)
        for b, block in enumerate(blocks):
            for w in block:
                if labels[w] is not None:
                    raise ModelValidationError('blocks', f'world {space.worlds[w]!r} in two blocks')
                labels[w] = b
        if any(label is None for label in labels):
            raise ModelValidationError('blocks', 'blocks do not cover every world')
        return cls.from_labels(space, labels)

    @classmethod
    def bottom(cls, space: PossibilitySpace) -> 'Partition':
        return cls(space, (0,) * len(space))

    @classmethod
    def top(cls, space: PossibilitySpace) -> 'Partition':
        return cls(space, tuple(range(len(space))))

    @cached_property
    def blocks(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(len(self))]
        for w, b in enumerate(self.block_of):
            out[b].add(w)
        return tuple(frozenset(b) for b in out)

    def __len__(self) -> int:
        return max(self.block_of) + 1

    @property
    def is_bottom(self) -> bool:
        return len(self) == 1

    @property
    def is_top(self) -> bool:
        return len(self) == len(self.space)

    def describe(self) -> str:
        names = self.space.worlds
        return '|'.join(''.join(names[w] for w in sorted(b)) for b in self.blocks)


@dataclass(frozen=True)
class QuestionLattice:
    """A join-closed family of named partitions.

    ``names`` keeps the user's order followed by the partitions added while
    closing under join; ``additions`` records the latter.
    """

    space: PossibilitySpace = field(repr=False)
    partitions: dict[str, Partition]
    additions: tuple[str, ...] = ()

    def __hash__(self) -> int:
        return hash(tuple(self.partitions))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.partitions)

    def get(self, name: str) -> Partition:
        try:
            return self.partitions[name]
        except KeyError:
            raise UnknownQuestion(f'unknown question {name!r}') from None

    def name_of(self, partition: Partition) -> str:
        for name, p in self.partitions.items():
            if p == partition:
                return name
        raise UnknownQuestion(f'partition {partition.describe()} is not in the lattice')

    def __contains__(self, partition: Partition) -> bool:
        return partition in self.partitions.values()

    @cached_property
    def leq_table(self) -> dict[tuple[str, str], bool]:
        from cohera.partitions.operations import partition_leq

        return {
            (a, b): partition_leq(pa, pb)
            for a, pa in self.partitions.items()
            for b, pb in self.partitions.items()
        }

    @cached_property
    def join_table(self) -> dict[tuple[str, str], str]:
        from cohera.partitions.operations import partition_join

        return {
            (a, b): self.name_of(partition_join(pa, pb))
            for a, pa in self.partitions.items()
            for b, pb in self.partitions.items()
        }

    def leq(self, a: str, b: str) -> bool:
        self.get(a), self.get(b)
        return self.leq_table[a, b]

    def join(self, a: str, b: str) -> str:
        self.get(a), self.get(b)
        return self.join_table[a, b]

    def by_coarseness(self) -> list[str]:
        order = {name: i for i, name in enumerate(self.partitions)}
        return sorted(self.partitions, key=lambda n: (len(self.partitions[n]), order[n]))

    @property
    def has_top(self) -> bool:
        return any(p.is_top for p in self.partitions.values())
