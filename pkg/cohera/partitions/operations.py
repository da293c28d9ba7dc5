import logging
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable, Sequence

from cohera.contrib.exceptions import TooFewPartitions
from cohera.gambles.models import Gamble, PossibilitySpace
from cohera.partitions.models import Partition, QuestionLattice

logger = logging.getLogger(__name__)


def _same_space(*partitions: Partition) -> None:
    first = partitions[0].space
    for p in partitions[1:]:
        first.check(p.space)


def partition_leq(px: Partition, py: Partition) -> bool:
    """px <= py: every block of py sits inside a block of px."""
    _same_space(px, py)
    seen: dict[int, int] = {}
    for bx, by in zip(px.block_of, py.block_of):
        if seen.setdefault(by, bx) != bx:
            return False
    return True


def partition_join(px: Partition, py: Partition) -> Partition:
    _same_space(px, py)
    return Partition.from_labels(px.space, list(zip(px.block_of, py.block_of)))


def independent(partitions: Sequence[Partition]) -> bool:
    if len(partitions) < 2:
        raise TooFewPartitions('independence needs at least two partitions')
    _same_space(*partitions)
    realized = set(zip(*(p.block_of for p in partitions)))
    return len(realized) == prod(len(p) for p in partitions)


def cond_independent(partitions: Sequence[Partition], given: Partition) -> bool:
    if len(partitions) < 1:
        raise TooFewPartitions('conditional independence needs at least one partition')
    _same_space(given, *partitions)
    for block in given.blocks:
        realized = {tuple(p.block_of[w] for p in partitions) for w in block}
        meeting = [{p.block_of[w] for w in block} for p in partitions]
        if len(realized) != prod(len(m) for m in meeting):
            return False
    return True


def enumerate_partitions(space: PossibilitySpace) -> list[Partition]:
    """All partitions of the space via restricted growth strings, coarsest first."""
    n = len(space)
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], top: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for label in range(top + 2):
            prefix.append(label)
            grow(prefix, max(top, label))
            prefix.pop()

    grow([0], 0)
    partitions = [Partition(space, labels) for labels in out]
    return sorted(partitions, key=lambda p: (len(p), p.block_of))


def measurability_equations(px: Partition) -> list[Gamble]:
    space = px.space
    equations = []
    for block in px.blocks:
        members = sorted(block)
        for a, b in zip(members, members[1:]):
            values = [Fraction(0)] * len(space)
            values[a], values[b] = Fraction(1), Fraction(-1)
            equations.append(Gamble(space, tuple(values)))
    return equations


def is_measurable(f: Gamble, px: Partition) -> bool:
    px.space.check(f.space)
    return all(len({f[w] for w in block}) == 1 for block in px.blocks)


def blockwise_min(f: Gamble, px: Partition) -> Gamble:
    """The largest px-measurable gamble below f."""
    px.space.check(f.space)
    minima = [min(f[w] for w in block) for block in px.blocks]
    return Gamble(f.space, tuple(minima[b] for b in px.block_of))


def induced_block_order(order: Sequence[int], px: Partition) -> tuple[int, ...]:
    """Blocks of px listed by their first appearance along ``order``."""
    seen: list[int] = []
    for w in order:
        b = px.block_of[w]
        if b not in seen:
            seen.append(b)
    return tuple(seen)


def first_nonzero_positive(values: Sequence[Fraction], order: Iterable[int]) -> bool:
    for i in order:
        if values[i] != 0:
            return values[i] > 0
    return False


def build_lattice(space: PossibilitySpace, named: dict[str, Partition],
                  require_top: bool = False) -> QuestionLattice:
    """Close the named partitions under join, recording every addition."""
    partitions = dict(named)
    for p in partitions.values():
        space.check(p.space)
    additions: list[str] = []
    if require_top and not any(p.is_top for p in partitions.values()):
        partitions['top'] = Partition.top(space)
        additions.append('top')
    changed = True
    while changed:
        changed = False
        for a, b in list(product(list(partitions), repeat=2)):
            joined = partition_join(partitions[a], partitions[b])
            if joined not in partitions.values():
                name = f'join({a},{b})'
                partitions[name] = joined
                additions.append(name)
                changed = True
    if additions:
        logger.info('closed question list under join: added %s', ', '.join(additions))
    return QuestionLattice(space, partitions, tuple(additions))


def full_lattice(space: PossibilitySpace) -> QuestionLattice:
    named = {p.describe(): p for p in enumerate_partitions(space)}
    return QuestionLattice(space, named, ())
