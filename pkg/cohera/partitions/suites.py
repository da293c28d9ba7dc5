import logging
from itertools import product
from typing import Optional, Sequence

from cohera.contrib.exceptions import check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.gambles.models import numbered_space
from cohera.partitions.models import Partition, QuestionLattice
from cohera.partitions.operations import (
    cond_independent,
    enumerate_partitions,
    partition_join,
    partition_leq,
)

logger = logging.getLogger(__name__)

SEPAROID_MAX_SIZE = 5


class _Relation:
    """Memoized ``x ⊥ y | z`` over a fixed list of partitions."""

    def __init__(self, partitions: Sequence[Partition]):
        self.partitions = list(partitions)
        self.position = {p: i for i, p in enumerate(self.partitions)}
        self._ci: dict[tuple[int, int, int], bool] = {}

    def ci(self, x: int, y: int, z: int) -> bool:
        key = (x, y, z)
        if key not in self._ci:
            ps = self.partitions
            self._ci[key] = cond_independent([ps[x], ps[y]], ps[z])
        return self._ci[key]

    def join(self, x: int, y: int) -> Optional[int]:
        return self.position.get(partition_join(self.partitions[x], self.partitions[y]))


def check_separoid_laws(recorder: SuiteRecorder, partitions: Sequence[Partition]) -> None:
    """C1 to C4 and the join equivalence over every triple drawn from ``partitions``.

    Laws whose conclusion leaves the list (a join that is not a member) are skipped.
    """
    rel = _Relation(partitions)
    ps = rel.partitions
    below = {
        y: [w for w in range(len(ps)) if partition_leq(ps[w], ps[y])]
        for y in range(len(ps))
    }
    for x, y in product(range(len(ps)), repeat=2):
        recorder.check('C1', rel.ci(x, y, y), x=ps[x], y=ps[y])
    for x, y, z in product(range(len(ps)), repeat=3):
        holds = rel.ci(x, y, z)
        labels = {'x': ps[x], 'y': ps[y], 'z': ps[z]}
        if holds:
            recorder.check('C2', rel.ci(y, x, z), **labels)
            for w in below[y]:
                recorder.check('C3', rel.ci(x, w, z), w=ps[w], **labels)
        yz = rel.join(y, z)
        xz = rel.join(x, z)
        if yz is None or xz is None:
            recorder.skip('join-equivalence')
            if holds:
                recorder.skip('C4')
            continue
        if holds:
            recorder.check('C4', rel.ci(x, yz, z), **labels)
        recorder.check('join-equivalence', holds == rel.ci(xz, yz, z), **labels)


def check_lattice(recorder: SuiteRecorder, lattice: QuestionLattice) -> None:
    """Join-closure of the question list, then the separoid laws over its members."""
    members = list(lattice.partitions.values())
    for a, b in product(lattice.names, repeat=2):
        joined = partition_join(lattice.get(a), lattice.get(b))
        recorder.check('join-closed', joined in lattice, x=a, y=b, witness=joined)
    check_separoid_laws(recorder, members)


def quasi_separoid_suite(space_size_limit: int) -> Report:
    check_limit('separoid', space_size_limit, SEPAROID_MAX_SIZE)
    recorder = SuiteRecorder('separoid', scope=f'all partitions, |Ω| = 1..{space_size_limit}')
    for n in range(1, space_size_limit + 1):
        partitions = enumerate_partitions(numbered_space(n))
        logger.info('separoid: |Ω|=%d, %d partitions', n, len(partitions))
        check_separoid_laws(recorder, partitions)
    return recorder.build()
