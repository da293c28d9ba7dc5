"""Saturation operators and the set algebra of saturated events."""

import logging
from itertools import product
from typing import Optional

from cohera.contrib.exceptions import check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.gambles.models import Event, all_events, numbered_space
from cohera.partitions.models import Partition, QuestionLattice
from cohera.partitions.operations import cond_independent, enumerate_partitions, partition_join

logger = logging.getLogger(__name__)

SATURATION_MAX_SIZE = 5
SET_EXTRACTION_MAX_SIZE = 4


def saturate(event: Event, px: Partition) -> Event:
    """Union of the blocks of px that meet the event."""
    event.space.check(px.space)
    hit = {px.block_of[w] for w in event.members}
    return Event(event.space, frozenset(w for w, b in enumerate(px.block_of) if b in hit))


def in_PQ(event: Event, lattice: QuestionLattice) -> Optional[str]:
    for name in lattice.by_coarseness():
        if saturate(event, lattice.get(name)) == event:
            return name
    return None


def saturation_lemma_suite(space_size_limit: int) -> Report:
    check_limit('saturation', space_size_limit, SATURATION_MAX_SIZE)
    recorder = SuiteRecorder('saturation', scope=f'all events and partitions, |Ω| = 1..{space_size_limit}')
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        events = all_events(space)
        empty = Event.empty(space)
        for px in enumerate_partitions(space):
            sat = {s: saturate(s, px) for s in events}
            recorder.check('empty', sat[empty] == empty, x=px)
            for s in events:
                recorder.check('extensive', s <= sat[s], x=px, s=s)
                recorder.check('idempotent', sat[sat[s]] == sat[s], x=px, s=s)
                for t in events:
                    labels = {'x': px, 's': s, 't': t}
                    both = sat[s] & sat[t]
                    recorder.check('quantifier', sat[sat[s] & t] == both, **labels)
                    if s <= t:
                        recorder.check('monotone', sat[s] <= sat[t], **labels)
                    recorder.check('closed-intersection', sat[both] == both, **labels)
        logger.info('saturation: |Ω|=%d done', n)
    return recorder.build()


def set_algebra_extraction_suite(space_size_limit: int) -> Report:
    """σ_{y∨z}(σ_x(S)) = σ_{y∨z}(σ_z(σ_x(S))) whenever x∨z ⊥ y∨z | z."""
    check_limit('set-extraction', space_size_limit, SET_EXTRACTION_MAX_SIZE)
    recorder = SuiteRecorder('set-extraction', scope=f'all triples, |Ω| = 1..{space_size_limit}')
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        events = all_events(space)
        partitions = enumerate_partitions(space)
        for px, py, pz in product(partitions, repeat=3):
            xz, yz = partition_join(px, pz), partition_join(py, pz)
            if not cond_independent([xz, yz], pz):
                recorder.skip('extraction')
                continue
            for s in events:
                sx = saturate(s, px)
                recorder.check(
                    'extraction', saturate(sx, yz) == saturate(saturate(sx, pz), yz),
                    x=px, y=py, z=pz, s=s,
                )
    return recorder.build()
