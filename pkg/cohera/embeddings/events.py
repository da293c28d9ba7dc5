"""The embedding of events into coherent sets, S ↦ D_S, with constructive witnesses."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Union

from cohera.algebra.operations import combine, extract
from cohera.contrib.exceptions import EmptyEvent, NotInTarget, check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.desirability.models import EventSet, SetRep
from cohera.desirability.operations import leq, set_equal
from cohera.desirability.sampling import GambleSampler
from cohera.embeddings.saturation import saturate
from cohera.gambles.models import Event, Gamble, all_events, is_nonneg_nonzero, numbered_space
from cohera.partitions.models import Partition
from cohera.partitions.operations import enumerate_partitions

logger = logging.getLogger(__name__)

EVENT_HOM_MAX_SIZE = 4
DELTA = Fraction(1)

Extractor = Callable[[SetRep, Partition], SetRep]


@dataclass(frozen=True)
class CombinationSplit:
    """f = first + second with first in D_S and second in D_T."""

    first: Gamble
    second: Gamble

    def describe(self) -> str:
        return f'{self.first} + {self.second}'


@dataclass(frozen=True)
class IncoherenceWitness:
    """A member of D_S and a member of D_T summing to zero."""

    first: Gamble
    second: Gamble

    def describe(self) -> str:
        return f'{self.first} + {self.second} = 0'


def lift_event(event: Event) -> SetRep:
    return EventSet.lift(event)


def _piecewise(f: Gamble, pieces: dict[int, Fraction]) -> Gamble:
    return Gamble(f.space, tuple(pieces.get(w, f[w]) for w in range(len(f))))


def combine_events_witness(s: Event, t: Event, f: Gamble,
                           g: Optional[Gamble] = None) -> Union[CombinationSplit, IncoherenceWitness]:
    """Split f ∈ D_{S∩T} over D_S and D_T, or show D_S · D_T is the top set.

    In the disjoint case ``f`` must be a member of D_S and ``g`` (by default the
    indicator of T) a member of D_T, both with strictly positive infimum.
    """
    s.space.check(t.space)
    s.space.check(f.space)
    both = s & t
    if both.is_empty:
        if s.is_empty or t.is_empty:
            raise EmptyEvent('the incoherence witness needs two non-empty events')
        g = t.indicator() if g is None else g
        if not all(f[w] > 0 for w in s.members):
            raise NotInTarget(f'{f} has no positive infimum on {s.describe()}')
        if not all(g[w] > 0 for w in t.members):
            raise NotInTarget(f'{g} has no positive infimum on {t.describe()}')
        zero = Fraction(0)
        first = [zero] * len(f)
        second = [zero] * len(f)
        for w in s.members:
            first[w], second[w] = f[w], -f[w]
        for w in t.members:
            first[w], second[w] = -g[w], g[w]
        return IncoherenceWitness(Gamble(f.space, tuple(first)), Gamble(f.space, tuple(second)))

    if all(f[w] > 0 for w in both.members):
        pieces = {w: f[w] / 2 for w in range(len(f)) if w in both or w not in s | t}
        pieces.update({w: DELTA for w in (s - t).members})
        pieces.update({w: f[w] - DELTA for w in (t - s).members})
        first = _piecewise(f, pieces)
        return CombinationSplit(first, f - first)
    if is_nonneg_nonzero(f):
        half = Fraction(1, 2) * f
        return CombinationSplit(half, half)
    raise NotInTarget(f'{f} is not in D{both.describe()}')


def _split_is_valid(s: Event, t: Event, f: Gamble, split) -> bool:
    if isinstance(split, IncoherenceWitness):
        return (split.first + split.second).is_zero and \
            EventSet.lift(s).contains(split.first) and EventSet.lift(t).contains(split.second)
    return split.first + split.second == f and \
        EventSet.lift(s).contains(split.first) and EventSet.lift(t).contains(split.second)


def event_hom_suite(space_size_limit: int, n_samples: int = 0, seed: int = 0,
                    extractor: Extractor = extract) -> Report:
    """S ↦ D_S preserves combination, null, unit and extraction, and is one-to-one."""
    check_limit('event-hom', space_size_limit, EVENT_HOM_MAX_SIZE)
    recorder = SuiteRecorder('event-hom', scope=f'all events and partitions, |Ω| = 1..{space_size_limit}')
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        events = all_events(space)
        lifted = {e: lift_event(e) for e in events}
        recorder.check('null', lifted[Event.empty(space)].is_top, n=n)
        recorder.check('unit', lifted[Event.full(space)].kind == 'unit', n=n)
        for s, t in product(events, repeat=2):
            labels = {'s': s, 't': t}
            recorder.check('combine', set_equal(combine(lifted[s], lifted[t]), lifted[s & t]), **labels)
            recorder.check('injective', not set_equal(lifted[s], lifted[t]) or s == t, **labels)
            if t <= s and not t.is_empty:
                recorder.check('order', leq(lifted[s], lifted[t]), **labels)
        for px in enumerate_partitions(space):
            for s in events:
                recorder.check(
                    'extract', set_equal(extractor(lifted[s], px), lifted[saturate(s, px)]),
                    x=px, s=s,
                )
        _witness_checks(recorder, events, n_samples, seed + n)
        logger.info('event-hom: |Ω|=%d done', n)
    return recorder.build()


def _witness_checks(recorder: SuiteRecorder, events: list[Event], n_samples: int, seed: int) -> None:
    nonempty = [e for e in events if not e.is_empty]
    if not nonempty or n_samples <= 0:
        return
    sampler = GambleSampler(nonempty[0].space, seed)
    for _ in range(n_samples):
        s = nonempty[sampler.rng.randrange(len(nonempty))]
        t = nonempty[sampler.rng.randrange(len(nonempty))]
        both = s & t
        if both.is_empty:
            f = _strictly_positive_on(sampler.gamble(), s)
            g = _strictly_positive_on(sampler.gamble(), t)
            split = combine_events_witness(s, t, f, g)
            recorder.check('witness-disjoint', _split_is_valid(s, t, f, split), witness=split, s=s, t=t, f=f)
            continue
        f = sampler.member(lift_event(both))
        split = combine_events_witness(s, t, f)
        recorder.check('witness-split', _split_is_valid(s, t, f, split), witness=split, s=s, t=t, f=f)


def _strictly_positive_on(f: Gamble, event: Event) -> Gamble:
    low = min(f[w] for w in event.members)
    return f if low > 0 else f.shift(1 - low)
