"""Sampled audits of coherence, maximality and strict desirability."""

import logging
from typing import Iterable, Optional

from cohera.contrib.exceptions import EmptyEvent, TopNotCoherent, check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.desirability.models import EventSet, LexAtom, SetRep
from cohera.desirability.operations import lower_prevision
from cohera.desirability.sampling import GambleSampler, all_lex_orders
from cohera.gambles.models import Event, Gamble, all_events, is_nonneg_nonzero, numbered_space

logger = logging.getLogger(__name__)

COHERENCE_MAX_SIZE = 4


def check_coherence_axioms(d: SetRep, n_samples: int, seed: int,
                           recorder: Optional[SuiteRecorder] = None) -> Report:
    if d.is_top:
        raise TopNotCoherent('the top set contains 0 and is not coherent')
    own = recorder or SuiteRecorder('coherence-axioms')
    sampler = GambleSampler(d.space, seed)
    own.check('D2', not d.contains(Gamble.zero(d.space)), set=d)
    for _ in range(n_samples):
        f = sampler.positive()
        own.check('D1', d.contains(f), witness=f, set=d)
    for _ in range(n_samples):
        f, g = sampler.member(d), sampler.member(d)
        own.check('D3', d.contains(f + g), witness=f + g, set=d, f=f, g=g)
        c = sampler.scalar()
        own.check('D4', d.contains(c * f), witness=c * f, set=d, f=f, scale=c)
    return own.build()


def check_maximality_sampled(d: SetRep, n: int, seed: int,
                             recorder: Optional[SuiteRecorder] = None) -> Report:
    own = recorder or SuiteRecorder('maximality')
    sampler = GambleSampler(d.space, seed)
    for _ in range(n):
        f = sampler.nonzero()
        own.check('maximal', d.contains(f) or d.contains(-f), witness=f, set=d)
    return own.build()


def is_strictly_desirable_event_set(event: Event, n_samples: int, seed: int,
                                    recorder: Optional[SuiteRecorder] = None) -> Report:
    """Each sampled member of D_S outside L⁺ stays a member after subtracting half its infimum on S."""
    if event.is_empty:
        raise EmptyEvent('strict desirability needs a non-empty event')
    own = recorder or SuiteRecorder('strict-desirability')
    d = EventSet.lift(event)
    sampler = GambleSampler(event.space, seed)
    for _ in range(n_samples):
        f = sampler.member(d)
        if is_nonneg_nonzero(f):
            own.skip('strict')
            continue
        delta = lower_prevision(event, f) / 2
        own.check('strict', delta > 0 and d.contains(f.shift(-delta)),
                  witness=f.shift(-delta), event=event, f=f)
    return own.build()


def coherence_suite(space_size_limit: int, n_samples: int, seed: int, pool_size: int,
                    max_assertions: int, extra: Iterable[SetRep] = ()) -> Report:
    check_limit('coherence', space_size_limit, COHERENCE_MAX_SIZE)
    recorder = SuiteRecorder('coherence', scope='sampled audits on generated pools')
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        sampler = GambleSampler(space, seed + n)
        pool = sampler.set_pool(pool_size, max_assertions)
        atoms = [LexAtom(space, order) for order in all_lex_orders(space)]
        logger.info('coherence: |Ω|=%d, %d sets, %d atoms', n, len(pool), len(atoms))
        for i, d in enumerate(pool + atoms):
            check_coherence_axioms(d, n_samples, seed + i, recorder)
        for i, atom in enumerate(atoms):
            check_maximality_sampled(atom, n_samples, seed + i, recorder)
        for i, event in enumerate(e for e in all_events(space) if not e.is_empty):
            is_strictly_desirable_event_set(event, n_samples, seed + i, recorder)
    for i, d in enumerate(extra):
        if d.is_top:
            recorder.skip('D2')
            continue
        check_coherence_axioms(d, n_samples, seed + i, recorder)
    return recorder.build()

