"""Suites for the atom side: the separoid embedding, the set algebra of atoms and atom properties.

Only laws provable on the lexicographic family are asserted; directions that
hold for the full set of atoms but not necessarily on this family are measured
as exploratory findings.
"""

import logging
from fractions import Fraction
from itertools import product

from cohera.algebra.operations import combine, extract
from cohera.contrib.exceptions import Unsupported, check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.desirability.audits import check_coherence_axioms
from cohera.desirability.models import Top, Unit
from cohera.desirability.operations import leq, set_equal
from cohera.desirability.sampling import GambleSampler
from cohera.embeddings.atoms import at_of, atom_partition, atom_saturate, enum_lex_atoms
from cohera.gambles.models import Gamble, numbered_space
from cohera.partitions.operations import cond_independent, enumerate_partitions, partition_join, partition_leq

logger = logging.getLogger(__name__)

ATOM_SUITES_MAX_SIZE = 4
FAMILY_SCOPE = 'lexicographic atom family'


def atom_separoid_suite(space_size_limit: int) -> Report:
    check_limit('atom-separoid', space_size_limit, ATOM_SUITES_MAX_SIZE)
    recorder = SuiteRecorder('atom-separoid', scope=FAMILY_SCOPE)
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        family = enum_lex_atoms(space)
        partitions = enumerate_partitions(space)
        at = {p: atom_partition(p, family) for p in partitions}
        for px, py in product(partitions, repeat=2):
            labels = {'x': px, 'y': py}
            if partition_leq(px, py):
                recorder.check('order', partition_leq(at[px], at[py]), **labels)
            if partition_leq(at[px], at[py]):
                recorder.explore('order-converse', partition_leq(px, py), **labels)
            joined = at[partition_join(px, py)]
            both = partition_join(at[px], at[py])
            recorder.check('join-refines', partition_leq(both, joined), **labels)
            recorder.explore('join-reverse', partition_leq(joined, both), **labels)
        for px, py, pz in product(partitions, repeat=3):
            if cond_independent([px, py], pz):
                recorder.explore(
                    'conditional-independence',
                    cond_independent([at[px], at[py]], at[pz]),
                    x=px, y=py, z=pz,
                )
        logger.info('atom-separoid: |Ω|=%d, %d atoms', n, len(family))
    return recorder.build()


def atom_set_algebra_suite(space_size_limit: int, n_sets: int, seed: int, max_assertions: int = 3) -> Report:
    check_limit('atom-set-algebra', space_size_limit, ATOM_SUITES_MAX_SIZE)
    recorder = SuiteRecorder('atom-set-algebra', scope=FAMILY_SCOPE)
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        family = enum_lex_atoms(space)
        pool = GambleSampler(space, seed + n).set_pool(n_sets, max_assertions)
        at = {d: at_of(d, family) for d in pool}
        recorder.check('null', at_of(Top(space), family).is_empty, n=n)
        recorder.check('unit', at_of(Unit(space), family).is_full, n=n)
        for d1, d2 in product(pool, repeat=2):
            try:
                both = combine(d1, d2)
            except Unsupported:
                recorder.skip('combine')
                continue
            recorder.check('combine', at_of(both, family) == at[d1] & at[d2], d1=d1, d2=d2)
        for px in enumerate_partitions(space):
            for d in pool:
                saturated = atom_saturate(at[d], px, family)
                above = at_of(extract(d, px), family)
                recorder.check('extract', saturated <= above, witness=above, d=d, x=px)
                recorder.explore('extract-reverse', above <= saturated, d=d, x=px)
    return recorder.build()


def _small_gambles(space, low: int = -2, high: int = 2):
    values = [Fraction(v) for v in range(low, high + 1)]
    for point in product(values, repeat=len(space)):
        g = Gamble(space, point)
        if not g.is_zero:
            yield g


def atom_properties_suite(space_size_limit: int, n_sets: int, seed: int,
                          n_samples: int = 20, max_assertions: int = 3) -> Report:
    check_limit('atom-properties', space_size_limit, ATOM_SUITES_MAX_SIZE)
    recorder = SuiteRecorder('atom-properties', scope=FAMILY_SCOPE)
    for n in range(1, space_size_limit + 1):
        space = numbered_space(n)
        family = enum_lex_atoms(space)
        pool = GambleSampler(space, seed + n).set_pool(n_sets, max_assertions)
        gambles = list(_small_gambles(space))
        for i, m in enumerate(family.atoms):
            check_coherence_axioms(m, n_samples, seed + i, recorder)
            for f in gambles:
                recorder.check('maximal', m.contains(f) != m.contains(-f), witness=f, atom=m)
            for d in pool:
                md = combine(m, d)
                recorder.check('absorbs', md == m or md.is_top, d=d, atom=m)
                recorder.check('dominates-or-null', leq(d, m) or md.is_top, d=d, atom=m)
            for other in family.atoms:
                recorder.check('disjoint', set_equal(m, other) or combine(m, other).is_top,
                               atom=m, other=other)
    return recorder.build()
