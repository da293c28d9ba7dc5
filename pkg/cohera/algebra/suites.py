"""The information-algebra axiom suite, run on a loaded or a generated model."""

import logging
from itertools import product
from typing import Callable, Optional

from cohera.algebra.models import AlgebraModel
from cohera.algebra.operations import combine, extract, extract_member_oracle
from cohera.contrib.exceptions import Unsupported, check_limit
from cohera.contrib.reports import SuiteRecorder
from cohera.contrib.schemas import Report
from cohera.desirability.models import Assertions, SetRep, Top, Unit
from cohera.desirability.operations import leq
from cohera.desirability.sampling import GambleSampler
from cohera.gambles.models import numbered_space
from cohera.partitions.models import Partition, QuestionLattice
from cohera.partitions.operations import cond_independent, full_lattice
from cohera.partitions.suites import check_lattice

logger = logging.getLogger(__name__)

AXIOM_MAX_SIZE = 5
SCOPE = 'representable fragment: top, unit, assertions, event sets'


class _Algebra:
    """Memoized combination, extraction and order for one suite run.

    Unsupported outcomes are memoized too and raised again on every lookup.
    """

    def __init__(self, lattice: QuestionLattice):
        self.lattice = lattice
        self._extracted: dict = {}
        self._combined: dict = {}
        self._leq: dict = {}
        self._supported: dict = {}
        self._independent: dict = {}

    @staticmethod
    def _cached(table: dict, key, compute: Callable):
        if key not in table:
            try:
                table[key] = compute()
            except Unsupported as exc:
                table[key] = exc
        value = table[key]
        if isinstance(value, Unsupported):
            raise value
        return value

    def extract(self, d: SetRep, px: Partition) -> SetRep:
        return self._cached(self._extracted, (d, px), lambda: extract(d, px))

    def combine(self, d1: SetRep, d2: SetRep) -> SetRep:
        return self._cached(self._combined, (d1, d2), lambda: combine(d1, d2))

    def leq(self, d1: SetRep, d2: SetRep) -> bool:
        return self._cached(self._leq, (d1, d2), lambda: leq(d1, d2))

    def equal(self, d1: SetRep, d2: SetRep) -> bool:
        return self.leq(d1, d2) and self.leq(d2, d1)

    def supported(self, d: SetRep, qname: str) -> bool:
        """Whether the question reproduces ``d`` on extraction."""
        px = self.lattice.get(qname)
        return self._cached(self._supported, (d, qname), lambda: self.equal(self.extract(d, px), d))

    def supports(self, d: SetRep) -> list[str]:
        return [name for name in self.lattice.by_coarseness() if self.supported(d, name)]

    def cond_independent(self, xn: str, yn: str, zn: str) -> bool:
        """x ∨ z and y ∨ z independent given z."""
        lattice = self.lattice

        def compute() -> bool:
            xz, yz = lattice.join(xn, zn), lattice.join(yn, zn)
            return cond_independent([lattice.get(xz), lattice.get(yz)], lattice.get(zn))

        return self._cached(self._independent, (xn, yn, zn), compute)


def _attempt(recorder: SuiteRecorder, law: str, check: Callable[[], bool], **inputs) -> None:
    try:
        ok = check()
    except Unsupported:
        recorder.skip(law)
        return
    recorder.check(law, ok, **inputs)


def axiom_suite(model: AlgebraModel, n_samples: int, seed: int,
                recorder: Optional[SuiteRecorder] = None, lattice_checks: bool = True) -> Report:
    own = recorder or SuiteRecorder('axioms', scope=SCOPE)
    space, lattice = model.space, model.lattice
    alg = _Algebra(lattice)
    top, unit = Top(space), Unit(space)
    sets = list(model.sets.items())
    questions = [(name, lattice.get(name)) for name in lattice.names]

    if lattice_checks:
        check_lattice(own, lattice)

    for name, d in sets:
        _attempt(own, 'null', lambda: alg.equal(alg.combine(d, top), top), d=name)
        _attempt(own, 'unit', lambda: alg.equal(alg.combine(d, unit), d), d=name)
        _attempt(own, 'idempotent', lambda: alg.equal(alg.combine(d, d), d), d=name)
    for (n1, d1), (n2, d2) in product(sets, repeat=2):
        _attempt(own, 'commutative',
                 lambda: alg.equal(alg.combine(d1, d2), alg.combine(d2, d1)), d1=n1, d2=n2)
        _attempt(own, 'order-by-combination',
                 lambda: alg.leq(d1, d2) == alg.equal(alg.combine(d1, d2), d2), d1=n1, d2=n2)
    for (n1, d1), (n2, d2), (n3, d3) in product(sets, repeat=3):
        _attempt(own, 'associative',
                 lambda: alg.equal(alg.combine(alg.combine(d1, d2), d3),
                                   alg.combine(d1, alg.combine(d2, d3))),
                 d1=n1, d2=n2, d3=n3)

    for qname, px in questions:
        own.check('extract-null', alg.extract(top, px).is_top, x=qname)
        for name, d in sets:
            ex = alg.extract(d, px)
            _attempt(own, 'extract-absorb', lambda: alg.equal(alg.combine(ex, d), d), d=name, x=qname)
            _attempt(own, 'extract-below', lambda: alg.leq(ex, d), d=name, x=qname)
            for n2, d2 in sets:
                _attempt(own, 'extract-combine',
                         lambda: alg.equal(alg.extract(alg.combine(ex, d2), px),
                                           alg.combine(ex, alg.extract(d2, px))),
                         d1=name, d2=n2, x=qname)
                _attempt(own, 'extract-monotone',
                         lambda: not alg.leq(d, d2) or alg.leq(ex, alg.extract(d2, px)),
                         d1=name, d2=n2, x=qname)

    for name, d in sets:
        found = alg.supports(d)
        own.check('support', bool(found), d=name)
        for low, high in product(found, lattice.names):
            if lattice.leq(low, high):
                own.check('support-upward', high in found, d=name, x=low, y=high)

    _existential_quantifier(own, alg, model)
    _oracle_agreement(own, alg, model, n_samples, seed)
    return own.build()


def _existential_quantifier(recorder: SuiteRecorder, alg: _Algebra, model: AlgebraModel) -> None:
    lattice = model.lattice
    names = lattice.names
    for xn, yn, zn in product(names, repeat=3):
        if not alg.cond_independent(xn, yn, zn):
            recorder.skip('existential-quantifier', len(model.sets))
            continue
        pz, yz = lattice.get(zn), lattice.get(lattice.join(yn, zn))
        for name, d in model.sets.items():
            try:
                if not alg.supported(d, xn):
                    recorder.skip('existential-quantifier')
                    continue
                ok = alg.equal(alg.extract(d, yz), alg.extract(alg.extract(d, pz), yz))
            except Unsupported:
                recorder.skip('existential-quantifier')
                continue
            recorder.check('existential-quantifier', ok, d=name, x=xn, y=yn, z=zn)


def _oracle_agreement(recorder: SuiteRecorder, alg: _Algebra, model: AlgebraModel,
                      n_samples: int, seed: int) -> None:
    """Double description against the single-LP extraction oracle on sampled gambles."""
    sampler = GambleSampler(model.space, seed)
    targets = [(n, d) for n, d in model.sets.items() if isinstance(d, Assertions)]
    questions = list(model.lattice.partitions.items())
    if not targets:
        return
    for i in range(n_samples):
        name, d = targets[i % len(targets)]
        qname, px = questions[sampler.rng.randrange(len(questions))]
        f = sampler.nonzero()
        ex = alg.extract(d, px)
        recorder.check('extract-oracle', ex.contains(f) == extract_member_oracle(d, px, f),
                       witness=f, d=name, x=qname)


def random_model(size: int, seed: int, n_sets: int, max_assertions: int) -> AlgebraModel:
    space = numbered_space(size)
    sampler = GambleSampler(space, seed)
    pool = sampler.set_pool(n_sets, max_assertions)
    sets = {f'D{i}': d for i, d in enumerate(pool)}
    return AlgebraModel(space, full_lattice(space), sets)


def generated_axiom_suite(space_size_limit: int, n_models: int, n_samples: int, seed: int,
                          n_sets: int, max_assertions: int) -> Report:
    check_limit('axioms', space_size_limit, AXIOM_MAX_SIZE)
    recorder = SuiteRecorder('axioms', scope=SCOPE)
    for size in range(1, space_size_limit + 1):
        for k in range(n_models):
            model = random_model(size, seed + 97 * size + k, n_sets, max_assertions)
            logger.info('axioms: |Ω|=%d model %d with %d sets', size, k, len(model.sets))
            axiom_suite(model, n_samples, seed + k, recorder, lattice_checks=k == 0)
    return recorder.build()
