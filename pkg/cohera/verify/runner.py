"""Runs the named verification suites in a fixed order and assembles a RunReport."""

import logging
from typing import Callable, Optional, Sequence

from cohera import __version__
from cohera.algebra.models import AlgebraModel
from cohera.algebra.suites import axiom_suite, generated_axiom_suite
from cohera.configs.settings import settings
from cohera.contrib.exceptions import EXIT_FALSE, EXIT_TRUE, EXIT_USAGE, CoheraError
from cohera.contrib.schemas import Report
from cohera.desirability.audits import coherence_suite
from cohera.embeddings.atom_suites import atom_properties_suite, atom_separoid_suite, atom_set_algebra_suite
from cohera.embeddings.events import event_hom_suite
from cohera.embeddings.saturation import saturation_lemma_suite, set_algebra_extraction_suite
from cohera.modelfile.loader import model_digest
from cohera.partitions.suites import quasi_separoid_suite
from cohera.verify.schemas import RunReport

logger = logging.getLogger(__name__)

SUITES = (
    'axioms',
    'separoid',
    'saturation',
    'set-extraction',
    'event-hom',
    'atom-separoid',
    'atom-set-algebra',
    'atom-properties',
    'coherence',
)


def resolve_suites(names: Sequence[str]) -> list[str]:
    chosen = set()
    for name in names:
        if name == 'all':
            chosen.update(SUITES)
        elif name in SUITES:
            chosen.add(name)
        else:
            raise CoheraError(f'unknown suite {name!r}; choose from {", ".join(SUITES)} or all', EXIT_USAGE)
    return [s for s in SUITES if s in chosen]


def _axioms(size_limit: int, seed: int, samples: int, model: Optional[AlgebraModel]) -> Report:
    if model is not None:
        return axiom_suite(model, samples, seed)
    return generated_axiom_suite(
        size_limit, settings.AXIOM_MODELS, samples, seed, settings.POOL_SETS, settings.MAX_ASSERTIONS
    )


def _runner(name: str) -> Callable[[int, int, int, Optional[AlgebraModel]], Report]:
    pool, k = settings.POOL_SETS, settings.MAX_ASSERTIONS
    return {
        'axioms': _axioms,
        'separoid': lambda n, seed, samples, model: quasi_separoid_suite(n),
        'saturation': lambda n, seed, samples, model: saturation_lemma_suite(n),
        'set-extraction': lambda n, seed, samples, model: set_algebra_extraction_suite(n),
        'event-hom': lambda n, seed, samples, model: event_hom_suite(n, samples, seed),
        'atom-separoid': lambda n, seed, samples, model: atom_separoid_suite(n),
        'atom-set-algebra': lambda n, seed, samples, model: atom_set_algebra_suite(n, pool, seed, k),
        'atom-properties': lambda n, seed, samples, model: atom_properties_suite(n, pool, seed, samples, k),
        'coherence': lambda n, seed, samples, model: coherence_suite(
            n, samples, seed, pool, k, model.sets.values() if model else ()
        ),
    }[name]


def run_suites(names: Sequence[str], size_limit: int, seed: int, samples: int,
               model: Optional[AlgebraModel] = None) -> RunReport:
    reports = []
    for name in resolve_suites(names):
        logger.info('running suite %s', name)
        report = _runner(name)(size_limit, seed, samples, model)
        logger.info('suite %s: %d attempted, %d failed', name, report.attempted, report.failed)
        reports.append(report)
    status = EXIT_TRUE if all(r.ok for r in reports) else EXIT_FALSE
    return RunReport(
        tool_version=__version__,
        model_digest=model_digest(model) if model is not None else None,
        seed=seed,
        size_limit=size_limit,
        samples=samples,
        suites=reports,
        exit_status=status,
    )
