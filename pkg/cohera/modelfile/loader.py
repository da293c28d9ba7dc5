import hashlib
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from cohera.algebra.models import AlgebraModel
from cohera.contrib.exceptions import CoheraError, ModelValidationError, ParseError, Unsupported
from cohera.desirability.models import Assertions, EventSet, LexAtom, SetRep, Top, Unit
from cohera.gambles.models import Event, PossibilitySpace, make_space, parse_gamble
from cohera.modelfile.schemas import (
    AssertionsSet,
    EventSetDescriptor,
    LexAtomSet,
    ModelFile,
    TopSet,
    UnitSet,
)
from cohera.partitions.models import Partition
from cohera.partitions.operations import build_lattice, full_lattice

logger = logging.getLogger(__name__)


def _field(*parts: Union[str, int]) -> str:
    return '.'.join(str(p) for p in parts)


def _build_set(space: PossibilitySpace, name: str, descriptor) -> SetRep:
    if isinstance(descriptor, TopSet):
        return Top(space)
    if isinstance(descriptor, UnitSet):
        return Unit(space)
    if isinstance(descriptor, AssertionsSet):
        gambles = []
        for i, row in enumerate(descriptor.gambles):
            try:
                gambles.append(parse_gamble(space, row))
            except CoheraError as exc:
                raise ModelValidationError(_field('sets', name, 'gambles', i), exc.detail) from exc
        try:
            return Assertions.of(space, gambles)
        except CoheraError as exc:
            raise ModelValidationError(_field('sets', name), exc.detail) from exc
    if isinstance(descriptor, EventSetDescriptor):
        return EventSet.lift(_build_event(space, ('sets', name, 'worlds'), descriptor.worlds))
    if isinstance(descriptor, LexAtomSet):
        try:
            return LexAtom.named(space, descriptor.order)
        except CoheraError as exc:
            raise ModelValidationError(_field('sets', name, 'order'), exc.detail) from exc
    raise Unsupported(f'unknown set kind for {name!r}')


def _build_event(space: PossibilitySpace, path: tuple, worlds: list[str]) -> Event:
    try:
        return Event.named(space, worlds)
    except CoheraError as exc:
        raise ModelValidationError(_field(*path), exc.detail) from exc


def build_model(document: ModelFile) -> AlgebraModel:
    try:
        space = make_space(document.omega)
    except CoheraError as exc:
        raise ModelValidationError('omega', exc.detail) from exc

    partitions: dict[str, Partition] = {}
    for name, labels in document.partitions.items():
        try:
            partitions[name] = Partition.from_labels(space, labels)
        except CoheraError as exc:
            raise ModelValidationError(_field('partitions', name), exc.detail) from exc

    if partitions:
        names = document.questions or list(partitions)
        for i, q in enumerate(names):
            if q not in partitions:
                raise ModelValidationError(_field('questions', i), f'unknown partition {q!r}')
        lattice = build_lattice(space, {q: partitions[q] for q in names}, document.require_top)
    else:
        lattice = full_lattice(space)

    sets = {name: _build_set(space, name, d) for name, d in document.sets.items()}
    events = {
        name: _build_event(space, ('events', name), worlds)
        for name, worlds in document.events.items()
    }
    return AlgebraModel(space, lattice, sets, events)


def parse_model(text: str) -> AlgebraModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f'model file is not valid JSON: {exc}') from exc
    try:
        document = ModelFile.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ModelValidationError(_field(*first['loc']) or 'model', first['msg']) from exc
    return build_model(document)


def load_model(path: Union[str, Path]) -> AlgebraModel:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ParseError(f'cannot read model file {path}: {exc.strerror}') from exc
    model = parse_model(text)
    if model.lattice.additions:
        logger.warning('question list closed under join, added: %s', ', '.join(model.lattice.additions))
    return model


def _describe_set(d: SetRep):
    if isinstance(d, Top):
        return TopSet(kind='top')
    if isinstance(d, Unit):
        return UnitSet(kind='unit')
    if isinstance(d, Assertions):
        return AssertionsSet(kind='assertions', gambles=[g.describe() for g in d.gambles])
    if isinstance(d, EventSet):
        return EventSetDescriptor(kind='event', worlds=d.event.names())
    if isinstance(d, LexAtom):
        return LexAtomSet(kind='lex-atom', order=d.names())
    raise Unsupported(f'{d.describe()} has no file representation')


def serialize_model(model: AlgebraModel) -> ModelFile:
    lattice = model.lattice
    return ModelFile(
        omega=list(model.space.worlds),
        partitions={name: list(p.block_of) for name, p in lattice.partitions.items()},
        questions=list(lattice.names),
        sets={name: _describe_set(d) for name, d in model.sets.items()},
        events={name: e.names() for name, e in model.events.items()},
    )


def model_digest(model: AlgebraModel) -> str:
    canonical = json.dumps(serialize_model(model).model_dump(mode='json'), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()
