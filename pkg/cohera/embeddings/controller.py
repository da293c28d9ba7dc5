import json
from typing import Optional

import click

from cohera.algebra.models import AlgebraModel
from cohera.contrib.dependencies import resolve_event, with_model
from cohera.contrib.exceptions import EXIT_FALSE
from cohera.desirability.schemas import SetOut
from cohera.embeddings.atoms import at_of as atoms_above
from cohera.embeddings.atoms import atom_partition, enum_lex_atoms
from cohera.embeddings.events import lift_event
from cohera.embeddings.saturation import in_PQ
from cohera.embeddings.saturation import saturate as saturate_event
from cohera.embeddings.schemas import AtomPartitionOut, AtomsOut


@click.command('saturate', help='Saturate an event with respect to a question.')
@with_model()
@click.option('--event', 'event_ref', required=True, help='Event name or comma separated worlds.')
@click.option('--question', default=None, help='Omit to find a question the event is saturated for.')
def saturate(model: AlgebraModel, event_ref: str, question: Optional[str]) -> None:
    event = resolve_event(model, event_ref)
    if question is None:
        found = in_PQ(event, model.lattice)
        click.echo(found if found is not None else 'none')
        if found is None:
            click.get_current_context().exit(EXIT_FALSE)
        return
    click.echo(json.dumps(saturate_event(event, model.question(question)).names()))


@click.command('lift', help='The coherent set of gambles with positive infimum on an event.')
@with_model()
@click.option('--event', 'event_ref', required=True)
def lift(model: AlgebraModel, event_ref: str) -> None:
    d = lift_event(resolve_event(model, event_ref))
    click.echo(SetOut.of(d).model_dump_json(indent=2, exclude_none=True))


@click.command('atoms', help='List the lexicographic atoms, or their partition under a question.')
@with_model()
@click.option('--question', default=None)
def atoms(model: AlgebraModel, question: Optional[str]) -> None:
    family = enum_lex_atoms(model.space)
    if question is None:
        click.echo(AtomsOut(atoms=[m.names() for m in family.atoms]).model_dump_json(indent=2))
        return
    partition = atom_partition(model.question(question), family)
    blocks = [[family.atoms[i].names() for i in sorted(b)] for b in partition.blocks]
    click.echo(AtomPartitionOut(question=question, blocks=blocks).model_dump_json(indent=2, exclude_none=True))


@click.command('at-of', help='The lexicographic atoms above a named set.')
@with_model()
@click.option('--set', 'set_name', required=True)
def at_of(model: AlgebraModel, set_name: str) -> None:
    family = enum_lex_atoms(model.space)
    chosen = atoms_above(model.get_set(set_name), family)
    click.echo(AtomsOut(atoms=[m.names() for m in family.members(chosen)]).model_dump_json(indent=2))
