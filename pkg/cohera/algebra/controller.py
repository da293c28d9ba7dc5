import click

from cohera.algebra.models import AlgebraModel
from cohera.algebra.operations import combine as combine_sets
from cohera.algebra.operations import extract as extract_set
from cohera.algebra.operations import supports
from cohera.contrib.dependencies import with_model
from cohera.contrib.exceptions import EXIT_FALSE
from cohera.desirability.schemas import SetOut


@click.command('combine', help='Combine two named sets.')
@with_model()
@click.option('--set', 'set_names', multiple=True, required=True, help='Give exactly two.')
def combine(model: AlgebraModel, set_names: tuple[str, ...]) -> None:
    if len(set_names) != 2:
        raise click.UsageError('combine takes exactly two --set options')
    d1, d2 = (model.get_set(name) for name in set_names)
    click.echo(SetOut.of(combine_sets(d1, d2)).model_dump_json(indent=2, exclude_none=True))


@click.command('extract', help='Extract the information of a named set relevant to a question.')
@with_model()
@click.option('--set', 'set_name', required=True)
@click.option('--question', required=True)
@click.option('--lazy', is_flag=True, help='Keep extraction of assertions unevaluated.')
def extract(model: AlgebraModel, set_name: str, question: str, lazy: bool) -> None:
    d = model.get_set(set_name)
    result = extract_set(d, model.question(question), lazy=lazy)
    click.echo(SetOut.of(result).model_dump_json(indent=2, exclude_none=True))


@click.command('support', help='List the questions supporting a named set, coarse to fine.')
@with_model()
@click.option('--set', 'set_name', required=True)
def support(model: AlgebraModel, set_name: str) -> None:
    found = supports(model.get_set(set_name), model.lattice)
    if not found:
        click.echo('none')
        click.get_current_context().exit(EXIT_FALSE)
    for name in found:
        click.echo(name)
