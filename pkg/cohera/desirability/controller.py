from typing import Optional

import click

from cohera.algebra.models import AlgebraModel
from cohera.contrib.dependencies import finish, gamble_space, resolve_gamble, with_model
from cohera.desirability.operations import is_coherent_extension, set_member


@click.command('coherent', help='Decide whether asserted gambles avoid a sure loss.')
@with_model(required=False)
@click.option('--assertions', 'rows', multiple=True, help='A gamble as CSV; repeatable.')
@click.option('--set', 'set_name', default=None, help='A named set of the model.')
def coherent(model: Optional[AlgebraModel], rows: tuple[str, ...], set_name: Optional[str]) -> None:
    if set_name is not None:
        if model is None:
            raise click.UsageError('--set needs --model')
        finish(not model.get_set(set_name).is_top)
    space = gamble_space(model, list(rows))
    finish(is_coherent_extension([resolve_gamble(space, row) for row in rows]))


@click.command('member', help='Decide whether a gamble belongs to a named set.')
@with_model()
@click.option('--set', 'set_name', required=True)
@click.option('--gamble', 'row', required=True, help='Gamble as CSV aligned to the worlds.')
def member(model: AlgebraModel, set_name: str, row: str) -> None:
    d = model.get_set(set_name)
    f = resolve_gamble(model.space, row)
    finish(set_member(d, f))


