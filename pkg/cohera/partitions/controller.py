import click

from cohera.algebra.models import AlgebraModel
from cohera.contrib.dependencies import finish, with_model
from cohera.partitions.operations import cond_independent as conditionally_independent
from cohera.partitions.operations import independent as are_independent


@click.command('independent', help='Decide whether questions are independent.')
@with_model()
@click.option('--question', 'questions', multiple=True, required=True)
def independent(model: AlgebraModel, questions: tuple[str, ...]) -> None:
    finish(are_independent([model.question(q) for q in questions]))


@click.command('cond-independent', help='Decide whether questions are independent given another.')
@with_model()
@click.option('--question', 'questions', multiple=True, required=True)
@click.option('--given', required=True)
def cond_independent(model: AlgebraModel, questions: tuple[str, ...], given: str) -> None:
    finish(conditionally_independent([model.question(q) for q in questions], model.question(given)))
