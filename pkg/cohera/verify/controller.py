from pathlib import Path
from typing import Optional

import click

from cohera.algebra.models import AlgebraModel
from cohera.configs.settings import settings
from cohera.contrib.dependencies import with_model
from cohera.verify.runner import SUITES, run_suites


@click.command('verify', help=f'Run verification suites: {", ".join(SUITES)} or all.')
@with_model(required=False)
@click.option('--suites', default='all', show_default=True, help='Comma separated suite names.')
@click.option('--size-limit', type=click.IntRange(min=1), default=settings.DEFAULT_SIZE_LIMIT, show_default=True)
@click.option('--seed', type=int, default=settings.DEFAULT_SEED, show_default=True)
@click.option('--samples', type=click.IntRange(min=0), default=settings.DEFAULT_SAMPLES, show_default=True)
@click.option('--output', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Write the report here instead of standard output.')
def verify(model: Optional[AlgebraModel], suites: str, size_limit: int, seed: int, samples: int,
           output: Optional[Path]) -> None:
    names = [s.strip() for s in suites.split(',') if s.strip()]
    report = run_suites(names, size_limit, seed, samples, model)
    text = report.model_dump_json(indent=2)
    if output is None:
        click.echo(text)
    else:
        output.write_text(text + '\n', encoding='utf-8')
        click.echo(f'report written to {output}', err=True)
    click.get_current_context().exit(report.exit_status)
