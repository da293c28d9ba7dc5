import logging
from typing import Optional

import click

from cohera import __version__
from cohera.configs.logging import configure_logging
from cohera.contrib.exceptions import CoheraError
from cohera.routers import commands

logger = logging.getLogger(__name__)


class CoheraGroup(click.Group):
    """Maps library errors to their exit codes with the message on stderr."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except CoheraError as exc:
            logger.debug('command failed', exc_info=exc)
            click.echo(f'error: {exc.detail}', err=True)
            ctx.exit(exc.exit_code)


@click.group(cls=CoheraGroup)
@click.version_option(__version__, prog_name='cohera')
@click.option('--log-level', default=None, help='Overrides COHERA_LOG_LEVEL.')
def cli(log_level: Optional[str]) -> None:
    configure_logging(log_level)


for command in commands:
    cli.add_command(command)


def main() -> None:
    cli(prog_name='cohera')
