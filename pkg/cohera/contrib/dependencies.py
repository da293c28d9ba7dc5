import functools
from typing import Callable, Optional

import click

from cohera.algebra.models import AlgebraModel
from cohera.contrib.exceptions import EXIT_FALSE, EXIT_TRUE, EXIT_USAGE, CoheraError, UnknownEvent
from cohera.gambles.models import Event, Gamble, PossibilitySpace, numbered_space, parse_gamble
from cohera.modelfile.loader import load_model


def with_model(required: bool = True) -> Callable:
    """Adds ``--model PATH`` and hands the loaded model to the command as ``model``."""

    def decorator(command: Callable) -> Callable:
        @click.option('--model', 'model_path', type=click.Path(dir_okay=False), default=None,
                      help='Model file (JSON).')
        @functools.wraps(command)
        def wrapper(*args, model_path: Optional[str] = None, **kwargs):
            model = load_model(model_path) if model_path else None
            if model is None and required:
                raise CoheraError('this command needs --model PATH', EXIT_USAGE)
            return command(*args, model=model, **kwargs)

        return wrapper

    return decorator


def gamble_space(model: Optional[AlgebraModel], rows: list[str]) -> PossibilitySpace:
    """The model's space, or w0..w(n-1) sized by the first gamble."""
    if model is not None:
        return model.space
    if not rows:
        raise CoheraError('give --model or at least one gamble', EXIT_USAGE)
    return numbered_space(len([p for p in rows[0].split(',') if p.strip() != '']))


def resolve_gamble(space: PossibilitySpace, text: str) -> Gamble:
    return parse_gamble(space, text)


def resolve_event(model: AlgebraModel, text: str) -> Event:
    """A named event of the model, or a comma separated list of worlds."""
    if text in model.events:
        return model.events[text]
    try:
        return Event.named(model.space, [w for w in text.split(',') if w])
    except CoheraError:
        raise UnknownEvent(f'unknown event {text!r}') from None


def finish(flag: bool) -> None:
    click.echo('true' if flag else 'false')
    click.get_current_context().exit(EXIT_TRUE if flag else EXIT_FALSE)
