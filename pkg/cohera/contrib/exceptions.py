from typing import Optional

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_MODEL = 3


class CoheraError(Exception):
    exit_code: int = EXIT_MODEL

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class ModelError(CoheraError):
    pass


class DuplicateWorld(ModelError):
    pass


class EmptySpace(ModelError):
    pass


class SpaceMismatch(ModelError):
    pass


class DimensionMismatch(ModelError):
    pass


class ZeroQueriedHere(ModelError):
    pass


class ZeroGambleQuery(ModelError):
    pass


class EmptyEvent(ModelError):
    pass


class TooFewPartitions(ModelError):
    pass


class UnknownQuestion(ModelError):
    pass


class UnknownSet(ModelError):
    pass


class UnknownEvent(ModelError):
    pass


class NotInTarget(ModelError):
    pass


class IncoherentAssertions(ModelError):
    pass


class TopNotCoherent(ModelError):
    pass


class Unsupported(ModelError):
    pass


class ParseError(ModelError):
    pass


class ModelValidationError(ModelError):
    def __init__(self, field: str, detail: str):
        super().__init__(f'{field}: {detail}')
        self.field = field


class LimitExceeded(CoheraError):
    exit_code = EXIT_USAGE

    def __init__(self, what: str, limit: int, maximum: int):
        super().__init__(
            f'{what}: size limit {limit} exceeds the supported maximum {maximum}; '
            f'rerun with --size-limit {maximum} or lower'
        )
        self.limit = limit
        self.maximum = maximum


def check_limit(what: str, limit: int, maximum: int) -> None:
    if limit > maximum:
        raise LimitExceeded(what, limit, maximum)
