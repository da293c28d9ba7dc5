import logging.config
from typing import Optional

from cohera.configs.settings import settings


def configure_logging(level: Optional[str] = None) -> None:
    logging.config.dictConfig({
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'generic': {'format': settings.LOG_FORMAT},
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'formatter': 'generic',
                'stream': 'ext://sys.stderr',
            },
        },
        'loggers': {
            'cohera': {
                'level': (level or settings.LOG_LEVEL).upper(),
                'handlers': ['console'],
                'propagate': False,
            },
        },
    })
