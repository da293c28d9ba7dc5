import json
import logging

import pytest
from hypothesis import HealthCheck, settings

from cohera.gambles.models import Gamble, make_space
from cohera.modelfile.loader import parse_model

settings.register_profile(
    'cohera',
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile('cohera')


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    logger = logging.getLogger('cohera')
    logger.handlers.clear()
    logger.propagate = True
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def abc():
    return make_space(['a', 'b', 'c'])


@pytest.fixture
def ab():
    return make_space(['a', 'b'])


@pytest.fixture
def gamble(abc):
    def build(*values, space=None):
        return Gamble.of(space or abc, values)

    return build


MODEL = {
    'omega': ['a', 'b', 'c'],
    'partitions': {'px': [0, 0, 1], 'py': [0, 1, 1], 'bottom': [0, 0, 0]},
    'questions': ['bottom', 'px', 'py'],
    'sets': {
        'D': {'kind': 'assertions', 'gambles': ['1,-1,0']},
        'M': {'kind': 'assertions', 'gambles': ['1,1,-1']},
        'E': {'kind': 'event', 'worlds': ['a']},
        'U': {'kind': 'unit'},
        'T': {'kind': 'top'},
        'L': {'kind': 'lex-atom', 'order': ['a', 'b', 'c']},
    },
    'events': {'S': ['a', 'b'], 'A': ['a']},
}


@pytest.fixture
def model_dict():
    return json.loads(json.dumps(MODEL))


@pytest.fixture
def model(model_dict):
    return parse_model(json.dumps(model_dict))


@pytest.fixture
def model_file(tmp_path, model_dict):
    path = tmp_path / 'model.json'
    path.write_text(json.dumps(model_dict), encoding='utf-8')
    return path
