import pytest

from hypothesis import settings

settings.register_profile('ci', max_examples=200, deadline=None)
settings.register_profile('dev', max_examples=50, deadline=None)
settings.load_profile('dev')


def pytest_addoption(parser):
    parser.addoption('--runslow',
                     action='store_true',
                     default=False,
                     help='run the exhaustive sweeps marked slow')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive sweep, needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)
