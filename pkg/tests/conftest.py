import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="run the slow exact-polynomial checks (n=6 tournaments, n=5 a=-1 identity)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
