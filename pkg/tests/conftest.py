import pytest

from wirelength import create_app


@pytest.fixture
def app():
    app = create_app({'TESTING': True})

    return app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()
