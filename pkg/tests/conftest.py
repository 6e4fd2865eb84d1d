# tests/conftest.py
import json

import pytest

from app import create_app


@pytest.fixture
def app():
    app = create_app({
        "TESTING": True,
        "MONGO_URI": None,
        "CELERY_TASK_ALWAYS_EAGER": True,
        "CELERY_BROKER_URL": "memory://",
        "CELERY_RESULT_BACKEND": "cache+memory://",
    })
    yield app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph JSON to a temp file and return its path."""
    def write(data: dict, name: str = "graph.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
