"""
Configuración común de pytest: base de datos en memoria y logging a stdout.
"""

import logging
import os
import sys

os.environ.setdefault("DATABASE_URL", "sqlite://")

import pytest

logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler(sys.stdout)],
)


@pytest.fixture()
def flask_app():
    from app import app
    from config import TestingConfig
    from extensions import db

    app.config.from_object(TestingConfig)
    with app.app_context():
        db.drop_all()
        db.create_all()
    yield app


@pytest.fixture()
def client(flask_app):
    return flask_app.test_client()
