# config.py

import logging
import os

from dotenv import load_dotenv

load_dotenv()


def _float(nombre: str, defecto: float) -> float:
    return float(os.environ.get(nombre) or defecto)


def _int(nombre: str, defecto: int) -> int:
    return int(os.environ.get(nombre) or defecto)


class Config:
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'tu_clave_secreta'
    SQLALCHEMY_DATABASE_URI = os.environ.get('DATABASE_URL') or 'sqlite:///verificaciones.db'
    SQLALCHEMY_TRACK_MODIFICATIONS = False

    TOOL_VERSION = os.environ.get('TOOL_VERSION') or '1.0.0'
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'

    # Evaluación por serie
    STRUVE_REL_TOL = _float('STRUVE_REL_TOL', 1e-14)
    STRUVE_MAX_TERMS = _int('STRUVE_MAX_TERMS', 500)
    STRUVE_X_MAX = _float('STRUVE_X_MAX', 50.0)

    # Cuadratura tanh-sinh
    QUAD_LEVELS = _int('QUAD_LEVELS', 10)
    QUAD_ABS_TOL = _float('QUAD_ABS_TOL', 1e-12)

    # Verificación
    BOUNDARY_EPS = _float('BOUNDARY_EPS', 1e-3)
    EQUALITY_TOL = _float('EQUALITY_TOL', 1e-10)
    FD_TOL = _float('FD_TOL', 1e-12)
    IDENTITY_TOL = _float('IDENTITY_TOL', 1e-8)


class TestingConfig(Config):
    SQLALCHEMY_DATABASE_URI = 'sqlite://'
    TESTING = True


MODULOS_CON_LOG = (
    'numerics_core', 'quadrature', 'struve_eval', 'relations', 'bounds_registry',
    'property_checks', 'verifier', 'cli', 'models', 'routes',
)


def configurar_logging(nivel: str = Config.LOG_LEVEL) -> None:
    """Ajusta el nivel de los loggers de todos los módulos del proyecto."""
    valor = getattr(logging, str(nivel).upper(), logging.INFO)
    for nombre in MODULOS_CON_LOG:
        logging.getLogger(nombre).setLevel(valor)
