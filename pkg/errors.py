# errors.py

"""
Jerarquía de excepciones del verificador.

Los núcleos numéricos lanzan estas excepciones; el pipeline de verificación
(verifier.py) las captura por punto y las registra en el reporte.
"""


class StruveError(Exception):
    """Excepción base del proyecto."""


class DomainError(StruveError, ValueError):
    """Argumento fuera del dominio de la operación (p. ej. ν ≤ −3/2 o x ≤ 0)."""


class RangeError(DomainError):
    """El argumento excede el tope de escritorio del método por serie (x > X_MAX)."""


class ConvergenceError(StruveError, ArithmeticError):
    """La serie no alcanzó la tolerancia pedida dentro de max_terms."""

    def __init__(self, message: str, terms_used: int = 0, partial: float = float("nan")):
        super().__init__(message)
        self.terms_used = terms_used
        self.partial = partial


class SumOverflowError(StruveError, OverflowError):
    """Una suma parcial salió del rango representable."""


class ConfigError(StruveError):
    """Configuración de corrida inválida (YAML, grilla o nombre de caso)."""
