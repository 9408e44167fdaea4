"""
Cuadratura tanh-sinh (doble exponencial) sobre un intervalo finito [a, b].

El integrando recibe las distancias a ambos extremos, (t − a, b − t),
calculadas sin cancelación cerca de los extremos; así las singularidades
algebraicas del tipo (sin t)^{2ν} o (1 − s²)^{ν−1/2} se evalúan con precisión
completa aun cuando el nodo está a 1e−300 del borde.
"""

import logging
import math
from typing import Callable, Iterator, Tuple

from pydantic import BaseModel, ConfigDict, Field

from numerics_core import compensated_sum

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

_PI_OVER_2 = math.pi / 2.0
# u = (π/2)·sinh(s) ≤ 350 mantiene 2e^{−2u} como número normal
_U_MAX = 350.0
_S_MAX = math.asinh(_U_MAX / _PI_OVER_2)
MIN_LEVEL = 3


class QuadratureSpec(BaseModel):
    """Niveles de refinamiento (cada nivel divide el paso h por 2) y tolerancia."""

    model_config = ConfigDict(frozen=True)

    levels: int = Field(default=10, ge=3, le=16)
    abs_tol: float = Field(default=1e-12, ge=0.0)


DEFAULT_QUADRATURE = QuadratureSpec()


def _nodo(s: float, semi: float) -> Tuple[float, float, float]:
    """
    Devuelve (izquierda, derecha, peso) del nodo s del mapeo tanh-sinh.

    izquierda = t − a, derecha = b − t; el lado cercano al borde se obtiene
    del complemento 1 − tanh(u) = 2e^{−2u}/(1 + e^{−2u}).
    """
    u = _PI_OVER_2 * math.sinh(abs(s))
    e = math.exp(-2.0 * u)
    cerca = semi * 2.0 * e / (1.0 + e)
    lejos = semi * 2.0 / (1.0 + e)
    # dt/ds = semi·(π/2)·cosh(s)/cosh²(u), con 1/cosh²(u) = 4e^{−2u}/(1+e^{−2u})²
    peso = semi * _PI_OVER_2 * math.cosh(s) * 4.0 * e / ((1.0 + e) ** 2)
    if s < 0.0:
        return cerca, lejos, peso
    return lejos, cerca, peso


def _suma_nodos(f: Callable[[float, float], float], semi: float, h: float, impares: bool) -> float:
    """Suma compensada de f·peso sobre los nodos j·h (sólo j impares si `impares`)."""
    paso = 2 if impares else 1
    inicio = 1 if impares else 0
    j_max = int(_S_MAX / h)

    def terminos() -> Iterator[float]:
        for j in range(inicio, j_max + 1, paso):
            for signo in ((1,) if j == 0 else (1, -1)):
                izq, der, peso = _nodo(signo * j * h, semi)
                if peso == 0.0 or izq == 0.0 or der == 0.0:
                    continue
                yield peso * f(izq, der)

    return compensated_sum(terminos())


def tanh_sinh(
    f: Callable[[float, float], float],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> Tuple[float, float, int]:
    """
    Integra f sobre [a, b] con la regla tanh-sinh adaptativa por niveles.

    Args:
        f: Integrando f(t − a, b − t).
        a, b: Extremos finitos con a < b.
        spec: Niveles máximos y tolerancia absoluta.

    Returns:
        (valor, error_estimado, niveles_usados). El error estimado es la
        diferencia entre los dos últimos niveles.

    Raises:
        DomainError: si el integrando devuelve un valor no finito.
    """
    if not a < b:
        raise ValueError(f"tanh_sinh requiere a < b, se recibió [{a}, {b}]")

    semi = 0.5 * (b - a)
    h = 1.0
    crudo = _suma_nodos(f, semi, h, impares=False)
    anterior = h * crudo
    valor = anterior
    error = math.inf

    nivel = 0
    for nivel in range(1, spec.levels + 1):
        h *= 0.5
        crudo += _suma_nodos(f, semi, h, impares=True)
        valor = h * crudo
        error = abs(valor - anterior)
        anterior = valor
        if nivel >= MIN_LEVEL and error <= spec.abs_tol * max(1.0, abs(valor)):
            break

    if error > spec.abs_tol * max(1.0, abs(valor)):
        log.warning(
            f"Cuadratura tanh-sinh sin converger en [{a}, {b}]: "
            f"error estimado {error:.3e} tras {nivel} niveles"
        )
    return valor, error, nivel
