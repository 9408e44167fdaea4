"""
Núcleos escalares de la familia Gamma y suma compensada.

Todas las funciones son puras: no guardan estado y pueden llamarse desde
varios hilos a la vez. Los evaluadores de Struve y Bessel (struve_eval.py)
construyen sus coeficientes sobre lgamma / recip_gamma / log_pochhammer.
"""

import logging
import math
import sys
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field

from errors import DomainError, SumOverflowError

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

# --- Constantes ---
LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

DIGAMMA_LIFT = 6.0
# B_2k / (2k) para k = 1..7
DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

POCHHAMMER_DIRECT_MAX = 32
LOG_PI = math.log(math.pi)
LOG_FLOAT_MAX = math.log(sys.float_info.max)


class AccuracySpec(BaseModel):
    """Presupuesto de precisión de una evaluación por serie."""

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-14, gt=0.0, lt=1.0)
    max_terms: int = Field(default=500, ge=1)


DEFAULT_ACCURACY = AccuracySpec()


def lgamma(a: float) -> float:
    """
    Logaritmo natural de Γ(a) para a > 0 (aproximación de Lanczos, g = 7).

    Args:
        a: Argumento real positivo.

    Returns:
        ln Γ(a)
    """
    if not a > 0.0:
        raise DomainError(f"lgamma requiere a > 0, se recibió a={a}")
    if a == 1.0 or a == 2.0:
        return 0.0
    if a < 0.5:
        # Γ(a) = Γ(a+1)/a mantiene el argumento de Lanczos en [0.5, ∞)
        return lgamma(a + 1.0) - math.log(a)

    z = a - 1.0
    serie = LANCZOS_COEFFS[0]
    for k in range(1, len(LANCZOS_COEFFS)):
        serie += LANCZOS_COEFFS[k] / (z + k)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(serie)


def sinpi(a: float) -> float:
    """sin(πa) con reducción exacta del argumento; vale 0 exacto en los enteros."""
    r = math.fmod(a, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    if r == 0.0:
        return 0.0
    return math.sin(math.pi * r)


def recip_gamma(a: float) -> float:
    """
    1/Γ(a) como función entera.

    Para a > 0 se usa exp(−lgamma(a)); los polos de Γ (enteros no positivos)
    devuelven 0 exacto; el resto de los argumentos negativos pasa por la
    fórmula de reflexión 1/Γ(a) = sin(πa)Γ(1−a)/π, que da ±inf cuando el
    módulo no es representable (a < −171 aprox.).
    """
    if math.isnan(a):
        return math.nan
    if a > 0.0:
        return math.exp(-lgamma(a))
    if a == math.floor(a):
        return 0.0
    s = sinpi(a)
    log_magnitud = lgamma(1.0 - a) + math.log(abs(s)) - LOG_PI
    if log_magnitud > LOG_FLOAT_MAX:
        return math.copysign(math.inf, s)
    return math.copysign(math.exp(log_magnitud), s)


def digamma(a: float) -> float:
    """
    ψ(a) = Γ'(a)/Γ(a) para a > 0.

    Se eleva el argumento a ≥ 6 con ψ(a) = ψ(a+1) − 1/a y luego se aplica la
    serie asintótica hasta x^−14.
    """
    if not a > 0.0:
        raise DomainError(f"digamma requiere a > 0, se recibió a={a}")

    acumulado = 0.0
    x = a
    while x < DIGAMMA_LIFT:
        acumulado -= 1.0 / x
        x += 1.0

    inv2 = 1.0 / (x * x)
    cola = 0.0
    potencia = inv2
    for c in DIGAMMA_ASYMPTOTIC:
        cola += c * potencia
        potencia *= inv2
    return acumulado + math.log(x) - 0.5 / x - cola


def log_pochhammer(a: float, n: int) -> float:
    """
    ln (a)_n = ln Γ(a+n) − ln Γ(a).

    Para n chico se suma ln(a+k) directamente con suma compensada; para n
    grande se usa la diferencia de lgamma.
    """
    if not a > 0.0:
        raise DomainError(f"log_pochhammer requiere a > 0, se recibió a={a}")
    if n < 0:
        raise DomainError(f"log_pochhammer requiere n ≥ 0, se recibió n={n}")
    if n == 0:
        return 0.0
    if n <= POCHHAMMER_DIRECT_MAX:
        return compensated_sum(math.log(a + k) for k in range(n))
    return lgamma(a + n) - lgamma(a)


def compensated_sum(terms: Iterable[float]) -> float:
    """
    Suma compensada de Neumaier (variante de Kahan que tolera términos
    mayores que la suma parcial).

    Raises:
        DomainError: si algún término no es finito.
        SumOverflowError: si una suma parcial deja de ser representable.
    """
    suma = 0.0
    compensacion = 0.0
    for t in terms:
        if not math.isfinite(t):
            raise DomainError(f"compensated_sum recibió un término no finito: {t}")
        nueva = suma + t
        if not math.isfinite(nueva):
            raise SumOverflowError("la suma parcial excede el rango representable")
        if abs(suma) >= abs(t):
            compensacion += (suma - nueva) + t
        else:
            compensacion += (t - nueva) + suma
        suma = nueva
    return suma + compensacion
