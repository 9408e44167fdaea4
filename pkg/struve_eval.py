"""
Evaluadores de las funciones de Struve modificadas L_ν, de su versión
normalizada 𝓛_ν = 2^ν Γ(ν+3/2) x^{−ν} L_ν y de la función de Bessel
modificada I_ν.

Métodos disponibles:
    - serie de potencias (términos positivos, cota geométrica de la cola)
    - cuadratura tanh-sinh de la representación integral
    - formas cerradas en los órdenes −1/2, 1/2 y 3/2

Además expone los generadores de coeficientes de las series y el oráculo
de monotonía de cocientes de coeficientes.
"""

import logging
import math
import sys
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, partial
from typing import Callable, List, Literal

from config import Config
from errors import ConvergenceError, DomainError, RangeError
from numerics_core import (
    DEFAULT_ACCURACY,
    AccuracySpec,
    compensated_sum,
    lgamma,
    log_pochhammer,
    recip_gamma,
)
from quadrature import DEFAULT_QUADRATURE, QuadratureSpec, tanh_sinh

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

# --- Constantes ---
EPS = sys.float_info.epsilon
SQRT_PI = math.sqrt(math.pi)
LOG_SQRT_PI = 0.5 * math.log(math.pi)
STRUVE_NU_MIN = -1.5
BESSEL_NU_MIN = -1.0
QUAD_NU_MIN = -0.5
X_MAX = Config.STRUVE_X_MAX
CLOSED_FORM_ORDERS = (-0.5, 0.5, 1.5)
# por debajo de este x el corchete de L_{3/2} se suma como serie
CLOSED_FORM_SERIES_X = 2.0
TIE_RTOL = 1e-14
# math.sinh desborda por encima de este argumento
SINH_ARG_MAX = 710.0
# factores sobre los errores estimados de serie y cuadratura
SERIES_ERROR_SAFETY = 4.0
QUAD_ERROR_SAFETY = 10.0

Method = Literal["series", "quadrature", "closed_form"]


@dataclass(frozen=True)
class Evaluation:
    """Valor de una función con su error estimado, términos usados y método."""
    value: float
    abs_error_est: float
    terms_used: int
    method: Method

    def __str__(self) -> str:
        return f"{self.value!r} ± {self.abs_error_est:.2e} ({self.method}, {self.terms_used} términos)"


class Monotonia(str, Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    NEITHER = "neither"


# --- Validaciones ---

def _validar_x(x: float, tope: bool = True) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or x <= 0.0:
        raise DomainError(f"se requiere x > 0 finito, se recibió x={x}")
    if tope and x > X_MAX:
        raise RangeError(f"x={x} excede el tope de la serie (x ≤ {X_MAX})")


def _validar_orden(nu: float, minimo: float, nombre: str) -> None:
    if not math.isfinite(nu) or nu <= minimo:
        raise DomainError(f"{nombre} requiere ν > {minimo}, se recibió ν={nu}")


# --- Núcleo de series ---

def _peso(n: int, p: float, deriv: int) -> float:
    """Peso del término n al derivar `deriv` veces (x/2)^{2n+p}, sin el factor x^{−deriv}."""
    e = 2 * n + p
    if deriv == 0:
        return 1.0
    if deriv == 1:
        return e
    return e * (e - 1.0)


@lru_cache(maxsize=8192)
def _serie(tipo: str, nu: float, x: float, deriv: int, rel_tol: float, max_terms: int) -> Evaluation:
    """
    Suma Σ_n w_n c_n (x/2)^{2n+p} para tipo ∈ {struve, norm, bessel}.

    La razón entre términos consecutivos de coeficientes es
    (x/2)² / ((n+a)(n+c)). Los términos con n + c ≤ 0 (sólo en la
    continuación de Struve a ν ≤ −3/2) se calculan directamente con
    recip_gamma; el resto se suma relativo al primer término positivo,
    cuyo logaritmo se obtiene de lgamma.
    """
    if tipo == "bessel":
        a, c, p = 1.0, nu + 1.0, nu
    elif tipo == "norm":
        a, c, p = 1.5, nu + 1.5, 1.0
    else:
        a, c, p = 1.5, nu + 1.5, nu + 1.0

    mitad = 0.5 * x
    log_mitad = math.log(mitad)
    z = mitad * mitad

    cabeza: List[float] = []
    n0 = 0
    if c <= 0.0:
        n0 = int(math.floor(-c)) + 1
        for n in range(n0):
            coef = recip_gamma(n + a) * recip_gamma(n + c)
            if coef != 0.0:
                cabeza.append(_peso(n, p, deriv) * coef * mitad ** (2 * n + p))
    cabeza_abs = sum(abs(t) for t in cabeza)

    if tipo == "norm":
        log_pref = p * log_mitad - lgamma(a)
    else:
        log_pref = (2 * n0 + p) * log_mitad - lgamma(n0 + a) - lgamma(n0 + c)
    pref = math.exp(log_pref)

    relativos: List[float] = []
    acumulado_abs = 0.0
    s = 1.0
    n = n0
    cola = 0.0
    while True:
        w = _peso(n, p, deriv)
        tau = w * s
        relativos.append(tau)
        acumulado_abs += abs(tau)
        usados = n + 1

        razon = z / ((n + a) * (n + c))
        s_sig = s * razon
        w_sig = _peso(n + 1, p, deriv)
        tau_sig = w_sig * s_sig

        if w > 0.0 and w_sig > 0.0 and 2 * n + p > deriv - 1:
            rho = razon * w_sig / w
            escala = acumulado_abs * pref + cabeza_abs
            if rho < 1.0 and abs(tau_sig) * pref <= rel_tol * escala:
                cola = abs(tau_sig) / (1.0 - rho)
                break
        if usados >= max_terms:
            parcial = compensated_sum(cabeza) + pref * compensated_sum(relativos)
            raise ConvergenceError(
                f"serie {tipo} (ν={nu}, x={x}, derivada {deriv}) sin converger en {max_terms} términos",
                terms_used=usados,
                partial=parcial,
            )
        s = s_sig
        n += 1

    escala_x = x ** (-deriv)
    valor = (compensated_sum(cabeza) + pref * compensated_sum(relativos)) * escala_x
    total_abs = (acumulado_abs * pref + cabeza_abs) * escala_x
    redondeo = SERIES_ERROR_SAFETY * EPS * (usados + abs(log_pref) + 4.0) * total_abs
    error = cola * pref * escala_x + redondeo
    return Evaluation(valor, error, usados, "series")


# --- Coeficientes ---

def struve_coeff_beta(nu: float, n: int) -> float:
    """β_{ν,n} = 1/(Γ(n+3/2)Γ(n+ν+3/2)), coeficiente de la serie de L_ν."""
    _validar_orden(nu, STRUVE_NU_MIN, "struve_coeff_beta")
    if n < 0:
        raise DomainError(f"n debe ser ≥ 0, se recibió n={n}")
    return math.exp(-lgamma(n + 1.5) - lgamma(n + nu + 1.5))


def alpha_coeff(nu: float, n: int) -> float:
    """α_{ν,n} = 1/(n! Γ(n+ν+2)), coeficiente de la serie de I_{ν+1}."""
    _validar_orden(nu, -2.0, "alpha_coeff")
    return math.exp(-lgamma(n + 1.0) - lgamma(n + nu + 2.0))


def beta_coeff(nu: float, n: int) -> float:
    return struve_coeff_beta(nu, n)


def delta_coeff(nu: float, n: int) -> float:
    """δ_{ν,n} = (2n+ν+1) β_{ν,n}, coeficiente de x L'_ν."""
    return (2 * n + nu + 1.0) * struve_coeff_beta(nu, n)


def gamma_coeff(nu: float, n: int) -> float:
    """γ_{ν,n} = 1/(Γ(n+3/2)(ν+3/2)_n), coeficiente de 𝓛_ν."""
    _validar_orden(nu, STRUVE_NU_MIN, "gamma_coeff")
    return math.exp(-lgamma(n + 1.5) - log_pochhammer(nu + 1.5, n))


def lambda_coeff(nu: float, n: int) -> float:
    """λ_{ν,n} = (2n+1)!(ν+3/2)^{2n+1} / (Γ(n+3/2)(ν+3/2)_n)."""
    _validar_orden(nu, STRUVE_NU_MIN, "lambda_coeff")
    c = nu + 1.5
    return math.exp(
        lgamma(2 * n + 2.0) + (2 * n + 1) * math.log(c) - lgamma(n + 1.5) - log_pochhammer(c, n)
    )


def sinh_coeff(nu: float, n: int) -> float:
    """Coeficiente de (x/2)^{2n+1} en sinh(x/(2ν+3))."""
    _validar_orden(nu, STRUVE_NU_MIN, "sinh_coeff")
    return math.exp(-lgamma(2 * n + 2.0) - (2 * n + 1) * math.log(nu + 1.5))


def coeff_generator(nombre: str, nu: float) -> Callable[[int], float]:
    """Generador n ↦ coeficiente para los nombres alpha/beta/delta/gamma/lambda/sinh."""
    tabla = {
        "alpha": alpha_coeff,
        "beta": beta_coeff,
        "delta": delta_coeff,
        "gamma": gamma_coeff,
        "lambda": lambda_coeff,
        "sinh": sinh_coeff,
    }
    if nombre not in tabla:
        raise DomainError(f"generador de coeficientes desconocido: {nombre}")
    return partial(tabla[nombre], nu)


# --- Evaluadores por serie ---

def struve_l(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """
    L_ν(x) por su serie de potencias, ν > −3/2.

    Args:
        nu: Orden ν.
        x: Argumento, 0 < x ≤ X_MAX.
        budget: Tolerancia relativa y tope de términos.

    Returns:
        Evaluation con la cota geométrica de la cola como error.
    """
    _validar_orden(nu, STRUVE_NU_MIN, "struve_l")
    _validar_x(x)
    return _serie("struve", float(nu), float(x), 0, budget.rel_tol, budget.max_terms)


def struve_l_any(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """
    L_ν(x) para cualquier ν real, con la convención 1/Γ(polo) = 0.

    Para ν ≤ −3/2 los primeros términos pueden ser negativos o nulos.
    """
    if not math.isfinite(nu):
        raise DomainError(f"orden no finito: ν={nu}")
    _validar_x(x)
    return _serie("struve", float(nu), float(x), 0, budget.rel_tol, budget.max_terms)


def struve_l_prime(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """L'_ν(x) = (1/x) Σ (2n+ν+1) β_{ν,n} (x/2)^{2n+ν+1}."""
    _validar_orden(nu, STRUVE_NU_MIN, "struve_l_prime")
    _validar_x(x)
    return _serie("struve", float(nu), float(x), 1, budget.rel_tol, budget.max_terms)


def struve_l_second(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """L''_ν(x) por derivación término a término de la serie."""
    _validar_orden(nu, STRUVE_NU_MIN, "struve_l_second")
    _validar_x(x)
    return _serie("struve", float(nu), float(x), 2, budget.rel_tol, budget.max_terms)


def struve_norm(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """𝓛_ν(x) = Σ γ_{ν,n} (x/2)^{2n+1}."""
    _validar_orden(nu, STRUVE_NU_MIN, "struve_norm")
    _validar_x(x)
    return _serie("norm", float(nu), float(x), 0, budget.rel_tol, budget.max_terms)


def bessel_i(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> Evaluation:
    """I_ν(x) = Σ (x/2)^{2n+ν} / (n! Γ(n+ν+1)), ν > −1."""
    _validar_orden(nu, BESSEL_NU_MIN, "bessel_i")
    _validar_x(x)
    return _serie("bessel", float(nu), float(x), 0, budget.rel_tol, budget.max_terms)


def norm_factor(nu: float, x: float) -> float:
    """2^ν Γ(ν+3/2) x^{−ν}, el factor que lleva L_ν a 𝓛_ν."""
    return math.exp(nu * math.log(2.0 / x) + lgamma(nu + 1.5))


def inhomogeneous_term(nu: float, x: float) -> float:
    """(x/2)^ν / (√π Γ(ν+3/2)), término libre de las recurrencias."""
    return math.exp(nu * math.log(0.5 * x) - LOG_SQRT_PI) * recip_gamma(nu + 1.5)


# --- Formas cerradas ---

def three_halves_bracket_scaled(x: float) -> float:
    """(1 − cosh x + x sinh x − x²/2)/x⁴, finito y positivo para todo x > 0."""
    if x < CLOSED_FORM_SERIES_X:
        # Σ_{k≥2} (2k−1) x^{2k−4}/(2k)!
        z = x * x
        termino = 1.0 / 24.0
        k = 2
        partes = []
        while True:
            partes.append((2 * k - 1) * termino)
            termino *= z / ((2 * k + 1) * (2 * k + 2))
            k += 1
            if termino * (2 * k - 1) <= EPS * 1e-3 * partes[0]:
                break
        return compensated_sum(partes)
    return (x * math.sinh(x) - 2.0 * math.sinh(0.5 * x) ** 2 - 0.5 * x * x) / x ** 4


def three_halves_bracket(x: float) -> float:
    """1 − cosh x + x sinh x − x²/2, sin cancelación para x chico."""
    if x < CLOSED_FORM_SERIES_X:
        return x ** 4 * three_halves_bracket_scaled(x)
    return x * math.sinh(x) - 2.0 * math.sinh(0.5 * x) ** 2 - 0.5 * x * x


def cosh_minus_one(x: float) -> float:
    if x > 2.0 * SINH_ARG_MAX:
        return math.inf
    return 2.0 * math.sinh(0.5 * x) ** 2


def cosh_minus_one_scaled(x: float) -> float:
    """(cosh x − 1)/x² = (sinh(x/2)/(x/2))²/2."""
    medio = 0.5 * x
    sinhc = math.sinh(medio) / medio if medio > 1e-8 else 1.0
    return 0.5 * sinhc * sinhc


def struve_closed_form(nu: float, x: float) -> Evaluation:
    """
    Formas cerradas:
        L_{−1/2}(x) = √(2/(πx)) sinh x
        L_{1/2}(x)  = √(2/(πx)) (cosh x − 1)
        L_{3/2}(x)  = √(2/π) x^{−3/2} (1 − cosh x + x sinh x − x²/2)

    Raises:
        RangeError: si el valor no es representable (x > ~710).
    """
    _validar_x(x, tope=False)
    if nu not in CLOSED_FORM_ORDERS:
        raise DomainError(f"no hay forma cerrada implementada para ν={nu} (sólo −1/2, 1/2, 3/2)")
    try:
        evaluacion = _forma_cerrada(nu, x)
    except OverflowError as e:
        raise RangeError(f"L_{nu}({x}) desborda el rango de punto flotante") from e
    if not math.isfinite(evaluacion.value):
        raise RangeError(f"L_{nu}({x}) desborda el rango de punto flotante")
    return evaluacion


def _forma_cerrada(nu: float, x: float) -> Evaluation:
    raiz = math.sqrt(2.0 / math.pi)
    if nu == -0.5:
        valor = raiz * math.sinh(x) / math.sqrt(x)
        return Evaluation(valor, 4.0 * EPS * abs(valor), 0, "closed_form")
    if nu == 0.5:
        # x^{3/2} (cosh x − 1)/x²
        valor = raiz * x ** 1.5 * cosh_minus_one_scaled(x)
        return Evaluation(valor, 8.0 * EPS * abs(valor), 0, "closed_form")
    if x < CLOSED_FORM_SERIES_X:
        valor = raiz * x ** 2.5 * three_halves_bracket_scaled(x)
        return Evaluation(valor, 8.0 * EPS * abs(valor), 0, "closed_form")
    valor = raiz * x ** -1.5 * three_halves_bracket(x)
    magnitud = x * math.sinh(x) + cosh_minus_one(x) + 0.5 * x * x
    return Evaluation(valor, 4.0 * EPS * raiz * x ** -1.5 * magnitud, 0, "closed_form")


# --- Cuadratura ---

def struve_l_quad(nu: float, x: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> Evaluation:
    """
    L_ν(x) = 2(x/2)^ν/(√π Γ(ν+1/2)) ∫_0^{π/2} sinh(x cos t) (sin t)^{2ν} dt,  ν > −1/2.

    Con izquierda = t y derecha = π/2 − t se tiene sin t = sin(izquierda) y
    cos t = sin(derecha), ambos exactos junto a los extremos.
    """
    _validar_orden(nu, QUAD_NU_MIN, "struve_l_quad")
    _validar_x(x, tope=False)
    potencia = 2.0 * nu

    def integrando(izq: float, der: float) -> float:
        return math.sinh(x * math.sin(der)) * math.sin(izq) ** potencia

    try:
        integral, err, niveles = tanh_sinh(integrando, 0.0, 0.5 * math.pi, q)
    except OverflowError as e:
        raise RangeError(f"el integrando de L_{nu}({x}) desborda el rango de punto flotante") from e
    pref = math.exp(math.log(2.0) + nu * math.log(0.5 * x) - LOG_SQRT_PI - lgamma(nu + 0.5))
    valor = pref * integral
    if not math.isfinite(valor):
        raise RangeError(f"L_{nu}({x}) desborda el rango de punto flotante")
    error = QUAD_ERROR_SAFETY * pref * err + 64.0 * EPS * abs(valor)
    return Evaluation(valor, error, niveles, "quadrature")


def struve_next_shifted_eval(nu: float, x: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> Evaluation:
    """
    2^ν Γ(ν+3/2) x^{−ν} L_{ν+1}(x) por cuadratura, para ν > −3/2.

    Se usa la forma restada
        (cosh x − 1)/√π + (2ν+1)/√π ∫_0^1 (1−s²)^{ν−1/2} s [cosh(xs) − cosh x] ds,
    igual a −1/√π + (2ν+1)/√π ∫_0^1 (1−s²)^{ν−1/2} s cosh(xs) ds cuando ν > −1/2
    y convergente para todo ν > −3/2.
    """
    _validar_orden(nu, STRUVE_NU_MIN, "struve_next_shifted")
    _validar_x(x, tope=False)
    base = cosh_minus_one(x) / SQRT_PI
    if not math.isfinite(base):
        raise RangeError(f"𝓛_{nu}({x}) desborda el rango de punto flotante")
    factor = (2.0 * nu + 1.0) / SQRT_PI
    if factor == 0.0:
        return Evaluation(base, 4.0 * EPS * base, 0, "quadrature")
    exponente = nu - 0.5

    def integrando(s: float, d: float) -> float:
        # 1 − s² = d (1 + s);  cosh(xs) − cosh x = −2 sinh(x(1+s)/2) sinh(xd/2)
        # d^{ν−1/2} sinh(xd/2) = d^{ν+1/2} · sinh(xd/2)/d, sin desborde junto a s = 1
        medio = 0.5 * x * d
        sinhc = math.sinh(medio) / medio if medio > 1e-8 else 1.0
        diferencia = -2.0 * math.sinh(0.5 * x * (1.0 + s)) * 0.5 * x * sinhc
        return d ** (exponente + 1.0) * (1.0 + s) ** exponente * s * diferencia

    try:
        integral, err, niveles = tanh_sinh(integrando, 0.0, 1.0, q)
    except OverflowError as e:
        raise RangeError(f"el integrando de 𝓛_{nu}({x}) desborda el rango de punto flotante") from e
    valor = base + factor * integral
    if not math.isfinite(valor):
        raise RangeError(f"𝓛_{nu}({x}) desborda el rango de punto flotante")
    error = QUAD_ERROR_SAFETY * abs(factor) * err + 64.0 * EPS * (abs(base) + abs(factor * integral))
    return Evaluation(valor, error, niveles, "quadrature")


def struve_next_shifted(nu: float, x: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Valor de 2^ν Γ(ν+3/2) x^{−ν} L_{ν+1}(x) obtenido por cuadratura."""
    return struve_next_shifted_eval(nu, x, q).value


# --- Oráculo de monotonía de cocientes ---

def quotient_sequence_monotone(
    numer_coeffs: Callable[[int], float],
    denom_coeffs: Callable[[int], float],
    n_max: int,
) -> Monotonia:
    """
    Monotonía de la sucesión a_n/b_n para n ∈ [0, n_max].

    Dos cocientes consecutivos que difieren menos de 1e−14 relativo se
    consideran empatados; si todos empatan el veredicto es CONSTANT.
    """
    if n_max < 2:
        raise DomainError(f"n_max debe ser ≥ 2, se recibió {n_max}")
    cocientes = []
    for n in range(n_max + 1):
        a_n = numer_coeffs(n)
        b_n = denom_coeffs(n)
        if not (a_n > 0.0 and b_n > 0.0):
            raise DomainError(f"coeficiente no positivo en n={n}: a_n={a_n}, b_n={b_n}")
        cocientes.append(a_n / b_n)

    sube = baja = False
    for q0, q1 in zip(cocientes, cocientes[1:]):
        empate = TIE_RTOL * max(abs(q0), abs(q1))
        if q1 - q0 > empate:
            sube = True
        elif q0 - q1 > empate:
            baja = True

    if sube and baja:
        return Monotonia.NEITHER
    if sube:
        return Monotonia.INCREASING
    if baja:
        return Monotonia.DECREASING
    return Monotonia.CONSTANT


# --- Despacho por nombre (CLI y API) ---

FUNCIONES_SERIE = {
    "struve": struve_l,
    "struve_any": struve_l_any,
    "struve_prime": struve_l_prime,
    "struve_second": struve_l_second,
    "norm": struve_norm,
    "bessel": bessel_i,
}


def evaluate(function: str, nu: float, x: float, method: str = "series",
             budget: AccuracySpec = DEFAULT_ACCURACY,
             q: QuadratureSpec = DEFAULT_QUADRATURE) -> Evaluation:
    """
    Evalúa una función por nombre y método.

    Args:
        function: struve, struve_any, struve_prime, struve_second, norm, bessel o next_shifted.
        method: series, quad o closed.
    """
    if method == "closed":
        if function != "struve":
            raise DomainError("la forma cerrada sólo existe para L_ν")
        return struve_closed_form(nu, x)
    if method == "quad":
        if function == "struve":
            return struve_l_quad(nu, x, q)
        if function == "next_shifted":
            return struve_next_shifted_eval(nu, x, q)
        raise DomainError(f"sin cuadratura para la función '{function}'")
    if method != "series":
        raise DomainError(f"método desconocido: {method}")
    if function not in FUNCIONES_SERIE:
        raise DomainError(f"función desconocida: {function}")
    return FUNCIONES_SERIE[function](nu, x, budget)
