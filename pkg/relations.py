"""
Identidades de recurrencia y de la ecuación diferencial como chequeos de
exactitud entre evaluaciones independientes.

Cada operación evalúa ambos lados de una identidad y devuelve un
ResidualReport con residuo = izquierda − derecha y su versión relativa. La
escala incluye siempre el término inhomogéneo (x/2)^ν/(√π Γ(ν+3/2)) para que
no se pierda frente a L_ν cuando ν es grande.

L_{ν−1} se evalúa con la continuación de la serie (struve_l_any), de modo que
las recurrencias se pueden chequear para todo ν > −3/2.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List

from errors import DomainError
from numerics_core import DEFAULT_ACCURACY, AccuracySpec, recip_gamma
from struve_eval import (
    LOG_SQRT_PI,
    STRUVE_NU_MIN,
    inhomogeneous_term,
    struve_l,
    struve_l_any,
    struve_l_prime,
    struve_l_second,
)

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

BRIDGE_STEP = 1e-5


@dataclass(frozen=True)
class ResidualReport:
    identity_name: str
    nu: float
    x: float
    lhs: float
    rhs: float
    residual: float
    scale: float
    rel_residual: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _reporte(nombre: str, nu: float, x: float, izq: float, der: float, *extra: float) -> ResidualReport:
    escala = max(abs(izq), abs(der), *(abs(e) for e in extra))
    if not escala > 0.0:
        escala = 1.0
    residuo = izq - der
    return ResidualReport(nombre, nu, x, izq, der, residuo, escala, residuo / escala)


def _validar(nu: float, x: float, minimo: float = STRUVE_NU_MIN) -> None:
    if not math.isfinite(nu) or nu <= minimo:
        raise DomainError(f"la identidad requiere ν > {minimo}, se recibió ν={nu}")
    if not x > 0.0:
        raise DomainError(f"la identidad requiere x > 0, se recibió x={x}")


# --- Recurrencias ---

def residual_subtraction_recurrence(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """L_{ν−1} − L_{ν+1} = (2ν/x) L_ν + (x/2)^ν/(√π Γ(ν+3/2))."""
    _validar(nu, x)
    t = inhomogeneous_term(nu, x)
    l_menos = struve_l_any(nu - 1.0, x, budget).value
    l_mas = struve_l(nu + 1.0, x, budget).value
    izq = l_menos - l_mas
    der = 2.0 * nu / x * struve_l(nu, x, budget).value + t
    # para x grande L_{ν−1} y L_{ν+1} se cancelan en el lado izquierdo
    return _reporte("subtraction_recurrence", nu, x, izq, der, t, l_menos, l_mas)


def residual_derivative_recurrence(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """x L'_ν + ν L_ν = x L_{ν−1}."""
    _validar(nu, x)
    izq = x * struve_l_prime(nu, x, budget).value + nu * struve_l(nu, x, budget).value
    der = x * struve_l_any(nu - 1.0, x, budget).value
    return _reporte("derivative_recurrence", nu, x, izq, der, inhomogeneous_term(nu, x))


def residual_shift_recurrence(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """L_{ν+1} = L'_ν − (ν/x) L_ν − (x/2)^ν/(√π Γ(ν+3/2))."""
    _validar(nu, x)
    t = inhomogeneous_term(nu, x)
    izq = struve_l(nu + 1.0, x, budget).value
    der = struve_l_prime(nu, x, budget).value - nu / x * struve_l(nu, x, budget).value - t
    return _reporte("shift_recurrence", nu, x, izq, der, t)


def ode_inhomogeneity(nu: float, x: float) -> float:
    """x^{ν−1} / (√π 2^{ν−1} Γ(ν+1/2)), con 1/Γ entera."""
    return math.exp((nu - 1.0) * math.log(0.5 * x) - LOG_SQRT_PI) * recip_gamma(nu + 0.5)


def residual_ode(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """
    L''_ν = (1 + ν²/x²) L_ν − L'_ν/x + x^{ν−1}/(√π 2^{ν−1} Γ(ν+1/2)).

    L'' sale de la serie derivada dos veces término a término, no de
    diferencias finitas.
    """
    _validar(nu, x)
    l = struve_l(nu, x, budget).value
    lp = struve_l_prime(nu, x, budget).value
    izq = struve_l_second(nu, x, budget).value
    f = ode_inhomogeneity(nu, x)
    der = (1.0 + nu * nu / (x * x)) * l - lp / x + f
    return _reporte("ode", nu, x, izq, der, f, inhomogeneous_term(nu, x) / x)


def residual_xnu_derivative(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """[x^{−ν} L_ν]' = 2^{−ν}/(√π Γ(ν+3/2)) + x^{−ν} L_{ν+1}."""
    _validar(nu, x)
    x_nu = x ** (-nu)
    libre = x_nu * inhomogeneous_term(nu, x)
    izq = x_nu * (struve_l_prime(nu, x, budget).value - nu / x * struve_l(nu, x, budget).value)
    der = libre + x_nu * struve_l(nu + 1.0, x, budget).value
    return _reporte("xnu_derivative", nu, x, izq, der, libre)


def turan_delta(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """Δ_ν(x) = L_ν² − L_{ν−1} L_{ν+1}."""
    l = struve_l(nu, x, budget).value
    return l * l - struve_l_any(nu - 1.0, x, budget).value * struve_l(nu + 1.0, x, budget).value


def turan_delta_identity(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """
    Δ_ν = (1 + ν²/x²) L_ν² − L'_ν² + x^ν L_{ν−1} / (√π 2^ν Γ(ν+3/2)),
    con el residuo relativo a L_ν².
    """
    _validar(nu, x)
    l = struve_l(nu, x, budget).value
    lp = struve_l_prime(nu, x, budget).value
    l_menos = struve_l_any(nu - 1.0, x, budget).value
    izq = l * l - l_menos * struve_l(nu + 1.0, x, budget).value
    der = (1.0 + nu * nu / (x * x)) * l * l - lp * lp + inhomogeneous_term(nu, x) * l_menos
    escala = l * l
    residuo = izq - der
    return ResidualReport("turan_delta", nu, x, izq, der, residuo, escala, residuo / escala)


def recurrence_dependency(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """
    Las tres recurrencias son linealmente dependientes:
    r_shift + r_subtraction + r_derivative/x = 0. Devuelve esa combinación.
    """
    r2 = residual_subtraction_recurrence(nu, x, budget)
    r3 = residual_derivative_recurrence(nu, x, budget)
    r10 = residual_shift_recurrence(nu, x, budget)
    combinacion = r10.residual + r2.residual + r3.residual / x
    escala = max(r10.scale, r2.scale, r3.scale / x)
    return ResidualReport("recurrence_dependency", nu, x, combinacion, 0.0, combinacion, escala, combinacion / escala)


def log_derivative(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """x L'_ν(x) / L_ν(x)."""
    return x * struve_l_prime(nu, x, budget).value / struve_l(nu, x, budget).value


def bridge_log_derivative(nu: float, x: float, h: float = BRIDGE_STEP,
                                   budget: AccuracySpec = DEFAULT_ACCURACY) -> ResidualReport:
    """
    (1/x) L_ν² [x L'_ν/L_ν]' contra
    (1 + ν²/x²) L_ν² − L'_ν² + (ν+1/2) x^{ν−1} L_ν / (√π 2^{ν−1} Γ(ν+3/2)),
    con la derivada por diferencia centrada de paso h.
    """
    _validar(nu, x)
    if not 0.0 < h < x:
        raise DomainError(f"el paso h={h} debe cumplir 0 < h < x={x}")
    derivada = (log_derivative(nu, x + h, budget) - log_derivative(nu, x - h, budget)) / (2.0 * h)
    l = struve_l(nu, x, budget).value
    lp = struve_l_prime(nu, x, budget).value
    izq = l * l * derivada / x
    # (ν+1/2) x^{ν−1}/(√π 2^{ν−1} Γ(ν+3/2)) = (2ν+1) (x/2)^ν / (x √π Γ(ν+3/2))
    libre = (2.0 * nu + 1.0) * inhomogeneous_term(nu, x) / x * l
    der = (1.0 + nu * nu / (x * x)) * l * l - lp * lp + libre
    return _reporte("log_derivative_bridge", nu, x, izq, der)


IDENTIDADES: Dict[str, Callable[..., ResidualReport]] = {
    "subtraction_recurrence": residual_subtraction_recurrence,
    "derivative_recurrence": residual_derivative_recurrence,
    "shift_recurrence": residual_shift_recurrence,
    "ode": residual_ode,
    "xnu_derivative": residual_xnu_derivative,
    "turan_delta": turan_delta_identity,
}


def identity_sweep(nus: List[float], xs: List[float], tol: float,
                   budget: AccuracySpec = DEFAULT_ACCURACY) -> Dict[str, Dict[str, Any]]:
    """
    Evalúa todas las identidades sobre la grilla y resume el peor residuo.

    Returns:
        Dict nombre -> {points, max_rel_residual, worst_point, failures, pass}
    """
    resumen: Dict[str, Dict[str, Any]] = {}
    for nombre, identidad in IDENTIDADES.items():
        peor = 0.0
        peor_punto = None
        fallas = []
        puntos = 0
        for nu in nus:
            for x in xs:
                try:
                    reporte = identidad(nu, x, budget)
                except DomainError:
                    continue
                except Exception as e:
                    log.error(f"Error evaluando la identidad {nombre} en ν={nu}, x={x}: {e}", exc_info=True)
                    fallas.append({"nu": nu, "x": x, "error": str(e)})
                    continue
                puntos += 1
                r = abs(reporte.rel_residual)
                if r > peor or peor_punto is None:
                    peor = r
                    peor_punto = {"nu": nu, "x": x}
                if not r <= tol:
                    fallas.append({"nu": nu, "x": x, "rel_residual": reporte.rel_residual})
        resumen[nombre] = {
            "points": puntos,
            "max_rel_residual": peor,
            "worst_point": peor_punto,
            "failures": fallas,
            "pass": not fallas,
        }
        log.info(f"Identidad {nombre}: {puntos} puntos, residuo relativo máximo {peor:.3e}")
    return resumen
