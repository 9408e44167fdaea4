"""
Registro de desigualdades para L_ν como casos ejecutables.

Cada InequalityCase guarda ambos lados como funciones de un Point
(ν[, μ], x[, y]), la relación (< o ≤), el rango de ν donde vale, el rango
donde se invierte y los órdenes donde hay igualdad. sweep_case recorre una
grilla y devuelve un InequalityRecord por punto.
"""

import logging
import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import Config
from errors import ConfigError, DomainError
from numerics_core import DEFAULT_ACCURACY, AccuracySpec, lgamma
from relations import turan_delta
from struve_eval import (
    LOG_SQRT_PI,
    X_MAX,
    bessel_i,
    cosh_minus_one_scaled,
    struve_l,
    struve_l_any,
    struve_l_prime,
    struve_norm,
    three_halves_bracket_scaled,
)

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

INF = math.inf
EQUALITY_MATCH = 1e-12
EQUALITY_TOL = Config.EQUALITY_TOL
BOUNDARY_EPS = Config.BOUNDARY_EPS
LOG_2 = math.log(2.0)


# ===============================
# TIPOS
# ===============================

@dataclass(frozen=True)
class Interval:
    """Intervalo real; abierto salvo que se indique lo contrario."""
    low: float
    high: float = INF
    closed_low: bool = False
    closed_high: bool = False

    def contains(self, v: float) -> bool:
        sobre = v >= self.low if self.closed_low else v > self.low
        bajo = v <= self.high if self.closed_high else v < self.high
        return sobre and bajo

    def near_edge(self, v: float, eps: float) -> bool:
        return any(math.isfinite(e) and abs(v - e) <= eps for e in (self.low, self.high))

    def to_list(self) -> List[Optional[float]]:
        return [None if not math.isfinite(e) else e for e in (self.low, self.high)]

    def __str__(self) -> str:
        izq = "[" if self.closed_low else "("
        der = "]" if self.closed_high else ")"
        return f"{izq}{self.low}, {self.high}{der}"


@dataclass(frozen=True)
class Point:
    nu: float
    x: float
    mu: Optional[float] = None
    y: Optional[float] = None

    def sort_key(self) -> Tuple[float, float, float, float]:
        return (
            self.nu,
            -INF if self.mu is None else self.mu,
            self.x,
            -INF if self.y is None else self.y,
        )


class Expectation(str, Enum):
    HOLDS = "holds"
    REVERSED = "reversed"
    EQUALITY = "equality"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Applicability:
    """
    Dominio de una desigualdad.

    `key` elige la variable que se compara con los rangos: "nu" para casi
    todos los casos, "mu_minus_nu" para la comparación entre dos órdenes.
    `domain` es donde ambos lados se pueden evaluar (ν y, si hay, μ).
    """
    nu_range: Interval
    needs_second_order: bool = False
    needs_second_point: bool = False
    reversal_nu_range: Optional[Interval] = None
    equality_points: Tuple[float, ...] = ()
    domain: Interval = Interval(-1.5)
    key: Literal["nu", "mu_minus_nu"] = "nu"

    def __post_init__(self):
        if not self.nu_range.low < self.nu_range.high:
            raise ConfigError(f"rango vacío: {self.nu_range}")
        r = self.reversal_nu_range
        if r is not None and not (r.high <= self.nu_range.low or r.low >= self.nu_range.high):
            raise ConfigError(f"el rango de inversión {r} se superpone con {self.nu_range}")

    def key_value(self, p: Point) -> float:
        if self.key == "mu_minus_nu":
            return p.mu - p.nu
        return p.nu

    def classify(self, p: Point, eps: float = 0.0) -> Optional[Expectation]:
        """
        Dirección esperada en el punto. Devuelve None cuando el punto cae a
        menos de `eps` de un borde o de un punto de igualdad (excluido de los
        barridos estrictos).
        """
        ordenes = [p.nu] + ([p.mu] if self.needs_second_order and p.mu is not None else [])
        if not all(self.domain.contains(o) for o in ordenes):
            return Expectation.UNDETERMINED
        k = self.key_value(p)
        if any(abs(k - e) <= EQUALITY_MATCH for e in self.equality_points):
            return Expectation.EQUALITY
        if eps > 0.0:
            if any(self.domain.near_edge(o, eps) for o in ordenes):
                return None
            if self.nu_range.near_edge(k, eps) or any(abs(k - e) <= eps for e in self.equality_points):
                return None
            if self.reversal_nu_range is not None and self.reversal_nu_range.near_edge(k, eps):
                return None
        if self.nu_range.contains(k):
            return Expectation.HOLDS
        if self.reversal_nu_range is not None and self.reversal_nu_range.contains(k):
            return Expectation.REVERSED
        return Expectation.UNDETERMINED


Lado = Callable[[Point, AccuracySpec], float]


@dataclass
class InequalityRecord:
    case: str
    nu: float
    x: float
    mu: Optional[float]
    y: Optional[float]
    lhs_value: float
    rhs_value: float
    margin: float
    satisfied: Optional[bool]
    expected: str
    lower_value: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def point(self) -> Point:
        return Point(self.nu, self.x, self.mu, self.y)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def __str__(self) -> str:
        estado = "OK" if self.satisfied else ("?" if self.satisfied is None else "VIOLACIÓN")
        if self.error:
            return f"{self.case} ν={self.nu} x={self.x}: ERROR - {self.error}"
        return (f"{self.case} ν={self.nu} μ={self.mu} x={self.x} y={self.y}: "
                f"lhs={self.lhs_value:.6g} rhs={self.rhs_value:.6g} margen={self.margin:.3e} [{self.expected}] {estado}")


@dataclass(frozen=True)
class InequalityCase:
    """lower (opcional) < lhs  R  rhs, con R ∈ {<, ≤}."""
    name: str
    citation: str
    applicability: Applicability
    lhs: Lado
    rhs: Lado
    relation: Literal["<", "<="] = "<"
    lower: Optional[Lado] = None
    details: Optional[Callable[[Point, AccuracySpec], Dict[str, Any]]] = None
    variant: Optional[str] = None

    @property
    def strict(self) -> bool:
        return self.relation == "<"

    def inverted(self) -> "InequalityCase":
        """Control negativo: intercambia los lados de la relación."""
        return replace(
            self,
            name=f"{self.name}:inverted",
            lhs=self.rhs,
            rhs=self.lhs,
            lower=None,
            details=None,
        )

    def classify(self, p: Point, eps: float = 0.0) -> Optional[Expectation]:
        return self.applicability.classify(p, eps)

    def evaluate(self, p: Point, budget: AccuracySpec = DEFAULT_ACCURACY,
                 expected: Optional[Expectation] = None) -> InequalityRecord:
        """Evalúa ambos lados en el punto y decide si la dirección esperada se cumple."""
        if expected is None:
            expected = self.classify(p)
        if expected == Expectation.UNDETERMINED and not self.applicability.domain.contains(p.nu):
            raise DomainError(f"{self.name}: ν={p.nu} fuera del dominio {self.applicability.domain}")

        izq = self.lhs(p, budget)
        der = self.rhs(p, budget)
        margen = der - izq
        inferior = None
        if self.lower is not None:
            inferior = self.lower(p, budget)
            margen = min(margen, izq - inferior)

        if expected == Expectation.HOLDS:
            satisfecho = margen > 0.0 if self.strict else margen >= 0.0
        elif expected == Expectation.REVERSED:
            satisfecho = der - izq < 0.0
        elif expected == Expectation.EQUALITY:
            escala = max(abs(izq), abs(der), math.ulp(0.0))
            satisfecho = abs(der - izq) <= EQUALITY_TOL * escala
        else:
            satisfecho = None

        detalles = self.details(p, budget) if self.details is not None else {}
        if satisfecho is False:
            log.debug(f"Violación en {self.name} ν={p.nu} μ={p.mu} x={p.x} y={p.y}: margen {margen:.3e}")
        return InequalityRecord(
            case=self.name, nu=p.nu, x=p.x, mu=p.mu, y=p.y,
            lhs_value=izq, rhs_value=der, margin=margen,
            satisfied=satisfecho, expected=expected.value,
            lower_value=inferior, details=detalles,
        )

    def catalogue_entry(self) -> Dict[str, Any]:
        a = self.applicability
        return {
            "name": self.name,
            "citation": self.citation,
            "relation": self.relation,
            "two_sided": self.lower is not None,
            "key": a.key,
            "domain": a.domain.to_list(),
            "nu_range": a.nu_range.to_list(),
            "nu_range_closed": [a.nu_range.closed_low, a.nu_range.closed_high],
            "reversal_nu_range": a.reversal_nu_range.to_list() if a.reversal_nu_range else None,
            "equality_points": list(a.equality_points),
            "needs_second_order": a.needs_second_order,
            "needs_second_point": a.needs_second_point,
        }


# ===============================
# EXPRESIONES
# ===============================

def _L(nu: float, x: float, b: AccuracySpec) -> float:
    return struve_l(nu, x, b).value


def _log_deriv(p: Point, b: AccuracySpec) -> float:
    """L'_ν(t)/L_ν(t)."""
    return struve_l_prime(p.nu, p.x, b).value / _L(p.nu, p.x, b)


def _successive(p: Point, b: AccuracySpec) -> float:
    return _L(p.nu + 1.0, p.x, b) / _L(p.nu, p.x, b)


def _half_tanh(x: float) -> float:
    """(cosh x − 1)/sinh x."""
    return math.tanh(0.5 * x)


def _l32_ratio(x: float) -> float:
    """L_{3/2}(x)/L_{1/2}(x) = (1 − cosh x + x sinh x − x²/2)/(x cosh x − x)."""
    return x * three_halves_bracket_scaled(x) / cosh_minus_one_scaled(x)


def _bessel_upper_rhs(p: Point, b: AccuracySpec) -> float:
    coef = math.exp(LOG_2 + lgamma(p.nu + 2.0) - LOG_SQRT_PI - lgamma(p.nu + 1.5))
    return coef * bessel_i(p.nu + 1.0, p.x, b).value


def _turan_upper(p: Point, b: AccuracySpec) -> float:
    l = _L(p.nu, p.x, b)
    return l * l / (p.nu + 1.5)


def _turan_lower_const(p: Point, constante: float) -> float:
    return constante * math.exp((2.0 * p.nu + 2.0) * math.log(0.5 * p.x) - 2.0 * lgamma(p.nu + 1.5)) / (p.nu + 1.5)


def turan_lower_pi_over_4(p: Point, b: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """(π/4)(x/2)^{2ν+2} / ((ν+3/2) Γ(ν+3/2)²)."""
    return _turan_lower_const(p, math.pi / 4.0)


def turan_lower_4_over_pi(p: Point, b: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """(4/π)(x/2)^{2ν+2} / ((ν+3/2) Γ(ν+3/2)²); exacta cuando x → 0."""
    return _turan_lower_const(p, 4.0 / math.pi)


def _turan_details(p: Point, b: AccuracySpec) -> Dict[str, Any]:
    return {"lower_4_over_pi": turan_lower_4_over_pi(p, b)}


def log_deriv_positive_expr(p: Point, b: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """(1 + ν²/x²) L² − L'² + (ν+1/2) x^{ν−1} L / (√π 2^{ν−1} Γ(ν+3/2))."""
    nu, x = p.nu, p.x
    l = _L(nu, x, b)
    lp = struve_l_prime(nu, x, b).value
    libre = (2.0 * nu + 1.0) / x * math.exp(nu * math.log(0.5 * x) - LOG_SQRT_PI - lgamma(nu + 1.5)) * l
    return (1.0 + nu * nu / (x * x)) * l * l - lp * lp + libre


def _l0_bound_rhs(p: Point, b: AccuracySpec) -> float:
    return math.exp(p.nu * math.log(0.5 * p.x) - lgamma(p.nu + 1.0)) * _L(0.0, p.x, b)


def _exp_bessel_rhs(p: Point, b: AccuracySpec) -> float:
    nu, x = p.nu, p.x
    return math.exp((nu + 1.0) * math.log(x) + x * x / (4.0 * (nu + 2.0))
                    - LOG_SQRT_PI - nu * LOG_2 - lgamma(nu + 1.5))


def _exp_l0_rhs(p: Point, b: AccuracySpec) -> float:
    nu, x = p.nu, p.x
    return math.exp((nu + 1.0) * math.log(x) + x * x / 8.0
                    - math.log(math.pi) - (nu - 1.0) * LOG_2 - lgamma(nu + 1.0))


def _sinh_upper_rhs(p: Point, b: AccuracySpec) -> float:
    nu, x = p.nu, p.x
    return math.exp(nu * math.log(x) - LOG_SQRT_PI - nu * LOG_2 - lgamma(nu + 1.5)) * math.sinh(x)


def sinh_lower_bound(p: Point, b: AccuracySpec = DEFAULT_ACCURACY, constante: Optional[float] = None) -> float:
    """
    (2ν+3) x^ν sinh(x/(2ν+3)) / (√π 2^ν Γ(ν+3/2)).

    `constante` reemplaza al factor 2ν+3 (con 2 se obtiene la forma que sólo
    coincide con ésta en ν = −1/2).
    """
    nu, x = p.nu, p.x
    k = 2.0 * nu + 3.0
    c = k if constante is None else constante
    return c * math.exp(nu * math.log(x) - LOG_SQRT_PI - nu * LOG_2 - lgamma(nu + 1.5)) * math.sinh(x / k)


def _sinh_lower_details(p: Point, b: AccuracySpec) -> Dict[str, Any]:
    cota = sinh_lower_bound(p, b)
    return {
        "q_ratio": _L(p.nu, p.x, b) / cota,
        "constant_two_form": sinh_lower_bound(p, b, constante=2.0),
    }


def _two_point_lhs(p: Point, b: AccuracySpec) -> float:
    return _L(p.nu, p.x, b) / _L(p.nu, p.y, b)


# ===============================
# CASOS
# ===============================

_SOBRE_MENOS_MEDIO = Interval(-0.5)
_INVERSO_MENOS_MEDIO = Interval(-1.5, -0.5)
_TODO = Interval(-1.5)

CASES: Dict[str, InequalityCase] = {}


def _registrar(caso: InequalityCase) -> InequalityCase:
    CASES[caso.name] = caso
    return caso


BESSEL_UPPER = _registrar(InequalityCase(
    name="bessel_upper",
    citation="Cota de L_ν por I_{ν+1}: L_ν < 2Γ(ν+2)/(√πΓ(ν+3/2)) I_{ν+1}",
    applicability=Applicability(_SOBRE_MENOS_MEDIO, reversal_nu_range=_INVERSO_MENOS_MEDIO,
                                equality_points=(-0.5,)),
    lhs=lambda p, b: _L(p.nu, p.x, b),
    rhs=_bessel_upper_rhs,
))

NORM_MONOTONE_NU = _registrar(InequalityCase(
    name="norm_monotone_nu",
    citation="Monotonía en el orden: 𝓛_ν(x) > 𝓛_μ(x) para μ > ν",
    applicability=Applicability(Interval(0.0), needs_second_order=True,
                                reversal_nu_range=Interval(-INF, 0.0), equality_points=(0.0,),
                                key="mu_minus_nu"),
    lhs=lambda p, b: struve_norm(p.mu, p.x, b).value,
    rhs=lambda p, b: struve_norm(p.nu, p.x, b).value,
))

TURAN = _registrar(InequalityCase(
    name="turan",
    citation="Turán: (π/4)(x/2)^{2ν+2}/((ν+3/2)Γ(ν+3/2)²) < L_ν² − L_{ν−1}L_{ν+1} < L_ν²/(ν+3/2)",
    applicability=Applicability(_TODO),
    lhs=lambda p, b: turan_delta(p.nu, p.x, b),
    rhs=_turan_upper,
    lower=turan_lower_pi_over_4,
    details=_turan_details,
))

RATIO_COSH = _registrar(InequalityCase(
    name="ratio_cosh",
    citation="Cociente sucesivo: L_{ν+1}/L_ν < (cosh x − 1)/sinh x < 1",
    applicability=Applicability(_SOBRE_MENOS_MEDIO, reversal_nu_range=_INVERSO_MENOS_MEDIO,
                                equality_points=(-0.5,)),
    lhs=_successive,
    rhs=lambda p, b: _half_tanh(p.x),
    details=lambda p, b: {"rhs_below_one": _half_tanh(p.x) < 1.0},
))

LOG_DERIV_POSITIVE = _registrar(InequalityCase(
    name="log_deriv_positive",
    citation="Positividad de (1/x)L_ν²[xL'_ν/L_ν]'",
    applicability=Applicability(_TODO),
    lhs=lambda p, b: 0.0,
    rhs=log_deriv_positive_expr,
))

RATIO_L32 = _registrar(InequalityCase(
    name="ratio_l32",
    citation="Cociente sucesivo contra L_{3/2}/L_{1/2} = (1 − cosh x + x sinh x − x²/2)/(x cosh x − x)",
    applicability=Applicability(Interval(0.5), reversal_nu_range=Interval(-1.5, 0.5),
                                equality_points=(0.5,)),
    lhs=_successive,
    rhs=lambda p, b: _l32_ratio(p.x),
))

LOGDERIV_LINEAR = _registrar(InequalityCase(
    name="logderiv_lower_linear",
    citation="Derivada logarítmica: L'_ν(t)/L_ν(t) > 1 − ν/t",
    applicability=Applicability(Interval(0.5, closed_low=True)),
    lhs=lambda p, b: 1.0 - p.nu / p.x,
    rhs=_log_deriv,
    variant="linear",
))

LOGDERIV_COSH = _registrar(InequalityCase(
    name="logderiv_lower_cosh",
    citation="Derivada logarítmica: L'_ν(t)/L_ν(t) ≥ sinh t/(cosh t − 1) − ν/t",
    applicability=Applicability(Interval(0.5), reversal_nu_range=Interval(-0.5, 0.5),
                                equality_points=(0.5,)),
    lhs=lambda p, b: 1.0 / _half_tanh(p.x) - p.nu / p.x,
    rhs=_log_deriv,
    relation="<=",
    variant="cosh",
))

LOGDERIV_X2 = _registrar(InequalityCase(
    name="logderiv_lower_x2",
    citation="Derivada logarítmica: L'_ν(t)/L_ν(t) ≥ (t cosh t − t)/(1 − cosh t + t sinh t − t²/2) − ν/t",
    applicability=Applicability(Interval(1.5), reversal_nu_range=Interval(-0.5, 1.5),
                                equality_points=(1.5,)),
    lhs=lambda p, b: 1.0 / _l32_ratio(p.x) - p.nu / p.x,
    rhs=_log_deriv,
    relation="<=",
    variant="x2",
))

TWO_POINT_EXP = _registrar(InequalityCase(
    name="two_point_exp",
    citation="Dos puntos: L_ν(x)/L_ν(y) < e^{x−y}(y/x)^ν, 0 < x < y",
    applicability=Applicability(Interval(0.5, closed_low=True), needs_second_point=True),
    lhs=_two_point_lhs,
    rhs=lambda p, b: math.exp(p.x - p.y + p.nu * math.log(p.y / p.x)),
    variant="exp",
))

TWO_POINT_COSH = _registrar(InequalityCase(
    name="two_point_cosh",
    citation="Dos puntos: L_ν(x)/L_ν(y) ≤ ((cosh x − 1)/(cosh y − 1))(y/x)^ν, 0 < x < y",
    applicability=Applicability(Interval(0.5), needs_second_point=True,
                                reversal_nu_range=Interval(-0.5, 0.5), equality_points=(0.5,)),
    lhs=_two_point_lhs,
    rhs=lambda p, b: cosh_minus_one_scaled(p.x) / cosh_minus_one_scaled(p.y) * (p.y / p.x) ** (p.nu - 2.0),
    relation="<=",
    variant="cosh",
))

TWO_POINT_X2 = _registrar(InequalityCase(
    name="two_point_x2",
    citation="Dos puntos: L_ν(x)/L_ν(y) ≤ (B(x)/B(y))(y/x)^ν con B(t) = 1 − cosh t + t sinh t − t²/2",
    applicability=Applicability(Interval(1.5), needs_second_point=True,
                                reversal_nu_range=Interval(-0.5, 1.5), equality_points=(1.5,)),
    lhs=_two_point_lhs,
    rhs=lambda p, b: three_halves_bracket_scaled(p.x) / three_halves_bracket_scaled(p.y) * (p.y / p.x) ** (p.nu - 4.0),
    relation="<=",
    variant="x2",
))

TWO_POINT_POWER = _registrar(InequalityCase(
    name="two_point_power",
    citation="Dos puntos: L_ν(x)/L_ν(y) < (x/y)^{ν+1}, 0 < x < y",
    applicability=Applicability(_TODO, needs_second_point=True),
    lhs=_two_point_lhs,
    rhs=lambda p, b: (p.x / p.y) ** (p.nu + 1.0),
    variant="power",
))

LOWRATIO = _registrar(InequalityCase(
    name="lowratio",
    citation="Cociente inferior: L_{ν−1}(x)/L_ν(x) > (2ν+1)/x",
    applicability=Applicability(_TODO),
    lhs=lambda p, b: (2.0 * p.nu + 1.0) / p.x,
    rhs=lambda p, b: struve_l_any(p.nu - 1.0, p.x, b).value / _L(p.nu, p.x, b),
    variant="ratio",
))

LOGDERIV_FLOOR = _registrar(InequalityCase(
    name="logderiv_floor",
    citation="Piso de la derivada logarítmica: x L'_ν(x)/L_ν(x) > ν + 1",
    applicability=Applicability(_TODO),
    lhs=lambda p, b: p.nu + 1.0,
    rhs=lambda p, b: p.x * _log_deriv(p, b),
    variant="logderiv",
))

L0_BOUND = _registrar(InequalityCase(
    name="l0_bound",
    citation="Cota por L_0: L_ν(x) ≤ x^ν L_0(x)/(2^ν Γ(ν+1))",
    applicability=Applicability(Interval(0.0), reversal_nu_range=Interval(-1.0, 0.0),
                                equality_points=(0.0,), domain=Interval(-1.0)),
    lhs=lambda p, b: _L(p.nu, p.x, b),
    rhs=_l0_bound_rhs,
    relation="<=",
))

EXP_UPPER_BESSEL = _registrar(InequalityCase(
    name="exp_upper_bessel",
    citation="Cota exponencial vía I_{ν+1}: L_ν < x^{ν+1}e^{x²/(4(ν+2))}/(√π 2^ν Γ(ν+3/2))",
    applicability=Applicability(_SOBRE_MENOS_MEDIO),
    lhs=lambda p, b: _L(p.nu, p.x, b),
    rhs=_exp_bessel_rhs,
    variant="bessel_exp",
))

EXP_UPPER_L0 = _registrar(InequalityCase(
    name="exp_upper_l0",
    citation="Cota exponencial vía L_0: L_ν < x^{ν+1}e^{x²/8}/(π 2^{ν−1} Γ(ν+1))",
    applicability=Applicability(Interval(0.0, closed_low=True), domain=Interval(-1.0)),
    lhs=lambda p, b: _L(p.nu, p.x, b),
    rhs=_exp_l0_rhs,
    variant="l0_exp",
))

EXP_UPPER_SINH = _registrar(InequalityCase(
    name="exp_upper_sinh",
    citation="Cota por sinh: L_ν < x^ν sinh x/(√π 2^ν Γ(ν+3/2))",
    applicability=Applicability(_SOBRE_MENOS_MEDIO, reversal_nu_range=_INVERSO_MENOS_MEDIO,
                                equality_points=(-0.5,)),
    lhs=lambda p, b: _L(p.nu, p.x, b),
    rhs=_sinh_upper_rhs,
    variant="sinh",
))

SINH_LOWER = _registrar(InequalityCase(
    name="sinh_lower",
    citation="Cota inferior por sinh: L_ν > (2ν+3) x^ν sinh(x/(2ν+3))/(√π 2^ν Γ(ν+3/2))",
    applicability=Applicability(Interval(-1.0), domain=Interval(-1.0)),
    lhs=sinh_lower_bound,
    rhs=lambda p, b: _L(p.nu, p.x, b),
    details=_sinh_lower_details,
))

LOGDERIV_FAMILY = {"linear": LOGDERIV_LINEAR, "cosh": LOGDERIV_COSH, "x2": LOGDERIV_X2}
TWO_POINT_FAMILY = {"exp": TWO_POINT_EXP, "cosh": TWO_POINT_COSH, "x2": TWO_POINT_X2, "power": TWO_POINT_POWER}
EXP_UPPER_FAMILY = {"bessel_exp": EXP_UPPER_BESSEL, "l0_exp": EXP_UPPER_L0, "sinh": EXP_UPPER_SINH}
LOWRATIO_FORMS = {"ratio": LOWRATIO, "logderiv": LOGDERIV_FLOOR}


def get_case(nombre: str) -> InequalityCase:
    """Busca un caso por nombre; acepta el sufijo ':inverted' para el control negativo."""
    base, _, sufijo = nombre.partition(":")
    if base not in CASES:
        raise ConfigError(f"caso desconocido: '{nombre}'. Disponibles: {', '.join(sorted(CASES))}")
    if sufijo == "inverted":
        return CASES[base].inverted()
    if sufijo:
        raise ConfigError(f"sufijo de caso desconocido: '{sufijo}'")
    return CASES[base]


def catalogue() -> List[Dict[str, Any]]:
    """Listado del registro para documentación."""
    return [caso.catalogue_entry() for caso in CASES.values()]


# ===============================
# OPERACIONES POR CASO
# ===============================

def _evaluar(caso: InequalityCase, p: Point, budget: AccuracySpec) -> InequalityRecord:
    return caso.evaluate(p, budget)


def case_bessel_upper(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(BESSEL_UPPER, Point(nu, x), budget)


def case_norm_monotone_nu(nu: float, mu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(NORM_MONOTONE_NU, Point(nu, x, mu=mu), budget)


def case_turan(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    """Registro con la cota inferior π/4, Δ_ν y la cota superior; la cota 4/π va en details."""
    return _evaluar(TURAN, Point(nu, x), budget)


def case_ratio_cosh(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(RATIO_COSH, Point(nu, x), budget)


def case_log_deriv_positive(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(LOG_DERIV_POSITIVE, Point(nu, x), budget)


def case_ratio_l32(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(RATIO_L32, Point(nu, x), budget)


def _de_familia(familia: Dict[str, InequalityCase], variante: str) -> InequalityCase:
    if variante not in familia:
        raise DomainError(f"variante desconocida '{variante}'; opciones: {', '.join(familia)}")
    return familia[variante]


def case_logderiv_lower_family(variant: str, nu: float, t: float,
                               budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(_de_familia(LOGDERIV_FAMILY, variant), Point(nu, t), budget)


def case_two_point_ratio_family(variant: str, nu: float, x: float, y: float,
                                budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    if not 0.0 < x < y:
        raise DomainError(f"se requiere 0 < x < y, se recibió x={x}, y={y}")
    return _evaluar(_de_familia(TWO_POINT_FAMILY, variant), Point(nu, x, y=y), budget)


def case_lowratio_bound(nu: float, x: float, form: str = "ratio",
                        budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(_de_familia(LOWRATIO_FORMS, form), Point(nu, x), budget)


def case_l0_bound(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(L0_BOUND, Point(nu, x), budget)


def case_exp_upper_family(variant: str, nu: float, x: float,
                          budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(_de_familia(EXP_UPPER_FAMILY, variant), Point(nu, x), budget)


def case_sinh_lower(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> InequalityRecord:
    return _evaluar(SINH_LOWER, Point(nu, x), budget)


def applicable_bounds(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> List[InequalityRecord]:
    """
    Todas las cotas de un solo punto y un solo orden aplicables en (ν, x),
    incluidas las que están en su rango de inversión o de igualdad.
    """
    registros = []
    for caso in CASES.values():
        a = caso.applicability
        if a.needs_second_order or a.needs_second_point:
            continue
        p = Point(nu, x)
        esperado = caso.classify(p)
        if esperado == Expectation.UNDETERMINED:
            continue
        registros.append(caso.evaluate(p, budget, esperado))
    return registros


# ===============================
# GRILLAS Y BARRIDOS
# ===============================

class GridSpec(BaseModel):
    """
    Grilla rectangular en (ν, x). `nu_list` / `x_list` reemplazan a la
    grilla regular del eje correspondiente cuando se dan explícitamente.
    """
    model_config = ConfigDict(frozen=True)

    nu_min: float = -1.4
    nu_max: float = 6.0
    nu_steps: int = Field(default=64, ge=2)
    x_min: float = Field(default=0.05, gt=0.0)
    x_max: float = 30.0
    x_steps: int = Field(default=64, ge=2)
    scale: Literal["linear", "log"] = "log"
    mu_offsets: Tuple[float, ...] = (-1.0, 0.5, 2.0)
    y_ratios: Tuple[float, ...] = (1.25, 1.6)
    eps: float = Field(default=BOUNDARY_EPS, ge=0.0)
    nu_list: Optional[Tuple[float, ...]] = None
    x_list: Optional[Tuple[float, ...]] = None

    @model_validator(mode="after")
    def _validar(self) -> "GridSpec":
        if not self.nu_min < self.nu_max:
            raise ValueError(f"nu_min ({self.nu_min}) debe ser menor que nu_max ({self.nu_max})")
        if not self.x_min < self.x_max:
            raise ValueError(f"x_min ({self.x_min}) debe ser menor que x_max ({self.x_max})")
        if self.x_max > X_MAX:
            raise ValueError(f"x_max ({self.x_max}) excede el tope de la serie (x ≤ {X_MAX})")
        if any(r <= 1.0 for r in self.y_ratios):
            raise ValueError("los cocientes y/x deben ser > 1")
        if self.x_list is not None and any(x <= 0.0 for x in self.x_list):
            raise ValueError("todos los x deben ser positivos")
        if self.x_list is not None and any(x > X_MAX for x in self.x_list):
            raise ValueError(f"todos los x deben cumplir x ≤ {X_MAX}")
        return self

    @classmethod
    def parse(cls, texto: str, **extra: Any) -> "GridSpec":
        """
        Interpreta "nu=-1.4:6:64,x=0.05:30:64:log". Cada eje es
        min:max:pasos[:linear|log]; un eje omitido conserva su valor por defecto.
        """
        campos: Dict[str, Any] = dict(extra)
        try:
            for parte in filter(None, (s.strip() for s in texto.split(","))):
                eje, _, valores = parte.partition("=")
                trozos = valores.split(":")
                eje = eje.strip().lower()
                if eje not in ("nu", "x") or len(trozos) not in (3, 4):
                    raise ValueError(f"eje mal formado: '{parte}'")
                campos[f"{eje}_min"] = float(trozos[0])
                campos[f"{eje}_max"] = float(trozos[1])
                campos[f"{eje}_steps"] = int(trozos[2])
                if len(trozos) == 4:
                    if eje != "x":
                        raise ValueError("sólo el eje x admite escala logarítmica")
                    campos["scale"] = trozos[3]
            return cls(**campos)
        except ValueError as e:
            raise ConfigError(f"grilla inválida '{texto}': {e}") from e

    def nu_values(self) -> List[float]:
        if self.nu_list is not None:
            return sorted(float(v) for v in self.nu_list)
        return [float(v) for v in np.linspace(self.nu_min, self.nu_max, self.nu_steps)]

    def x_values(self) -> List[float]:
        if self.x_list is not None:
            return sorted(float(v) for v in self.x_list)
        if self.scale == "log":
            return [float(v) for v in np.geomspace(self.x_min, self.x_max, self.x_steps)]
        return [float(v) for v in np.linspace(self.x_min, self.x_max, self.x_steps)]


def _puntos(caso: InequalityCase, nus: List[float], xs: List[float], grid: GridSpec,
            mu_igual: bool = False) -> List[Point]:
    a = caso.applicability
    puntos = []
    for nu in nus:
        for x in xs:
            if a.needs_second_order:
                mus = [nu] if mu_igual else [nu + d for d in grid.mu_offsets]
                puntos.extend(Point(nu, x, mu=mu) for mu in mus)
            elif a.needs_second_point:
                puntos.extend(Point(nu, x, y=r * x) for r in grid.y_ratios if r * x <= X_MAX)
            else:
                puntos.append(Point(nu, x))
    return puntos


def _registro_error(caso: InequalityCase, p: Point, esperado: Expectation, e: Exception) -> InequalityRecord:
    return InequalityRecord(
        case=caso.name, nu=p.nu, x=p.x, mu=p.mu, y=p.y,
        lhs_value=math.nan, rhs_value=math.nan, margin=math.nan,
        satisfied=False, expected=esperado.value, error=f"{type(e).__name__}: {e}",
    )


def sweep_case(caso: InequalityCase, grid: GridSpec,
               budget: AccuracySpec = DEFAULT_ACCURACY,
               include_equality: bool = True) -> List[InequalityRecord]:
    """
    Evalúa un caso en todos los puntos aplicables de la grilla.

    Los puntos a menos de grid.eps de un borde o punto de igualdad se
    excluyen del barrido estricto; los puntos de igualdad se evalúan aparte
    con tolerancia. Los puntos fuera de todo rango declarado se omiten.
    El resultado se ordena por (ν, μ, x, y).
    """
    nus = grid.nu_values()
    xs = grid.x_values()
    puntos = _puntos(caso, nus, xs, grid)

    if include_equality and nus and xs:
        a = caso.applicability
        if a.key == "mu_minus_nu":
            puntos.extend(_puntos(caso, nus, xs, grid, mu_igual=True))
        else:
            extra = [e for e in a.equality_points if not any(abs(e - nu) <= EQUALITY_MATCH for nu in nus)]
            puntos.extend(_puntos(caso, extra, xs, grid))

    registros = []
    for p in sorted(set(puntos), key=Point.sort_key):
        esperado = caso.classify(p, grid.eps)
        if esperado is None or esperado == Expectation.UNDETERMINED:
            continue
        try:
            registros.append(caso.evaluate(p, budget, esperado))
        except Exception as e:
            log.error(f"Error evaluando {caso.name} en {p}: {e}", exc_info=True)
            registros.append(_registro_error(caso, p, esperado, e))
    return registros
