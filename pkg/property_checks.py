"""
Chequeos por diferencias finitas de las propiedades de monotonía y
convexidad de L_ν, 𝓛_ν e I_{ν+1}/L_ν.

Las monotonías se prueban con diferencias entre puntos consecutivos de la
grilla (sin estimar derivadas); la log-convexidad y la log-concavidad con la
desigualdad del punto medio sobre pares de la grilla. Cada chequeo devuelve
un PropertyResult con el peor punto encontrado.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from bounds_registry import Point, turan_lower_4_over_pi, turan_lower_pi_over_4
from config import Config
from errors import ConfigError, DomainError
from numerics_core import DEFAULT_ACCURACY, AccuracySpec, lgamma
from quadrature import DEFAULT_QUADRATURE, QuadratureSpec
from relations import turan_delta
from struve_eval import (
    Monotonia,
    bessel_i,
    coeff_generator,
    cosh_minus_one,
    norm_factor,
    quotient_sequence_monotone,
    struve_closed_form,
    struve_l,
    struve_l_prime,
    struve_l_quad,
    struve_next_shifted_eval,
    struve_norm,
    three_halves_bracket,
)

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

FD_TOL = Config.FD_TOL
BOUNDARY_EPS = Config.BOUNDARY_EPS
NU_PAIR_MAX = 4.0
X_PAIR_INDEX_MAX = 8
WRIGHT_SHIFTS = (0.5, 1.0, 2.0)
DEFAULT_PROPERTY_XS = (0.1, 1.0, 5.0, 20.0)
MAX_FAILURES_KEPT = 20
COEF_N_MAX = 40

CROSS_QUAD_NUS = (-0.25, 0.0, 0.5, 1.0, 2.5, 5.0)
CROSS_QUAD_XS = (0.1, 1.0, 5.0, 10.0, 20.0)
CROSS_QUAD_TOL = 1e-8
CROSS_CLOSED_XS = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0)
CROSS_CLOSED_TOL = 1e-12
CROSS_SHIFTED_NUS = (-1.0, -0.5, 0.0, 1.0, 2.5)

DIRECTIONS = ("increasing", "decreasing", "log-convex", "log-concave", "positive", "equal")


# ===============================
# TIPOS
# ===============================

@dataclass(frozen=True)
class PropertyCheck:
    """Descripción de un chequeo: qué función, en qué dirección, sobre qué dominio."""
    name: str
    target: str
    direction: str
    domain: Dict[str, Tuple[float, float]] = field(default_factory=dict)
    fd_step: float = 0.0

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ConfigError(f"dirección desconocida '{self.direction}' en {self.name}")
        if self.fd_step < 0.0:
            raise ConfigError(f"fd_step negativo en {self.name}")
        for eje, (lo, hi) in self.domain.items():
            extension = hi - lo
            if self.fd_step > 0.0 and extension > 0.0 and self.fd_step > 1e-2 * extension:
                log.debug(f"{self.name}: paso {self.fd_step:.3g} mayor que 1% del rango de {eje} ({extension:.3g})")


@dataclass
class PropertyResult:
    check: PropertyCheck
    passed: bool
    points: int
    worst_point: Optional[Dict[str, float]]
    worst_value: float
    failures: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def name(self) -> str:
        return self.check.name

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d.pop("check")
        d.update(name=self.check.name, target=self.check.target, direction=self.check.direction,
                 domain={k: list(v) for k, v in self.check.domain.items()}, fd_step=self.check.fd_step)
        return d

    def __str__(self) -> str:
        estado = "PASA" if self.passed else "FALLA"
        return f"{self.check.name} [{self.check.direction}] {estado}: {self.points} puntos, peor {self.worst_value:.3e} en {self.worst_point}"


class _Acumulador:
    """Lleva la cuenta de puntos, del peor margen relativo y de las fallas."""

    def __init__(self):
        self.puntos = 0
        self.peor = math.inf
        self.peor_punto: Optional[Dict[str, float]] = None
        self.fallas: List[Dict[str, Any]] = []
        self.total_fallas = 0

    def agregar(self, margen: float, punto: Dict[str, float], ok: bool) -> None:
        self.puntos += 1
        if margen < self.peor or self.peor_punto is None:
            self.peor = margen
            self.peor_punto = punto
        if not ok:
            self.total_fallas += 1
            if len(self.fallas) < MAX_FAILURES_KEPT:
                self.fallas.append({**punto, "margin": margen})

    def resultado(self, check: PropertyCheck, **details: Any) -> PropertyResult:
        if self.total_fallas:
            details["failures_total"] = self.total_fallas
            log.warning(f"Propiedad {check.name}: {self.total_fallas} fallas, peor margen {self.peor:.3e} en {self.peor_punto}")
        return PropertyResult(
            check=check,
            passed=self.total_fallas == 0,
            points=self.puntos,
            worst_point=self.peor_punto,
            worst_value=self.peor if self.puntos else 0.0,
            failures=self.fallas,
            details=details,
        )


def _paso_minimo(valores: Sequence[float]) -> float:
    pasos = [b - a for a, b in zip(valores, valores[1:])]
    return min(pasos) if pasos else 0.0


def _rango(valores: Sequence[float]) -> Tuple[float, float]:
    return (min(valores), max(valores)) if valores else (0.0, 0.0)


def _diferencias(check: PropertyCheck, eje: str, abscisas: Sequence[float], valores: Sequence[float],
                 fijos: Dict[str, float], acc: _Acumulador, tol: float = FD_TOL) -> None:
    """
    Diferencias consecutivas con el signo de check.direction.

    El margen relativo es ±(v₁ − v₀)/max(|v₀|, |v₁|); se acepta si es
    mayor que −tol.
    """
    signo = 1.0 if check.direction == "increasing" else -1.0
    for (a0, v0), (a1, v1) in zip(zip(abscisas, valores), zip(abscisas[1:], valores[1:])):
        escala = max(abs(v0), abs(v1)) or 1.0
        margen = signo * (v1 - v0) / escala
        acc.agregar(margen, {**fijos, eje: a0, f"{eje}_next": a1}, margen > -tol)


# ===============================
# FUNCIONES OBJETIVO EN x
# ===============================

def _bessel_over_struve(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    return bessel_i(p["nu"] + 1.0, x, b).value / struve_l(p["nu"], x, b).value


def _norm_ratio_two_orders(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    """2^{ν−μ} x^{μ−ν} L_ν/L_μ, igual a 𝓛_ν/𝓛_μ por una constante positiva."""
    nu, mu = p["nu"], p["mu"]
    constante = math.exp(lgamma(mu + 1.5) - lgamma(nu + 1.5))
    return constante * struve_norm(nu, x, b).value / struve_norm(mu, x, b).value


def _log_deriv(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    return x * struve_l_prime(p["nu"], x, b).value / struve_l(p["nu"], x, b).value


def _closed_ratio_half(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    return struve_l(0.5, x, b).value / struve_l(-0.5, x, b).value


def _exp_scaled(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    nu = p["nu"]
    return math.exp(nu * math.log(x) - x) * struve_l(nu, x, b).value


def _cosh_scaled(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    nu = p["nu"]
    return x ** nu * struve_l(nu, x, b).value / cosh_minus_one(x)


def _x2_scaled(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    nu = p["nu"]
    return x ** nu * struve_l(nu, x, b).value / three_halves_bracket(x)


def _q_quotient(p: Dict[str, float], x: float, b: AccuracySpec) -> float:
    """𝓛_ν(x) / sinh(x/(2ν+3))."""
    nu = p["nu"]
    return struve_norm(nu, x, b).value / math.sinh(x / (2.0 * nu + 3.0))


OBJETIVOS_X: Dict[str, Callable[[Dict[str, float], float, AccuracySpec], float]] = {
    "bessel_over_struve": _bessel_over_struve,
    "norm_ratio_two_orders": _norm_ratio_two_orders,
    "log_deriv": _log_deriv,
    "closed_ratio_half": _closed_ratio_half,
    "exp_scaled": _exp_scaled,
    "cosh_scaled": _cosh_scaled,
    "x2_scaled": _x2_scaled,
    "q_quotient": _q_quotient,
}


def _direccion_x(target: str, params: Dict[str, float]) -> str:
    """Dirección que corresponde a los parámetros cuando no se da explícitamente."""
    nu = params.get("nu", 0.0)
    if target == "bessel_over_struve":
        return "increasing" if nu >= -0.5 else "decreasing"
    if target == "norm_ratio_two_orders":
        return "increasing" if params["mu"] >= nu else "decreasing"
    if target == "cosh_scaled":
        return "increasing" if nu >= 0.5 else "decreasing"
    if target == "x2_scaled":
        return "increasing" if nu >= 1.5 else "decreasing"
    return "increasing"


def _validar_params_x(target: str, params: Dict[str, float]) -> None:
    nu = params.get("nu")
    if target == "closed_ratio_half":
        return
    if nu is None:
        raise DomainError(f"{target} requiere el parámetro nu")
    if target == "norm_ratio_two_orders" and "mu" not in params:
        raise DomainError("norm_ratio_two_orders requiere el parámetro mu")
    minimos = {"exp_scaled": 0.5, "cosh_scaled": -0.5, "x2_scaled": -0.5, "q_quotient": -1.0}
    minimo = minimos.get(target, -1.5)
    if target == "exp_scaled":
        if nu < minimo:
            raise DomainError(f"{target} requiere ν ≥ {minimo}, se recibió ν={nu}")
    elif nu <= minimo:
        raise DomainError(f"{target} requiere ν > {minimo}, se recibió ν={nu}")


def check_monotone_x(target: str, params: Dict[str, float], grid: Sequence[float],
                     budget: AccuracySpec = DEFAULT_ACCURACY,
                     direction: Optional[str] = None) -> PropertyResult:
    """
    Monotonía en x de una función objetivo a ν (y μ) fijos.

    Args:
        target: bessel_over_struve, norm_ratio_two_orders, log_deriv,
            closed_ratio_half, exp_scaled, cosh_scaled, x2_scaled o q_quotient.
        params: {"nu": ...} y, para norm_ratio_two_orders, {"mu": ...}.
        grid: Valores de x (se ordenan).
        direction: Fuerza la dirección; por defecto sale de los parámetros.

    Para log_deriv además se exige x L'_ν/L_ν > ν + 1 en cada punto.
    """
    if target not in OBJETIVOS_X:
        raise DomainError(f"objetivo desconocido: {target}")
    _validar_params_x(target, params)
    xs = sorted(float(x) for x in grid)
    direccion = direction or _direccion_x(target, params)
    sufijo = "_".join(f"{k}={v:g}" for k, v in sorted(params.items()))
    check = PropertyCheck(
        name=f"monotone_x:{target}" + (f"[{sufijo}]" if sufijo else ""),
        target=target,
        direction=direccion,
        domain={"x": _rango(xs)},
        fd_step=_paso_minimo(xs),
    )
    f = OBJETIVOS_X[target]
    valores = [f(params, x, budget) for x in xs]
    acc = _Acumulador()
    _diferencias(check, "x", xs, valores, dict(params), acc)

    detalles: Dict[str, Any] = {}
    if target == "log_deriv":
        piso = params["nu"] + 1.0
        bajo_piso = [x for x, v in zip(xs, valores) if not v > piso]
        detalles["above_nu_plus_one"] = not bajo_piso
        for x in bajo_piso:
            acc.agregar(-1.0, {"nu": params["nu"], "x": x}, False)
    return acc.resultado(check, **detalles)


# ===============================
# FUNCIONES OBJETIVO EN ν
# ===============================

def _successive_ratio(nu: float, x: float, b: AccuracySpec) -> float:
    return struve_l(nu + 1.0, x, b).value / struve_l(nu, x, b).value


def _scaled_successive_ratio(nu: float, x: float, b: AccuracySpec) -> float:
    """2 L_{ν+1}(x) / (x L_ν(x))."""
    return 2.0 * _successive_ratio(nu, x, b) / x


def _gamma1_scaled(nu: float, x: float, b: AccuracySpec) -> float:
    """2^ν Γ(ν+1) x^{−ν} L_ν(x)."""
    return math.exp(nu * math.log(2.0 / x) + lgamma(nu + 1.0)) * struve_l(nu, x, b).value


OBJETIVOS_NU: Dict[str, Tuple[Callable[[float, float, AccuracySpec], float], float]] = {
    # objetivo: (función, ν mínimo exclusivo)
    "norm_struve": (lambda nu, x, b: struve_norm(nu, x, b).value, -1.5),
    "successive_ratio": (_successive_ratio, -1.5),
    "scaled_successive_ratio": (_scaled_successive_ratio, -1.5),
    "gamma1_scaled": (_gamma1_scaled, -1.0),
}


def _validar_nus(nus: Sequence[float], minimo: float, nombre: str) -> List[float]:
    nus = sorted(float(v) for v in nus)
    if nus and nus[0] <= minimo:
        raise DomainError(f"{nombre} requiere ν > {minimo}, la grilla empieza en ν={nus[0]}")
    return nus


def check_monotone_nu(target: str, x: float, nu_grid: Sequence[float],
                      budget: AccuracySpec = DEFAULT_ACCURACY) -> PropertyResult:
    """Decrecimiento en ν, a x fijo, de 𝓛_ν(x), L_{ν+1}/L_ν, 2L_{ν+1}/(xL_ν) o 2^νΓ(ν+1)x^{−ν}L_ν."""
    if target not in OBJETIVOS_NU:
        raise DomainError(f"objetivo desconocido: {target}")
    f, minimo = OBJETIVOS_NU[target]
    nus = _validar_nus(nu_grid, minimo, target)
    check = PropertyCheck(
        name=f"monotone_nu:{target}[x={x:g}]",
        target=target,
        direction="decreasing",
        domain={"nu": _rango(nus)},
        fd_step=_paso_minimo(nus),
    )
    acc = _Acumulador()
    _diferencias(check, "nu", nus, [f(nu, x, budget) for nu in nus], {"x": x}, acc)
    return acc.resultado(check)


def _pares(valores: Sequence[float], distancia: Callable[[int, int], bool]) -> Iterable[Tuple[float, float]]:
    for i, j in combinations(range(len(valores)), 2):
        if distancia(i, j):
            yield valores[i], valores[j]


def check_logconvex_nu(x: float, nu_grid: Sequence[float],
                       budget: AccuracySpec = DEFAULT_ACCURACY) -> PropertyResult:
    """
    ν ↦ 𝓛_ν(x) log-convexa: 𝓛_{(ν₁+ν₂)/2}² ≤ 𝓛_{ν₁}𝓛_{ν₂} para los pares de
    la grilla a distancia ≤ 4.
    """
    nus = _validar_nus(nu_grid, -1.5, "check_logconvex_nu")
    check = PropertyCheck(
        name=f"logconvex_nu:norm_struve[x={x:g}]",
        target="norm_struve",
        direction="log-convex",
        domain={"nu": _rango(nus)},
        fd_step=_paso_minimo(nus),
    )
    acc = _Acumulador()
    for n1, n2 in _pares(nus, lambda i, j: nus[j] - nus[i] <= NU_PAIR_MAX):
        medio = struve_norm(0.5 * (n1 + n2), x, budget).value
        producto = struve_norm(n1, x, budget).value * struve_norm(n2, x, budget).value
        margen = 1.0 - medio * medio / producto
        acc.agregar(margen, {"x": x, "nu1": n1, "nu2": n2}, margen > -FD_TOL)
    return acc.resultado(check)


def check_logconcave_nu(x: float, nu_grid: Sequence[float],
                        budget: AccuracySpec = DEFAULT_ACCURACY) -> PropertyResult:
    """
    ν ↦ L_ν(x) estrictamente log-concava (punto medio, pares a distancia ≤ 4)
    y log-concavidad discreta de Wright de G(ν) = 2^{ν+1}x^{−ν−1}L_ν(x):
    G(ν+1)G(ν+a) − G(ν)G(ν+a+1) ≥ 0 para a ∈ {0.5, 1, 2}.
    """
    nus = _validar_nus(nu_grid, -1.5, "check_logconcave_nu")
    check = PropertyCheck(
        name=f"logconcave_nu:struve[x={x:g}]",
        target="struve",
        direction="log-concave",
        domain={"nu": _rango(nus)},
        fd_step=_paso_minimo(nus),
    )
    acc = _Acumulador()
    for n1, n2 in _pares(nus, lambda i, j: nus[j] - nus[i] <= NU_PAIR_MAX):
        medio = struve_l(0.5 * (n1 + n2), x, budget).value
        producto = struve_l(n1, x, budget).value * struve_l(n2, x, budget).value
        margen = medio * medio / producto - 1.0
        acc.agregar(margen, {"x": x, "nu1": n1, "nu2": n2}, margen > 0.0)

    wright = _Acumulador()
    for nu in nus:
        for a in WRIGHT_SHIFTS:
            # los factores (x/2)^{−ν−1} de G se cancelan entre ambos productos
            izq = struve_l(nu + 1.0, x, budget).value * struve_l(nu + a, x, budget).value
            der = struve_l(nu, x, budget).value * struve_l(nu + a + 1.0, x, budget).value
            margen = 1.0 - der / izq
            punto = {"x": x, "nu": nu, "a": a}
            wright.agregar(margen, punto, margen > -FD_TOL)
            acc.agregar(margen, punto, margen > -FD_TOL)
    return acc.resultado(check, wright_points=wright.puntos, wright_worst=wright.peor,
                         wright_pass=wright.total_fallas == 0)


def shifted_log_convex_target(nu: float, x: float, budget: AccuracySpec = DEFAULT_ACCURACY) -> float:
    """1/√π + 2^ν Γ(ν+3/2) x^{−ν} L_{ν+1}(x)."""
    return 1.0 / math.sqrt(math.pi) + norm_factor(nu, x) * struve_l(nu + 1.0, x, budget).value


def check_logconvex_x(nu: float, x_grid: Sequence[float],
                      budget: AccuracySpec = DEFAULT_ACCURACY) -> PropertyResult:
    """
    x ↦ 1/√π + 2^νΓ(ν+3/2)x^{−ν}L_{ν+1}(x) log-convexa para ν ≥ −1/2, por
    punto medio sobre pares de la grilla con índices a distancia ≤ 8.
    """
    if nu < -0.5:
        raise DomainError(f"check_logconvex_x requiere ν ≥ −1/2, se recibió ν={nu}")
    xs = sorted(float(x) for x in x_grid)
    check = PropertyCheck(
        name=f"logconvex_x:shifted[nu={nu:g}]",
        target="shifted",
        direction="log-convex",
        domain={"x": _rango(xs)},
        fd_step=_paso_minimo(xs),
    )
    valores = {x: shifted_log_convex_target(nu, x, budget) for x in xs}
    acc = _Acumulador()
    for x1, x2 in _pares(xs, lambda i, j: j - i <= X_PAIR_INDEX_MAX):
        medio = shifted_log_convex_target(nu, 0.5 * (x1 + x2), budget)
        margen = 1.0 - medio * medio / (valores[x1] * valores[x2])
        acc.agregar(margen, {"nu": nu, "x1": x1, "x2": x2}, margen > -FD_TOL)
    return acc.resultado(check)


# ===============================
# ORÁCULO DE COEFICIENTES
# ===============================

def coefficient_checks(nu_grid: Sequence[float], n_max: int = COEF_N_MAX) -> PropertyResult:
    """
    Monotonía de los cocientes de coeficientes que sostienen las propiedades
    en x:
        α_{ν,n}/β_{ν,n}: creciente si ν ≥ −1/2, decreciente si ν < −1/2
        γ_{ν,n}/γ_{μ,n}: creciente si μ > ν, decreciente si μ < ν
        δ_{ν,n}/β_{ν,n}: creciente si ν > −1 (δ_{ν,0} = (ν+1)β_{ν,0})
        λ_{ν,n} (= γ_{ν,n} / coeficiente de sinh): creciente si ν > −1
    Un veredicto CONSTANT se acepta en los órdenes frontera.
    """
    nus = sorted(float(v) for v in nu_grid)
    check = PropertyCheck(
        name="coefficient_quotients",
        target="coefficient_quotients",
        direction="increasing",
        domain={"nu": _rango(nus)},
    )
    acc = _Acumulador()
    veredictos: Dict[str, Dict[str, int]] = {}

    def registrar(nombre: str, nu: float, obtenido: Monotonia, esperado: Monotonia, **extra: float) -> None:
        ok = obtenido in (esperado, Monotonia.CONSTANT)
        cuenta = veredictos.setdefault(nombre, {})
        cuenta[obtenido.value] = cuenta.get(obtenido.value, 0) + 1
        acc.agregar(0.0 if ok else -1.0, {"sequence": nombre, "nu": nu, **extra}, ok)

    for nu in nus:
        if nu <= -1.5 + BOUNDARY_EPS:
            continue
        esperado = Monotonia.INCREASING if nu >= -0.5 else Monotonia.DECREASING
        registrar("alpha_over_beta", nu,
                  quotient_sequence_monotone(coeff_generator("alpha", nu), coeff_generator("beta", nu), n_max),
                  esperado)
        for d in (-1.0, 0.5, 2.0):
            mu = nu + d
            if mu <= -1.5 + BOUNDARY_EPS:
                continue
            esperado = Monotonia.INCREASING if mu > nu else Monotonia.DECREASING
            registrar("omega", nu,
                      quotient_sequence_monotone(coeff_generator("gamma", nu), coeff_generator("gamma", mu), n_max),
                      esperado, mu=mu)
        if nu > -1.0 + BOUNDARY_EPS:
            registrar("delta_over_beta", nu,
                      quotient_sequence_monotone(coeff_generator("delta", nu), coeff_generator("beta", nu), n_max),
                      Monotonia.INCREASING)
            registrar("lambda", nu,
                      quotient_sequence_monotone(coeff_generator("lambda", nu), lambda n: 1.0, n_max),
                      Monotonia.INCREASING)
            registrar("gamma_over_sinh", nu,
                      quotient_sequence_monotone(coeff_generator("gamma", nu), coeff_generator("sinh", nu), n_max),
                      Monotonia.INCREASING)
    return acc.resultado(check, verdicts=veredictos)


# ===============================
# CADENAS, PUNTOS Y MÉTODOS CRUZADOS
# ===============================

def chain_checks(nus: Sequence[float], xs: Sequence[float], y_ratios: Sequence[float] = (1.25, 1.6),
                 budget: AccuracySpec = DEFAULT_ACCURACY) -> List[PropertyResult]:
    """
    Orden entre cotas de una misma familia:
        derivada logarítmica: 1 ≤ sinh t/(cosh t − 1) ≤ t(cosh t − 1)/B(t)
        dos puntos: (cosh x − 1)/(cosh y − 1) ≤ e^{x−y}
        Turán: cota π/4 ≤ cota 4/π < Δ_ν < L_ν²/(ν+3/2)
    El factor −ν/t (resp. (y/x)^ν) es común a cada familia y no cambia el orden.
    """
    xs = sorted(float(x) for x in xs)
    deriv = _Acumulador()
    for t in xs:
        lineal = 1.0
        cosh_cota = 1.0 / math.tanh(0.5 * t)
        x2_cota = t * cosh_minus_one(t) / three_halves_bracket(t)
        margen = min(cosh_cota - lineal, x2_cota - cosh_cota) / x2_cota
        deriv.agregar(margen, {"t": t}, margen >= 0.0)

    dos = _Acumulador()
    for x in xs:
        for r in y_ratios:
            y = r * x
            cosh_cota = cosh_minus_one(x) / cosh_minus_one(y)
            exp_cota = math.exp(x - y)
            margen = (exp_cota - cosh_cota) / exp_cota
            dos.agregar(margen, {"x": x, "y": y}, margen >= 0.0)

    turan = _Acumulador()
    for nu in sorted(float(v) for v in nus):
        if nu <= -1.5 + BOUNDARY_EPS:
            continue
        for x in xs:
            p = Point(nu, x)
            l = struve_l(nu, x, budget).value
            superior = l * l / (nu + 1.5)
            delta = turan_delta(nu, x, budget)
            bajo_pi = turan_lower_pi_over_4(p)
            bajo_4 = turan_lower_4_over_pi(p)
            margenes = ((bajo_4 - bajo_pi) / bajo_4, (delta - bajo_4) / delta, (superior - delta) / superior)
            ok = margenes[0] >= 0.0 and margenes[1] > 0.0 and margenes[2] > 0.0
            turan.agregar(min(margenes), {"nu": nu, "x": x}, ok)

    dominio_x = {"x": _rango(xs)}
    return [
        deriv.resultado(PropertyCheck("chain:logderiv_lower", "logderiv_lower_family", "increasing", dominio_x)),
        dos.resultado(PropertyCheck("chain:two_point", "two_point_ratio_family", "decreasing", dominio_x)),
        turan.resultado(PropertyCheck("chain:turan", "turan", "increasing",
                                      {"nu": _rango(list(nus)), **dominio_x})),
    ]


def spot_checks(xs: Sequence[float], budget: AccuracySpec = DEFAULT_ACCURACY) -> PropertyResult:
    """
    Valores puntuales conocidos:
        I_{3/2}/L_{1/2} en x = 1e−4 igual a 2/3 (1e−6)
        I_{1/2}/L_{−1/2} ≡ 1 en toda la grilla (1e−12)
        L_{1/2}/L_{−1/2} = (cosh x − 1)/sinh x en toda la grilla (1e−12)
        x L'_0/L_0 en x = 1e−5 igual a 1 (1e−9)
    """
    check = PropertyCheck("spot:known_values", "spot", "equal", {"x": _rango(list(xs))})
    acc = _Acumulador()

    def comparar(nombre: str, valor: float, esperado: float, tol: float, **punto: float) -> None:
        desvio = abs(valor - esperado) / max(abs(esperado), 1e-300)
        acc.agregar(-desvio, {"check": nombre, **punto}, desvio <= tol)

    comparar("bessel_over_struve_limit", _bessel_over_struve({"nu": 0.5}, 1e-4, budget), 2.0 / 3.0, 1e-6, x=1e-4)
    comparar("log_deriv_limit", _log_deriv({"nu": 0.0}, 1e-5, budget), 1.0, 1e-9, x=1e-5)
    for x in xs:
        comparar("bessel_over_struve_unit", _bessel_over_struve({"nu": -0.5}, x, budget), 1.0, 1e-12, x=x)
        comparar("successive_ratio_half", _successive_ratio(-0.5, x, budget), math.tanh(0.5 * x), 1e-12, x=x)
    return acc.resultado(check)


def cross_method_checks(budget: AccuracySpec = DEFAULT_ACCURACY,
                        q: QuadratureSpec = DEFAULT_QUADRATURE) -> PropertyResult:
    """
    Serie contra cuadratura (1e−8), serie contra formas cerradas (1e−12) y la
    forma integrada por partes contra 2^νΓ(ν+3/2)x^{−ν}L_{ν+1} por serie (1e−8).
    """
    check = PropertyCheck("cross:series_vs_independent", "struve", "equal")
    acc = _Acumulador()

    def comparar(metodo: str, serie: float, otro: float, tol: float, nu: float, x: float) -> None:
        desvio = abs(serie - otro) / abs(serie)
        acc.agregar(-desvio, {"method": metodo, "nu": nu, "x": x}, desvio <= tol)

    for nu in CROSS_QUAD_NUS:
        for x in CROSS_QUAD_XS:
            comparar("quadrature", struve_l(nu, x, budget).value, struve_l_quad(nu, x, q).value,
                     CROSS_QUAD_TOL, nu, x)
    for nu in (-0.5, 0.5, 1.5):
        for x in CROSS_CLOSED_XS:
            comparar("closed_form", struve_l(nu, x, budget).value, struve_closed_form(nu, x).value,
                     CROSS_CLOSED_TOL, nu, x)
    for nu in CROSS_SHIFTED_NUS:
        for x in CROSS_QUAD_XS:
            serie = norm_factor(nu, x) * struve_l(nu + 1.0, x, budget).value
            comparar("next_shifted", serie, struve_next_shifted_eval(nu, x, q).value, CROSS_QUAD_TOL, nu, x)
    return acc.resultado(check)


# ===============================
# SUITE POR DEFECTO
# ===============================

def _combinar(nombre: str, target: str, direction: str, resultados: List[PropertyResult]) -> PropertyResult:
    """Une varios resultados del mismo tipo en uno solo (pasa si todos pasan)."""
    dominio: Dict[str, Tuple[float, float]] = {}
    for r in resultados:
        for eje, (lo, hi) in r.check.domain.items():
            a, b = dominio.get(eje, (lo, hi))
            dominio[eje] = (min(a, lo), max(b, hi))
    pasos = [r.check.fd_step for r in resultados if r.check.fd_step > 0.0]
    check = PropertyCheck(nombre, target, direction, dominio, min(pasos) if pasos else 0.0)
    peor = min(resultados, key=lambda r: r.worst_value) if resultados else None
    fallas = [f for r in resultados for f in r.failures][:MAX_FAILURES_KEPT]
    return PropertyResult(
        check=check,
        passed=all(r.passed for r in resultados),
        points=sum(r.points for r in resultados),
        worst_point=peor.worst_point if peor else None,
        worst_value=peor.worst_value if peor else 0.0,
        failures=fallas,
        details={"parts": [r.check.name for r in resultados],
                 **({"above_nu_plus_one": all(r.details.get("above_nu_plus_one", True) for r in resultados)}
                    if target == "log_deriv" else {})},
    )


def _filtrar(nus: Sequence[float], minimo: float, maximo: float = math.inf) -> List[float]:
    return [nu for nu in nus if minimo + BOUNDARY_EPS < nu < maximo - BOUNDARY_EPS]


def default_property_suite(nus: Sequence[float], xs: Sequence[float],
                           budget: AccuracySpec = DEFAULT_ACCURACY,
                           q: QuadratureSpec = DEFAULT_QUADRATURE,
                           property_xs: Sequence[float] = DEFAULT_PROPERTY_XS) -> List[Tuple[str, Callable[[], Any]]]:
    """
    Lista de (nombre, tarea) de la suite por defecto. Cada tarea devuelve un
    PropertyResult o una lista de ellos; el verificador las ejecuta y captura
    los errores de evaluación por tarea.
    """
    nus = sorted(float(v) for v in nus)
    xs = sorted(float(x) for x in xs)

    def varios_x(nombre: str, target: str, direccion: str, params: List[Dict[str, float]]) -> Callable[[], PropertyResult]:
        return lambda: _combinar(nombre, target, direccion,
                                 [check_monotone_x(target, p, xs, budget, direccion) for p in params])

    def varios_nu(nombre: str, target: str, minimo: float) -> Callable[[], PropertyResult]:
        grilla = _filtrar(nus, minimo)
        return lambda: _combinar(nombre, target, "decreasing",
                                 [check_monotone_nu(target, x, grilla, budget) for x in property_xs])

    tareas: List[Tuple[str, Callable[[], Any]]] = [
        ("bessel_over_struve_increasing", varios_x(
            "bessel_over_struve_increasing", "bessel_over_struve", "increasing",
            [{"nu": v} for v in (-0.5, 0.0, 0.5, 1.0, 2.5, 5.0)])),
        ("bessel_over_struve_decreasing", varios_x(
            "bessel_over_struve_decreasing", "bessel_over_struve", "decreasing",
            [{"nu": v} for v in (-1.4, -1.0, -0.75)])),
        ("norm_ratio_increasing", varios_x(
            "norm_ratio_increasing", "norm_ratio_two_orders", "increasing",
            [{"nu": 0.0, "mu": 1.0}, {"nu": -1.0, "mu": 2.0}, {"nu": 1.0, "mu": 3.5}])),
        ("norm_ratio_decreasing", varios_x(
            "norm_ratio_decreasing", "norm_ratio_two_orders", "decreasing",
            [{"nu": 1.0, "mu": 0.0}, {"nu": 2.0, "mu": -1.0}, {"nu": 0.5, "mu": -1.25}])),
        ("norm_struve_decreasing_nu", varios_nu("norm_struve_decreasing_nu", "norm_struve", -1.5)),
        ("norm_struve_logconvex_nu", lambda: _combinar(
            "norm_struve_logconvex_nu", "norm_struve", "log-convex",
            [check_logconvex_nu(x, _filtrar(nus, -1.5), budget) for x in property_xs])),
        ("successive_ratio_decreasing_nu", varios_nu("successive_ratio_decreasing_nu", "successive_ratio", -1.5)),
        ("log_deriv_increasing", varios_x(
            "log_deriv_increasing", "log_deriv", "increasing",
            [{"nu": v} for v in (-1.4, -1.0, -0.5, 0.0, 1.0, 3.0, 6.0)])),
        ("shifted_logconvex_x", lambda: _combinar(
            "shifted_logconvex_x", "shifted", "log-convex",
            [check_logconvex_x(nu, xs, budget) for nu in (-0.5, 0.0, 1.0, 3.0)])),
        ("closed_ratio_half_increasing", lambda: check_monotone_x("closed_ratio_half", {}, xs, budget)),
        ("scaled_successive_ratio_decreasing_nu", varios_nu(
            "scaled_successive_ratio_decreasing_nu", "scaled_successive_ratio", -1.5)),
        ("struve_logconcave_nu", lambda: _combinar(
            "struve_logconcave_nu", "struve", "log-concave",
            [check_logconcave_nu(x, _filtrar(nus, -1.5), budget) for x in property_xs])),
        ("gamma1_scaled_decreasing_nu", varios_nu("gamma1_scaled_decreasing_nu", "gamma1_scaled", -1.0)),
        ("exp_scaled_increasing", varios_x(
            "exp_scaled_increasing", "exp_scaled", "increasing",
            [{"nu": v} for v in (0.5, 1.0, 2.0, 4.0)])),
        ("cosh_scaled_increasing", varios_x(
            "cosh_scaled_increasing", "cosh_scaled", "increasing",
            [{"nu": v} for v in (0.75, 1.0, 2.0, 4.0)])),
        ("cosh_scaled_decreasing", varios_x(
            "cosh_scaled_decreasing", "cosh_scaled", "decreasing",
            [{"nu": v} for v in (-0.25, 0.0, 0.25)])),
        ("x2_scaled_increasing", varios_x(
            "x2_scaled_increasing", "x2_scaled", "increasing",
            [{"nu": v} for v in (2.0, 3.0, 5.0)])),
        ("x2_scaled_decreasing", varios_x(
            "x2_scaled_decreasing", "x2_scaled", "decreasing",
            [{"nu": v} for v in (-0.25, 0.5, 1.0)])),
        ("q_quotient_increasing", varios_x(
            "q_quotient_increasing", "q_quotient", "increasing",
            [{"nu": v} for v in (-0.9, -0.5, 0.0, 1.0, 3.0)])),
        ("coefficient_quotients", lambda: coefficient_checks(nus)),
        ("chains", lambda: chain_checks(nus, xs, budget=budget)),
        ("spot_values", lambda: spot_checks(xs, budget)),
        ("cross_method", lambda: cross_method_checks(budget, q)),
    ]
    return tareas
