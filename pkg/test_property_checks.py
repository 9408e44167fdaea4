"""
Pruebas de los chequeos de monotonía, log-convexidad y log-concavidad por
diferencias finitas, del oráculo de coeficientes y de la suite por defecto.
"""

import math

import pytest

from errors import ConfigError, DomainError
from property_checks import (
    DIRECTIONS,
    PropertyCheck,
    chain_checks,
    check_logconcave_nu,
    check_logconvex_nu,
    check_logconvex_x,
    check_monotone_nu,
    check_monotone_x,
    cross_method_checks,
    default_property_suite,
    coefficient_checks,
    shifted_log_convex_target,
    spot_checks,
)

XS = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0]
NUS = [-1.0, -0.5, 0.0, 1.0, 2.0, 3.0]


# --- Monotonía en x ---

@pytest.mark.parametrize("target, params, direccion", [
    ("bessel_over_struve", {"nu": 0.0}, "increasing"),
    ("bessel_over_struve", {"nu": -1.0}, "decreasing"),
    ("norm_ratio_two_orders", {"nu": 0.0, "mu": 1.0}, "increasing"),
    ("norm_ratio_two_orders", {"nu": 1.0, "mu": 0.0}, "decreasing"),
    ("closed_ratio_half", {}, "increasing"),
    ("exp_scaled", {"nu": 1.0}, "increasing"),
    ("cosh_scaled", {"nu": 2.0}, "increasing"),
    ("cosh_scaled", {"nu": 0.0}, "decreasing"),
    ("x2_scaled", {"nu": 3.0}, "increasing"),
    ("x2_scaled", {"nu": 0.5}, "decreasing"),
    ("q_quotient", {"nu": 0.0}, "increasing"),
])
def test_check_monotone_x(target, params, direccion):
    resultado = check_monotone_x(target, params, XS)
    assert resultado.check.direction == direccion
    assert resultado.passed, str(resultado)
    assert resultado.points == len(XS) - 1
    assert resultado.failures == []


def test_bessel_over_struve_constante_en_menos_medio():
    # I_{1/2} = L_{−1/2}: el cociente es 1 y la diferencia queda dentro de la tolerancia
    assert check_monotone_x("bessel_over_struve", {"nu": -0.5}, XS).passed


@pytest.mark.parametrize("nu", [-1.4, 0.0, 1.0, 6.0])
def test_log_deriv_creciente_y_sobre_el_piso(nu):
    resultado = check_monotone_x("log_deriv", {"nu": nu}, XS)
    assert resultado.passed, str(resultado)
    assert resultado.details["above_nu_plus_one"] is True


def test_direccion_forzada_incorrecta_falla():
    resultado = check_monotone_x("log_deriv", {"nu": 1.0}, XS, direction="decreasing")
    assert not resultado.passed
    assert resultado.failures
    assert resultado.worst_value < 0.0
    assert resultado.details["failures_total"] == len(XS) - 1


@pytest.mark.parametrize("target, params", [
    ("no_existe", {"nu": 0.0}),
    ("exp_scaled", {"nu": 0.0}),
    ("norm_ratio_two_orders", {"nu": 0.0}),
    ("q_quotient", {"nu": -1.0}),
    ("log_deriv", {}),
])
def test_check_monotone_x_parametros_invalidos(target, params):
    with pytest.raises(DomainError):
        check_monotone_x(target, params, XS)


# --- Monotonía en ν ---

@pytest.mark.parametrize("target", ["norm_struve", "successive_ratio", "scaled_successive_ratio"])
@pytest.mark.parametrize("x", [0.1, 1.0, 20.0])
def test_check_monotone_nu(target, x):
    resultado = check_monotone_nu(target, x, [-1.25] + NUS)
    assert resultado.passed, str(resultado)
    assert resultado.check.direction == "decreasing"
    assert resultado.points == len(NUS)


def test_gamma1_scaled():
    assert check_monotone_nu("gamma1_scaled", 2.0, [-0.75] + NUS[1:]).passed
    with pytest.raises(DomainError):
        check_monotone_nu("gamma1_scaled", 2.0, NUS)


def test_check_monotone_nu_objetivo_desconocido():
    with pytest.raises(DomainError):
        check_monotone_nu("bessel", 1.0, NUS)


# --- Log-convexidad y log-concavidad ---

@pytest.mark.parametrize("x", [0.1, 1.0, 20.0])
def test_logconvex_nu(x):
    nus = [-1.0, 0.0, 1.0, 2.0, 3.0]
    resultado = check_logconvex_nu(x, nus)
    assert resultado.passed, str(resultado)
    # todos los pares están a distancia ≤ 4
    assert resultado.points == 10


def test_logconvex_nu_limita_la_distancia():
    assert check_logconvex_nu(1.0, [-1.0, 0.0, 4.0, 5.0]).points == 3


@pytest.mark.parametrize("x", [0.1, 1.0, 20.0])
def test_logconcave_nu_con_wright(x):
    resultado = check_logconcave_nu(x, [0.0, 1.0, 2.0])
    assert resultado.passed, str(resultado)
    assert resultado.details["wright_points"] == 9
    assert resultado.details["wright_pass"] is True
    assert resultado.points == 3 + 9


@pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 3.0])
def test_logconvex_x(nu):
    resultado = check_logconvex_x(nu, XS)
    assert resultado.passed, str(resultado)


def test_logconvex_x_fuera_de_dominio():
    with pytest.raises(DomainError):
        check_logconvex_x(-1.0, XS)


def test_shifted_target_en_menos_medio():
    # con ν = −1/2: 1/√π + (cosh x − 1)/√π = cosh x/√π
    assert shifted_log_convex_target(-0.5, 2.0) == pytest.approx(math.cosh(2.0) / math.sqrt(math.pi), rel=1e-12)


# --- Oráculo de coeficientes ---

def test_coefficient_checks():
    resultado = coefficient_checks([-1.25, -1.0, -0.5, 0.0, 1.0, 3.0], n_max=30)
    assert resultado.passed, str(resultado)
    veredictos = resultado.details["verdicts"]
    assert set(veredictos) == {"alpha_over_beta", "delta_over_beta", "omega", "lambda", "gamma_over_sinh"}
    assert veredictos["alpha_over_beta"].get("decreasing") == 2
    assert veredictos["delta_over_beta"] == {"increasing": 4}


# --- Cadenas, valores puntuales y métodos cruzados ---

def test_chain_checks():
    resultados = chain_checks([0.0, 1.0], [0.5, 1.0, 5.0], y_ratios=(1.25,))
    assert [r.name for r in resultados] == ["chain:logderiv_lower", "chain:two_point", "chain:turan"]
    for r in resultados:
        assert r.passed, str(r)
    assert resultados[0].points == 3
    assert resultados[1].points == 3
    assert resultados[2].points == 6


def test_spot_checks():
    resultado = spot_checks([0.5, 1.0, 5.0])
    assert resultado.passed, str(resultado)
    assert resultado.points == 2 + 2 * 3


def test_cross_method_checks():
    resultado = cross_method_checks()
    assert resultado.passed, str(resultado)
    assert resultado.points == 6 * 5 + 3 * 7 + 5 * 5


# --- Tipos y suite ---

def test_property_check_direccion_invalida():
    with pytest.raises(ConfigError):
        PropertyCheck("x", "struve", "oscillating")
    with pytest.raises(ConfigError):
        PropertyCheck("x", "struve", "increasing", fd_step=-1.0)
    assert "log-concave" in DIRECTIONS


def test_property_result_to_dict():
    datos = check_monotone_x("log_deriv", {"nu": 0.0}, [1.0, 2.0]).to_dict()
    assert datos["name"] == "monotone_x:log_deriv[nu=0]"
    assert datos["direction"] == "increasing"
    assert datos["domain"] == {"x": [1.0, 2.0]}
    assert datos["fd_step"] == 1.0
    assert "check" not in datos


def test_default_property_suite():
    tareas = default_property_suite([-1.0, 0.0, 1.0, 2.0], [0.5, 1.0, 2.0, 5.0, 10.0], property_xs=(1.0, 5.0))
    nombres = [n for n, _ in tareas]
    assert len(nombres) == len(set(nombres)) == 23
    for nombre, tarea in tareas:
        salida = tarea()
        for r in salida if isinstance(salida, list) else [salida]:
            assert r.passed, f"{nombre}: {r}"
