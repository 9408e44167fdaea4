"""
Pruebas de los evaluadores de L_ν, L'_ν, L''_ν, 𝓛_ν e I_ν, de las formas
cerradas, de la cuadratura y del oráculo de monotonía de cocientes.

Oráculo de alta precisión: mpmath (struvel, besseli); scipy.special como
segundo oráculo en doble precisión.
"""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from errors import ConvergenceError, DomainError, RangeError
from numerics_core import AccuracySpec
from struve_eval import (
    Monotonia,
    alpha_coeff,
    beta_coeff,
    bessel_i,
    coeff_generator,
    evaluate,
    lambda_coeff,
    norm_factor,
    quotient_sequence_monotone,
    struve_closed_form,
    struve_coeff_beta,
    struve_l,
    struve_l_any,
    struve_l_prime,
    struve_l_quad,
    struve_l_second,
    struve_next_shifted,
    struve_next_shifted_eval,
    struve_norm,
    three_halves_bracket_scaled,
)

mpmath.mp.dps = 30
RAIZ_2_PI = math.sqrt(2.0 / math.pi)


def _mp_struvel(nu, x):
    return float(mpmath.struvel(nu, x))


# --- Coeficientes ---

def test_struve_coeff_beta_valores():
    assert struve_coeff_beta(0.0, 0) == pytest.approx(4.0 / math.pi, rel=1e-14)
    assert struve_coeff_beta(-0.5, 0) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-14)
    assert struve_coeff_beta(1.0, 1) == pytest.approx(float(1 / (mpmath.gamma(2.5) * mpmath.gamma(3.5))), rel=1e-13)


def test_struve_coeff_beta_fuera_de_dominio():
    with pytest.raises(DomainError):
        struve_coeff_beta(-1.5, 0)


def test_lambda_coeff_definicion():
    nu, n = 0.5, 3
    c = mpmath.mpf(nu) + 1.5
    esperado = mpmath.factorial(2 * n + 1) * c ** (2 * n + 1) / (mpmath.gamma(n + 1.5) * mpmath.rf(c, n))
    assert lambda_coeff(nu, n) == pytest.approx(float(esperado), rel=1e-12)


def test_coeff_generator_desconocido():
    assert coeff_generator("beta", 1.0)(2) == beta_coeff(1.0, 2)
    with pytest.raises(DomainError):
        coeff_generator("zeta", 1.0)


# --- Serie de L_ν ---

STRUVE_EJEMPLOS = {
    "menos_medio": (-0.5, 1.0, RAIZ_2_PI * math.sinh(1.0)),
    "medio": (0.5, 1.0, RAIZ_2_PI * (math.cosh(1.0) - 1.0)),
}


@pytest.mark.parametrize("nu, x, esperado", STRUVE_EJEMPLOS.values(), ids=STRUVE_EJEMPLOS.keys())
def test_struve_l_formas_cerradas(nu, x, esperado):
    assert struve_l(nu, x).value == pytest.approx(esperado, rel=1e-14)


@pytest.mark.parametrize("nu", [-1.4, -1.0, -0.25, 0.0, 1.0, 2.5, 6.0])
@pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 5.0, 20.0, 30.0])
def test_struve_l_contra_mpmath(nu, x):
    ev = struve_l(nu, x)
    esperado = _mp_struvel(nu, x)
    assert ev.value == pytest.approx(esperado, rel=1e-12)
    assert abs(ev.value - esperado) <= max(ev.abs_error_est, 1e-12 * esperado)
    assert ev.method == "series"
    assert 0 < ev.terms_used <= 500


def test_struve_l_limite_x_chico():
    x = 1e-6
    assert struve_l(0.0, x).value / x == pytest.approx(2.0 / math.pi, rel=1e-10)


@given(st.floats(min_value=-1.49, max_value=8.0), st.floats(min_value=1e-3, max_value=50.0))
@settings(max_examples=100, deadline=None)
def test_struve_l_positiva(nu, x):
    ev = struve_l(nu, x)
    assert ev.value > 0.0
    assert ev.abs_error_est >= 0.0


@pytest.mark.parametrize("nu, x, error", [
    (-1.5, 1.0, DomainError),
    (0.0, 0.0, DomainError),
    (0.0, -1.0, DomainError),
    (0.0, 60.0, RangeError),
    (math.nan, 1.0, DomainError),
])
def test_struve_l_errores(nu, x, error):
    with pytest.raises(error):
        struve_l(nu, x)


def test_struve_l_sin_convergencia():
    with pytest.raises(ConvergenceError) as info:
        struve_l(0.0, 20.0, AccuracySpec(max_terms=2))
    assert info.value.terms_used == 2
    assert info.value.partial > 0.0


@pytest.mark.parametrize("x", [0.5, 3.0])
def test_struve_l_any_continuacion(x):
    # L_{−n−1/2} = I_{n+1/2}
    assert struve_l_any(-1.5, x).value == pytest.approx(float(mpmath.besseli(1.5, x)), rel=1e-12)
    assert struve_l_any(-2.5, x).value == pytest.approx(float(mpmath.besseli(2.5, x)), rel=1e-12)
    assert struve_l_any(-2.0, x).value == pytest.approx(_mp_struvel(-2.0, x), rel=1e-11)


# --- Derivadas ---

def test_struve_l_prime_formas_cerradas():
    assert struve_l_prime(-0.5, 1.0).value == pytest.approx(
        RAIZ_2_PI * (math.cosh(1.0) - 0.5 * math.sinh(1.0)), rel=1e-13)
    assert struve_l_prime(0.5, 1.0).value == pytest.approx(
        RAIZ_2_PI * (math.sinh(1.0) - 0.5 * (math.cosh(1.0) - 1.0)), rel=1e-13)


def test_derivada_logaritmica_limite():
    x = 1e-5
    assert x * struve_l_prime(0.0, x).value / struve_l(0.0, x).value == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("nu, x", [(-1.2, 0.7), (0.0, 1.0), (1.5, 4.0), (3.0, 12.0)])
def test_derivadas_contra_mpmath(nu, x):
    primera = float(mpmath.diff(lambda t: mpmath.struvel(nu, t), x))
    segunda = float(mpmath.diff(lambda t: mpmath.struvel(nu, t), x, 2))
    assert struve_l_prime(nu, x).value == pytest.approx(primera, rel=1e-11)
    assert struve_l_second(nu, x).value == pytest.approx(segunda, rel=1e-10)


# --- Normalizada y Bessel ---

def test_struve_norm_valores():
    assert struve_norm(3.0, 1e-6).value == pytest.approx(1e-6 / math.sqrt(math.pi), rel=1e-10)
    assert struve_norm(-0.5, 1.0).value == pytest.approx(math.sinh(1.0) / math.sqrt(math.pi), rel=1e-14)
    assert struve_norm(2.0, 3.0).value <= struve_norm(1.0, 3.0).value


@pytest.mark.parametrize("nu", [-1.3, -0.5, 0.0, 2.0, 5.5])
@pytest.mark.parametrize("x", [0.1, 2.0, 25.0])
def test_struve_norm_consistente_con_struve_l(nu, x):
    desde_norm = struve_norm(nu, x).value / norm_factor(nu, x)
    assert desde_norm == pytest.approx(struve_l(nu, x).value, rel=1e-12)


def test_bessel_i_valores():
    assert bessel_i(0.5, 1.0).value == pytest.approx(RAIZ_2_PI * math.sinh(1.0), rel=1e-14)
    assert bessel_i(0.0, 1.0).value == pytest.approx(float(mpmath.besseli(0, 1)), rel=1e-14)
    x = 1e-4
    assert bessel_i(2.0, x).value * 2.0 * (2.0 / x) ** 2 == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("nu, x", [(-0.75, 0.3), (1.0, 10.0), (4.5, 30.0)])
def test_bessel_i_contra_mpmath(nu, x):
    assert bessel_i(nu, x).value == pytest.approx(float(mpmath.besseli(nu, x)), rel=1e-12)


def test_bessel_i_fuera_de_dominio():
    with pytest.raises(DomainError):
        bessel_i(-1.0, 1.0)


@pytest.mark.parametrize("nu", [0.0, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.5, 3.0, 10.0])
def test_struve_l_contra_scipy(nu, x):
    assert struve_l(nu, x).value == pytest.approx(float(special.modstruve(nu, x)), rel=1e-9)
    assert bessel_i(nu, x).value == pytest.approx(float(special.iv(nu, x)), rel=1e-12)


# --- Formas cerradas ---

def test_struve_closed_form_valores():
    x = 1.7
    cociente = struve_closed_form(-0.5, x).value / struve_closed_form(0.5, x).value
    assert cociente == pytest.approx(math.sinh(x) / (math.cosh(x) - 1.0), rel=1e-14)
    tres_medios = RAIZ_2_PI * (1.0 - math.cosh(1.0) + math.sinh(1.0) - 0.5)
    assert struve_closed_form(1.5, 1.0).value == pytest.approx(tres_medios, rel=1e-12)
    assert struve_closed_form(1.5, 1.0).value == pytest.approx(0.105418, abs=1e-6)
    assert struve_closed_form(0.5, 2.0).value == pytest.approx((math.cosh(2.0) - 1.0) / math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("nu", [-0.5, 0.5, 1.5])
@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
def test_forma_cerrada_contra_serie(nu, x):
    assert struve_l(nu, x).value == pytest.approx(struve_closed_form(nu, x).value, rel=1e-12)


def test_forma_cerrada_tres_medios_x_chico():
    x = 1e-3
    assert struve_closed_form(1.5, x).value == pytest.approx(_mp_struvel(1.5, x), rel=1e-12)


def test_forma_cerrada_orden_sin_formula():
    with pytest.raises(DomainError):
        struve_closed_form(1.0, 1.0)


@pytest.mark.parametrize("x", [1e-30, 1e-100, 1e-150])
def test_forma_cerrada_x_diminuto(x):
    # primeros términos: L_{3/2} ≈ √(2/π) x^{5/2}/8, L_{1/2} ≈ √(2/π) x^{3/2}/2
    assert struve_closed_form(1.5, x).value == pytest.approx(RAIZ_2_PI * x ** 2.5 / 8.0, rel=1e-12)
    assert struve_closed_form(0.5, x).value == pytest.approx(RAIZ_2_PI * x ** 1.5 / 2.0, rel=1e-12)
    assert three_halves_bracket_scaled(x) == pytest.approx(1.0 / 8.0, rel=1e-12)


def test_forma_cerrada_menor_subnormal():
    x = 5e-324
    assert struve_closed_form(1.5, x).value == 0.0
    assert struve_closed_form(0.5, x).value == 0.0
    assert struve_closed_form(-0.5, x).value > 0.0
    assert three_halves_bracket_scaled(x) == pytest.approx(1.0 / 8.0, rel=1e-15)


@pytest.mark.parametrize("nu, x", [(-0.5, 800.0), (0.5, 1000.0), (0.5, 2000.0), (1.5, 750.0)])
def test_forma_cerrada_desborde_es_range_error(nu, x):
    with pytest.raises(RangeError):
        struve_closed_form(nu, x)


def test_cuadratura_desborde_es_range_error():
    with pytest.raises(RangeError):
        struve_l_quad(0.0, 800.0)
    with pytest.raises(RangeError):
        struve_next_shifted_eval(0.0, 2000.0)
    with pytest.raises(RangeError):
        evaluate("struve", 0.5, 1000.0, "closed")


# --- Cuadratura ---

def test_struve_l_quad_ejemplos():
    assert struve_l_quad(0.0, 1.0).value == pytest.approx(struve_l(0.0, 1.0).value, rel=1e-10)
    assert struve_l_quad(0.5, 1.0).value == pytest.approx(RAIZ_2_PI * (math.cosh(1.0) - 1.0), rel=1e-10)
    assert struve_l_quad(-0.4, 5.0).value == pytest.approx(struve_l(-0.4, 5.0).value, rel=1e-8)


@pytest.mark.parametrize("nu", [-0.25, 0.0, 0.5, 1.0, 2.5, 5.0])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 10.0, 20.0])
def test_serie_contra_cuadratura(nu, x):
    ev = struve_l_quad(nu, x)
    assert ev.method == "quadrature"
    assert ev.value == pytest.approx(struve_l(nu, x).value, rel=1e-8)


def test_struve_l_quad_fuera_de_dominio():
    with pytest.raises(DomainError):
        struve_l_quad(-0.5, 1.0)


@pytest.mark.parametrize("nu, x", [(0.0, 1.0), (1.0, 5.0), (2.5, 10.0), (-1.0, 3.0)])
def test_error_estimado_de_la_serie_cubre_a_mpmath(nu, x):
    ev = struve_l(nu, x)
    assert abs(ev.value - _mp_struvel(nu, x)) <= ev.abs_error_est


@pytest.mark.parametrize("nu, x", [(0.0, 1.0), (0.5, 1.0), (1.0, 5.0), (2.5, 10.0)])
def test_error_estimado_de_la_cuadratura_cubre_a_mpmath(nu, x):
    ev = struve_l_quad(nu, x)
    assert abs(ev.value - _mp_struvel(nu, x)) <= ev.abs_error_est


def test_struve_next_shifted_ejemplos():
    assert struve_next_shifted(-0.5, 1.0) == pytest.approx((math.cosh(1.0) - 1.0) / math.sqrt(math.pi), rel=1e-12)
    gamma_32 = math.sqrt(math.pi) / 2.0
    assert struve_next_shifted(0.0, 1.0) == pytest.approx(gamma_32 * struve_l(1.0, 1.0).value, rel=1e-10)
    assert abs(struve_next_shifted(0.7, 1e-3)) < 1e-5


@pytest.mark.parametrize("nu", [-1.25, -1.0, -0.75, 0.3, 2.0])
@pytest.mark.parametrize("x", [0.5, 3.0, 10.0])
def test_struve_next_shifted_contra_serie(nu, x):
    esperado = norm_factor(nu, x) * struve_l(nu + 1.0, x).value
    assert struve_next_shifted(nu, x) == pytest.approx(esperado, rel=1e-8)


# --- Oráculo de monotonía de cocientes ---

def test_quotient_sequence_monotone_alpha_beta():
    creciente = quotient_sequence_monotone(lambda n: alpha_coeff(0.0, n), lambda n: beta_coeff(0.0, n), 50)
    decreciente = quotient_sequence_monotone(lambda n: alpha_coeff(-1.0, n), lambda n: beta_coeff(-1.0, n), 50)
    assert creciente == Monotonia.INCREASING
    assert decreciente == Monotonia.DECREASING


def test_quotient_sequence_monotone_empate_y_mixto():
    assert quotient_sequence_monotone(lambda n: 2.0 ** -n, lambda n: 2.0 ** -n, 10) == Monotonia.CONSTANT
    assert quotient_sequence_monotone(lambda n: 1.0 + (n - 3) ** 2, lambda n: 1.0, 10) == Monotonia.NEITHER


def test_quotient_sequence_monotone_errores():
    with pytest.raises(DomainError):
        quotient_sequence_monotone(lambda n: 1.0, lambda n: 1.0, 1)
    with pytest.raises(DomainError):
        quotient_sequence_monotone(lambda n: 1.0 - n, lambda n: 1.0, 5)


# --- Despacho ---

def test_evaluate_despacho():
    assert evaluate("struve", 0.0, 1.0).value == struve_l(0.0, 1.0).value
    assert evaluate("struve", 0.5, 1.0, "closed").method == "closed_form"
    assert evaluate("next_shifted", 0.0, 1.0, "quad").method == "quadrature"
    with pytest.raises(DomainError):
        evaluate("bessel", 0.0, 1.0, "quad")
    with pytest.raises(DomainError):
        evaluate("struve", 0.0, 1.0, "montecarlo")
