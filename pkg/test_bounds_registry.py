"""
Pruebas del registro de desigualdades: un ejemplo por caso (dirección
esperada, inversión e igualdad), grillas y barridos.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bounds_registry import (
    CASES,
    TURAN,
    Applicability,
    Expectation,
    GridSpec,
    Interval,
    Point,
    applicable_bounds,
    case_bessel_upper,
    case_exp_upper_family,
    case_l0_bound,
    case_log_deriv_positive,
    case_logderiv_lower_family,
    case_lowratio_bound,
    case_norm_monotone_nu,
    case_ratio_cosh,
    case_ratio_l32,
    case_sinh_lower,
    case_turan,
    case_two_point_ratio_family,
    catalogue,
    get_case,
    sweep_case,
)
from errors import ConfigError, DomainError
from numerics_core import AccuracySpec
from struve_eval import struve_closed_form


def _ok(registro, esperado):
    assert registro.expected == esperado.value, str(registro)
    assert registro.satisfied is True, str(registro)
    assert registro.error is None


# --- Casos de un punto ---

def test_bessel_upper_direcciones():
    _ok(case_bessel_upper(0.0, 1.0), Expectation.HOLDS)
    _ok(case_bessel_upper(-0.5, 2.0), Expectation.EQUALITY)
    _ok(case_bessel_upper(-1.0, 1.0), Expectation.REVERSED)


def test_bessel_upper_constante_en_cero():
    r = case_bessel_upper(0.0, 1.0)
    assert r.margin == pytest.approx(r.rhs_value - r.lhs_value)
    assert r.lhs_value < r.rhs_value


def test_norm_monotone_nu():
    _ok(case_norm_monotone_nu(0.0, 1.0, 2.0), Expectation.HOLDS)
    _ok(case_norm_monotone_nu(-1.0, 3.0, 10.0), Expectation.HOLDS)
    igual = case_norm_monotone_nu(0.7, 0.7, 3.0)
    _ok(igual, Expectation.EQUALITY)
    assert igual.margin == 0.0


def test_turan_tres_cotas():
    r = case_turan(-0.5, 1.0)
    _ok(r, Expectation.HOLDS)
    assert r.lower_value == pytest.approx(math.pi / 8.0, rel=1e-13)
    assert r.lower_value < r.lhs_value < r.rhs_value
    assert r.details["lower_4_over_pi"] == pytest.approx(0.5 * 4.0 / math.pi, rel=1e-13)


@pytest.mark.parametrize("nu, x", [(1.0, 2.0), (1.0, 1e-3), (-1.0, 0.1), (4.0, 25.0)])
def test_turan_ordenado(nu, x):
    r = case_turan(nu, x)
    _ok(r, Expectation.HOLDS)
    assert 0.0 < r.lower_value < r.lhs_value < r.rhs_value
    assert r.margin == pytest.approx(min(r.rhs_value - r.lhs_value, r.lhs_value - r.lower_value))


def test_ratio_cosh():
    r = case_ratio_cosh(1.0, 1.0)
    _ok(r, Expectation.HOLDS)
    assert r.rhs_value == pytest.approx(0.46211716, abs=1e-8)
    assert r.details["rhs_below_one"] is True
    _ok(case_ratio_cosh(-0.5, 1.3), Expectation.EQUALITY)
    _ok(case_ratio_cosh(-1.0, 2.0), Expectation.REVERSED)


@pytest.mark.parametrize("nu, x", [(0.0, 1.0), (-1.4, 0.5), (5.0, 20.0)])
def test_log_deriv_positive(nu, x):
    r = case_log_deriv_positive(nu, x)
    _ok(r, Expectation.HOLDS)
    assert r.lhs_value == 0.0
    assert r.rhs_value > 0.0


def test_ratio_l32():
    _ok(case_ratio_l32(1.0, 1.0), Expectation.HOLDS)
    _ok(case_ratio_l32(0.5, 1.0), Expectation.EQUALITY)
    _ok(case_ratio_l32(0.0, 2.0), Expectation.REVERSED)


def test_ratio_l32_cota_para_x_diminuto():
    # L_{3/2}/L_{1/2} ≈ x/4 cerca de 0
    caso = get_case("ratio_l32")
    assert caso.rhs(Point(1.0, 1e-100), AccuracySpec()) == pytest.approx(2.5e-101, rel=1e-12)
    cerrada = struve_closed_form(1.5, 1.0).value / struve_closed_form(0.5, 1.0).value
    assert caso.rhs(Point(1.0, 1.0), AccuracySpec()) == pytest.approx(cerrada, rel=1e-13)


def test_logderiv_lower_family():
    lineal = case_logderiv_lower_family("linear", 1.0, 2.0)
    cosh = case_logderiv_lower_family("cosh", 1.0, 2.0)
    _ok(lineal, Expectation.HOLDS)
    _ok(cosh, Expectation.HOLDS)
    # la cota cosh mejora a la lineal: sinh t > cosh t − 1
    assert cosh.lhs_value > lineal.lhs_value
    _ok(case_logderiv_lower_family("x2", 2.0, 1.0), Expectation.HOLDS)
    _ok(case_logderiv_lower_family("x2", 0.0, 1.0), Expectation.REVERSED)
    _ok(case_logderiv_lower_family("cosh", 0.0, 1.0), Expectation.REVERSED)
    with pytest.raises(DomainError):
        case_logderiv_lower_family("cuadratica", 1.0, 2.0)


def test_two_point_family():
    exp = case_two_point_ratio_family("exp", 1.0, 1.0, 2.0)
    cosh = case_two_point_ratio_family("cosh", 1.0, 1.0, 2.0)
    _ok(exp, Expectation.HOLDS)
    _ok(cosh, Expectation.HOLDS)
    assert cosh.rhs_value < exp.rhs_value
    potencia = case_two_point_ratio_family("power", 0.0, 1.0, 3.0)
    _ok(potencia, Expectation.HOLDS)
    assert potencia.rhs_value == pytest.approx(1.0 / 3.0)
    _ok(case_two_point_ratio_family("x2", 2.0, 1.0, 2.0), Expectation.HOLDS)
    assert exp.y == 2.0 and exp.point == Point(1.0, 1.0, y=2.0)


@pytest.mark.parametrize("x, y", [(2.0, 1.0), (1.0, 1.0), (0.0, 1.0)])
def test_two_point_requiere_x_menor_que_y(x, y):
    with pytest.raises(DomainError):
        case_two_point_ratio_family("exp", 1.0, x, y)


def test_lowratio_bound():
    r = case_lowratio_bound(1.0, 1.0)
    _ok(r, Expectation.HOLDS)
    assert r.lhs_value == 3.0
    cero = case_lowratio_bound(-0.5, 2.0)
    _ok(cero, Expectation.HOLDS)
    assert cero.lhs_value == 0.0
    piso = case_lowratio_bound(0.0, 1.0, form="logderiv")
    _ok(piso, Expectation.HOLDS)
    assert piso.rhs_value > 1.0


def test_l0_bound():
    _ok(case_l0_bound(2.0, 1.0), Expectation.HOLDS)
    igual = case_l0_bound(0.0, 1.7)
    _ok(igual, Expectation.EQUALITY)
    assert igual.lhs_value == igual.rhs_value
    _ok(case_l0_bound(-0.5, 1.0), Expectation.REVERSED)
    with pytest.raises(DomainError):
        case_l0_bound(-1.2, 1.0)


def test_exp_upper_family():
    _ok(case_exp_upper_family("sinh", -0.5, 1.5), Expectation.EQUALITY)
    _ok(case_exp_upper_family("bessel_exp", 0.0, 2.0), Expectation.HOLDS)
    _ok(case_exp_upper_family("l0_exp", 0.0, 2.0), Expectation.HOLDS)
    _ok(case_exp_upper_family("sinh", -1.0, 1.0), Expectation.REVERSED)


def test_exp_upper_sin_direccion_declarada():
    r = case_exp_upper_family("bessel_exp", -1.0, 1.0)
    assert r.expected == Expectation.UNDETERMINED.value
    assert r.satisfied is None


@pytest.mark.parametrize("nu, x", [(0.0, 1.0), (2.0, 10.0), (-0.9, 3.0)])
def test_sinh_lower(nu, x):
    _ok(case_sinh_lower(nu, x), Expectation.HOLDS)


def test_sinh_lower_limite_x_chico():
    r = case_sinh_lower(0.0, 1e-3)
    _ok(r, Expectation.HOLDS)
    assert r.margin > 0.0
    assert r.details["q_ratio"] == pytest.approx(1.0, abs=1e-6)
    assert "constant_two_form" in r.details


@pytest.mark.parametrize("caso, nu", [(case_bessel_upper, -1.5), (case_sinh_lower, -1.2), (case_turan, -2.0)])
def test_fuera_de_dominio(caso, nu):
    with pytest.raises(DomainError):
        caso(nu, 1.0)


@given(st.floats(min_value=-0.4, max_value=6.0), st.floats(min_value=0.01, max_value=30.0))
@settings(max_examples=60, deadline=None)
def test_bessel_upper_propiedad(nu, x):
    r = case_bessel_upper(nu, x)
    assert r.satisfied is True
    assert r.margin > 0.0


@given(st.floats(min_value=-1.0, max_value=6.0), st.floats(min_value=0.05, max_value=30.0))
@settings(max_examples=60, deadline=None)
def test_turan_propiedad(nu, x):
    r = case_turan(nu, x)
    assert r.satisfied is True


def test_applicable_bounds():
    registros = applicable_bounds(1.0, 2.0)
    nombres = {r.case for r in registros}
    assert {"bessel_upper", "turan", "ratio_cosh", "l0_bound", "sinh_lower"} <= nombres
    assert not nombres & {"norm_monotone_nu", "two_point_exp"}
    assert all(r.satisfied for r in registros)


# --- Registro y catálogo ---

def test_get_case_y_control_negativo():
    assert get_case("turan") is TURAN
    invertido = get_case("turan:inverted")
    assert invertido.name == "turan:inverted"
    assert invertido.lower is None
    r = invertido.evaluate(Point(1.0, 2.0))
    assert r.satisfied is False
    assert r.margin < 0.0


@pytest.mark.parametrize("nombre", ["no_existe", "turan:al_reves"])
def test_get_case_desconocido(nombre):
    with pytest.raises(ConfigError):
        get_case(nombre)


def test_catalogue():
    entradas = catalogue()
    assert [e["name"] for e in entradas] == list(CASES)
    por_nombre = {e["name"]: e for e in entradas}
    assert por_nombre["bessel_upper"]["reversal_nu_range"] == [-1.5, -0.5]
    assert por_nombre["bessel_upper"]["equality_points"] == [-0.5]
    assert por_nombre["turan"]["two_sided"] is True
    assert por_nombre["norm_monotone_nu"]["key"] == "mu_minus_nu"
    assert por_nombre["sinh_lower"]["domain"] == [-1.0, None]
    assert por_nombre["logderiv_lower_x2"]["reversal_nu_range"] == [-0.5, 1.5]


def test_applicability_invariantes():
    with pytest.raises(ConfigError):
        Applicability(Interval(1.0, 1.0))
    with pytest.raises(ConfigError):
        Applicability(Interval(0.0), reversal_nu_range=Interval(-1.0, 0.5))


def test_classify_excluye_bordes():
    a = CASES["bessel_upper"].applicability
    assert a.classify(Point(-0.5 + 5e-4, 1.0), eps=1e-3) is None
    assert a.classify(Point(-0.5 + 5e-4, 1.0)) == Expectation.HOLDS
    assert a.classify(Point(-0.5, 1.0), eps=1e-3) == Expectation.EQUALITY
    assert a.classify(Point(-1.6, 1.0)) == Expectation.UNDETERMINED


# --- Grillas ---

def test_grid_parse():
    grilla = GridSpec.parse("nu=-1:2:4,x=0.1:10:3:log")
    assert grilla.nu_values() == pytest.approx([-1.0, 0.0, 1.0, 2.0])
    assert grilla.x_values() == pytest.approx([0.1, 1.0, 10.0])
    lineal = GridSpec.parse("x=1:3:3:linear")
    assert lineal.x_values() == pytest.approx([1.0, 2.0, 3.0])
    assert lineal.nu_steps == 64


@pytest.mark.parametrize("texto", ["nu=2:1:4", "nu=-1:2:4:log", "z=0:1:2", "nu=a:b:c", "x=0:1:5", "nu=0:1:1",
                                   "nu=0:1:2,x=10:80:3"])
def test_grid_parse_invalida(texto):
    with pytest.raises(ConfigError):
        GridSpec.parse(texto)


def test_grid_x_por_encima_del_tope():
    with pytest.raises(ValueError):
        GridSpec(x_max=60.0)
    with pytest.raises(ValueError):
        GridSpec(x_list=(1.0, 60.0))
    assert GridSpec.parse("x=1:50:3").x_values()[-1] == pytest.approx(50.0)


def test_grid_por_defecto():
    grilla = GridSpec()
    nus, xs = grilla.nu_values(), grilla.x_values()
    assert len(nus) == 64 and len(xs) == 64
    assert nus[0] == pytest.approx(-1.4) and nus[-1] == pytest.approx(6.0)
    assert xs[0] == pytest.approx(0.05) and xs[-1] == pytest.approx(30.0)


# --- Barridos ---

def test_sweep_turan_doce_registros():
    grilla = GridSpec(nu_list=(2.0, -1.0, 0.0, 1.0), x_list=(10.0, 0.1, 1.0))
    registros = sweep_case(TURAN, grilla)
    assert len(registros) == 12
    assert all(r.satisfied for r in registros)
    assert [(r.nu, r.x) for r in registros] == [(nu, x) for nu in (-1.0, 0.0, 1.0, 2.0) for x in (0.1, 1.0, 10.0)]


def test_sweep_grilla_vacia():
    assert sweep_case(TURAN, GridSpec(nu_list=(), x_list=(1.0,))) == []


def test_sweep_agrega_punto_de_igualdad():
    grilla = GridSpec(nu_list=(-1.0, 0.0), x_list=(1.0, 2.0))
    registros = sweep_case(get_case("bessel_upper"), grilla)
    esperados = {r.nu: r.expected for r in registros}
    assert esperados == {-1.0: "reversed", -0.5: "equality", 0.0: "holds"}
    assert all(r.satisfied for r in registros)
    sin_igualdad = sweep_case(get_case("bessel_upper"), grilla, include_equality=False)
    assert len(sin_igualdad) == 4


def test_sweep_dos_ordenes_y_dos_puntos():
    grilla = GridSpec(nu_list=(0.0, 1.0), x_list=(1.0, 2.0))
    normas = sweep_case(get_case("norm_monotone_nu"), grilla)
    # 3 desplazamientos de μ más μ = ν por cada (ν, x)
    assert len(normas) == 2 * 2 * 4
    assert all(r.satisfied for r in normas)
    dos_puntos = sweep_case(get_case("two_point_power"), grilla)
    assert len(dos_puntos) == 2 * 2 * 2
    assert all(r.y > r.x for r in dos_puntos)


def test_sweep_control_negativo_viola():
    grilla = GridSpec(nu_list=(0.0, 1.0), x_list=(1.0, 2.0))
    registros = sweep_case(get_case("bessel_upper:inverted"), grilla, include_equality=False)
    assert registros and all(r.satisfied is False for r in registros)


@pytest.mark.parametrize("nombre", sorted(CASES))
def test_control_negativo_viola_en_cada_caso(nombre):
    grilla = GridSpec(nu_list=(-1.25, -0.75, 0.25, 1.0, 2.0, 4.0), x_list=(0.1, 1.0, 5.0))
    registros = sweep_case(get_case(f"{nombre}:inverted"), grilla, include_equality=False)
    assert registros
    assert all(r.error is None for r in registros)
    assert sum(r.satisfied is False for r in registros) > 0


def test_sweep_registra_errores_del_evaluador():
    grilla = GridSpec(nu_list=(1.0,), x_list=(10.0,))
    registros = sweep_case(TURAN, grilla, AccuracySpec(max_terms=2))
    assert len(registros) == 1
    assert registros[0].satisfied is False
    assert "ConvergenceError" in registros[0].error
    assert math.isnan(registros[0].margin)


def test_record_serializable():
    datos = case_turan(1.0, 2.0).to_dict()
    assert {"case", "nu", "x", "mu", "y", "lhs_value", "rhs_value", "margin", "satisfied"} <= set(datos)
    assert datos["case"] == "turan"
