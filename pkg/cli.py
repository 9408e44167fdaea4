# cli.py

"""
Línea de comandos del verificador.

    python cli.py eval struve --nu 0 --x 1
    python cli.py bounds --nu 1 --x 2
    python cli.py verify --case turan --grid "nu=-1.4:6:64,x=0.05:30:64:log" --out reporte.json
    python cli.py report --in reporte.json

También registrada en Flask como `flask struve ...`.
"""

import json
import logging
import sys

import click

from bounds_registry import applicable_bounds, catalogue
from config import Config, configurar_logging
from errors import ConfigError, ConvergenceError, DomainError
from struve_eval import evaluate
from verifier import (
    EXIT_CONFIG,
    EXIT_EVALUATOR,
    VerifyConfig,
    format_summary,
    guardar_corrida,
    load_report,
    run_verification,
    write_report,
)

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)


@click.group()
@click.option('--log-level', default=Config.LOG_LEVEL, show_default=True, help='Nivel de logging.')
def cli(log_level):
    """Evaluación de funciones de Struve modificadas y verificación de desigualdades."""
    configurar_logging(log_level)


@cli.command('eval')
@click.argument('function', type=click.Choice(['struve', 'struve_any', 'struve_prime', 'struve_second',
                                               'norm', 'bessel', 'next_shifted']))
@click.option('--nu', type=float, required=True, help='Orden ν.')
@click.option('--x', 'x', type=float, required=True, help='Argumento x > 0.')
@click.option('--method', type=click.Choice(['series', 'quad', 'closed']), default='series', show_default=True)
def eval_cmd(function, nu, x, method):
    """Evalúa FUNCTION en (ν, x) con el método pedido."""
    try:
        ev = evaluate(function, nu, x, method)
    except DomainError as e:
        click.echo(f"Error de dominio: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    except ConvergenceError as e:
        click.echo(f"Sin convergencia: {e} (suma parcial {e.partial!r})", err=True)
        sys.exit(EXIT_EVALUATOR)
    click.echo(f"{function}(ν={nu}, x={x}) = {ev}")


@cli.command('bounds')
@click.option('--nu', type=float, required=True, help='Orden ν.')
@click.option('--x', 'x', type=float, required=True, help='Argumento x > 0.')
def bounds_cmd(nu, x):
    """Tabula todas las cotas aplicables en (ν, x) con sus márgenes."""
    try:
        registros = applicable_bounds(nu, x)
    except (DomainError, ConvergenceError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    click.echo(f"{'caso':<24} {'lhs':>14} {'rhs':>14} {'margen':>11}  esperado      ok")
    for r in registros:
        ok = {True: 'sí', False: 'NO', None: '?'}[r.satisfied]
        click.echo(f"{r.case:<24} {r.lhs_value:>14.7g} {r.rhs_value:>14.7g} {r.margin:>11.3e}  {r.expected:<12}  {ok}")


@cli.command('verify')
@click.option('--case', 'cases', multiple=True, help='Caso a barrer (repetible). Por defecto, todos.')
@click.option('--grid', default=None, help='Grilla, p. ej. "nu=-1.4:6:64,x=0.05:30:64:log".')
@click.option('--out', default=None, help='Archivo de salida (por defecto, stdout).')
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default=None)
@click.option('--config', 'config_path', type=click.Path(), default=None, help='Configuración YAML.')
@click.option('--invert', multiple=True, help='Invierte la relación de un caso (control negativo).')
@click.option('--workers', type=int, default=None, help='Procesos para barrer los casos.')
@click.option('--no-properties', is_flag=True, help='Omite la suite de propiedades.')
@click.option('--no-identities', is_flag=True, help='Omite el barrido de identidades.')
@click.option('--guardar', is_flag=True, help='Guarda la corrida en la base de datos.')
@click.option('--progress/--no-progress', default=False, help='Barra de progreso.')
def verify_cmd(cases, grid, out, fmt, config_path, invert, workers, no_properties, no_identities, guardar, progress):
    """Barre el registro de desigualdades y la suite de propiedades."""
    try:
        datos = VerifyConfig.from_yaml(config_path).model_dump() if config_path else {}
        if cases:
            datos['cases'] = list(cases)
        if grid:
            datos['grid'] = grid
        if invert:
            datos['invert'] = list(invert)
        if workers:
            datos['workers'] = workers
        if fmt:
            datos['format'] = fmt
        if out:
            datos['out'] = out
        if no_properties:
            datos['properties'] = False
        if no_identities:
            datos['identities'] = False
        config = VerifyConfig.from_mapping(datos)
    except ConfigError as e:
        click.echo(f"Error de configuración: {e}", err=True)
        sys.exit(EXIT_CONFIG)

    reporte = run_verification(config, progress=progress)
    texto = write_report(reporte, config.out, config.format)
    if not config.out or config.out == '-':
        click.echo(texto)
    else:
        click.echo(f"Reporte escrito en {config.out}: {'PASA' if reporte.passed else 'FALLA'}")

    if guardar:
        from app import app
        with app.app_context():
            corrida_id = guardar_corrida(reporte)
        if corrida_id is None:
            click.echo("No se pudo guardar la corrida.", err=True)
        else:
            click.echo(f"Corrida guardada con id {corrida_id}")
    sys.exit(reporte.exit_code)


@cli.command('report')
@click.option('--in', 'ruta', required=True, type=click.Path(), help='Reporte JSON de verify.')
def report_cmd(ruta):
    """Resumen legible de un reporte JSON."""
    try:
        datos = load_report(ruta)
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    click.echo(format_summary(datos))


@cli.command('catalogo')
@click.option('--out', default=None, help='Archivo de salida (por defecto, stdout).')
def catalogo_cmd(out):
    """Listado de los casos del registro en JSON."""
    texto = json.dumps(catalogue(), indent=2, ensure_ascii=False)
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(texto)
        click.echo(f"Catálogo escrito en {out}")
    else:
        click.echo(texto)


@cli.command('init-db')
def init_db_cmd():
    """Crea las tablas de la base de datos."""
    from app import app
    from extensions import db
    with app.app_context():
        db.create_all()
    click.echo("Base de datos inicializada.")


if __name__ == '__main__':
    cli()
