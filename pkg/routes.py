# routes.py

import logging

from flask import jsonify, request

from app import app
from bounds_registry import applicable_bounds, catalogue
from errors import ConvergenceError, DomainError
from forms import CotasForm, EvaluarForm, ListadoForm
from models import CorridaVerificacion
from struve_eval import evaluate

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)


def error_formulario(form):
    return jsonify(error={'message': 'Parámetros inválidos', 'fields': form.errors}), 400


@app.route('/api/evaluar')
def api_evaluar():
    """Evalúa una función por nombre y método: ?funcion=struve&nu=0&x=1&metodo=series"""
    form = EvaluarForm(request.args)
    if not form.validate():
        return error_formulario(form)
    try:
        ev = evaluate(form.funcion.data, form.nu.data, form.x.data, form.metodo.data)
    except DomainError as e:
        return jsonify(error={'message': str(e)}), 400
    except ConvergenceError as e:
        log.warning(f"Serie sin converger en /api/evaluar: {e}")
        return jsonify(error={'message': str(e), 'terms_used': e.terms_used}), 422
    return jsonify(
        function=form.funcion.data,
        nu=form.nu.data,
        x=form.x.data,
        method=ev.method,
        value=ev.value,
        abs_error_est=ev.abs_error_est,
        terms_used=ev.terms_used,
    )


@app.route('/api/cotas')
def api_cotas():
    """Tabula todas las cotas aplicables en (ν, x) con sus márgenes."""
    form = CotasForm(request.args)
    if not form.validate():
        return error_formulario(form)
    try:
        registros = applicable_bounds(form.nu.data, form.x.data)
    except (DomainError, ConvergenceError) as e:
        return jsonify(error={'message': str(e)}), 400
    return jsonify(nu=form.nu.data, x=form.x.data, bounds=[r.to_dict() for r in registros])


@app.route('/api/casos')
def api_casos():
    return jsonify(cases=catalogue())


@app.route('/api/corridas')
def api_corridas():
    form = ListadoForm(request.args)
    if not form.validate():
        return error_formulario(form)
    limite = form.limite.data or 20
    corridas = CorridaVerificacion.query.order_by(CorridaVerificacion.id.desc()).limit(limite).all()
    return jsonify(runs=[c.to_dict() for c in corridas])


@app.route('/api/corridas/<int:corrida_id>')
def api_corrida(corrida_id):
    corrida = CorridaVerificacion.query.get(corrida_id)
    if corrida is None:
        return jsonify(error={'message': f'No existe la corrida {corrida_id}'}), 404
    return jsonify(corrida.to_dict(detalle=True))
