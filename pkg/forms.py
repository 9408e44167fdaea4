# forms.py

from wtforms import Form, FloatField, IntegerField, SelectField
from wtforms.validators import DataRequired, InputRequired, NumberRange, Optional
from wtforms.validators import ValidationError

from struve_eval import FUNCIONES_SERIE, STRUVE_NU_MIN, X_MAX

FUNCIONES = [(nombre, nombre) for nombre in FUNCIONES_SERIE] + [('next_shifted', 'next_shifted')]
METODOS = [
    ('series', 'Serie de potencias'),
    ('quad', 'Cuadratura tanh-sinh'),
    ('closed', 'Forma cerrada'),
]


# Validador: x estrictamente positivo
def validate_positivo(form, field):
    """Rechaza x ≤ 0 (NumberRange acepta el extremo)."""
    if field.data is not None and not field.data > 0:
        raise ValidationError('Debe ser mayor que 0.')


# Validador: ν dentro del dominio de la serie de Struve
def validate_orden(form, field):
    if field.data is not None and not field.data > STRUVE_NU_MIN:
        raise ValidationError(f'Debe ser mayor que {STRUVE_NU_MIN}.')


class EvaluarForm(Form):
    funcion = SelectField('Función', choices=FUNCIONES, default='struve', validators=[DataRequired()])
    metodo = SelectField('Método', choices=METODOS, default='series', validators=[DataRequired()])
    nu = FloatField('Orden ν', validators=[InputRequired()])
    x = FloatField('Argumento x', validators=[InputRequired(), validate_positivo, NumberRange(max=X_MAX)])


class CotasForm(Form):
    nu = FloatField('Orden ν', validators=[InputRequired(), validate_orden])
    x = FloatField('Argumento x', validators=[InputRequired(), validate_positivo, NumberRange(max=X_MAX)])


class ListadoForm(Form):
    limite = IntegerField('Límite', default=20, validators=[Optional(), NumberRange(min=1, max=500)])
