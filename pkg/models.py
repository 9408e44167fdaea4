# models.py

import json
from datetime import datetime
from typing import Any, Dict

from extensions import db

# ===============================
# MODELOS DE CORRIDAS DE VERIFICACIÓN, RESÚMENES POR CASO Y VIOLACIONES
# ===============================

class CorridaVerificacion(db.Model):
    __tablename__ = 'corrida_verificacion'
    id = db.Column(db.Integer, primary_key=True)
    fecha = db.Column(db.DateTime, nullable=False, default=datetime.utcnow)
    tool_version = db.Column(db.String(20), nullable=False)
    config_json = db.Column(db.Text, nullable=False, comment="VerifyConfig serializada")
    propiedades_json = db.Column(db.Text, nullable=True, comment="Resumen de la suite de propiedades")
    paso = db.Column(db.Boolean, nullable=False)
    codigo_salida = db.Column(db.Integer, nullable=False)
    tiempo = db.Column(db.Float, nullable=True, comment="Tiempo de pared en segundos")

    # Relaciones
    resumenes = db.relationship('ResumenCaso', backref='corrida', lazy=True,
                                cascade="all, delete-orphan", order_by='ResumenCaso.caso')

    def to_dict(self, detalle: bool = False) -> Dict[str, Any]:
        d = {
            'id': self.id,
            'fecha': self.fecha.isoformat() if self.fecha else None,
            'tool_version': self.tool_version,
            'pass': self.paso,
            'exit_code': self.codigo_salida,
            'wall_time': self.tiempo,
        }
        if detalle:
            d['config'] = json.loads(self.config_json)
            d['properties'] = json.loads(self.propiedades_json) if self.propiedades_json else []
            d['cases'] = [r.to_dict() for r in self.resumenes]
        return d


class ResumenCaso(db.Model):
    __tablename__ = 'resumen_caso'
    id = db.Column(db.Integer, primary_key=True)
    corrida_id = db.Column(db.Integer, db.ForeignKey('corrida_verificacion.id'), nullable=False)
    caso = db.Column(db.String(64), nullable=False)
    cita = db.Column(db.Text, nullable=True)
    puntos = db.Column(db.Integer, nullable=False, default=0)
    margen_minimo = db.Column(db.Float, nullable=True)

    # Relaciones
    violaciones = db.relationship('Violacion', backref='resumen', lazy=True, cascade="all, delete-orphan")

    __table_args__ = (
        db.Index('ix_resumen_caso_corrida', 'corrida_id'),
    )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.caso,
            'citation': self.cita,
            'points': self.puntos,
            'min_margin': self.margen_minimo,
            'violations': [v.to_dict() for v in self.violaciones],
        }


class Violacion(db.Model):
    __tablename__ = 'violacion'
    id = db.Column(db.Integer, primary_key=True)
    resumen_id = db.Column(db.Integer, db.ForeignKey('resumen_caso.id'), nullable=False)
    nu = db.Column(db.Float, nullable=False)
    mu = db.Column(db.Float, nullable=True)
    x = db.Column(db.Float, nullable=False)
    y = db.Column(db.Float, nullable=True)
    lhs = db.Column(db.Float, nullable=True)
    rhs = db.Column(db.Float, nullable=True)
    margen = db.Column(db.Float, nullable=True)
    error = db.Column(db.Text, nullable=True, comment="Mensaje del evaluador si el punto falló")

    def to_dict(self) -> Dict[str, Any]:
        d = {'nu': self.nu, 'x': self.x, 'lhs': self.lhs, 'rhs': self.rhs, 'margin': self.margen}
        if self.mu is not None:
            d['mu'] = self.mu
        if self.y is not None:
            d['y'] = self.y
        if self.error:
            d['error'] = self.error
        return d
