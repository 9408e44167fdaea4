"""
Pipeline de verificación: barre los casos del registro sobre una grilla,
ejecuta la suite de propiedades y las identidades, y arma el SweepReport.

Los errores de evaluación se registran por punto (o por propiedad) y no
detienen la corrida; el código de salida los distingue de las violaciones:
    0 pasa, 1 violaciones, 2 error de configuración, 3 falla del evaluador.
"""

import csv
import io
import json
import logging
import math
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Literal, Optional

import yaml
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from tqdm import tqdm

from bounds_registry import CASES, GridSpec, InequalityRecord, get_case, sweep_case
from config import Config
from errors import ConfigError
from extensions import db
from models import CorridaVerificacion, ResumenCaso, Violacion
from numerics_core import AccuracySpec
from property_checks import PropertyCheck, PropertyResult, default_property_suite
from quadrature import QuadratureSpec
from relations import identity_sweep

# Configuración de logging
log = logging.getLogger(__name__)
if not log.hasHandlers():
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    log.addHandler(handler)
    log.setLevel(logging.INFO)

EXIT_PASS = 0
EXIT_VIOLATIONS = 1
EXIT_CONFIG = 2
EXIT_EVALUATOR = 3

CSV_HEADER = ("case", "nu", "mu", "x", "y", "lhs", "rhs", "margin", "satisfied")


# ===============================
# CONFIGURACIÓN DE LA CORRIDA
# ===============================

class VerifyConfig(BaseModel):
    """Configuración de una corrida; se carga desde YAML o desde la CLI."""
    model_config = ConfigDict(extra="forbid")

    cases: Optional[List[str]] = None
    invert: List[str] = Field(default_factory=list)
    grid: GridSpec = Field(default_factory=GridSpec)
    accuracy: AccuracySpec = Field(default_factory=lambda: AccuracySpec(
        rel_tol=Config.STRUVE_REL_TOL, max_terms=Config.STRUVE_MAX_TERMS))
    quadrature: QuadratureSpec = Field(default_factory=lambda: QuadratureSpec(
        levels=Config.QUAD_LEVELS, abs_tol=Config.QUAD_ABS_TOL))
    properties: bool = True
    identities: bool = True
    identity_tol: float = Field(default=Config.IDENTITY_TOL, gt=0.0)
    include_equality: bool = True
    workers: int = Field(default=1, ge=1)
    format: Literal["json", "csv"] = "json"
    out: Optional[str] = None

    @field_validator("grid", mode="before")
    @classmethod
    def _grid_desde_texto(cls, v: Any) -> Any:
        if isinstance(v, str):
            return GridSpec.parse(v)
        return v

    @field_validator("cases", "invert")
    @classmethod
    def _casos_conocidos(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        for nombre in v or []:
            if nombre not in CASES:
                raise ValueError(f"caso desconocido '{nombre}'")
        return v

    @classmethod
    def from_mapping(cls, datos: Dict[str, Any]) -> "VerifyConfig":
        try:
            return cls(**(datos or {}))
        except ValidationError as e:
            raise ConfigError(f"configuración inválida: {e}") from e

    @classmethod
    def from_yaml(cls, ruta: str) -> "VerifyConfig":
        try:
            with open(ruta, "r", encoding="utf-8") as f:
                datos = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"no se pudo leer la configuración '{ruta}': {e}") from e
        if datos is not None and not isinstance(datos, dict):
            raise ConfigError(f"la configuración '{ruta}' debe ser un mapeo YAML")
        return cls.from_mapping(datos or {})

    def case_names(self) -> List[str]:
        """Nombres a barrer, ordenados; los invertidos llevan el sufijo ':inverted'."""
        base = set(self.cases if self.cases is not None else CASES) | set(self.invert)
        return sorted(f"{n}:inverted" if n in self.invert else n for n in base)


# ===============================
# REPORTE
# ===============================

def _num(v: Optional[float]) -> Optional[float]:
    if v is None or not math.isfinite(v):
        return None
    return v


@dataclass
class CaseSummary:
    name: str
    citation: str
    records: List[InequalityRecord] = field(default_factory=list)

    @property
    def points(self) -> int:
        return len(self.records)

    @property
    def violations(self) -> List[InequalityRecord]:
        return [r for r in self.records if r.satisfied is False and r.error is None]

    @property
    def errors(self) -> List[InequalityRecord]:
        return [r for r in self.records if r.error is not None]

    @property
    def min_margin(self) -> Optional[float]:
        margenes = [r.margin for r in self.records if r.error is None and r.expected == "holds"]
        return min(margenes) if margenes else None

    @property
    def passed(self) -> bool:
        return not self.violations and not self.errors

    def to_dict(self) -> Dict[str, Any]:
        def violacion(r: InequalityRecord) -> Dict[str, Any]:
            d: Dict[str, Any] = {"nu": r.nu}
            if r.mu is not None:
                d["mu"] = r.mu
            d["x"] = r.x
            if r.y is not None:
                d["y"] = r.y
            d.update(lhs=_num(r.lhs_value), rhs=_num(r.rhs_value), margin=_num(r.margin), expected=r.expected)
            return d

        return {
            "name": self.name,
            "citation": self.citation,
            "points": self.points,
            "min_margin": _num(self.min_margin),
            "pass": self.passed,
            "violations": [violacion(r) for r in self.violations],
            "errors": [{**violacion(r), "error": r.error} for r in self.errors],
        }


@dataclass
class SweepReport:
    tool_version: str
    config: Dict[str, Any]
    cases: List[CaseSummary] = field(default_factory=list)
    properties: List[PropertyResult] = field(default_factory=list)
    identities: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def evaluator_failures(self) -> int:
        fallas = sum(len(c.errors) for c in self.cases)
        fallas += sum(1 for p in self.properties if p.error is not None)
        fallas += sum(1 for s in self.identities.values() for f in s["failures"] if "error" in f)
        return fallas

    @property
    def violations(self) -> List[Dict[str, Any]]:
        """Todas las violaciones: de casos, de propiedades y de identidades."""
        lista: List[Dict[str, Any]] = []
        for c in self.cases:
            lista.extend({"case": c.name, **r.to_dict()} for r in c.violations)
        lista.extend({"property": p.name, "worst_point": p.worst_point}
                     for p in self.properties if not p.passed and p.error is None)
        lista.extend({"identity": n, "failures": s["failures"]}
                     for n, s in self.identities.items() if not s["pass"])
        return lista

    @property
    def passed(self) -> bool:
        return not self.violations and self.evaluator_failures == 0

    @property
    def exit_code(self) -> int:
        if self.evaluator_failures:
            return EXIT_EVALUATOR
        return EXIT_PASS if self.passed else EXIT_VIOLATIONS

    def records(self) -> List[InequalityRecord]:
        return [r for c in self.cases for r in c.records]

    def to_dict(self, include_wall_time: bool = True) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "tool_version": self.tool_version,
            "config": self.config,
            "pass": self.passed,
            "exit_code": self.exit_code,
            "cases": [c.to_dict() for c in self.cases],
            "properties": [
                {
                    "name": p.name,
                    "direction": p.check.direction,
                    "pass": p.passed,
                    "points": p.points,
                    "worst_point": p.worst_point,
                    "worst_value": _num(p.worst_value),
                    **({"error": p.error} if p.error else {}),
                }
                for p in self.properties
            ],
            "identities": {
                nombre: {
                    "points": s["points"],
                    "max_rel_residual": _num(s["max_rel_residual"]),
                    "worst_point": s["worst_point"],
                    "pass": s["pass"],
                    "failures": len(s["failures"]),
                }
                for nombre, s in self.identities.items()
            },
        }
        if include_wall_time:
            d["wall_time"] = self.wall_time
        return d


# ===============================
# EJECUCIÓN
# ===============================

def _barrer(nombre: str, grid: GridSpec, accuracy: AccuracySpec, include_equality: bool) -> CaseSummary:
    caso = get_case(nombre)
    log.info(f"Barriendo el caso {caso.name}")
    registros = sweep_case(caso, grid, accuracy, include_equality)
    resumen = CaseSummary(caso.name, caso.citation, registros)
    if resumen.violations:
        log.warning(f"Caso {caso.name}: {len(resumen.violations)} violaciones en {resumen.points} puntos")
    return resumen


def _propiedad_fallida(nombre: str, e: Exception) -> PropertyResult:
    return PropertyResult(
        check=PropertyCheck(nombre, nombre, "equal"),
        passed=False,
        points=0,
        worst_point=None,
        worst_value=math.nan,
        error=f"{type(e).__name__}: {e}",
    )


def run_verification(config: VerifyConfig, progress: bool = False) -> SweepReport:
    """
    Ejecuta todos los casos seleccionados, la suite de propiedades y el
    barrido de identidades.

    Con workers > 1 los casos se reparten con joblib; los resúmenes se
    juntan en el orden de los nombres, así el contenido del reporte no
    depende de la cantidad de workers.
    """
    inicio = time.perf_counter()
    nombres = config.case_names()
    grid = config.grid
    log.info(f"Verificación: {len(nombres)} casos, grilla ν×x = {len(grid.nu_values())}×{len(grid.x_values())}")

    if config.workers > 1 and len(nombres) > 1:
        resumenes = Parallel(n_jobs=config.workers)(
            delayed(_barrer)(n, grid, config.accuracy, config.include_equality) for n in nombres
        )
    else:
        resumenes = [
            _barrer(n, grid, config.accuracy, config.include_equality)
            for n in tqdm(nombres, desc="casos", disable=not progress)
        ]

    reporte = SweepReport(
        tool_version=Config.TOOL_VERSION,
        config=config.model_dump(mode="json"),
        cases=list(resumenes),
    )

    if config.properties:
        tareas = default_property_suite(grid.nu_values(), grid.x_values(), config.accuracy, config.quadrature)
        for nombre, tarea in tqdm(tareas, desc="propiedades", disable=not progress):
            try:
                resultado = tarea()
            except Exception as e:
                log.error(f"Error ejecutando la propiedad {nombre}: {e}", exc_info=True)
                resultado = _propiedad_fallida(nombre, e)
            reporte.properties.extend(resultado if isinstance(resultado, list) else [resultado])

    if config.identities:
        reporte.identities = identity_sweep(grid.nu_values(), grid.x_values(), config.identity_tol, config.accuracy)

    reporte.wall_time = time.perf_counter() - inicio
    log.info(f"Verificación terminada en {reporte.wall_time:.1f} s: "
             f"{'PASA' if reporte.passed else 'FALLA'} (código {reporte.exit_code})")
    return reporte


# ===============================
# SALIDA
# ===============================

def report_json(reporte: SweepReport, include_wall_time: bool = True) -> str:
    return json.dumps(reporte.to_dict(include_wall_time), indent=2, ensure_ascii=False)


def report_csv(reporte: SweepReport) -> str:
    """Una fila por registro; los números en precisión de ida y vuelta (repr)."""
    def celda(v: Any) -> str:
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return repr(v)
        return str(v)

    salida = io.StringIO()
    escritor = csv.writer(salida, lineterminator="\n")
    escritor.writerow(CSV_HEADER)
    registros = sorted(reporte.records(), key=lambda r: (r.case, *r.point.sort_key()))
    for r in registros:
        escritor.writerow([celda(v) for v in (r.case, r.nu, r.mu, r.x, r.y, r.lhs_value, r.rhs_value,
                                              r.margin, r.satisfied)])
    return salida.getvalue()


def write_report(reporte: SweepReport, ruta: Optional[str], formato: str = "json") -> str:
    """Escribe el reporte en `ruta` (o lo devuelve si ruta es None o '-')."""
    texto = report_csv(reporte) if formato == "csv" else report_json(reporte)
    if ruta and ruta != "-":
        with open(ruta, "w", encoding="utf-8", newline="") as f:
            f.write(texto)
        log.info(f"Reporte {formato} escrito en {ruta}")
    return texto


def load_report(ruta: str) -> Dict[str, Any]:
    try:
        with open(ruta, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"no se pudo leer el reporte '{ruta}': {e}") from e


def format_summary(datos: Dict[str, Any]) -> str:
    """Resumen legible de un reporte JSON ya cargado."""
    lineas = [
        f"Verificador de Struve v{datos.get('tool_version', '?')}",
        f"Resultado: {'PASA' if datos.get('pass') else 'FALLA'} (código {datos.get('exit_code', '?')})",
    ]
    if "wall_time" in datos:
        lineas.append(f"Tiempo: {datos['wall_time']:.1f} s")
    lineas.append("")
    lineas.append("Casos:")
    for c in datos.get("cases", []):
        margen = c.get("min_margin")
        margen_txt = "-" if margen is None else f"{margen:.3e}"
        estado = "ok" if c.get("pass", not c.get("violations")) else "FALLA"
        lineas.append(f"  {c['name']:<28} {c['points']:>6} puntos  margen mínimo {margen_txt:>11}  "
                      f"violaciones {len(c.get('violations', []))}  errores {len(c.get('errors', []))}  {estado}")
    if datos.get("properties"):
        lineas.append("")
        lineas.append("Propiedades:")
        for p in datos["properties"]:
            estado = "ok" if p["pass"] else ("ERROR" if p.get("error") else "FALLA")
            lineas.append(f"  {p['name']:<40} {p['direction']:<12} {estado}")
    if datos.get("identities"):
        lineas.append("")
        lineas.append("Identidades:")
        for nombre, s in datos["identities"].items():
            residuo = s.get("max_rel_residual")
            residuo_txt = "-" if residuo is None else f"{residuo:.2e}"
            lineas.append(f"  {nombre:<28} {s['points']:>6} puntos  residuo máximo {residuo_txt}  "
                          f"{'ok' if s['pass'] else 'FALLA'}")
    return "\n".join(lineas)


# ===============================
# PERSISTENCIA
# ===============================

def guardar_corrida(reporte: SweepReport) -> Optional[int]:
    """
    Guarda la corrida, sus resúmenes por caso y las violaciones en la base
    de datos. Requiere un contexto de aplicación Flask activo.

    Returns:
        El id de la corrida, o None si no se pudo guardar.
    """
    try:
        with db.session.begin_nested():
            corrida = CorridaVerificacion(
                fecha=datetime.now(timezone.utc),
                tool_version=reporte.tool_version,
                config_json=json.dumps(reporte.config, ensure_ascii=False),
                propiedades_json=json.dumps(reporte.to_dict(False)["properties"], ensure_ascii=False),
                paso=reporte.passed,
                codigo_salida=reporte.exit_code,
                tiempo=reporte.wall_time,
            )
            db.session.add(corrida)
            for c in reporte.cases:
                resumen = ResumenCaso(caso=c.name, cita=c.citation, puntos=c.points,
                                      margen_minimo=_num(c.min_margin), corrida=corrida)
                db.session.add(resumen)
                for r in c.violations + c.errors:
                    db.session.add(Violacion(
                        resumen=resumen, nu=r.nu, mu=r.mu, x=r.x, y=r.y,
                        lhs=_num(r.lhs_value), rhs=_num(r.rhs_value), margen=_num(r.margin), error=r.error,
                    ))
        db.session.commit()
        log.info(f"Corrida {corrida.id} guardada ({len(reporte.cases)} casos)")
        return corrida.id
    except Exception as e:
        db.session.rollback()
        log.error(f"Error guardando la corrida: {e}", exc_info=True)
        return None
