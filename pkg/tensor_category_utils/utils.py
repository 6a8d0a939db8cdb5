"""
Lectura de literales de texto y JSON para la línea de comandos
"""
import json
import os
import re

from jsonschema import validate, ValidationError
from sympy import Rational

from .errors import ParseError, TensorCheckError
from .constructions.exactring import ExactRing
from .constructions.fpmod import FpMod
from .constructions.monadkit import MonadKit, Monoid
from .constructions.localize import FgAbGroup
from .constructions.freesym import FreeSym

SCHEMAS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'schemas-validation')

_CAMPO = r"(QQ|ZZ/(\d+)|GF\((\d+)\))"
_ANILLO_POLINOMIAL = re.compile(rf"^{_CAMPO}\[([^\]]*)\](?:/\((.*)\))?$")


def _partir_nivel_superior(texto):
    """Separa por comas que no estén dentro de paréntesis"""
    partes, nivel, actual = [], 0, ''
    for c in texto:
        if c == '(':
            nivel += 1
        elif c == ')':
            nivel -= 1
        if c == ',' and nivel == 0:
            partes.append(actual)
            actual = ''
        else:
            actual += c
    if nivel != 0:
        raise ParseError(f"paréntesis desbalanceados en {texto!r}")
    if actual.strip():
        partes.append(actual)
    return [p.strip() for p in partes if p.strip()]


def parse_ring(literal):
    """
    QQ, ZZ, ZZ/n, GF(p), QQ[x,y]/(x^2-1, x*y), ZZ/p[x]/(...)
    """
    texto = literal.replace(' ', '')
    if texto == 'QQ':
        return ExactRing.rationals()
    if texto == 'ZZ':
        return ExactRing.integers()
    simple = re.fullmatch(r"ZZ/(\d+)|GF\((\d+)\)", texto)
    if simple:
        n = int(simple.group(1) or simple.group(2))
        if simple.group(2) and not _es_primo(n):
            raise ParseError(f"GF({n}) requiere un primo", witness={"literal": literal})
        return ExactRing.integers_mod(n)
    m = _ANILLO_POLINOMIAL.match(texto)
    if not m:
        raise ParseError(f"literal de anillo mal formado: {literal!r}",
                         witness={"literal": literal, "expected": "QQ[x,y]/(x^2-1, x*y) | ZZ/n | GF(p)"})
    modulo = int(m.group(2) or m.group(3) or 0)
    variables = [v for v in m.group(4).split(',') if v]
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise ParseError(f"nombre de variable inválido: {v!r}", witness={"literal": literal})
    generadores = _partir_nivel_superior(m.group(5)) if m.group(5) else []
    return ExactRing.poly_quotient(variables, generadores, modulo)


def _es_primo(n):
    return n > 1 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def parse_polynomial(literal, ring):
    return ring.element(literal)


def parse_rationals(literal):
    """'1,0,-1/2' → [1, 0, -1/2]"""
    try:
        return [Rational(x.strip()) for x in literal.split(',') if x.strip()]
    except (TypeError, ValueError, SyntaxError) as e:
        raise ParseError(f"lista de racionales mal formada: {literal!r}", witness={"literal": literal}) from e


def parse_group(literal):
    """Órdenes cíclicos separados por comas; 0 es un sumando libre"""
    try:
        ordenes = [int(x) for x in literal.split(',') if x.strip()]
    except ValueError as e:
        raise ParseError(f"lista de factores invariantes mal formada: {literal!r}", witness={"literal": literal}) from e
    return FgAbGroup.from_orders(ordenes)


def parse_window(literal):
    """'3:1,4:1' → {3: 1, 4: 1}"""
    ventana = {}
    for parte in literal.split(','):
        if not parte.strip():
            continue
        try:
            n, valor = parte.split(':')
            ventana[int(n)] = Rational(valor.strip())
        except (TypeError, ValueError, SyntaxError) as e:
            raise ParseError(f"entrada de ventana mal formada: {parte!r}", witness={"literal": literal}) from e
    return ventana


def parse_summands(literal):
    """'0:,1:2' → [(0, None), (1, 2)]; orden vacío = sumando libre"""
    sumandos = []
    for parte in literal.split(','):
        if not parte.strip():
            continue
        desplazamiento, _, orden = parte.strip().partition(':')
        try:
            sumandos.append((int(desplazamiento), int(orden) if orden.strip() else None))
        except ValueError as e:
            raise ParseError(f"sumando mal formado: {parte!r}", witness={"literal": literal}) from e
    if not sumandos:
        raise ParseError("lista de sumandos vacía", witness={"literal": literal})
    return sumandos


def load_schema(nombre):
    ruta = os.path.join(SCHEMAS_DIR, f"{nombre}.json")
    with open(ruta, 'r', encoding='utf-8') as f:
        return json.load(f)


def load_json_literal(texto, schema):
    """JSON en línea o ruta a un archivo, validado contra schemas-validation/<schema>.json"""
    try:
        if os.path.isfile(texto):
            with open(texto, 'r', encoding='utf-8') as f:
                datos = json.load(f)
        else:
            datos = json.loads(texto)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON mal formado: {e.msg}", witness={"line": e.lineno, "column": e.colno}) from e
    try:
        validate(instance=datos, schema=load_schema(schema))
    except ValidationError as e:
        raise ParseError(f"el literal no cumple el esquema {schema}: {e.message}",
                         witness={"path": list(e.absolute_path)}) from e
    return datos


def build_module(datos):
    anillo = parse_ring(datos["ring"])
    return FpMod.presentation(anillo, datos["gens"], datos.get("rels", []))


def build_graded_module(datos):
    anillo = parse_ring(datos["ring"])
    componentes = {}
    for entrada in datos["components"]:
        componentes[entrada["deg"]] = FpMod.presentation(anillo, entrada["module"]["gens"],
                                                         entrada["module"].get("rels", []))
    return FpMod.graded(anillo, componentes, datos.get("symmetry", "plain") == "twisted")


def build_algebra(datos):
    """{"theory": ..., "carrier": [...], "operations": {...}}; las tablas binarias van como filas"""
    monoide = None
    if "monoid" in datos:
        m = datos["monoid"]
        elementos = tuple(m["elements"])
        tabla = {(a, b): m["table"][i][j] for i, a in enumerate(elementos) for j, b in enumerate(elementos)}
        monoide = Monoid(elementos, tabla, m["unit"])
    teoria = MonadKit.theory(datos["theory"], datos.get("n"), monoide)
    carrier = datos["carrier"]
    operaciones = dict(datos.get("operations", {}))
    if "action" in datos:
        operaciones.update({f"act:{m}": tabla for m, tabla in datos["action"].items()})
    aridades = dict(teoria.operations())
    for nombre, valor in operaciones.items():
        # las claves JSON llegan como texto
        if aridades.get(nombre) == 1 and isinstance(valor, dict):
            faltantes = [x for x in carrier if str(x) not in valor]
            if faltantes:
                raise ParseError(f"la tabla de {nombre} no cubre {faltantes[0]}")
            operaciones[nombre] = {x: valor[str(x)] for x in carrier}
    return MonadKit.algebra(teoria, carrier, operaciones)


def build_category(datos):
    return FreeSym.from_json(datos)


def validate_report(reporte):
    """Los reportes de la CLI se validan antes de imprimirse"""
    try:
        validate(instance=reporte, schema=load_schema("report"))
    except ValidationError as e:
        raise TensorCheckError(f"reporte inválido: {e.message}", witness={"path": list(e.absolute_path)}) from e
    return reporte
