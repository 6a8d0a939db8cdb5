"""
Línea de comandos de TensorCheck: un subcomando por construcción, reportes JSON
por stdout y bitácora por stderr
"""
import argparse
import json
import os
import sys

from sympy import Matrix, Rational

from .config import Config
from .errors import TensorCheckError, InputError, ParseError
from .helpers import Helpers, Log
from .sample_data import SampleData
from .suites import SuiteRunner
from .utils import (
    parse_ring,
    parse_rationals,
    parse_group,
    parse_window,
    parse_summands,
    load_json_literal,
    build_module,
    build_graded_module,
    build_algebra,
    build_category,
    validate_report
)
from .constructions import (
    FpMod,
    Sympow,
    Derham,
    ProjGeom,
    MonadKit,
    Quantale,
    IdealZ,
    Localize,
    FreeSym
)

MODULO_POR_DEFECTO = '{"ring": "QQ", "gens": 2}'


# ============================================================================
# SUBCOMANDOS
# ============================================================================
# Cada subcomando devuelve (payload, testigos); los errores se propagan.

def cmd_sympow(args):
    M = build_module(load_json_literal(args.module, "module"))
    S = Sympow.sym_power(M, args.n)
    payload = {"module": M.describe(), "n": args.n, "power": S.module.describe(),
               "basis": [list(t) for t in S.basis]}
    if args.table:
        payload["dimension_table"] = Sympow.dimension_table(args.n, args.table)
        return payload, [f for f in payload["dimension_table"] if not f["ok"]]
    return payload, []


def cmd_extpow(args):
    M = build_module(load_json_literal(args.module, "module"))
    if args.mode == 'asym' and not M.ring.two_invertible:
        # sobre ℤ la antisimetrización da ASym^n, no Λ^n
        Log.warning(f"2 no es invertible en {M.ring.label}: se calcula ASym^{args.n}")
        E = Sympow.asym_power(M, args.n)
        variante = 'asym-quotient'
    else:
        E = Sympow.ext_power(M, args.n, args.mode)
        variante = args.mode
    return {"module": M.describe(), "n": args.n, "mode": variante, "power": E.module.describe(),
            "invariants": list(E.module.invariants)}, []


def cmd_locally_free(args):
    if args.graded:
        L = build_graded_module(load_json_literal(args.graded, "graded_module"))
        clasificacion = FpMod.graded_line_classify(L)
        return {"graded": L.describe(), **_clasificacion_json(clasificacion)}, []
    V = build_module(load_json_literal(args.module, "module"))
    payload = {"module": V.describe(), **Sympow.locally_free_check(V, args.d)}
    if args.classify:
        payload["classification"] = _clasificacion_json(FpMod.line_classify(V))
    testigos = [] if payload["is_locally_free_rank_d"] else [{
        "det_invertible": payload["det_invertible"], "omega_zero": payload["omega_zero"]}]
    return payload, testigos


def _filas_json(literal):
    """Lista de filas JSON; cada fila con la misma longitud"""
    try:
        filas = json.loads(literal)
    except json.JSONDecodeError as e:
        raise ParseError(f"matriz mal formada: {e.msg}", witness={"literal": literal}) from e
    if not isinstance(filas, list) or not filas or any(not isinstance(f, list) or len(f) != len(filas[0]) for f in filas):
        raise ParseError("la matriz debe ser una lista no vacía de filas de igual longitud", witness={"literal": literal})
    return filas


def _clasificacion_json(clasificacion):
    return {k: v for k, v in clasificacion.items() if k not in ('dual_presentation', 'coevaluation')}


def cmd_cramer(args):
    anillo = parse_ring(args.ring)
    F = Matrix(_filas_json(args.matrix))
    if not F.is_square or F.rows == 0:
        raise InputError("Cramer requiere una matriz cuadrada no vacía", witness={"shape": list(F.shape)})
    F = F.applyfunc(anillo.element)
    libre = FpMod.free(anillo, F.rows)
    g = Sympow.cramer_inverse(FpMod.morphism(libre, libre, F))
    return {"ring": anillo.label, "matrix": Helpers.matriz_json(F),
            "inverse": Helpers.matriz_json(Matrix(g.matrix))}, []


def cmd_bracket_cert(args):
    reporte = Sympow.bracket_identity_certificate(args.symbols, presupuesto=args.budget)
    testigos = [] if reporte["verified"] else [{"target": reporte["target"]}]
    if reporte["known_verified"] is False:
        testigos.append({"known_combination": False})
    return reporte, testigos


def cmd_derham(args):
    B = parse_ring(args.algebra)
    complejo = Derham.derham_complex(B, args.pmax)
    leibniz = Derham.leibniz_check(B, args.pmax)
    cruce = Derham.omega1_crosscheck(B)
    testigos = [{"leibniz": w} for w in leibniz]
    if not cruce["isomorphism"]:
        testigos.append({"omega1_crosscheck": cruce})
    return {**complejo.describe(), "omega1_crosscheck": cruce}, testigos


def cmd_koszul(args):
    s = parse_rationals(args.s)
    e = parse_rationals(args.e) if args.e else None
    if e is None and any(s):
        k = next(i for i, x in enumerate(s) if x != 0)
        e = [Rational(0)] * len(s)
        e[k] = 1 / s[k]
    K = ProjGeom.koszul_complex(s, args.pmax, e)
    testigos = [{"homology": K.homology}] if not K.exact else []
    testigos += [{"contraction_degree": p} for p, ok in (K.contraction or {}).items() if not ok]
    return K.describe(), testigos


def cmd_segre(args):
    n1, n2 = args.dims
    Q = ProjGeom.segre_relations(n1, n2)
    payload = {"coordinates": list(Q.coordinates), "quadrics": Q.as_strings()}
    testigos = []
    if args.s1 and args.s2:
        r = ProjGeom.segre_roundtrip(parse_rationals(args.s1), parse_rationals(args.s2))
        payload["roundtrip"] = r
        if not (r["forward_satisfies"] and r["factors_match"] and r["product_match"]):
            testigos.append(r)
    if args.verify:
        imagenes, variables = ProjGeom.segre_images(n1, n2)
        payload["completeness"] = ProjGeom.relation_completeness(Q, imagenes, variables)
        if not payload["completeness"]["complete"]:
            testigos.append(payload["completeness"])
    return payload, testigos


def cmd_veronese(args):
    Q = ProjGeom.veronese_relations(args.n, args.d)
    payload = {"coordinates": list(Q.coordinates), "quadrics": Q.as_strings()}
    testigos = []
    if args.s:
        r = ProjGeom.veronese_roundtrip(parse_rationals(args.s), args.d)
        payload["roundtrip"] = r
        if not (r["forward_satisfies"] and r["s_match"] and r["power_match"]):
            testigos.append(r)
    if args.verify:
        imagenes, variables = ProjGeom.veronese_images(args.n, args.d)
        payload["completeness"] = ProjGeom.relation_completeness(Q, imagenes, variables)
        if not payload["completeness"]["complete"]:
            testigos.append(payload["completeness"])
    return payload, testigos


def cmd_plucker(args):
    Q = ProjGeom.plucker_relations(args.n, args.d)
    payload = {"coordinates": list(Q.coordinates), "quadrics": Q.as_strings()}
    testigos = []
    if args.matrix:
        r = ProjGeom.plucker_roundtrip(_filas_json(args.matrix))
        payload["roundtrip"] = r
        if not (r["satisfies"] and r["minors_match"] and r["row_space_match"]):
            testigos.append(r)
    elif args.s:
        r = ProjGeom.plucker_roundtrip(parse_rationals(args.s), args.d, args.n)
        payload["roundtrip"] = r
        if not (r["satisfies"] and r["minors_match"]):
            testigos.append(r)
    if args.verify:
        imagenes, variables = ProjGeom.plucker_images(args.n, args.d)
        payload["completeness"] = ProjGeom.relation_completeness(Q, imagenes, variables)
        if not payload["completeness"]["complete"]:
            testigos.append(payload["completeness"])
    return payload, testigos


def cmd_rees(args):
    r = ProjGeom.rees_presentation(args.bound)
    return r, [b for b in r["bidegrees"] if not b["match"]]


def _algebra_cli(args, literal, tamano, teoria):
    if literal:
        return build_algebra(load_json_literal(literal, "algebra"))
    return MonadKit.standard_algebra(teoria, tamano)


def cmd_monad_tensor(args):
    T = MonadKit.theory(args.theory, args.modulus)
    A = _algebra_cli(args, args.algebra_a, args.a, T)
    B = _algebra_cli(args, args.algebra_b, args.b, T)
    tensor = MonadKit.tensor_modules(A, B, args.mode)
    payload = {**T.describe(), "A": A.describe(), "B": B.describe(), "tensor": tensor.describe(),
               "universal_is_bihom": MonadKit.tensor_is_bihom(tensor, A, B)}
    testigos = [] if payload["universal_is_bihom"] else [{"universal_is_bihom": False}]
    if args.verify:
        C = _algebra_cli(args, args.algebra_c, args.c, T)
        payload["universal_property"] = MonadKit.verify_universal(A, B, C, tensor)
        if not payload["universal_property"]["bijection"]:
            testigos.append(payload["universal_property"])
    return payload, testigos


def cmd_monad_laws(args):
    teorias = Config.TEORIAS if args.theory == 'all' else [args.theory]
    filas, testigos = [], []
    for nombre in teorias:
        T = MonadKit.theory(nombre, args.modulus)
        r = MonadKit.check_monad_laws(T, args.max_size, seed=args.seed)
        filas.append(r)
        testigos.extend({**T.describe(), "law": ley, "witness": r["laws"][ley]["witness"]} for ley in r["failed"])
    return filas, testigos


def cmd_quantale(args):
    if args.accion == 'spec-z':
        r = Quantale.zariski_laws_check([IdealZ(n) for n in SampleData.IDEALES], args.max_prime)
        acuerdo = Quantale.prime_agreement(args.bound)
        return {**r, "prime_agreement": acuerdo}, r["failures"] + [{"n": n} for n in acuerdo["disagreements"]]
    if args.accion == 'localize-half':
        M = Quantale.half_sequence(parse_window(args.window), args.head, args.tail)
        r = Quantale.localize_half(M)
        return {"sequence": M.describe(), **r}, ([] if r["fixed_point"] and r["idempotent"] else [r])
    if args.accion == 'residual':
        b, a = Quantale.ideal(args.b), Quantale.ideal(args.a)
        return {"b": str(b), "a": str(a), "residual": str(Quantale.residual(b, a))}, []
    # prime
    I = Quantale.ideal(args.n)
    primo, testigo = Quantale.prime_oracle(I)
    decision = Quantale.is_prime(I)
    return {"ideal": str(I), "prime": decision, "oracle_witness": testigo}, (
        [] if primo == decision else [{"ideal": str(I), "factorization": decision, "oracle": primo}])


def cmd_reflect(args):
    if args.accion == 'torsion':
        M = parse_group(args.group)
        reflexion = Localize.torsion_reflect(M, args.a)
        payload = reflexion.describe()
        testigos = []
        if args.verify:
            r = Localize.reflection_universal_check(M, args.a, Localize.default_targets(args.a))
            payload["universal_property"] = r
            testigos = [t for t in r["targets"] if not t["bijection"]]
        return payload, testigos
    if args.accion == 'tf-tensor':
        M, N = parse_group(args.m), parse_group(args.n)
        return {"M": str(M), "N": str(N), "classical": str(Localize.classical_tensor(M, N)),
                "tf_tensor": str(Localize.tf_tensor(M, N))}, []
    # sections
    sumandos = parse_summands(args.summands)
    return Localize.section_localize(Localize.graded_from_summands(sumandos, args.top)), []


def cmd_freesym(args):
    C = build_category(load_json_literal(args.category, "category")) if args.category else FreeSym.arrow_category()
    if args.accion == 'compose':
        r = FreeSym.composition_laws(C, args.samples, args.seed)
        return {"category": C.describe(), **r}, r["failures"]
    datos = load_json_literal(args.functor, "functor") if args.functor else SampleData.FUNTOR_FLECHA
    r = FreeSym.extension_checks(C, datos["dims"], datos["images"], args.samples, args.seed)
    testigos = r["functoriality_failures"] + r["monoidality_failures"]
    testigos += [{"object": X, "coxeter": f} for X, f in r["coxeter"].items() if f]
    return {"category": C.describe(), **r}, testigos


def guardar_reporte(nombre, reporte):
    """Guarda el reporte en Config.OUTPUT_DIR"""
    Config.crear_directorio_salida()
    ruta = os.path.join(Config.OUTPUT_DIR, nombre)
    with open(ruta, "w", encoding="utf-8") as f:
        json.dump(reporte, f, indent=2, ensure_ascii=False)
    Log.info(f"📁 Reporte guardado en {ruta}")
    return ruta


def cmd_check(args):
    reporte = SuiteRunner(args.seed, args.max_size).run(args.suite, command=args.argv)
    if args.save:
        guardar_reporte(f"check_{args.suite}_{args.seed}.json", reporte)
    return reporte


COMANDOS = {
    "sympow": cmd_sympow,
    "extpow": cmd_extpow,
    "locally-free": cmd_locally_free,
    "cramer": cmd_cramer,
    "bracket-cert": cmd_bracket_cert,
    "derham": cmd_derham,
    "koszul": cmd_koszul,
    "segre": cmd_segre,
    "veronese": cmd_veronese,
    "plucker": cmd_plucker,
    "rees": cmd_rees,
    "monad-tensor": cmd_monad_tensor,
    "monad-laws": cmd_monad_laws,
    "quantale": cmd_quantale,
    "reflect": cmd_reflect,
    "freesym": cmd_freesym,
    "check": cmd_check
}


# ============================================================================
# PARSER
# ============================================================================

def build_parser():
    parser = argparse.ArgumentParser(prog="TensorCheck", description="Verificador de construcciones tensoriales exactas")
    parser.add_argument('--json', action='store_true', help="imprime solo el reporte JSON compacto")
    parser.add_argument('--seed', type=int, default=Config.SEED, help="semilla de los casos aleatorios")
    sub = parser.add_subparsers(dest='comando', metavar='SUBCOMANDO')
    sub.required = True

    p = sub.add_parser('sympow', help="Sym^n de un módulo presentado")
    p.add_argument('--module', default=MODULO_POR_DEFECTO)
    p.add_argument('--n', type=int, default=2)
    p.add_argument('--table', type=int, default=0, help="añade la tabla de dimensiones hasta m = TABLE")

    p = sub.add_parser('extpow', help="Λ^n de un módulo presentado")
    p.add_argument('--module', default=MODULO_POR_DEFECTO)
    p.add_argument('--n', type=int, default=2)
    p.add_argument('--mode', choices=['asym', 'alternating'], default='asym')

    p = sub.add_parser('locally-free', help="Λ^d invertible y ω = 0")
    p.add_argument('--module', default=MODULO_POR_DEFECTO)
    p.add_argument('--d', type=int, default=2)
    p.add_argument('--classify', action='store_true', help="añade la clasificación de línea del módulo")
    p.add_argument('--graded', help="clasifica un objeto graduado (JSON) en lugar de un módulo")

    p = sub.add_parser('cramer', help="inversa de Cramer de una matriz cuadrada")
    p.add_argument('--matrix', required=True, help="filas JSON, p. ej. '[[1,1],[0,1]]'")
    p.add_argument('--ring', default='QQ')

    p = sub.add_parser('bracket-cert', help="certificado de la identidad de corchetes")
    p.add_argument('--symbols', default=SampleData.SIMBOLOS_CORCHETES)
    p.add_argument('--budget', type=int, default=None)

    p = sub.add_parser('derham', help="complejo de de Rham de un álgebra artiniana")
    p.add_argument('--algebra', required=True)
    p.add_argument('--pmax', type=int, default=None)

    p = sub.add_parser('koszul', help="complejo de Koszul de un covector")
    p.add_argument('--s', required=True)
    p.add_argument('--e', default=None, help="sección con s(e) = 1")
    p.add_argument('--pmax', type=int, default=None)

    p = sub.add_parser('segre', help="relaciones de Segre")
    p.add_argument('--dims', type=int, nargs=2, required=True)
    p.add_argument('--s1')
    p.add_argument('--s2')
    p.add_argument('--verify', action='store_true')

    p = sub.add_parser('veronese', help="relaciones de Veronese")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--s')
    p.add_argument('--verify', action='store_true')

    p = sub.add_parser('plucker', help="relaciones de Plücker")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--matrix', help="matriz d×n de rango d en filas JSON")
    p.add_argument('--s', help="covector sobre Λ^d")
    p.add_argument('--verify', action='store_true')

    p = sub.add_parser('rees', help="presentación del álgebra de Rees de (s, t)")
    p.add_argument('--bound', type=int, default=3)

    p = sub.add_parser('monad-tensor', help="producto tensorial de álgebras de una teoría")
    p.add_argument('--theory', choices=Config.TEORIAS, required=True)
    p.add_argument('--modulus', type=int, default=None, help="n de la teoría modn")
    p.add_argument('--a', type=int, default=2)
    p.add_argument('--b', type=int, default=2)
    p.add_argument('--c', type=int, default=2)
    p.add_argument('--algebra-a')
    p.add_argument('--algebra-b')
    p.add_argument('--algebra-c')
    p.add_argument('--mode', choices=['auto', 'coequalizer', 'generators'], default='auto')
    p.add_argument('--verify', action='store_true', help="verifica la propiedad universal contra C")

    p = sub.add_parser('monad-laws', help="leyes de mónada conmutativa")
    p.add_argument('--theory', choices=Config.TEORIAS + ['all'], default='all')
    p.add_argument('--modulus', type=int, default=None)
    p.add_argument('--max-size', type=int, default=Config.MONAD_MAX_SIZE)

    p = sub.add_parser('quantale', help="ideales de ℤ y ½-sucesiones")
    q = p.add_subparsers(dest='accion', metavar='ACCION')
    q.required = True
    a = q.add_parser('spec-z')
    a.add_argument('--max-prime', type=int, default=Config.MAX_PRIME)
    a.add_argument('--bound', type=int, default=Config.PRIME_BOUND)
    a = q.add_parser('localize-half')
    a.add_argument('--window', required=True, help="p. ej. '3:1,4:1'")
    a.add_argument('--head', choices=['decay', 'saturate', 'zero'], default='decay')
    a.add_argument('--tail', choices=['constant', 'halving'], default='constant')
    a = q.add_parser('residual')
    a.add_argument('--b', type=int, required=True)
    a.add_argument('--a', type=int, required=True)
    a = q.add_parser('prime')
    a.add_argument('--n', type=int, required=True)

    p = sub.add_parser('reflect', help="reflectores y localizaciones de grupos abelianos")
    r = p.add_subparsers(dest='accion', metavar='ACCION')
    r.required = True
    a = r.add_parser('torsion')
    a.add_argument('--group', required=True, help="órdenes cíclicos, 0 = ℤ")
    a.add_argument('--a', type=int, default=2)
    a.add_argument('--verify', action='store_true')
    a = r.add_parser('tf-tensor')
    a.add_argument('--m', required=True)
    a.add_argument('--n', required=True)
    a = r.add_parser('sections')
    a.add_argument('--summands', required=True, help="desplazamiento:orden, orden vacío = libre; p. ej. '0:,0:1'")
    a.add_argument('--top', type=int, default=6)

    p = sub.add_parser('freesym', help="categoría simétrica libre S(C)")
    f = p.add_subparsers(dest='accion', metavar='ACCION')
    f.required = True
    for nombre in ('compose', 'extend'):
        a = f.add_parser(nombre)
        a.add_argument('--category', help="categoría finita en JSON (por defecto A → B)")
        a.add_argument('--samples', type=int, default=Config.FREESYM_PAIRS)
        if nombre == 'extend':
            a.add_argument('--functor', help="{\"dims\": ..., \"images\": ...}")

    p = sub.add_parser('check', help="corre las suites de propiedades")
    p.add_argument('--suite', choices=Config.SUITES + ['all'], default='all')
    p.add_argument('--seed', type=int, default=argparse.SUPPRESS)
    p.add_argument('--max-size', type=int, default=Config.MONAD_MAX_SIZE)
    p.add_argument('--save', action='store_true', help="guarda el reporte en el directorio de salida")

    return parser


# ============================================================================
# DESPACHO
# ============================================================================

def dispatch(argv):
    """Devuelve (reporte, código de salida); argparse sale con 2 ante uso inválido"""
    args = build_parser().parse_args(argv)
    args.argv = list(argv)
    try:
        if args.comando == 'check':
            reporte = cmd_check(args)
        else:
            payload, testigos = COMANDOS[args.comando](args)
            reporte = validate_report({
                "command": list(argv),
                "status": "fail" if testigos else "pass",
                "seed": args.seed,
                "payload": Helpers.a_json(payload),
                "witnesses": Helpers.a_json(testigos)
            })
    except TensorCheckError as e:
        Log.error(f"{type(e).__name__}: {e.message}")
        reporte = {
            "command": list(argv),
            "status": "error",
            "seed": args.seed,
            "payload": {"error": type(e).__name__, "message": e.message},
            "witnesses": [Helpers.a_json(e.witness)] if e.witness is not None else []
        }
        return reporte, e.exit_code
    return reporte, 0 if reporte["status"] == "pass" else 1


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    reporte, codigo = dispatch(argv)
    if '--json' in argv:
        print(json.dumps(reporte, ensure_ascii=False, separators=(',', ':')))
    else:
        print(json.dumps(reporte, ensure_ascii=False, indent=2))
        if codigo == 0:
            comando = next((a for a in argv if a in Config.SUBCOMANDOS), '')
            Log.success(f"{comando}: pass")
        elif reporte["status"] == "fail":
            Log.warning(f"{len(reporte['witnesses'])} testigo(s) de falla")
    return codigo
