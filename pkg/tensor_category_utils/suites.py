"""
Ejecutor de suites de propiedades: casos con nombre, en paralelo y con
reportes en orden canónico
"""
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from math import factorial
from threading import Lock

from sympy import Matrix, Rational, Symbol, eye

from .config import Config
from .errors import TensorCheckError, InputError
from .helpers import Helpers, Log
from .sample_data import SampleData
from .utils import parse_ring, validate_report
from .constructions import (
    ExactRing,
    FpMod,
    Sympow,
    Derham,
    ProjGeom,
    MonadKit,
    Monoid,
    Quantale,
    FiniteQuantale,
    IdealZ,
    Localize,
    FgAbGroup,
    FreeSym
)


def _racional_pequeno(rng, tope=5):
    return Rational(rng.randint(-tope, tope), rng.randint(1, 3))


def _covector_aleatorio(rng, n):
    while True:
        s = [_racional_pequeno(rng) for _ in range(n)]
        if any(s):
            return s


def _diadico_aleatorio(rng):
    if rng.random() < 0.1:
        return 'inf'
    return Rational(rng.randint(0, 32), 2 ** rng.randint(0, 4))


class SuiteRunner:
    """Corre una suite (o todas) y arma el reporte JSON"""

    def __init__(self, seed=None, max_size=None, max_workers=None):
        self.seed = Config.SEED if seed is None else int(seed)
        self.max_size = Config.MONAD_MAX_SIZE if max_size is None else int(max_size)
        self.max_workers = max_workers or Config.MAX_WORKERS

    # --- ejecución -------------------------------------------------------

    def casos(self, suite):
        if suite not in Config.SUITES:
            raise InputError(f"suite desconocida: {suite}", witness={"known": Config.SUITES + ["all"]})
        return getattr(self, f"_casos_{suite}")()

    def _correr_caso(self, suite, nombre, funcion):
        rng = random.Random(f"{self.seed}:{suite}:{nombre}")
        try:
            payload, testigos = funcion(rng)
        except TensorCheckError as e:
            return {"error": e.message}, [{"case": f"{suite}.{nombre}", "error": e.message,
                                           "witness": Helpers.a_json(e.witness)}]
        return Helpers.a_json(payload), [{"case": f"{suite}.{nombre}", "witness": Helpers.a_json(t)}
                                         for t in testigos]

    def run(self, suite='all', command=None):
        suites = list(Config.SUITES) if suite == 'all' else [suite]
        trabajos = [(s, nombre, funcion) for s in suites for nombre, funcion in self.casos(s)]
        total = len(trabajos)
        resultados = {}
        completados = 0
        fallidos = 0

        # Lock para actualizar contadores de forma segura entre threads
        count_lock = Lock()

        Log.info(f"🧪 Suite '{suite}': {total} casos con semilla {self.seed}")
        with ThreadPoolExecutor(max_workers=min(self.max_workers, max(total, 1))) as executor:
            futures = {executor.submit(self._correr_caso, s, nombre, funcion): (s, nombre)
                       for s, nombre, funcion in trabajos}

            for future in as_completed(futures):
                s, nombre = futures[future]
                try:
                    payload, testigos = future.result()
                except Exception as e:
                    payload, testigos = {"error": str(e)}, [{"case": f"{s}.{nombre}", "error": str(e)[:200]}]
                with count_lock:
                    resultados[(s, nombre)] = (payload, testigos)
                    completados += 1
                    if testigos:
                        fallidos += 1
                        Log.warning(f"{s}.{nombre}: {len(testigos)} testigo(s)")
                    if completados % 10 == 0 or completados == total:
                        porcentaje = completados / total * 100
                        Log.info(f"   📊 Progreso: {completados}/{total} ({porcentaje:.1f}%) - Fallidos: {fallidos}")

        payload, testigos = {}, []
        for s, nombre, _ in trabajos:
            p, t = resultados[(s, nombre)]
            payload.setdefault(s, {})[nombre] = p
            testigos.extend(t)
        reporte = {
            "command": list(command) if command is not None else ["check", "--suite", suite],
            "status": "fail" if testigos else "pass",
            "seed": self.seed,
            "suite": suite,
            "payload": payload,
            "witnesses": testigos
        }
        if testigos:
            Log.error(f"Suite '{suite}': {fallidos} caso(s) con testigos")
        else:
            Log.success(f"Suite '{suite}': {total} casos sin testigos")
        return validate_report(reporte)

    # --- exactring -------------------------------------------------------

    def _casos_exactring(self):
        def groebner(rng):
            casos = [
                (["x^2-1"], ["x"], ["x^2 - 1"]),
                (["x-y", "y-1"], ["x", "y"], ["x - 1", "y - 1"]),
                ([], ["x"], [])
            ]
            filas, testigos = [], []
            for gens, variables, esperado in casos:
                gb = ExactRing.groebner_basis(gens, variables)
                obtenido = sorted(str(g).replace('**', '^') for g in gb)
                filas.append({"gens": gens, "basis": obtenido})
                if obtenido != sorted(esperado):
                    testigos.append({"gens": gens, "basis": obtenido, "expected": esperado})
            return filas, testigos

        def formas_normales(rng):
            testigos, filas = [], []
            for literal in SampleData.ALGEBRAS_ARTINIANAS:
                B = parse_ring(literal)
                simbolos = B.symbols
                for _ in range(5):
                    p = sum((rng.randint(-3, 3) * simbolos[rng.randrange(len(simbolos))] ** rng.randint(0, 4)
                             for _ in range(4)), 0)
                    nf = ExactRing.normal_form(p, B)
                    if ExactRing.normal_form(nf, B) != nf:
                        testigos.append({"ring": literal, "p": str(p)})
                filas.append({"ring": B.label, "dim": B.dim})
            return filas, testigos

        def jacobianas(rng):
            x, y = Symbol('x'), Symbol('y')
            J = ExactRing.jacobian(["x^2 + y^3"], ["x", "y"])
            esperado = Matrix([[2 * x, 3 * y ** 2]])
            return {"jacobian": Helpers.matriz_json(J)}, ([] if J == esperado else [{"jacobian": str(J)}])

        return [("groebner", groebner), ("normal_forms", formas_normales), ("jacobian", jacobianas)]

    # --- fpmod -----------------------------------------------------------

    def _casos_fpmod(self):
        def modulos():
            return [FpMod.presentation(parse_ring(r), g, rels) for r, g, rels in SampleData.MODULOS]

        def involucion(rng):
            testigos, revisados = [], 0
            corpus = modulos()
            for M in corpus:
                for N in corpus:
                    if M.ring != N.ring:
                        continue
                    revisados += 1
                    if not FpMod.symmetry_involution_check(M, N):
                        testigos.append({"M": M.describe(), "N": N.describe()})
            return {"pairs": revisados}, testigos

        def unidades(rng):
            testigos = []
            for literal, _, _ in SampleData.MODULOS:
                R = FpMod.unit(parse_ring(literal))
                if not FpMod.is_symtrivial(R):
                    testigos.append({"ring": literal})
                clasificacion = FpMod.line_classify(R)
                if not clasificacion["is_line"]:
                    testigos.append({"ring": literal, "line": False})
            return {"rings": len(SampleData.MODULOS)}, testigos

        def smith(rng):
            _, D, _ = FpMod.smith_decompose([[2, 0], [0, 3]])
            diagonal = [D[0, 0], D[1, 1]]
            return {"diagonal": diagonal}, ([] if diagonal == [1, 6] else [{"diagonal": diagonal}])

        def rangos(rng):
            filas = [FpMod.rank_uniqueness_check(parse_ring(r), n, m)
                     for r in SampleData.ANILLOS_RANGO for n, m in ((1, 2), (2, 2), (3, 1))]
            return filas, [f for f in filas if not f["consistent"]]

        def idempotentes(rng):
            testigos = []
            for n in range(2, Config.OID_MAX_N + 1):
                reporte = FpMod.oid_decompose(ExactRing.integers_mod(n))
                if not reporte["crt_match"] or not all(d["isomorphism"] for d in reporte["decompositions"]):
                    testigos.append({"n": n, "maximal": reporte["maximal"]})
            return {"max_n": Config.OID_MAX_N}, testigos

        def amitsur(rng):
            filas, testigos = [], []
            for literal in SampleData.AMITSUR:
                A = parse_ring(literal)
                complejo = FpMod.amitsur_complex(A, FpMod.unit(ExactRing.rationals()), 3)
                exacto = FpMod.amitsur_exactness(complejo)
                filas.append({"algebra": literal, "dims": complejo.dims, "exact": exacto})
                if not exacto:
                    testigos.append({"algebra": literal, "homology": complejo.homology_dims()})
            return filas, testigos

        def epsilon(rng):
            pares = list(SampleData.EXTENSIONES_EPSILON)
            while len(pares) < Config.EPSILON_SAMPLES:
                i = [rng.randint(-3, 3), rng.randint(-3, 3)]
                if not any(i):
                    continue
                c = rng.choice([1, 2, -1])
                pares.append((i, [c * i[1], -c * i[0]]))
            pares = pares[:Config.EPSILON_SAMPLES]
            testigos = []
            for i, p in pares:
                reporte = FpMod.epsilon_inverse_check(i, p)
                if not all(reporte.values()):
                    testigos.append({"i": i, "p": p, "report": reporte})
            return {"extensions": len(pares)}, testigos

        def graduados(rng):
            Q = ExactRing.rationals()
            X = FpMod.graded_unit(Q, twisted=True, grado=1)
            clasificacion = FpMod.line_classify(X)
            M = FpMod.graded(Q, {0: FpMod.free(Q, 2), 1: FpMod.unit(Q)}, True)
            testigos = []
            if not clasificacion["is_antiline"]:
                testigos.append({"X": "no es anti-línea"})
            for d in (-1, 1, 2):
                if not FpMod.shift_check(M, d):
                    testigos.append({"shift": d})
            return {"antiline": clasificacion["is_antiline"], "signature": clasificacion["signature"]}, testigos

        return [("symmetry_involution", involucion), ("units", unidades), ("smith", smith),
                ("rank_uniqueness", rangos), ("idempotents", idempotentes), ("amitsur", amitsur),
                ("epsilon_inverse", epsilon), ("graded", graduados)]

    # --- sympow ----------------------------------------------------------

    def _casos_sympow(self):
        Q, Z = ExactRing.rationals(), ExactRing.integers()

        def coxeter(rng):
            fallas = Sympow.coxeter_check(2, 3) + Sympow.coxeter_check(3, 3)
            return {"checked": [[2, 3], [3, 3]]}, fallas

        def dimensiones(rng):
            tabla = Sympow.dimension_table(4, 4)
            return {"rows": len(tabla)}, [f for f in tabla if not f["ok"]]

        def asym_enteros(rng):
            filas, testigos = [], []
            for n in (2, 3, 4):
                invariantes = [int(d) for d in Sympow.asym_power(FpMod.unit(Z), n).module.invariants]
                filas.append({"n": n, "invariants": invariantes})
                if invariantes != [2]:
                    testigos.append({"n": n, "invariants": invariantes})
            return filas, testigos

        def determinantes(rng):
            testigos = []
            for d in range(1, 6):
                F = Matrix(d, d, lambda i, j: rng.randint(-3, 3))
                f = FpMod.morphism(FpMod.free(Q, d), FpMod.free(Q, d), F)
                if Sympow.ext_power(FpMod.free(Q, d), d).module.generators != 1:
                    testigos.append({"d": d, "rank": "Λ^d(ℚ^d) no es una recta"})
                if Sympow.ext_map(f, d).matrix[0, 0] != F.det():
                    testigos.append({"d": d, "matrix": Helpers.matriz_json(F)})
            return {"max_d": 5}, testigos

        def cramer(rng):
            testigos, hechos = [], 0
            while hechos < Config.CRAMER_SAMPLES:
                d = 2 + hechos % 2
                F = Matrix(d, d, lambda i, j: _racional_pequeno(rng))
                if F.det() == 0:
                    continue
                hechos += 1
                g = Sympow.cramer_inverse(FpMod.morphism(FpMod.free(Q, d), FpMod.free(Q, d), F))
                if Matrix(g.matrix) != F.inv():
                    testigos.append({"matrix": Helpers.matriz_json(F)})
            return {"samples": hechos}, testigos

        def localmente_libres(rng):
            filas, testigos = [], []
            for d in (1, 2, 3):
                libre = Sympow.locally_free_check(FpMod.free(Q, d), d)
                grande = Sympow.locally_free_check(FpMod.free(Q, d + 1), d)
                filas.append({"d": d, "free": libre, "too_big": grande})
                if not all(libre[k] for k in libre if k != "rank"):
                    testigos.append({"d": d, "report": libre})
                if grande["omega_zero"]:
                    testigos.append({"d": d, "omega_zero_on": d + 1})
            return filas, testigos

        def hopf(rng):
            V = FpMod.free(Q, 4)
            reporte = Sympow.hopf_compatibility_check(3)
            testigos = list(reporte["witnesses"]) + Sympow.wedge_table_check(3)
            for p, q, r in ((1, 1, 1), (1, 2, 1), (2, 1, 1), (0, 2, 2)):
                if not Sympow.coassociativity_check(V, p, q, r):
                    testigos.append({"coassociativity": [p, q, r]})
            for n in range(5):
                if not Sympow.counit_check(V, n):
                    testigos.append({"counit": n})
            return {"pairs": reporte["pairs"]}, testigos

        def binomiales(rng):
            filas, testigos = [], []
            A, B = FpMod.free(Q, 2), FpMod.free(Q, 1)
            for flavor in ('tensor', 'sym', 'ext'):
                for n in range(4):
                    r = Sympow.binomial_decompose(A, B, n, flavor)
                    filas.append(r)
                    if not (r["forward_backward_id"] and r["backward_forward_id"]
                            and sum(r["summand_dims"]) == r["lhs_dim"]):
                        testigos.append(r)
            return filas, testigos

        def simetria_lema(rng):
            filas = [Sympow.symmetry_lemma_check(d) for d in (1, 2, 3)]
            return filas, [f for f in filas if not f["symmetric"]]

        def corchetes(rng):
            reporte = Sympow.bracket_identity_certificate(SampleData.SIMBOLOS_CORCHETES)
            testigos = [] if reporte["verified"] and reporte["known_verified"] else [reporte["target"]]
            return reporte, testigos

        return [("coxeter", coxeter), ("dimension_table", dimensiones), ("asym_over_Z", asym_enteros),
                ("determinant", determinantes), ("cramer", cramer), ("locally_free", localmente_libres),
                ("hopf", hopf), ("binomial", binomiales), ("symmetry_lemma", simetria_lema),
                ("bracket_certificate", corchetes)]

    # --- derham ----------------------------------------------------------

    def _casos_derham(self):
        def corpus(rng):
            filas, testigos = [], []
            for literal in SampleData.ALGEBRAS_ARTINIANAS:
                B = parse_ring(literal)
                complejo = Derham.derham_complex(B)
                leibniz = Derham.leibniz_check(B)
                cruce = Derham.omega1_crosscheck(B)
                filas.append({"algebra": B.label, "dims": complejo.dims, "cohomology": complejo.cohomology()})
                if leibniz:
                    testigos.append({"algebra": B.label, "leibniz": leibniz[:5]})
                if not (cruce["isomorphism"] and cruce["commutes_with_d"]):
                    testigos.append(cruce)
            return filas, testigos

        def cohomologia(rng):
            obtenido = Derham.derham_cohomology(parse_ring("QQ[x]/(x^2)"))
            return {"QQ[x]/(x^2)": obtenido}, ([] if obtenido == [1, 0] else [{"cohomology": obtenido}])

        def euler(rng):
            filas = [Derham.euler_contraction_check(n) for n in range(4)]
            return filas, [f for f in filas if not all(v for k, v in f.items() if k != "n")]

        def funtorialidad(rng):
            filas, testigos = [], []
            for b1, b2, c in SampleData.FUNTORIALIDAD:
                r = Derham.omega1_functoriality_checks(parse_ring(b1), parse_ring(b2), parse_ring(c))
                filas.append(r)
                if not (r["sum_rule"]["isomorphism"] and r["base_change"]["isomorphism"]):
                    testigos.append({"algebras": [b1, b2, c]})
            return filas, testigos

        def derivaciones(rng):
            B = parse_ring("QQ[x]/(x^3)")
            rechazada = Derham.universal_derivation_check(B, FpMod.unit(B), [[1]])
            aceptada = Derham.universal_derivation_check(B, FpMod.presentation(B, 1, [["x^2"]]), [[1]])
            testigos = []
            if rechazada or not aceptada:
                testigos.append({"into_B": rechazada, "into_B/(x^2)": aceptada})
            return {"into_B": rechazada, "into_B/(x^2)": aceptada}, testigos

        return [("corpus", corpus), ("cohomology", cohomologia), ("euler", euler),
                ("functoriality", funtorialidad), ("derivations", derivaciones)]

    # --- projgeom --------------------------------------------------------

    def _casos_projgeom(self):
        def koszul(rng):
            testigos = []
            for _ in range(Config.KOSZUL_SAMPLES):
                n = rng.randint(1, 5)
                s = _covector_aleatorio(rng, n)
                k = next(i for i, x in enumerate(s) if x != 0)
                e = [Rational(0)] * n
                e[k] = 1 / s[k]
                K = ProjGeom.koszul_complex(s, e=e)
                if not K.exact or not all(K.contraction.values()):
                    testigos.append(K.describe())
            return {"samples": Config.KOSZUL_SAMPLES}, testigos

        def relaciones(rng):
            filas, testigos = [], []
            familias = ([("segre", d, ProjGeom.segre_relations(*d), ProjGeom.segre_images(*d))
                         for d in SampleData.SEGRE_DIMS]
                        + [("veronese", d, ProjGeom.veronese_relations(*d), ProjGeom.veronese_images(*d))
                           for d in SampleData.VERONESE_DIMS]
                        + [("plucker", d, ProjGeom.plucker_relations(*d), ProjGeom.plucker_images(*d))
                           for d in SampleData.PLUCKER_DIMS])
            for nombre, d, cuadricas, (imagenes, variables) in familias:
                r = ProjGeom.relation_completeness(cuadricas, imagenes, variables)
                filas.append({"family": nombre, "dims": list(d), "quadrics": len(cuadricas), **r})
                if not r["complete"]:
                    testigos.append({"family": nombre, "dims": list(d), **r})
            return filas, testigos

        def segre(rng):
            pares = list(SampleData.SEGRE_PARES)
            while len(pares) < Config.ROUNDTRIP_SAMPLES:
                pares.append((_covector_aleatorio(rng, rng.randint(1, 3)), _covector_aleatorio(rng, rng.randint(1, 3))))
            testigos = []
            for s1, s2 in pares:
                r = ProjGeom.segre_roundtrip(s1, s2)
                if not (r["forward_satisfies"] and r["factors_match"] and r["product_match"]):
                    testigos.append(r)
            return {"samples": len(pares)}, testigos

        def veronese(rng):
            testigos = []
            for s, d in SampleData.VERONESE:
                r = ProjGeom.veronese_roundtrip(s, d)
                if not (r["forward_satisfies"] and r["s_match"] and r["power_match"]):
                    testigos.append(r)
            return {"samples": len(SampleData.VERONESE)}, testigos

        def plucker(rng):
            matrices = list(SampleData.PLUCKER_MATRICES)
            while len(matrices) < len(SampleData.PLUCKER_MATRICES) + 10:
                T = Matrix(2, 4, lambda i, j: rng.randint(-3, 3))
                if T.rank() == 2:
                    matrices.append(T.tolist())
            testigos = []
            for t in matrices:
                r = ProjGeom.plucker_roundtrip(t)
                if not (r["satisfies"] and r["minors_match"] and r["row_space_match"]):
                    testigos.append(r)
            return {"samples": len(matrices)}, testigos

        def rees(rng):
            r = ProjGeom.rees_presentation(3)
            return r, ([] if r["certified"] else [b for b in r["bidegrees"] if not b["match"]])

        def discrecion(rng):
            s = _covector_aleatorio(rng, 4)
            r = ProjGeom.essential_discreteness_check(s, [3 * x for x in s])
            ok = r["same_point"] and r["unique"] and r["invertible"] and r["same_pattern"]
            return r, ([] if ok else [r])

        return [("koszul", koszul), ("relations", relaciones), ("segre_roundtrip", segre),
                ("veronese_roundtrip", veronese), ("plucker_roundtrip", plucker), ("rees", rees),
                ("essential_discreteness", discrecion)]

    # --- monadkit --------------------------------------------------------

    def _casos_monadkit(self):
        def teorias():
            return [MonadKit.theory(nombre) for nombre in Config.TEORIAS]

        def leyes(rng):
            filas, testigos = [], []
            for T in teorias():
                r = MonadKit.check_monad_laws(T, self.max_size, seed=rng.randrange(2 ** 32))
                filas.append({**T.describe(), "failed": r["failed"]})
                if not r["ok"]:
                    testigos.append({**T.describe(), "failed": r["failed"]})
            no_conmutativo = MonadKit.check_monad_laws(MonadKit.theory('mset', monoid=Monoid.left_zero()), 2,
                                                       seed=rng.randrange(2 ** 32))
            if "symmetry" not in no_conmutativo["failed"]:
                testigos.append({"mset_left_zero": "la simetría de d no falló"})
            filas.append({"theory": "mset", "monoid": "left_zero", "failed": no_conmutativo["failed"]})
            return filas, testigos

        def universal(rng):
            filas, testigos = [], []
            for T in teorias():
                for ka, kb, kc in ((1, 2, 2), (2, 2, 1), (2, 1, 2)):
                    A, B, C = (MonadKit.standard_algebra(T, k) for k in (ka, kb, kc))
                    r = MonadKit.verify_universal(A, B, C)
                    filas.append({**T.describe(), "sizes": [A.size, B.size, C.size], **r})
                    if not r["bijection"]:
                        testigos.append(filas[-1])
            return filas, testigos

        def smash(rng):
            T = MonadKit.theory('pointed')
            filas, testigos = [], []
            for a in range(4):
                for b in range(4):
                    A, B = MonadKit.pointed_set(T, a), MonadKit.pointed_set(T, b)
                    tam = MonadKit.tensor_modules(A, B).algebra.size
                    esperado = a * b + 1
                    filas.append([A.size, B.size, tam])
                    if tam != esperado:
                        testigos.append({"sizes": [A.size, B.size], "tensor": tam, "expected": esperado})
            return filas, testigos

        def modn(rng):
            T = MonadKit.theory('modn', 6)
            tam = MonadKit.tensor_modules(MonadKit.cyclic_module(T, 2), MonadKit.cyclic_module(T, 3)).algebra.size
            return {"Z/2 ⊗ Z/3": tam}, ([] if tam == 1 else [{"size": tam}])

        def isomorfismos(rng):
            filas, testigos = [], []
            for T in teorias():
                r = MonadKit.verify_structure_isos(T, 2, 2, 1)
                filas.append({**T.describe(), "failed": r["failed"]})
                if not r["ok"]:
                    testigos.append(filas[-1])
            return filas, testigos

        def fuerza(rng):
            testigos = []
            for T in teorias():
                r = MonadKit.derived_strength_costrength_d(T, [0, 1], ['b'])
                if not r["alternate_agrees"]:
                    testigos.append({**T.describe(), "witness": r["witness"]})
            return {"theories": list(Config.TEORIAS)}, testigos

        return [("monad_laws", leyes), ("universal_property", universal), ("smash", smash),
                ("modn_tensor", modn), ("structure_isos", isomorfismos), ("strength", fuerza)]

    # --- quantale --------------------------------------------------------

    def _casos_quantale(self):
        def primos(rng):
            r = Quantale.prime_agreement(Config.PRIME_BOUND)
            return r, [{"n": n} for n in r["disagreements"]]

        def zariski(rng):
            ideales = [IdealZ(n) for n in SampleData.IDEALES]
            ideales += [IdealZ(rng.randint(0, 60)) for _ in range(Config.ZARISKI_SAMPLES)]
            r = Quantale.zariski_laws_check(ideales, Config.MAX_PRIME)
            return {"sample": len(ideales), "spectrum": len(r["spectrum"])}, r["failures"]

        def residuos(rng):
            r = Quantale.ideal_axioms_check(Config.RESIDUAL_SAMPLES, rng.randrange(2 ** 32))
            return {"samples": r["samples"]}, r["failures"]

        def finitos(rng):
            filas, testigos = [], []
            for Q in (FiniteQuantale.chain3(), FiniteQuantale.divisors(12)):
                fallas = Q.axiom_witnesses() + Q.adjunction_witnesses()
                filas.append({**Q.describe(), "failures": len(fallas)})
                testigos.extend({"quantale": Q.name, "failure": f} for f in fallas)
            return filas, testigos

        def ventanas(rng):
            filas, testigos = [], []
            for ventana, cabeza, cola in SampleData.VENTANAS:
                r = Quantale.localize_half(Quantale.half_sequence(ventana, cabeza, cola))
                filas.append(r)
                if not (r["fixed_point"] and r["idempotent"]):
                    testigos.append(r)
            return filas, testigos

        def isomorfismo(rng):
            pares = list(SampleData.PARES_DIADICOS)
            while len(pares) < Config.LOCALIZE_PAIRS:
                pares.append((_diadico_aleatorio(rng), _diadico_aleatorio(rng)))
            r = Quantale.localize_iso_check(pares)
            malos = [p for p in r["pairs"] if not (p["product_ok"] and p["sup_ok"] and p["unit_ok"])]
            if r["unit_value"] != 1:
                malos.append({"unit_value": r["unit_value"]})
            return {"pairs": len(pares), "unit_value": r["unit_value"]}, malos

        return [("prime_agreement", primos), ("zariski", zariski), ("residuals", residuos),
                ("finite_quantales", finitos), ("localize_half", ventanas), ("localize_iso", isomorfismo)]

    # --- localize --------------------------------------------------------

    def _casos_localize(self):
        def torsion(rng):
            filas, testigos = [], []
            for ordenes in SampleData.GRUPOS:
                M = FgAbGroup.from_orders(ordenes)
                for a in (2, 3):
                    R = Localize.torsion_reflect(M, a).target
                    filas.append({"M": str(M), "a": a, "R": str(R)})
                    if not R.multiplication_injective(a):
                        testigos.append(filas[-1])
            ejemplo = str(Localize.torsion_reflect(FgAbGroup.from_orders([12]), 2).target)
            if ejemplo != "Z/3":
                testigos.append({"Z/12": ejemplo})
            return filas, testigos

        def universal(rng):
            r = Localize.reflection_universal_check(FgAbGroup.from_orders([12]), 2,
                                                    Localize.default_targets(2, Config.REFLECT_TARGET_ORDER))
            return r, [t for t in r["targets"] if not t["bijection"]]

        def iteracion(rng):
            _, pasos = Localize.iterate_reflector(Localize.torsion_reflector(2), FgAbGroup.from_orders([8]))
            _, cero = Localize.iterate_reflector(Localize.identity_reflector(), FgAbGroup.from_orders([8]))
            testigos = [] if pasos <= 3 and cero == 0 else [{"steps": pasos, "identity_steps": cero}]
            return {"Z/8": pasos, "identity": cero}, testigos

        def naturalidad(rng):
            testigos = Localize.naturality_check(FgAbGroup.from_orders([12]), FgAbGroup.from_orders([4]), [(1,)], 2)
            return {"M": "Z/12", "N": "Z/4"}, testigos

        def tf(rng):
            r = Localize.tf_tensor_laws([FgAbGroup.from_orders(g) for g in SampleData.GRUPOS_TF])
            return {"groups": r["groups"]}, r["failures"]

        def epi(rng):
            objetivos = [FgAbGroup.from_orders(g) for g in ([0], [0, 0], [3], [2], [4])]
            r = Localize.epimorphism_check(2, objetivos)
            contraejemplo = any(not t["injective"] for t in r["targets"] if not t["torsion_free"])
            testigos = [] if r["ok"] and contraejemplo else [r]
            return r, testigos

        def secciones(rng):
            casos = [([(0, None)], 1), ([(0, 2)], 0), ([(0, None), (0, 1)], 1), ([(1, None), (2, 3)], 1)]
            filas, testigos = [], []
            for sumandos, esperado in casos:
                r = Localize.section_localize(Localize.graded_from_summands(sumandos, 6))
                filas.append(r)
                if r["colimit_dim"] != esperado:
                    testigos.append({"summands": sumandos, "colimit_dim": r["colimit_dim"], "expected": esperado})
            return filas, testigos

        return [("torsion_reflect", torsion), ("universal_property", universal), ("iteration", iteracion),
                ("naturality", naturalidad), ("tf_tensor", tf), ("epimorphism", epi), ("sections", secciones)]

    # --- freesym ---------------------------------------------------------

    def _casos_freesym(self):
        def leyes(rng):
            filas, testigos = [], []
            for C in (FreeSym.discrete(["A", "B"]), FreeSym.one_object_group(2),
                      FreeSym.one_object_group(3), FreeSym.arrow_category()):
                r = FreeSym.composition_laws(C, Config.FREESYM_PAIRS, rng.randrange(2 ** 32))
                filas.append({"objects": list(C.objects), "samples": r["samples"], "failures": len(r["failures"])})
                testigos.extend(r["failures"])
            return filas, testigos

        def permutaciones(rng):
            testigos = []
            for n in range(5):
                hom = FreeSym.perm_groupoid_hom(n, n)
                if len(hom) != factorial(n):
                    testigos.append({"n": n, "size": len(hom)})
                cerrado = {Helpers.componer(t, s) for t in hom for s in hom}
                if cerrado != set(hom):
                    testigos.append({"n": n, "closure": False})
            if FreeSym.perm_groupoid_hom(2, 3):
                testigos.append({"n": 2, "m": 3})
            return {"max_n": 4}, testigos

        def extension(rng):
            filas, testigos = [], []
            for C, datos in ((FreeSym.arrow_category(), SampleData.FUNTOR_FLECHA),
                             (FreeSym.one_object_group(2), SampleData.FUNTOR_GRUPO)):
                r = FreeSym.extension_checks(C, datos["dims"], datos["images"], Config.FREESYM_PAIRS,
                                             rng.randrange(2 ** 32))
                filas.append({"objects": list(C.objects), "ok": r["ok"]})
                if not r["ok"]:
                    testigos.append(r)
            C = FreeSym.one_object_group(2)
            _, flecha = FreeSym.extend_functor(C, SampleData.FUNTOR_GRUPO["dims"], SampleData.FUNTOR_GRUPO["images"])
            swap = flecha(FreeSym.symmetry(C, ["X"], ["X"]))
            esperado = Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
            if swap != esperado:
                testigos.append({"swap": Helpers.matriz_json(swap)})
            if flecha(FreeSym.identity(C, ["X", "X"])) != eye(4):
                testigos.append({"identity": False})
            return filas, testigos

        return [("composition_laws", leyes), ("permutation_groupoid", permutaciones),
                ("extend_functor", extension)]
