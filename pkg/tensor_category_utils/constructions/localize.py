"""
Reflectores iterados ω veces: torsión en grupos abelianos finitamente
generados, producto tensorial sin torsión y localización homogénea de
módulos graduados sobre ℚ[t].
"""
from dataclasses import dataclass
from itertools import product
from math import gcd

from sympy import Matrix, zeros, oo

from ..config import Config
from ..errors import InputError, ReflectorError, CertificateError
from ..helpers import Helpers, Log
from ..linalg import smith, rank, QQ_BASE


@dataclass(frozen=True)
class FgAbGroup:
    """ℤ/d1 ⊕ … ⊕ ℤ/dk ⊕ ℤ^r con d1 | d2 | … y los ceros (sumandos libres) al final"""
    factors: tuple

    @classmethod
    def from_orders(cls, ordenes):
        """Forma canónica vía Smith de la matriz diagonal de órdenes cíclicos"""
        ordenes = [abs(int(d)) for d in ordenes]
        if not ordenes:
            return cls(())
        n = len(ordenes)
        filas = [[ordenes[i] if i == j else 0 for j in range(n)] for i in range(n)]
        _, D, _ = smith(filas, n, n)
        diagonal = [abs(int(D[i, i])) for i in range(n)]
        return cls(tuple(d for d in diagonal if d != 1))

    @property
    def torsion(self):
        return tuple(d for d in self.factors if d != 0)

    @property
    def rank(self):
        return sum(1 for d in self.factors if d == 0)

    @property
    def is_finite(self):
        return self.rank == 0

    @property
    def order(self):
        if not self.is_finite:
            return oo
        total = 1
        for d in self.factors:
            total *= d
        return total

    @property
    def is_zero(self):
        return not self.factors

    def elements(self):
        if not self.is_finite:
            raise InputError(f"{self} es infinito; no se enumera")
        return list(product(*(range(d) for d in self.factors)))

    def scale(self, a, x):
        return tuple((a * c) % d if d else a * c for c, d in zip(x, self.factors))

    def add(self, x, y):
        return tuple((u + v) % d if d else u + v for u, v, d in zip(x, y, self.factors))

    def zero(self):
        return tuple(0 for _ in self.factors)

    def multiplication_injective(self, a):
        return all(gcd(a, d) == 1 for d in self.torsion)

    def __str__(self):
        if not self.factors:
            return "0"
        partes = [f"Z/{d}" for d in self.torsion]
        if self.rank:
            partes.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(partes)

    def describe(self):
        return {"factors": list(self.factors), "label": str(self)}


@dataclass(frozen=True)
class Endoreflector:
    """R₁ con su predicado de punto fijo (la unidad η es iso)"""
    name: str
    step: object
    is_fixed: object


@dataclass(frozen=True)
class TorsionReflection:
    """R_ω(M) y la imagen de cada generador de M bajo el cociente"""
    source: FgAbGroup
    target: FgAbGroup
    images: tuple
    a: int

    def apply(self, x):
        total = self.target.zero()
        for c, imagen in zip(x, self.images):
            total = self.target.add(total, self.target.scale(c, imagen))
        return total

    def describe(self):
        return {
            "source": self.source.describe(),
            "target": self.target.describe(),
            "a": self.a,
            "quotient_map": [list(v) for v in self.images]
        }


@dataclass(frozen=True)
class GradedPieces:
    """Piezas M_n (n = 0..N) de un ℚ[t]-módulo graduado y las multiplicaciones t: M_n → M_{n+1}"""
    dims: tuple
    maps: tuple

    def __post_init__(self):
        if len(self.maps) != len(self.dims) - 1:
            raise InputError("se necesita un mapa t por cada par de piezas consecutivas")
        for n, T in enumerate(self.maps):
            if T.shape != (self.dims[n + 1], self.dims[n]):
                raise InputError(f"el mapa t en grado {n} tiene forma {T.shape}",
                                 witness={"expected": [self.dims[n + 1], self.dims[n]]})


def _quitar_parte(d, a):
    """d sin los primos que dividen a; 0 queda en 0"""
    if d == 0:
        return 0
    g = gcd(d, a)
    while g > 1:
        d //= g
        g = gcd(d, a)
    return d


class Localize:
    """Reflectores y localizaciones concretas"""

    # --- marco general ------------------------------------------------

    @classmethod
    def iterate_reflector(cls, reflector, M, max_steps=None):
        """Itera R₁ hasta un punto fijo; nunca trunca en silencio"""
        max_steps = Config.REFLECTOR_MAX_STEPS if max_steps is None else max_steps
        actual = M
        rastro = [str(actual)]
        for paso in range(max_steps + 1):
            if reflector.is_fixed(actual):
                return actual, paso
            if paso == max_steps:
                break
            actual = reflector.step(actual)
            rastro.append(str(actual))
        raise ReflectorError(
            f"{reflector.name} no alcanzó un punto fijo en {max_steps} pasos",
            witness={"reflector": reflector.name, "max_steps": max_steps, "trace": rastro[-5:]}
        )

    @classmethod
    def identity_reflector(cls):
        return Endoreflector('identity', lambda M: M, lambda M: True)

    @classmethod
    def torsion_reflector(cls, a):
        """R₁(M) = M / ker(a·)"""
        cls._validar_a(a)

        def paso(M):
            return FgAbGroup.from_orders([d // gcd(a, d) if d else 0 for d in M.factors])

        return Endoreflector(f"torsion[{a}]", paso, lambda M: M.multiplication_injective(a))

    # --- torsión --------------------------------------------------------

    @staticmethod
    def _validar_a(a):
        if int(a) < 2:
            raise InputError(f"a debe ser ≥ 2, se recibió {a}")

    @classmethod
    def torsion_reflect(cls, M, a):
        """R_ω(M) = M / ⋃ ker(aⁿ): se quita la parte a-primaria de cada factor"""
        cls._validar_a(a)
        if FgAbGroup.from_orders(M.factors) != M:
            raise InputError(f"{M.factors} no es una cadena de factores invariantes")
        despojados = [_quitar_parte(d, a) for d in M.factors]
        unos = sum(1 for d in despojados if d == 1)
        objetivo = FgAbGroup(tuple(d for d in despojados if d != 1))
        imagenes = []
        for i in range(len(M.factors)):
            if i < unos:
                imagenes.append(objetivo.zero())
            else:
                imagenes.append(tuple(1 if k == i - unos else 0 for k in range(len(objetivo.factors))))
        if not objetivo.multiplication_injective(a):
            raise CertificateError(f"a·· no es inyectiva en {objetivo}")
        iterado, _ = cls.iterate_reflector(cls.torsion_reflector(a), M)
        if iterado != objetivo:
            raise CertificateError("la iteración de R₁ no coincide con el despojo de factores",
                                   witness={"iterated": str(iterado), "stripped": str(objetivo)})
        return TorsionReflection(M, objetivo, tuple(imagenes), int(a))

    @classmethod
    def _homs(cls, M, N):
        """Hom(M, N) para N finito: imágenes de los generadores con d·g = 0"""
        elementos = N.elements()
        opciones = []
        for d in M.factors:
            opciones.append([g for g in elementos if d == 0 or N.scale(d, g) == N.zero()])
        return [tuple(imgs) for imgs in product(*opciones)]

    @classmethod
    def _evaluar(cls, N, imagenes, x):
        total = N.zero()
        for c, g in zip(x, imagenes):
            total = N.add(total, N.scale(c, g))
        return total

    @classmethod
    def reflection_universal_check(cls, M, a, targets):
        """Precomposición con M → R_ω(M) biyecta Hom(R_ω M, N) con Hom(M, N)"""
        reflexion = cls.torsion_reflect(M, a)
        R = reflexion.target
        resultados = []
        for N in targets:
            if not N.multiplication_injective(a):
                raise InputError(f"a·· no es inyectiva en {N}", witness={"target": str(N)})
            if not N.is_finite:
                resultados.append({
                    "target": str(N), "method": "rank",
                    "hom_reflected": R.rank * N.rank, "hom_source": M.rank * N.rank,
                    "bijection": R.rank == M.rank
                })
                continue
            desde_R = cls._homs(R, N)
            desde_M = set(cls._homs(M, N))
            precompuestos = [tuple(cls._evaluar(N, phi, imagen) for imagen in reflexion.images)
                             for phi in desde_R]
            biyeccion = len(set(precompuestos)) == len(desde_R) and set(precompuestos) == desde_M
            resultados.append({
                "target": str(N), "method": "enumeration",
                "hom_reflected": len(desde_R), "hom_source": len(desde_M),
                "bijection": biyeccion
            })
        return {
            "source": str(M), "reflected": str(R), "a": int(a),
            "targets": resultados,
            "ok": all(r["bijection"] for r in resultados)
        }

    @classmethod
    def naturality_check(cls, M, N, imagenes, a):
        """η es natural: f: M → N baja a R(M) → R(N) (M finito)"""
        rM, rN = cls.torsion_reflect(M, a), cls.torsion_reflect(N, a)
        testigos = []
        for x in M.elements():
            if rM.apply(x) == rM.target.zero():
                fx = cls._evaluar(N, imagenes, x)
                if rN.apply(fx) != rN.target.zero():
                    testigos.append(list(x))
        return testigos

    @classmethod
    def default_targets(cls, a, cota=None):
        """Grupos cíclicos y ℤ/p ⊕ ℤ/p de orden ≤ cota donde a actúa inyectivamente"""
        cota = cota or Config.REFLECT_TARGET_ORDER
        objetivos = [FgAbGroup(())]
        for n in range(2, cota + 1):
            if gcd(n, a) == 1:
                objetivos.append(FgAbGroup((n,)))
        for p in range(2, cota + 1):
            if p * p <= cota and gcd(p, a) == 1 and all(p % q for q in range(2, p)):
                objetivos.append(FgAbGroup((p, p)))
        return objetivos

    # --- tensor sin torsión ---------------------------------------------

    @classmethod
    def classical_tensor(cls, M, N):
        """ℤ/d ⊗ ℤ/e = ℤ/gcd(d, e), con gcd(0, e) = e"""
        return FgAbGroup.from_orders([gcd(d, e) for d in M.factors for e in N.factors])

    @classmethod
    def torsion_free_part(cls, M):
        return FgAbGroup((0,) * M.rank)

    @classmethod
    def tf_tensor(cls, M, N):
        """(M ⊗ N)/Tor"""
        return cls.torsion_free_part(cls.classical_tensor(M, N))

    @classmethod
    def tf_tensor_laws(cls, grupos):
        """Asociatividad, unidad ℤ y ausencia de torsión sobre la muestra"""
        Z = FgAbGroup((0,))
        fallas = []
        for M in grupos:
            if cls.tf_tensor(Z, M) != cls.torsion_free_part(M):
                fallas.append({"law": "unit", "group": str(M)})
            for N in grupos:
                if cls.tf_tensor(M, N).torsion:
                    fallas.append({"law": "torsion-free", "pair": [str(M), str(N)]})
                for P in grupos:
                    izq = cls.tf_tensor(cls.tf_tensor(M, N), P)
                    der = cls.tf_tensor(M, cls.tf_tensor(N, P))
                    if izq != der:
                        fallas.append({"law": "associativity", "triple": [str(M), str(N), str(P)]})
        return {"groups": [str(M) for M in grupos], "failures": fallas, "ok": not fallas}

    @classmethod
    def epimorphism_check(cls, a, targets, caja=2):
        """
        a·: ℤ → ℤ es epi entre grupos sin torsión: φ ↦ φ∘a es inyectiva en
        Hom(ℤ, N) = N. Los grupos con torsión a-primaria dan el contraejemplo.
        """
        cls._validar_a(a)
        resultados = []
        for N in targets:
            if N.is_finite:
                elementos = N.elements()
            else:
                rangos = [range(d) if d else range(-caja, caja + 1) for d in N.factors]
                elementos = list(product(*rangos))
            imagenes = {}
            testigo = None
            for n in elementos:
                clave = N.scale(a, n)
                if clave in imagenes and imagenes[clave] != n:
                    testigo = [list(imagenes[clave]), list(n)]
                    break
                imagenes[clave] = n
            resultados.append({
                "target": str(N),
                "torsion_free": not N.torsion,
                "injective": testigo is None,
                "witness": testigo
            })
        return {
            "a": int(a),
            "targets": resultados,
            "ok": all(r["injective"] for r in resultados if r["torsion_free"])
        }

    # --- localización homogénea ----------------------------------------

    @classmethod
    def graded_from_summands(cls, sumandos, tope):
        """
        Piezas de ⊕ ℚ[t](−s)/(t^k) hasta el grado tope; k = None es un
        sumando libre.
        """
        def vivos(n):
            return [i for i, (s, k) in enumerate(sumandos) if s <= n and (k is None or n - s < k)]

        dims = tuple(len(vivos(n)) for n in range(tope + 1))
        mapas = []
        for n in range(tope):
            origen, destino = vivos(n), vivos(n + 1)
            T = zeros(len(destino), len(origen))
            for j, i in enumerate(origen):
                if i in destino:
                    T[destino.index(i), j] = 1
            mapas.append(T)
        return GradedPieces(dims, tuple(mapas))

    @classmethod
    def section_localize(cls, M):
        """
        colim(M_0 → M_1 → …) bajo t, leído en el grado desde el cual todos
        los mapas dados son isomorfismos.
        """
        ultimo = len(M.maps)
        estable = None
        for s in range(ultimo - 1, -1, -1):
            T = M.maps[s]
            es_iso = M.dims[s] == M.dims[s + 1] and rank(T.tolist(), T.cols, QQ_BASE) == M.dims[s]
            if not es_iso:
                break
            estable = s
        if estable is None:
            raise ReflectorError(
                "los datos graduados no estabilizan: el último mapa t no es un isomorfismo",
                witness={"dims": list(M.dims)}
            )
        if estable == ultimo - 1:
            Log.warning(f"estabilización vista en un solo mapa (grado {estable})")
        return {
            "dims": list(M.dims),
            "stabilization_degree": estable,
            "colimit_dim": M.dims[estable],
            "witness_maps": [Helpers.matriz_json(M.maps[n]) for n in range(estable, ultimo)]
        }
