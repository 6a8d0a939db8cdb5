"""
Módulos finitamente presentados, morfismos y sus construcciones tensoriales
"""
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Optional

from sympy import ImmutableMatrix, Matrix, Integer, Rational, factorint, kronecker_product

from ..errors import ModuleError, CertificateError, RingError
from ..linalg import Base, RelationSpan, kernel, solve, rank, smith
from .exactring import ExactRing, RingDescriptor


def _filas(matriz):
    return [[matriz[i, j] for j in range(matriz.cols)] for i in range(matriz.rows)]


@dataclass(frozen=True)
class ModulePresentation:
    """
    Módulo R^n / (filas de relations).

    Internamente se expande a coordenadas sobre el cuerpo (o ℤ) base:
    el generador i con el monomio estándar b_l ocupa la posición i·dim R + l.
    """
    ring: RingDescriptor
    generators: int
    relations: ImmutableMatrix

    @property
    def r(self):
        return self.ring.dim

    @property
    def ambient(self):
        return self.generators * self.ring.dim

    def vector(self, elementos):
        """Vector base de una tupla de elementos del anillo"""
        v = []
        for x in elementos:
            v.extend(self.ring.coords(x))
        return v

    def elements(self, v):
        r = self.r
        return tuple(self.ring.from_coords(v[i * r:(i + 1) * r]) for i in range(self.generators))

    def generator_vector(self, i):
        v = [Integer(0)] * self.ambient
        v[i * self.r] = Integer(1)
        return v

    @cached_property
    def relation_vectors(self):
        vectores = []
        for i in range(self.relations.rows):
            fila = [self.relations[i, j] for j in range(self.generators)]
            for b in self.ring.basis_exprs:
                vectores.append(self.vector([b * x for x in fila]))
        return vectores

    @cached_property
    def span(self):
        return RelationSpan(self.ambient, self.relation_vectors, self.ring.base)

    def contains(self, v):
        return self.span.contains(v)

    @property
    def invariants(self):
        """Órdenes cíclicos del módulo visto sobre la base (0 = sumando libre)"""
        return self.span.moduli

    @property
    def base_dimension(self):
        if not self.ring.base.is_field:
            raise ModuleError("la dimensión sobre la base solo existe sobre cuerpos")
        return self.span.dimension

    def is_zero(self):
        return self.span.dimension == 0

    def describe(self):
        return {
            "ring": self.ring.label,
            "gens": self.generators,
            "rels": [[str(self.relations[i, j]).replace('**', '^') for j in range(self.generators)]
                     for i in range(self.relations.rows)],
            "invariants": [int(d) for d in self.invariants]
        }


@dataclass(frozen=True)
class ModMorphism:
    """Morfismo dado por su matriz (generadores destino × generadores origen)"""
    source: ModulePresentation
    target: ModulePresentation
    matrix: ImmutableMatrix

    @cached_property
    def base_matrix(self):
        anillo = self.source.ring
        r = anillo.dim
        filas = [[Integer(0)] * self.source.ambient for _ in range(self.target.ambient)]
        for i in range(self.target.generators):
            for j in range(self.source.generators):
                entrada = self.matrix[i, j]
                if entrada == 0:
                    continue
                bloque = anillo.mult_matrix(entrada)
                for a in range(r):
                    for b in range(r):
                        filas[i * r + a][j * r + b] = bloque[a][b]
        return filas

    def apply(self, v):
        base = self.source.ring.base
        return [base.normalize(sum(f * x for f, x in zip(fila, v) if x != 0 and f != 0))
                for fila in self.base_matrix]

    @cached_property
    def well_defined(self):
        """Certificado: la imagen de cada relación del origen es una relación del destino"""
        return all(self.target.contains(self.apply(v)) for v in self.source.relation_vectors)

    def describe(self):
        return [[str(self.matrix[i, j]).replace('**', '^') for j in range(self.matrix.cols)]
                for i in range(self.matrix.rows)]


@dataclass(frozen=True)
class TensorProduct:
    module: ModulePresentation
    symmetry: ModMorphism


@dataclass(frozen=True)
class HomModule:
    """Hom interno con sus morfismos generadores y la lectura de coordenadas"""
    module: ModulePresentation
    generators: tuple
    source: ModulePresentation
    target: ModulePresentation
    _soluciones: tuple = field(repr=False, default=())
    _ceros: tuple = field(repr=False, default=())
    _cociente: Optional[RelationSpan] = field(repr=False, default=None, compare=False)

    def coordinates(self, morfismo):
        """Coeficientes (en la base) del morfismo respecto de los generadores"""
        x = []
        for j in range(self.source.generators):
            columna = [morfismo.matrix[i, j] for i in range(self.target.generators)]
            x.extend(self.target.vector(columna))
        base = self.source.ring.base
        columnas = list(self._soluciones) + list(self._ceros)
        A = [[c[k] for c in columnas] for k in range(len(x))]
        c = solve(A, len(columnas), x, base)
        if c is None:
            raise ModuleError("la matriz no define un morfismo bien definido", witness={"matrix": morfismo.describe()})
        return self._cociente.coordinates(c[:len(self._soluciones)])


@dataclass
class ChainComplex:
    """Complejo C_0 → C_1 → … sobre un cuerpo; differentials[i]: C_i → C_{i+1}"""
    base: Base
    dims: list
    differentials: list
    degrees: list = None
    modules: list = None

    def __post_init__(self):
        if self.degrees is None:
            self.degrees = list(range(len(self.dims)))

    def _rango(self, i):
        if i < 0 or i >= len(self.differentials):
            return 0
        d = self.differentials[i]
        if d.rows == 0 or d.cols == 0:
            return 0
        return rank(_filas(d), d.cols, self.base)

    def d_squared_zero(self):
        for i in range(len(self.differentials) - 1):
            producto = self.differentials[i + 1] * self.differentials[i]
            if any(self.base.normalize(x) != 0 for x in producto):
                return False
        return True

    def homology_dims(self):
        """dim H^i = dim ker d_i − rank d_{i−1}"""
        dims = []
        for i, n in enumerate(self.dims):
            nucleo = n - (self._rango(i) if i < len(self.differentials) else 0)
            dims.append(nucleo - self._rango(i - 1))
        return dims


@dataclass(frozen=True)
class GradedModule:
    """Módulo ℤ-graduado con un número finito de componentes"""
    ring: RingDescriptor
    components: tuple
    twisted: bool = False

    def component(self, grado):
        for d, M in self.components:
            if d == grado:
                return M
        return FpMod.zero(self.ring)

    @property
    def degrees(self):
        return [d for d, _ in self.components]

    def describe(self):
        return {
            "symmetry": "twisted" if self.twisted else "plain",
            "components": [{"deg": d, "module": M.describe()} for d, M in self.components]
        }


@dataclass(frozen=True)
class GradedTensor:
    module: GradedModule
    symmetry: dict = field(compare=False)
    summands: dict = field(compare=False)


class FpMod:
    """Operaciones sobre módulos finitamente presentados"""

    # --- construcción ----------------------------------------------------

    @classmethod
    def presentation(cls, ring, generators, relations=()):
        filas = [[ring.element(x) for x in fila] for fila in relations]
        for fila in filas:
            if len(fila) != generators:
                raise ModuleError(f"relación de longitud {len(fila)} para {generators} generadores")
        filas = [f for f in filas if any(x != 0 for x in f)]
        return ModulePresentation(ring, generators, ImmutableMatrix(len(filas), generators,
                                                                   [x for f in filas for x in f]))

    @classmethod
    def free(cls, ring, n):
        return cls.presentation(ring, n)

    @classmethod
    def unit(cls, ring):
        return cls.free(ring, 1)

    @classmethod
    def zero(cls, ring):
        return cls.free(ring, 0)

    @classmethod
    def cyclic(cls, ring, orden):
        """R/(orden)"""
        return cls.presentation(ring, 1, [[orden]])

    @classmethod
    def morphism(cls, source, target, matriz, check=True):
        if source.ring != target.ring:
            raise ModuleError(f"anillos distintos: {source.ring.label} y {target.ring.label}")
        forma = (target.generators, source.generators)
        if isinstance(matriz, (Matrix, ImmutableMatrix)):
            M = Matrix(matriz)
        else:
            filas = [list(f) for f in matriz]
            if len(filas) != forma[0] or any(len(f) != forma[1] for f in filas):
                raise ModuleError(f"matriz mal dimensionada para un morfismo {forma[1]} → {forma[0]}")
            M = Matrix(forma[0], forma[1], lambda i, j: filas[i][j])
        if M.shape != forma:
            raise ModuleError(f"matriz {M.shape} para un morfismo {forma[1]} → {forma[0]}")
        f = ModMorphism(source, target, ImmutableMatrix(M.applyfunc(source.ring.element)))
        if check and not f.well_defined:
            raise ModuleError("el morfismo no respeta las relaciones", witness={"matrix": f.describe()})
        return f

    @classmethod
    def identity(cls, M):
        return ModMorphism(M, M, ImmutableMatrix.eye(M.generators))

    @classmethod
    def zero_morphism(cls, M, N):
        return ModMorphism(M, N, ImmutableMatrix.zeros(N.generators, M.generators))

    @classmethod
    def compose(cls, g, f):
        if f.target != g.source:
            raise ModuleError("composición de morfismos no componibles")
        anillo = f.source.ring
        return ModMorphism(f.source, g.target, ImmutableMatrix((g.matrix * f.matrix).applyfunc(anillo.normalize)))

    @classmethod
    def add(cls, f, g):
        anillo = f.source.ring
        return ModMorphism(f.source, f.target, ImmutableMatrix((f.matrix + g.matrix).applyfunc(anillo.normalize)))

    @classmethod
    def scale(cls, c, f):
        anillo = f.source.ring
        return ModMorphism(f.source, f.target, ImmutableMatrix((c * f.matrix).applyfunc(anillo.normalize)))

    # --- pruebas de morfismos -------------------------------------------

    @classmethod
    def is_zero(cls, f):
        return all(f.target.contains(f.apply(f.source.generator_vector(j)))
                   for j in range(f.source.generators))

    @classmethod
    def equal(cls, f, g):
        return cls.is_zero(cls.add(f, cls.scale(-1, g)))

    @classmethod
    def is_surjective(cls, f):
        imagen = RelationSpan(f.target.ambient,
                              cls._columnas_base(f) + f.target.relation_vectors, f.source.ring.base)
        return all(imagen.contains(f.target.generator_vector(i)) for i in range(f.target.generators))

    @classmethod
    def _columnas_base(cls, f):
        """Imágenes de b_l·e_j: generan la imagen sobre la base"""
        filas = f.base_matrix
        return [[filas[i][k] for i in range(f.target.ambient)] for k in range(f.source.ambient)]

    @classmethod
    def is_injective(cls, f):
        base = f.source.ring.base
        relaciones = f.target.relation_vectors
        nS = f.source.ambient
        A = [list(f.base_matrix[i]) + [-v[i] for v in relaciones] for i in range(f.target.ambient)]
        if not A:
            return f.source.is_zero()
        for k in kernel(A, nS + len(relaciones), base):
            if not f.source.contains(k[:nS]):
                return False
        return True

    @classmethod
    def is_isomorphism(cls, f):
        return cls.is_surjective(f) and cls.is_injective(f)

    # --- construcciones --------------------------------------------------

    @classmethod
    def _presentar_tensor(cls, M, N):
        """M ⊗ N con generadores (i, j) ↦ i·n_N + j"""
        if M.ring != N.ring:
            raise ModuleError(f"anillos distintos: {M.ring.label} y {N.ring.label}")
        n, m = M.generators, N.generators
        filas = []
        for a in range(M.relations.rows):
            for j in range(m):
                fila = [Integer(0)] * (n * m)
                for i in range(n):
                    fila[i * m + j] = M.relations[a, i]
                filas.append(fila)
        for b in range(N.relations.rows):
            for i in range(n):
                fila = [Integer(0)] * (n * m)
                for j in range(m):
                    fila[i * m + j] = N.relations[b, j]
                filas.append(fila)
        return cls.presentation(M.ring, n * m, filas)

    @classmethod
    def tensor_modules(cls, M, N):
        """M ⊗ N junto con la simetría S_{M,N}: M⊗N → N⊗M"""
        T = cls._presentar_tensor(M, N)
        T_op = cls._presentar_tensor(N, M)
        n, m = M.generators, N.generators
        matriz = Matrix.zeros(n * m, n * m)
        for i in range(n):
            for j in range(m):
                matriz[j * n + i, i * m + j] = 1
        return TensorProduct(T, ModMorphism(T, T_op, ImmutableMatrix(matriz)))

    @classmethod
    def tensor(cls, M, N):
        return cls._presentar_tensor(M, N)

    @classmethod
    def symmetry(cls, M, N):
        return cls.tensor_modules(M, N).symmetry

    @classmethod
    def tensor_morphisms(cls, f, g):
        anillo = f.source.ring
        if f.source.generators == 0 or g.source.generators == 0 or f.target.generators == 0 or g.target.generators == 0:
            matriz = ImmutableMatrix.zeros(f.target.generators * g.target.generators,
                                           f.source.generators * g.source.generators)
        else:
            matriz = ImmutableMatrix(kronecker_product(Matrix(f.matrix), Matrix(g.matrix)).applyfunc(anillo.normalize))
        return ModMorphism(cls.tensor(f.source, g.source), cls.tensor(f.target, g.target), matriz)

    @classmethod
    def direct_sum(cls, *modulos):
        """⊕ de módulos con inyecciones y proyecciones"""
        anillo = modulos[0].ring
        total = sum(M.generators for M in modulos)
        filas = []
        desplazamiento = 0
        for M in modulos:
            for a in range(M.relations.rows):
                fila = [Integer(0)] * total
                for i in range(M.generators):
                    fila[desplazamiento + i] = M.relations[a, i]
                filas.append(fila)
            desplazamiento += M.generators
        S = cls.presentation(anillo, total, filas)
        inyecciones, proyecciones = [], []
        desplazamiento = 0
        for M in modulos:
            iota = Matrix.zeros(total, M.generators)
            for i in range(M.generators):
                iota[desplazamiento + i, i] = 1
            inyecciones.append(ModMorphism(M, S, ImmutableMatrix(iota)))
            proyecciones.append(ModMorphism(S, M, ImmutableMatrix(iota.T)))
            desplazamiento += M.generators
        return S, inyecciones, proyecciones

    @classmethod
    def quotient(cls, M, filas):
        """M / (filas adicionales) con la proyección"""
        todas = _filas(M.relations) + [list(f) for f in filas]
        Q = cls.presentation(M.ring, M.generators, todas)
        return Q, ModMorphism(M, Q, ImmutableMatrix.eye(M.generators))

    @classmethod
    def cokernel(cls, f):
        columnas = [[f.matrix[i, j] for i in range(f.matrix.rows)] for j in range(f.matrix.cols)]
        return cls.quotient(f.target, columnas)

    @classmethod
    def smith_decompose(cls, A):
        """(U, D, V) con U·A·V = D diagonal, d_i | d_{i+1}"""
        A = Matrix(A)
        return smith(_filas(A), A.rows, A.cols)

    # --- hom interno -----------------------------------------------------

    @classmethod
    def hom_module(cls, M, N):
        """Hom(M, N) como módulo presentado junto con sus morfismos generadores"""
        if M.ring != N.ring:
            raise ModuleError(f"anillos distintos: {M.ring.label} y {N.ring.label}")
        anillo = M.ring
        if not anillo.is_finite_dimensional:
            raise ModuleError(f"Hom de dimensión infinita sobre {anillo.label}")
        base = anillo.base
        r = anillo.dim
        n, nN = M.generators, N.ambient
        total = n * nN
        relN = N.relation_vectors

        # soluciones: x = (x_1..x_n) con Σ ρ_j·x_j ∈ Rel_N para cada relación ρ
        if M.relations.rows == 0:
            soluciones = [[Integer(1) if k == t else Integer(0) for k in range(total)] for t in range(total)]
        else:
            a = M.relations.rows
            columnas = total + a * len(relN)
            A = [[Integer(0)] * columnas for _ in range(a * nN)]
            for q in range(a):
                for j in range(n):
                    entrada = M.relations[q, j]
                    if entrada == 0:
                        continue
                    bloque = anillo.mult_matrix(entrada)
                    for i in range(N.generators):
                        for s in range(r):
                            for t in range(r):
                                A[q * nN + i * r + s][j * nN + i * r + t] = bloque[s][t]
                for k, v in enumerate(relN):
                    for fila in range(nN):
                        A[q * nN + fila][total + q * len(relN) + k] = -v[fila]
            soluciones = [x[:total] for x in kernel(A, columnas, base)]
            soluciones = [x for x in soluciones if any(x)]

        ceros = []
        for j in range(n):
            for v in relN:
                z = [Integer(0)] * total
                z[j * nN:(j + 1) * nN] = v
                ceros.append(z)

        # relaciones entre coeficientes: c con G·c ∈ span(ceros)
        g = len(soluciones)
        B = [[s[k] for s in soluciones] + [-z[k] for z in ceros] for k in range(total)]
        K = [c[:g] for c in kernel(B, g + len(ceros), base)] if B and g else []
        cociente = RelationSpan(g, K, base)

        generadores = []
        for k in range(cociente.dimension):
            s = cociente.section(k)
            x = [base.normalize(sum(s[t] * soluciones[t][u] for t in range(g) if s[t] != 0)) for u in range(total)]
            generadores.append(cls._morfismo_de_vector(M, N, x))

        hom = HomModule(cls.free(anillo, 0), tuple(generadores), M, N,
                        tuple(map(tuple, soluciones)), tuple(map(tuple, ceros)), cociente)
        return replace(hom, module=cls._presentar_hom(anillo, hom, cociente))

    @classmethod
    def _morfismo_de_vector(cls, M, N, x):
        nN, r = N.ambient, M.ring.dim
        matriz = Matrix.zeros(N.generators, M.generators)
        for j in range(M.generators):
            for i in range(N.generators):
                matriz[i, j] = M.ring.from_coords(x[j * nN + i * r:j * nN + (i + 1) * r])
        return ModMorphism(M, N, ImmutableMatrix(matriz))

    @classmethod
    def _presentar_hom(cls, anillo, hom, cociente):
        k = cociente.dimension
        filas = []
        if anillo.kind == 'POLY':
            for s in anillo.symbols:
                for i, h in enumerate(hom.generators):
                    c = hom.coordinates(cls.scale(s, h))
                    fila = [-x for x in c]
                    fila[i] += s
                    filas.append(fila)
        elif not anillo.is_field:
            for i, d in enumerate(cociente.moduli):
                if d:
                    fila = [Integer(0)] * k
                    fila[i] = Integer(d)
                    filas.append(fila)
        return cls.presentation(anillo, k, filas)

    # --- simetría, dualidad e invertibilidad ----------------------------

    @classmethod
    def is_symtrivial(cls, M):
        S = cls.symmetry(M, M)
        return cls.equal(S, cls.identity(S.source))

    @classmethod
    def symmetry_involution_check(cls, M, N):
        ida = cls.symmetry(M, N)
        vuelta = cls.symmetry(N, M)
        return cls.equal(cls.compose(vuelta, ida), cls.identity(ida.source))

    @classmethod
    def _resolver_afin(cls, incognitas, restricciones, base):
        """
        Busca y con A·y − b ∈ span(rel) para cada restricción (A, b, rel).
        A: filas × incognitas. Devuelve y o None.
        """
        total = incognitas + sum(len(rel) for _, _, rel in restricciones)
        filas, lado = [], []
        desplazamiento = incognitas
        for A, b, rel in restricciones:
            for i in range(len(b)):
                fila = list(A[i]) + [Integer(0)] * (total - incognitas)
                for k, v in enumerate(rel):
                    fila[desplazamiento + k] = -v[i]
                filas.append(fila)
                lado.append(b[i])
            desplazamiento += len(rel)
        if not filas:
            return [Integer(0)] * incognitas
        y = solve(filas, total, lado, base)
        return None if y is None else y[:incognitas]

    @classmethod
    def signature(cls, M, simetria=None):
        """Escalar c con S_{M,M} = c·id; solo para objetos invertibles"""
        if simetria is None:
            if not cls._es_invertible(M):
                raise ModuleError("la firma solo está definida para objetos invertibles")
            simetria = cls.symmetry(M, M)
        T = simetria.source
        anillo = T.ring
        r = anillo.dim
        restricciones = []
        for g in range(T.generators):
            A = [[Integer(0)] * r for _ in range(T.ambient)]
            for l in range(r):
                A[g * r + l][l] = Integer(1)
            restricciones.append((A, simetria.apply(T.generator_vector(g)), T.relation_vectors))
        c = cls._resolver_afin(r, restricciones, anillo.base)
        if c is None:
            raise CertificateError("S_{M,M} no es múltiplo escalar de la identidad")
        return anillo.from_coords(c)

    @classmethod
    def _evaluacion(cls, M, hom):
        R = cls.unit(M.ring)
        D = hom.module
        T = cls.tensor(D, M)
        n = M.generators
        fila = [Integer(0)] * (D.generators * n)
        for a, h in enumerate(hom.generators):
            for j in range(n):
                fila[a * n + j] = h.matrix[0, j]
        return ModMorphism(T, R, ImmutableMatrix(1, len(fila), fila))

    @classmethod
    def _es_invertible(cls, M):
        hom = cls.hom_module(M, cls.unit(M.ring))
        return cls.is_isomorphism(cls._evaluacion(M, hom))

    @classmethod
    def _coevaluacion(cls, M, hom):
        """Busca c ∈ M⊗D que cumpla ambas identidades triangulares"""
        anillo = M.ring
        r = anillo.dim
        D = hom.module
        n, k = M.generators, D.generators
        ev = [[h.matrix[0, j] for j in range(n)] for h in hom.generators]
        incognitas = n * k * r
        restricciones = []
        for m in range(n):
            A = [[Integer(0)] * incognitas for _ in range(M.ambient)]
            for j in range(n):
                for a in range(k):
                    bloque = anillo.mult_matrix(ev[a][m])
                    for s in range(r):
                        for t in range(r):
                            A[j * r + s][(j * k + a) * r + t] = bloque[s][t]
            restricciones.append((A, M.generator_vector(m), M.relation_vectors))
        for b in range(k):
            A = [[Integer(0)] * incognitas for _ in range(D.ambient)]
            for a in range(k):
                for j in range(n):
                    bloque = anillo.mult_matrix(ev[b][j])
                    for s in range(r):
                        for t in range(r):
                            A[a * r + s][(j * k + a) * r + t] = bloque[s][t]
            restricciones.append((A, D.generator_vector(b), D.relation_vectors))
        y = cls._resolver_afin(incognitas, restricciones, anillo.base)
        if y is None:
            return None
        return [anillo.from_coords(y[t * r:(t + 1) * r]) for t in range(n * k)]

    @classmethod
    def line_classify(cls, M):
        """Dualizable, invertible, firma, línea y anti-línea"""
        if isinstance(M, GradedModule):
            return cls.graded_line_classify(M)
        hom = cls.hom_module(M, cls.unit(M.ring))
        ev = cls._evaluacion(M, hom)
        invertible = cls.is_isomorphism(ev)
        coev = cls._coevaluacion(M, hom)
        firma = cls.signature(M, cls.symmetry(M, M)) if invertible else None
        uno, menos_uno = M.ring.element(1), M.ring.element(-1)
        return {
            "dualizable": coev is not None,
            "invertible": invertible,
            "signature": firma,
            "is_line": invertible and firma == uno,
            "is_antiline": invertible and firma == menos_uno,
            "dual_presentation": hom.module,
            "coevaluation": coev
        }

    @classmethod
    def rank_uniqueness_check(cls, ring, n, m):
        """R^n ≅ R^m ⇒ n = m, comparando rangos sobre un cuerpo residual R/m"""
        residual = ExactRing.residue_field(ring)
        dims = []
        for k in (n, m):
            hom = cls.hom_module(cls.unit(residual), cls.free(residual, k))
            dims.append(hom.module.base_dimension // residual.dim)
        return {
            "ring": ring.label,
            "residue": residual.label,
            "n": n,
            "m": m,
            "dims": dims,
            "consistent": (dims[0] == dims[1]) == (n == m)
        }

    # --- módulos graduados -----------------------------------------------

    @classmethod
    def graded(cls, ring, componentes, twisted=False):
        pares = tuple(sorted((int(d), M) for d, M in dict(componentes).items()))
        for _, M in pares:
            if M.ring != ring:
                raise ModuleError("todas las componentes deben compartir el anillo")
        return GradedModule(ring, pares, bool(twisted))

    @classmethod
    def graded_unit(cls, ring, twisted=False, grado=0):
        """X^{⊗grado}: R concentrado en el grado dado (grado 0 = unidad)"""
        return cls.graded(ring, {grado: cls.unit(ring)}, twisted)

    @classmethod
    def graded_tensor(cls, M, N):
        """(M⊗N)_n = ⊕_{p+q=n} M_p⊗N_q; simetría con signo (−1)^{pq} si es torcida"""
        if M.twisted != N.twisted:
            raise ModuleError("gradaciones con simetrías distintas")
        if M.ring != N.ring:
            raise ModuleError("anillos distintos")
        sumandos = {}
        for p, Mp in M.components:
            for q, Nq in N.components:
                sumandos.setdefault(p + q, []).append((p, q, Mp, Nq))
        componentes, lista = {}, {}
        for n, partes in sorted(sumandos.items()):
            modulos = [cls.tensor(Mp, Nq) for _, _, Mp, Nq in partes]
            componentes[n] = cls.direct_sum(*modulos)[0]
            lista[n] = [(p, q) for p, q, _, _ in partes]
        producto = cls.graded(M.ring, componentes, M.twisted)
        opuesto = {}
        for q, Nq in N.components:
            for p, Mp in M.components:
                opuesto.setdefault(p + q, []).append((q, p, Nq, Mp))
        simetria = {}
        for n, partes in opuesto.items():
            destino = cls.direct_sum(*[cls.tensor(Nq, Mp) for _, _, Nq, Mp in partes])[0]
            origen = componentes[n]
            matriz = Matrix.zeros(destino.generators, origen.generators)
            col = 0
            posiciones_destino = {}
            fila = 0
            for q, p, Nq, Mp in partes:
                posiciones_destino[(q, p)] = fila
                fila += Nq.generators * Mp.generators
            for p, q in lista[n]:
                Mp, Nq = M.component(p), N.component(q)
                signo = -1 if M.twisted and (p * q) % 2 else 1
                inicio = posiciones_destino[(q, p)]
                for i in range(Mp.generators):
                    for j in range(Nq.generators):
                        matriz[inicio + j * Mp.generators + i, col + i * Nq.generators + j] = signo
                col += Mp.generators * Nq.generators
            simetria[n] = ModMorphism(origen, destino, ImmutableMatrix(matriz.applyfunc(M.ring.element)))
        return GradedTensor(producto, simetria, lista)

    @classmethod
    def shift(cls, M, d):
        """M[d]_n = M_{n+d}"""
        return cls.graded(M.ring, {n - d: C for n, C in M.components}, M.twisted)

    @classmethod
    def shift_check(cls, M, d):
        """M[d] ≅ M ⊗ X^{⊗−d}, componente a componente"""
        desplazado = cls.shift(M, d)
        producto = cls.graded_tensor(M, cls.graded_unit(M.ring, M.twisted, -d)).module
        if sorted(desplazado.degrees) != sorted(producto.degrees):
            return False
        for n in desplazado.degrees:
            A, B = producto.component(n), desplazado.component(n)
            if A.generators != B.generators:
                return False
            f = ModMorphism(A, B, ImmutableMatrix.eye(A.generators))
            if not (f.well_defined and cls.is_isomorphism(f)):
                return False
        return True

    @classmethod
    def graded_line_classify(cls, L):
        """Clasificación de un objeto graduado concentrado en un solo grado"""
        no_nulos = [(d, M) for d, M in L.components if not M.is_zero()]
        if len(no_nulos) != 1:
            raise ModuleError("solo se clasifican objetos graduados concentrados en un grado")
        d, M = no_nulos[0]
        hom = cls.hom_module(M, cls.unit(M.ring))
        invertible = cls.is_isomorphism(cls._evaluacion(M, hom))
        coev = cls._coevaluacion(M, hom)
        firma = None
        if invertible:
            cuadrado = cls.graded_tensor(cls.graded(L.ring, {d: M}, L.twisted),
                                         cls.graded(L.ring, {d: M}, L.twisted))
            firma = cls.signature(M, cuadrado.symmetry[2 * d])
        uno, menos_uno = M.ring.element(1), M.ring.element(-1)
        return {
            "dualizable": coev is not None,
            "invertible": invertible,
            "signature": firma,
            "is_line": invertible and firma == uno,
            "is_antiline": invertible and firma == menos_uno,
            "dual_presentation": cls.graded(L.ring, {-d: hom.module}, L.twisted),
            "coevaluation": coev
        }

    # --- descomposiciones idempotentes -----------------------------------

    @classmethod
    def oid_decompose(cls, ring):
        """Idempotentes de ℤ/n, todas las o.i.d. y la descomposición R ≅ ⊕ e_i R"""
        if ring.kind != 'ZZ/n':
            raise RingError("oid_decompose requiere ZZ/n")
        n = ring.modulus
        idempotentes = [e for e in range(n) if (e * e - e) % n == 0]
        no_nulos = [e for e in idempotentes if e != 0]
        familias = []
        for k in range(1, len(no_nulos) + 1):
            for familia in combinations(no_nulos, k):
                if sum(familia) % n != 1 % n:
                    continue
                if all((a * b) % n == 0 for a, b in combinations(familia, 2)):
                    familias.append(familia)
        descomposiciones = []
        R = cls.unit(ring)
        for familia in familias:
            anuladores = [n // gcd(e, n) for e in familia]
            sumandos = [cls.cyclic(ring, a) for a in anuladores]
            S = cls.direct_sum(*sumandos)[0]
            f = ModMorphism(R, S, ImmutableMatrix(len(familia), 1, [1] * len(familia)))
            producto = 1
            for a in anuladores:
                producto *= a
            descomposiciones.append({
                "oid": list(familia),
                "annihilators": anuladores,
                "product_is_n": producto == n,
                "isomorphism": f.well_defined and cls.is_isomorphism(f)
            })
        maxima = max(familias, key=len)
        potencias = sorted(p ** k for p, k in factorint(n).items())
        return {
            "n": n,
            "idempotents": idempotentes,
            "oids": [list(f) for f in familias],
            "decompositions": descomposiciones,
            "maximal": list(maxima),
            "crt_match": sorted(n // gcd(e, n) for e in maxima) == potencias
        }

    # --- complejo de Amitsur ---------------------------------------------

    @classmethod
    def amitsur_complex(cls, A, M, longitud):
        """M → M⊗A → M⊗A⊗A → …, d_q = Σ (−1)^i (inserción de 1 en la posición i)"""
        if longitud < 1:
            raise ModuleError("la longitud del complejo debe ser ≥ 1")
        if not A.is_finite_dimensional:
            raise ModuleError(f"{A.label} no es de dimensión finita")
        base = A.base
        if not base.is_field:
            raise RingError("el complejo de Amitsur requiere un álgebra sobre un cuerpo")
        dA = A.dim
        dM = M.base_dimension if M.ring.base.is_field else M.generators
        dims = [dM * dA ** q for q in range(longitud + 1)]
        diferenciales = []
        for q in range(longitud):
            D = Matrix.zeros(dims[q + 1], dims[q])
            for fuente in range(dims[q]):
                m, resto = divmod(fuente, dA ** q)
                digitos = []
                for _ in range(q):
                    resto, l = divmod(resto, dA)
                    digitos.append(l)
                digitos = list(reversed(digitos))
                for i in range(q + 1):
                    nuevos = digitos[:i] + [0] + digitos[i:]
                    destino = m
                    for l in nuevos:
                        destino = destino * dA + l
                    D[destino, fuente] += (-1) ** i
            diferenciales.append(D.applyfunc(base.normalize))
        return ChainComplex(base, dims, diferenciales)

    @classmethod
    def amitsur_exactness(cls, complejo):
        """Exactitud en los grados 0..p−1"""
        homologia = complejo.homology_dims()
        return all(h == 0 for h in homologia[:-1])

    # --- ejemplo ε: inverso explícito ------------------------------------

    @classmethod
    def epsilon_ring(cls):
        return ExactRing.poly_quotient(['e'], ['e^2'])

    @classmethod
    def epsilon_module(cls, i_vec, p_vec, signo=1):
        """
        K sobre ℚ[ε]/(ε²): generadores e_1, e_2 con ε·e_j = N·e_j, N = i∘p.
        signo = −1 da K̄ (ε actúa por −N).
        """
        anillo = cls.epsilon_ring()
        eps = anillo.symbols[0]
        i_vec = [Rational(x) for x in i_vec]
        p_vec = [Rational(x) for x in p_vec]
        if sum(a * b for a, b in zip(p_vec, i_vec)) != 0:
            raise ModuleError("se requiere p∘i = 0")
        if not any(i_vec) or not any(p_vec):
            raise ModuleError("i y p deben ser no nulos")
        filas = []
        for j in range(2):
            fila = [-signo * i_vec[t] * p_vec[j] for t in range(2)]
            fila[j] += eps
            filas.append(fila)
        return cls.presentation(anillo, 2, filas)

    @classmethod
    def epsilon_inverse_check(cls, i_vec, p_vec):
        """β: K⊗K̄ → R, β(a⊗b) = p(a)p(b) + ε·λ(a⊗b), con i(λ) = a·p(b) − b·p(a)"""
        K = cls.epsilon_module(i_vec, p_vec)
        K_barra = cls.epsilon_module(i_vec, p_vec, signo=-1)
        anillo = K.ring
        eps = anillo.symbols[0]
        i_vec = [Rational(x) for x in i_vec]
        p_vec = [Rational(x) for x in p_vec]
        t0 = next(t for t in range(2) if i_vec[t] != 0)
        valores = []
        for j in range(2):
            for k in range(2):
                v = [(1 if t == j else 0) * p_vec[k] - (1 if t == k else 0) * p_vec[j] for t in range(2)]
                lam = v[t0] / i_vec[t0]
                if any(v[t] != lam * i_vec[t] for t in range(2)):
                    raise CertificateError("a·p(b) − b·p(a) no está en la imagen de i")
                valores.append(anillo.element(p_vec[j] * p_vec[k] + eps * lam))
        T = cls.tensor(K, K_barra)
        R = cls.unit(anillo)
        beta = ModMorphism(T, R, ImmutableMatrix(1, 4, valores))
        hom = cls.hom_module(K, R)
        columnas = []
        for k in range(2):
            fila = ImmutableMatrix(1, 2, [valores[j * 2 + k] for j in range(2)])
            columnas.append(hom.coordinates(ModMorphism(K, R, fila)))
        matriz = Matrix(hom.module.generators, 2, lambda a, k: columnas[k][a])
        al_dual = ModMorphism(K_barra, hom.module, ImmutableMatrix(matriz))
        clasificacion = cls.line_classify(K)
        return {
            "beta_well_defined": beta.well_defined,
            "beta_isomorphism": beta.well_defined and cls.is_isomorphism(beta),
            "dual_map_well_defined": al_dual.well_defined,
            "dual_is_Kbar": al_dual.well_defined and cls.is_isomorphism(al_dual),
            "invertible": clasificacion["invertible"],
            "is_line": clasificacion["is_line"]
        }
