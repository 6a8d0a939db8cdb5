"""
Diferenciales de Kähler, complejo de de Rham y sucesión de Euler en una carta
"""
from dataclasses import dataclass
from math import comb

from sympy import ImmutableMatrix, Matrix, Integer, Symbol, diff, eye

from ..errors import RingError, ModuleError, CertificateError
from ..helpers import Helpers
from .exactring import ExactRing
from .fpmod import FpMod, ModMorphism, ChainComplex


@dataclass(frozen=True)
class Omega1:
    """Ω¹ como B-módulo con generadores dx_i y la diferencial universal"""
    algebra: object
    module: object
    rows: tuple

    def d(self, elemento):
        """d(f) = Σ ∂f/∂x_i · dx_i"""
        B = self.algebra
        return tuple(B.normalize(diff(B.element(elemento), s)) for s in B.symbols)


@dataclass
class DeRhamComplex:
    algebra: object
    modules: list
    complex: ChainComplex

    @property
    def dims(self):
        return self.complex.dims

    def cohomology(self):
        return self.complex.homology_dims()

    def describe(self):
        return {
            "algebra": self.algebra.label,
            "dims": list(self.complex.dims),
            "differentials": [Helpers.matriz_json(D) for D in self.complex.differentials],
            "cohomology": self.cohomology()
        }


class Derham:
    """Ω¹, Ω^p = Λ^p Ω¹ y el complejo de de Rham de álgebras finitamente presentadas"""

    @classmethod
    def _algebra(cls, B):
        if B.kind == 'QQ':
            B = ExactRing.poly_quotient([], [])
        elif B.kind == 'ZZ/n' and B.is_field:
            B = ExactRing.poly_quotient([], [], B.modulus)
        elif B.kind != 'POLY':
            raise RingError(f"se esperaba un álgebra k[x]/I, no {B.label}")
        if B.characteristic == 2:
            raise RingError("característica 2: las potencias exteriores de Ω¹ requieren 2 invertible")
        return B

    @classmethod
    def omega1(cls, B):
        """Presentación jacobiana: generadores dx_i, relaciones d(g) para g en la base de Gröbner"""
        B = cls._algebra(B)
        J = ExactRing.jacobian(list(B.gb), B.variables, B) if B.gb else Matrix.zeros(0, len(B.variables))
        filas = tuple(tuple(B.normalize(J[i, j]) for j in range(J.cols)) for i in range(J.rows))
        modulo = FpMod.presentation(B, len(B.variables), filas)
        return Omega1(B, modulo, filas)

    @classmethod
    def forms(cls, B, p, omega=None):
        """Ω^p = Λ^p_B(Ω¹) como cociente del libre sobre tuplas crecientes"""
        B = cls._algebra(B)
        omega = omega or cls.omega1(B)
        n = len(B.variables)
        if p == 0:
            return FpMod.free(B, 1)
        base = Helpers.tuplas_crecientes(n, p)
        posicion = {t: i for i, t in enumerate(base)}
        filas = []
        for r in omega.rows:
            for J in Helpers.tuplas_crecientes(n, p - 1):
                fila = [Integer(0)] * len(base)
                for i, x in enumerate(r):
                    if x == 0 or i in J:
                        continue
                    signo, ordenada = Helpers.signo_ordenar((i,) + J)
                    fila[posicion[ordenada]] += signo * x
                filas.append(fila)
        return FpMod.presentation(B, len(base), filas)

    @classmethod
    def apply_d(cls, B, forma):
        """
        d sobre una forma dada como {tupla creciente de índices: coeficiente}.
        Funciona también sobre anillos de polinomios (sin base finita).
        """
        B = cls._algebra(B)
        resultado = {}
        for I, coeficiente in forma.items():
            I = tuple(I)
            c = B.element(coeficiente)
            for i, s in enumerate(B.symbols):
                derivada = B.normalize(diff(c, s))
                if derivada == 0:
                    continue
                signo, J = Helpers.signo_ordenar((i,) + I)
                if signo:
                    resultado[J] = B.normalize(resultado.get(J, 0) + signo * derivada)
        return {J: c for J, c in resultado.items() if c != 0}

    # --- diferencial sobre coordenadas -----------------------------------

    @classmethod
    def _d_ambiente(cls, B, p, v):
        """d(b·dx_I) = Σ_i ∂b/∂x_i dx_i∧dx_I sobre el espacio ambiente de Ω^p"""
        n, r = len(B.variables), B.dim
        fuente = Helpers.tuplas_crecientes(n, p)
        destino = Helpers.tuplas_crecientes(n, p + 1)
        posicion = {t: i for i, t in enumerate(destino)}
        w = [Integer(0)] * (len(destino) * r)
        for idx, I in enumerate(fuente):
            for l in range(r):
                c = v[idx * r + l]
                if c == 0:
                    continue
                b = B.basis_exprs[l]
                for i, s in enumerate(B.symbols):
                    if i in I:
                        continue
                    derivada = diff(b, s)
                    if derivada == 0:
                        continue
                    signo, J = Helpers.signo_ordenar((i,) + I)
                    coords = B.coords(derivada)
                    base = posicion[J] * r
                    for k in range(r):
                        w[base + k] += signo * c * coords[k]
        return [B.base.normalize(x) for x in w]

    @classmethod
    def _wedge_ambiente(cls, B, p, u, q, v):
        n, r = len(B.variables), B.dim
        Bp, Bq = Helpers.tuplas_crecientes(n, p), Helpers.tuplas_crecientes(n, q)
        destino = Helpers.tuplas_crecientes(n, p + q)
        posicion = {t: i for i, t in enumerate(destino)}
        w = [Integer(0)] * (len(destino) * r)
        for i, I in enumerate(Bp):
            for l in range(r):
                a = u[i * r + l]
                if a == 0:
                    continue
                for j, J in enumerate(Bq):
                    signo, K = Helpers.signo_ordenar(I + J)
                    if not signo:
                        continue
                    for m in range(r):
                        b = v[j * r + m]
                        if b == 0:
                            continue
                        coords = B._tabla[l][m]
                        for k in range(r):
                            w[posicion[K] * r + k] += signo * a * b * coords[k]
        return [B.base.normalize(x) for x in w]

    @classmethod
    def derham_complex(cls, B, pmax=None):
        """Complejo Ω⁰ → Ω¹ → … → Ω^{pmax} con diferenciales k-lineales en la base de monomios"""
        B = cls._algebra(B)
        if not B.is_finite_dimensional:
            raise ModuleError(f"el complejo de de Rham se calcula solo para álgebras de dimensión finita, no {B.label}")
        n = len(B.variables)
        pmax = n if pmax is None else int(pmax)
        if pmax < 0:
            raise ModuleError("pmax debe ser ≥ 0")
        omega = cls.omega1(B)
        modulos = [cls.forms(B, p, omega) for p in range(pmax + 1)]
        espacios = [M.span for M in modulos]
        dims = [e.dimension for e in espacios]
        diferenciales = []
        for p in range(pmax):
            for v in modulos[p].relation_vectors:
                if not modulos[p + 1].contains(cls._d_ambiente(B, p, v)):
                    raise CertificateError(f"d^{p} no respeta las relaciones de Ω^{p}")
            D = Matrix.zeros(dims[p + 1], dims[p])
            for k in range(dims[p]):
                imagen = cls._d_ambiente(B, p, espacios[p].section(k))
                columna = espacios[p + 1].coordinates(imagen)
                for i, c in enumerate(columna):
                    D[i, k] = c
            diferenciales.append(D)
        complejo = ChainComplex(B.base, dims, diferenciales, modules=modulos)
        if not complejo.d_squared_zero():
            raise CertificateError("d∘d ≠ 0 en el complejo de de Rham")
        return DeRhamComplex(B, modulos, complejo)

    @classmethod
    def derham_cohomology(cls, B):
        """dim H^p para p = 0..n"""
        return cls.derham_complex(B).cohomology()

    @classmethod
    def leibniz_check(cls, B, pmax=None):
        """d(f∧g) = df∧g + (−1)^{|f|} f∧dg sobre pares de formas básicas"""
        complejo = cls.derham_complex(B, pmax)
        B = complejo.algebra
        n, r = len(B.variables), B.dim
        tope = len(complejo.modules) - 1
        testigos = []
        for p in range(tope + 1):
            for q in range(tope + 1 - p):
                if p + q + 1 > tope:
                    continue
                for i in range(comb(n, p) * r):
                    u = [Integer(1) if k == i else Integer(0) for k in range(comb(n, p) * r)]
                    for j in range(comb(n, q) * r):
                        v = [Integer(1) if k == j else Integer(0) for k in range(comb(n, q) * r)]
                        izquierda = cls._d_ambiente(B, p + q, cls._wedge_ambiente(B, p, u, q, v))
                        a = cls._wedge_ambiente(B, p + 1, cls._d_ambiente(B, p, u), q, v)
                        b = cls._wedge_ambiente(B, p, u, q + 1, cls._d_ambiente(B, q, v))
                        diferencia = [x - y - (-1) ** p * z for x, y, z in zip(izquierda, a, b)]
                        if not complejo.modules[p + q + 1].contains(diferencia):
                            testigos.append([p, q, i, j])
        return testigos

    # --- derivaciones ----------------------------------------------------

    @classmethod
    def _delta(cls, B, M, delta, polinomio):
        componentes = []
        for g in range(M.generators):
            total = sum((diff(polinomio, s) * B.element(delta[i][g]) for i, s in enumerate(B.symbols)), Integer(0))
            componentes.append(B.normalize(total))
        return M.vector(componentes)

    @classmethod
    def derivation_witnesses(cls, B, M, delta):
        """Fallas de compatibilidad con el ideal y de la regla de Leibniz"""
        B = cls._algebra(B)
        if not B.is_finite_dimensional:
            raise ModuleError(f"la verificación exhaustiva requiere dimensión finita; {B.label} no lo es")
        if len(delta) != len(B.variables):
            raise ModuleError("δ debe asignar un elemento de M a cada variable")
        testigos = []
        for g in B.gb:
            if not M.contains(cls._delta(B, M, delta, g)):
                testigos.append({"ideal": str(g).replace('**', '^')})
        base = B.basis_exprs
        for j, a in enumerate(base):
            for k in range(j, len(base)):
                b = base[k]
                producto = cls._delta(B, M, delta, B.normalize(a * b))
                da, db = cls._delta(B, M, delta, a), cls._delta(B, M, delta, b)
                leibniz = []
                for i in range(M.generators):
                    bloque_a = M.ring.from_coords(da[i * B.dim:(i + 1) * B.dim])
                    bloque_b = M.ring.from_coords(db[i * B.dim:(i + 1) * B.dim])
                    leibniz.append(B.normalize(a * bloque_b + b * bloque_a))
                diferencia = [x - y for x, y in zip(producto, M.vector(leibniz))]
                if not M.contains(diferencia):
                    testigos.append({"pair": [str(a).replace('**', '^'), str(b).replace('**', '^')]})
        return testigos

    @classmethod
    def universal_derivation_check(cls, B, M, delta):
        return not cls.derivation_witnesses(B, M, delta)

    # --- la construcción por conúcleo y la comparación -------------------

    @classmethod
    def omega1_cokernel(cls, B):
        """
        Ω¹ como cociente de B⊗B: generadores d(b_j), relaciones
        d(ab) − a·d(b) − b·d(a) para a, b en la base de monomios.
        """
        B = cls._algebra(B)
        if not B.is_finite_dimensional:
            raise ModuleError(f"la construcción por conúcleo requiere dimensión finita; {B.label} no lo es")
        base = B.basis_exprs
        r = len(base)
        filas = []
        for j in range(r):
            for k in range(j, r):
                fila = [Integer(0)] * r
                for l, c in enumerate(B.coords(base[j] * base[k])):
                    fila[l] += c
                fila[k] -= base[j]
                fila[j] -= base[k]
                filas.append(fila)
        return FpMod.presentation(B, r, filas)

    @classmethod
    def omega1_crosscheck(cls, B):
        """Isomorfismo entre las dos presentaciones de Ω¹, compatible con d"""
        B = cls._algebra(B)
        jacobiana = cls.omega1(B)
        conucleo = cls.omega1_cokernel(B)
        n, r = len(B.variables), B.dim
        ida = Matrix(n, r, lambda i, j: B.normalize(diff(B.basis_exprs[j], B.symbols[i])))
        vuelta = Matrix(r, n, lambda l, i: B.coords(B.symbols[i])[l])
        phi = FpMod.morphism(conucleo, jacobiana.module, ida)
        psi = FpMod.morphism(jacobiana.module, conucleo, vuelta)
        iso = (FpMod.equal(FpMod.compose(phi, psi), FpMod.identity(jacobiana.module))
               and FpMod.equal(FpMod.compose(psi, phi), FpMod.identity(conucleo)))
        compatible = all(tuple(phi.matrix[i, j] for i in range(n)) == jacobiana.d(B.basis_exprs[j])
                         for j in range(r))
        return {
            "algebra": B.label,
            "jacobian_dim": jacobiana.module.base_dimension,
            "cokernel_dim": conucleo.base_dimension,
            "isomorphism": iso,
            "commutes_with_d": compatible
        }

    # --- funtorialidad ---------------------------------------------------

    @classmethod
    def tensor_algebra(cls, B1, B2):
        """B1 ⊗ B2 con las variables de B2 renombradas si chocan"""
        B1, B2 = cls._algebra(B1), cls._algebra(B2)
        if B1.modulus != B2.modulus:
            raise RingError("las álgebras deben tener el mismo cuerpo base")
        renombre = {}
        for v in B2.variables:
            nuevo = v
            while nuevo in B1.variables or nuevo in renombre.values():
                nuevo = nuevo + "_2"
            renombre[v] = nuevo
        sustitucion = {Symbol(v): Symbol(w) for v, w in renombre.items()}
        generadores = list(B1.generators) + [g.subs(sustitucion, simultaneous=True) for g in B2.generators]
        T = ExactRing.poly_quotient(list(B1.variables) + [renombre[v] for v in B2.variables],
                                    generadores, B1.modulus)
        return T, renombre

    @classmethod
    def _filas_base(cls, T, gb, variables):
        """Filas jacobianas de gb respecto de variables, vistas en T"""
        filas = []
        for g in gb:
            filas.append([T.element(diff(g, Symbol(v))) for v in variables])
        return filas

    @classmethod
    def sum_rule_check(cls, B1, B2):
        """Ω¹_{B1⊗B2} ≅ Ω¹_{B1}⊗B2 ⊕ B1⊗Ω¹_{B2}"""
        B1, B2 = cls._algebra(B1), cls._algebra(B2)
        T, renombre = cls.tensor_algebra(B1, B2)
        izquierda = cls.omega1(T).module
        sustitucion = {Symbol(v): Symbol(w) for v, w in renombre.items()}
        gb2 = [g.subs(sustitucion, simultaneous=True) for g in B2.gb]
        n1, n2 = len(B1.variables), len(B2.variables)
        A = FpMod.presentation(T, n1, cls._filas_base(T, B1.gb, B1.variables))
        C = FpMod.presentation(T, n2, cls._filas_base(T, gb2, [renombre[v] for v in B2.variables]))
        derecha = FpMod.direct_sum(A, C)[0]
        return cls._comparar_identidad(izquierda, derecha, "sum_rule")

    @classmethod
    def base_change_check(cls, B, C):
        """Ω¹_B ⊗ C ≅ Ω¹_{B⊗C/C}"""
        B, C = cls._algebra(B), cls._algebra(C)
        T, _ = cls.tensor_algebra(B, C)
        izquierda = FpMod.presentation(T, len(B.variables), cls._filas_base(T, B.gb, B.variables))
        relativa = FpMod.presentation(T, len(B.variables), cls._filas_base(T, T.gb, B.variables))
        reporte = cls._comparar_identidad(izquierda, relativa, "base_change")
        reporte["omega_B_dim"] = cls.omega1(B).module.base_dimension if B.is_finite_dimensional else None
        return reporte

    @classmethod
    def _comparar_identidad(cls, M, N, nombre):
        if M.generators != N.generators:
            return {"check": nombre, "isomorphism": False, "lhs_dim": None, "rhs_dim": None}
        ida = ModMorphism(M, N, ImmutableMatrix.eye(M.generators))
        vuelta = ModMorphism(N, M, ImmutableMatrix.eye(M.generators))
        iso = ida.well_defined and vuelta.well_defined
        finita = M.ring.is_finite_dimensional
        return {
            "check": nombre,
            "isomorphism": iso,
            "lhs_dim": M.base_dimension if finita else None,
            "rhs_dim": N.base_dimension if finita else None
        }

    @classmethod
    def omega1_functoriality_checks(cls, B1, B2, C):
        return {
            "sum_rule": cls.sum_rule_check(B1, B2),
            "base_change": cls.base_change_check(B1, C)
        }

    # --- sucesión de Euler -----------------------------------------------

    @classmethod
    def euler_contraction_check(cls, n):
        """
        Carta λ = e_0 de ℙ^n: 0 → Ω¹ →ι E⊗B →p B → 0 con B = ℚ[x_1..x_n],
        ι(ē_i) = e_i − x_i·e_0, p(e_j) = x_j (x_0 = 1), t(1) = e_0, s(e_j) = ē_j.
        """
        if n < 0:
            raise ModuleError("n debe ser ≥ 0")
        B = ExactRing.poly_quotient([f"x{i}" for i in range(1, n + 1)], [])
        x = (Integer(1),) + B.symbols
        Omega = FpMod.free(B, n)
        E = FpMod.free(B, n + 1)
        R = FpMod.unit(B)
        iota = ModMorphism(Omega, E, ImmutableMatrix(n + 1, n, lambda i, j: (1 if i == j + 1 else 0) - (x[j + 1] if i == 0 else 0)))
        p = ModMorphism(E, R, ImmutableMatrix(1, n + 1, list(x)))
        t = ModMorphism(R, E, ImmutableMatrix(n + 1, 1, [1] + [0] * n))
        s = ModMorphism(E, Omega, ImmutableMatrix(n, n + 1, lambda i, j: 1 if j == i + 1 else 0))

        def es_identidad(f, k):
            return Matrix(f.matrix) == eye(k)

        contraccion = FpMod.add(FpMod.compose(t, p), FpMod.compose(iota, s))
        return {
            "n": n,
            "s_iota_id": es_identidad(FpMod.compose(s, iota), n),
            "p_t_id": es_identidad(FpMod.compose(p, t), 1),
            "contraction_id": es_identidad(contraccion, n + 1),
            "p_iota_zero": all(e == 0 for e in FpMod.compose(p, iota).matrix)
        }
