"""
Potencias simétricas y exteriores, álgebra exterior y certificados asociados
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, ceil

from sympy import ImmutableMatrix, Matrix, Integer, Rational, kronecker_product, eye

from ..config import Config
from ..errors import ModuleError, RingError, CertificateError
from ..helpers import Helpers, Log
from ..linalg import QQ_BASE, ZZ_BASE, solve
from .fpmod import FpMod, ModMorphism


@dataclass(frozen=True)
class PowerResult:
    """Potencia con su epimorfismo desde M^{⊗n}; basis etiqueta los generadores"""
    module: object
    quotient: ModMorphism
    basis: tuple


class _PresupuestoAgotado(Exception):
    pass


def _kron(A, B):
    if A.rows * B.rows == 0 or A.cols * B.cols == 0:
        return Matrix.zeros(A.rows * B.rows, A.cols * B.cols)
    return kronecker_product(Matrix(A), Matrix(B))


def _digitos(indice, base, n):
    digitos = []
    for _ in range(n):
        indice, d = divmod(indice, base)
        digitos.append(d)
    return tuple(reversed(digitos))


def _indice(tupla, base):
    indice = 0
    for d in tupla:
        indice = indice * base + d
    return indice


class Sympow:
    """Acciones de Σ_n, Sym/ASym/Λ y la estructura de Hopf de Λ(V)"""

    # --- potencias tensoriales y acción de Σ_n ---------------------------

    @classmethod
    def tensor_power(cls, M, n):
        T = FpMod.unit(M.ring)
        for _ in range(n):
            T = FpMod.tensor(T, M)
        return T

    @classmethod
    def coxeter_word(cls, sigma, side='right'):
        """
        Palabra s_{k_1}, …, s_{k_r} en transposiciones adyacentes con
        σ = s_{k_1}∘…∘s_{k_r}.
        """
        sigma = list(sigma)
        palabra = []
        identidad = list(range(len(sigma)))
        while sigma != identidad:
            if side == 'right':
                k = next(i for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])
                sigma[k], sigma[k + 1] = sigma[k + 1], sigma[k]
                palabra.append(k)
            else:
                inversa = list(Helpers.inversa(sigma))
                k = next(i for i in range(len(sigma) - 1) if inversa[i] > inversa[i + 1])
                sigma = [k + 1 if s == k else k if s == k + 1 else s for s in sigma]
                palabra.append(k)
        return list(reversed(palabra)) if side == 'right' else palabra

    @classmethod
    def adjacent_matrix(cls, m, n, k):
        """id^{⊗k} ⊗ S_{M,M} ⊗ id^{⊗(n−k−2)} sobre los generadores"""
        S = Matrix.zeros(m * m, m * m)
        for i in range(m):
            for j in range(m):
                S[j * m + i, i * m + j] = 1
        return _kron(_kron(eye(m ** k), S), eye(m ** (n - k - 2)))

    @classmethod
    def perm_matrix(cls, sigma, m, n):
        """El factor en la posición k pasa a la posición σ(k)"""
        P = Matrix.zeros(m ** n, m ** n)
        for fuente in range(m ** n):
            t = _digitos(fuente, m, n)
            destino = [0] * n
            for k in range(n):
                destino[sigma[k]] = t[k]
            P[_indice(destino, m), fuente] = 1
        return P

    @classmethod
    def perm_action(cls, sigma, M, n, side='right'):
        """Automorfismo de M^{⊗n} como composición de simetrías adyacentes"""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(n)):
            raise ModuleError(f"{sigma} no es una permutación de grado {n}")
        m = M.generators
        T = cls.tensor_power(M, n)
        matriz = eye(m ** n)
        for k in cls.coxeter_word(sigma, side):
            matriz = matriz * cls.adjacent_matrix(m, n, k)
        return ModMorphism(T, T, ImmutableMatrix(matriz))

    @classmethod
    def coxeter_check(cls, m, n):
        """Relaciones de Coxeter entre las simetrías adyacentes"""
        s = [cls.adjacent_matrix(m, n, k) for k in range(n - 1)]
        I = eye(m ** n)
        fallas = []
        for i in range(n - 1):
            if s[i] * s[i] != I:
                fallas.append(["involucion", i])
            if i + 1 < n - 1 and s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1]:
                fallas.append(["trenza", i])
            for j in range(i + 2, n - 1):
                if s[i] * s[j] != s[j] * s[i]:
                    fallas.append(["conmutan", i, j])
        return fallas

    # --- Sym, ASym y Λ ---------------------------------------------------

    @classmethod
    def _cociente_por(cls, M, n, signo):
        """Coecualizador de σ ↦ signo(σ)·P_σ generado por las transposiciones adyacentes"""
        T = cls.tensor_power(M, n)
        m = M.generators
        filas = []
        for k in range(n - 1):
            P = cls.adjacent_matrix(m, n, k)
            for g in range(m ** n):
                fila = [signo * P[i, g] for i in range(m ** n)]
                fila[g] -= 1
                if any(fila):
                    filas.append(fila)
        Q, q = FpMod.quotient(T, filas)
        return PowerResult(Q, q, tuple(_digitos(g, m, n) for g in range(m ** n)))

    @classmethod
    def sym_power(cls, M, n):
        """Sym^n(M); sobre M libre con base de tuplas no decrecientes"""
        if M.relations.rows:
            return cls._cociente_por(M, n, 1)
        m = M.generators
        base = Helpers.tuplas_no_decrecientes(m, n)
        posicion = {t: i for i, t in enumerate(base)}
        T = cls.tensor_power(M, n)
        S = FpMod.free(M.ring, len(base))
        matriz = Matrix.zeros(len(base), m ** n)
        for g in range(m ** n):
            matriz[posicion[tuple(sorted(_digitos(g, m, n)))], g] = 1
        return PowerResult(S, ModMorphism(T, S, ImmutableMatrix(matriz)), tuple(base))

    @classmethod
    def asym_power(cls, M, n):
        """ASym^n(M): coecualizador de sgn(σ)·σ"""
        if M.relations.rows or not M.ring.two_invertible:
            return cls._cociente_por(M, n, -1)
        return cls._exterior_libre(M, n)

    @classmethod
    def _exterior_libre(cls, M, n):
        m = M.generators
        base = Helpers.tuplas_crecientes(m, n)
        posicion = {t: i for i, t in enumerate(base)}
        T = cls.tensor_power(M, n)
        E = FpMod.free(M.ring, len(base))
        matriz = Matrix.zeros(len(base), m ** n)
        for g in range(m ** n):
            signo, ordenada = Helpers.signo_ordenar(_digitos(g, m, n))
            if signo:
                matriz[posicion[ordenada], g] = signo
        return PowerResult(E, ModMorphism(T, E, ImmutableMatrix(matriz.applyfunc(M.ring.element))), tuple(base))

    @classmethod
    def ext_power(cls, M, n, mode='asym'):
        """
        Λ^n(M). mode='asym' exige 2 invertible (Λ = ASym); mode='alternating'
        usa el conúcleo de a₁⊗…⊗a_{n−1} ↦ a₁∧a₁∧a₂∧… sobre ℤ o 𝔽₂.
        """
        anillo = M.ring
        if mode == 'asym':
            if not anillo.two_invertible:
                raise RingError(f"Λ por antisimetrización requiere 2 invertible; {anillo.label} no lo cumple")
            return cls.asym_power(M, n)
        if mode != 'alternating':
            raise RingError(f"modo de potencia exterior desconocido: {mode}")
        if not (anillo.kind == 'ZZ' or (anillo.kind == 'ZZ/n' and anillo.modulus == 2)):
            raise RingError(f"el modo alternating solo está disponible sobre ZZ y ZZ/2, no {anillo.label}")
        asym = cls._cociente_por(M, n, -1)
        if n < 2:
            return asym
        m = M.generators
        filas = []
        for t in Helpers.tuplas(m, n - 1):
            fila = [0] * (m ** n)
            fila[_indice((t[0],) + tuple(t), m)] = 1
            filas.append(fila)
        Q, q = FpMod.quotient(asym.module, filas)
        return PowerResult(Q, FpMod.compose(q, asym.quotient), asym.basis)

    @classmethod
    def ext_map(cls, f, n):
        """Λ^n f para morfismos entre libres: matriz de menores"""
        if f.source.relations.rows or f.target.relations.rows:
            raise ModuleError("Λ^n f explícito requiere módulos libres")
        filas_base = Helpers.tuplas_crecientes(f.target.generators, n)
        columnas_base = Helpers.tuplas_crecientes(f.source.generators, n)
        F = Matrix(f.matrix)
        matriz = Matrix(len(filas_base), len(columnas_base),
                        lambda i, j: F.extract(list(filas_base[i]), list(columnas_base[j])).det(method='berkowitz') if n else 1)
        anillo = f.source.ring
        return ModMorphism(cls._exterior_libre(f.source, n).module, cls._exterior_libre(f.target, n).module,
                           ImmutableMatrix(matriz.applyfunc(anillo.normalize)))

    @classmethod
    def dimension_table(cls, n_max, m_max):
        """Filas (n, m, dim Λ^n, dim Sym^n) con sus fórmulas binomiales"""
        filas = []
        for m in range(1, m_max + 1):
            for n in range(n_max + 1):
                ext = len(Helpers.tuplas_crecientes(m, n))
                sym = len(Helpers.tuplas_no_decrecientes(m, n))
                filas.append({"n": n, "m": m, "ext": ext, "sym": sym,
                              "ok": ext == comb(m, n) and sym == comb(m + n - 1, n)})
        return filas

    # --- multiplicaciones ------------------------------------------------

    @classmethod
    def sym_multiply(cls, M, p, q):
        """Sym^p ⊗ Sym^q → Sym^{p+q}"""
        Sp, Sq, Spq = cls.sym_power(M, p), cls.sym_power(M, q), cls.sym_power(M, p + q)
        origen = FpMod.tensor(Sp.module, Sq.module)
        if M.relations.rows:
            return ModMorphism(origen, Spq.module, ImmutableMatrix.eye(origen.generators))
        posicion = {t: i for i, t in enumerate(Spq.basis)}
        matriz = Matrix.zeros(Spq.module.generators, origen.generators)
        for i, I in enumerate(Sp.basis):
            for j, J in enumerate(Sq.basis):
                matriz[posicion[tuple(sorted(I + J))], i * len(Sq.basis) + j] = 1
        return ModMorphism(origen, Spq.module, ImmutableMatrix(matriz))

    @classmethod
    def _exigir_libre(cls, V):
        if V.relations.rows:
            raise ModuleError("se requiere un módulo libre para la base exterior explícita")
        if not V.ring.two_invertible:
            raise RingError(f"el álgebra exterior requiere 2 invertible en {V.ring.label}")

    @classmethod
    def wedge_multiply(cls, V, p, q):
        """Λ^p ⊗ Λ^q → Λ^{p+q}, e_I ⊗ e_J ↦ e_I ∧ e_J"""
        cls._exigir_libre(V)
        m = V.generators
        Bp, Bq = Helpers.tuplas_crecientes(m, p), Helpers.tuplas_crecientes(m, q)
        Bpq = Helpers.tuplas_crecientes(m, p + q)
        posicion = {t: i for i, t in enumerate(Bpq)}
        matriz = Matrix.zeros(len(Bpq), len(Bp) * len(Bq))
        for i, I in enumerate(Bp):
            for j, J in enumerate(Bq):
                signo, ordenada = Helpers.signo_ordenar(I + J)
                if signo:
                    matriz[posicion[ordenada], i * len(Bq) + j] = signo
        origen = FpMod.tensor(FpMod.free(V.ring, len(Bp)), FpMod.free(V.ring, len(Bq)))
        return ModMorphism(origen, FpMod.free(V.ring, len(Bpq)), ImmutableMatrix(matriz))

    @classmethod
    def shuffle_comultiply(cls, V, p, q):
        """Δ_{p,q}: Λ^{p+q} → Λ^p ⊗ Λ^q, suma sobre (p,q)-barajadas con signo"""
        cls._exigir_libre(V)
        m = V.generators
        Bp, Bq = Helpers.tuplas_crecientes(m, p), Helpers.tuplas_crecientes(m, q)
        Bpq = Helpers.tuplas_crecientes(m, p + q)
        pos_p = {t: i for i, t in enumerate(Bp)}
        pos_q = {t: i for i, t in enumerate(Bq)}
        matriz = Matrix.zeros(len(Bp) * len(Bq), len(Bpq))
        for col, I in enumerate(Bpq):
            for S in combinations(range(p + q), p):
                resto = tuple(k for k in range(p + q) if k not in S)
                signo = Helpers.signo_permutacion(S + resto)
                izquierda = tuple(I[k] for k in S)
                derecha = tuple(I[k] for k in resto)
                matriz[pos_p[izquierda] * len(Bq) + pos_q[derecha], col] += signo
        destino = FpMod.tensor(FpMod.free(V.ring, len(Bp)), FpMod.free(V.ring, len(Bq)))
        return ModMorphism(FpMod.free(V.ring, len(Bpq)), destino, ImmutableMatrix(matriz))

    @classmethod
    def coassociativity_check(cls, V, p, q, r):
        """(Δ_{p,q} ⊗ id)∘Δ_{p+q,r} = (id ⊗ Δ_{q,r})∘Δ_{p,q+r}"""
        m = V.generators
        izquierda = _kron(Matrix(cls.shuffle_comultiply(V, p, q).matrix), eye(comb(m, r))) \
            * Matrix(cls.shuffle_comultiply(V, p + q, r).matrix)
        derecha = _kron(eye(comb(m, p)), Matrix(cls.shuffle_comultiply(V, q, r).matrix)) \
            * Matrix(cls.shuffle_comultiply(V, p, q + r).matrix)
        return izquierda == derecha

    @classmethod
    def counit_check(cls, V, n):
        """Δ_{n,0} y Δ_{0,n} son los isomorfismos canónicos"""
        identidad = eye(comb(V.generators, n))
        return (Matrix(cls.shuffle_comultiply(V, n, 0).matrix) == identidad
                and Matrix(cls.shuffle_comultiply(V, 0, n).matrix) == identidad)

    # --- elementos de Λ(V) como diccionarios -----------------------------

    @staticmethod
    def _wedge_elementos(x, y):
        resultado = {}
        for I, a in x.items():
            for J, b in y.items():
                signo, ordenada = Helpers.signo_ordenar(I + J)
                if signo:
                    resultado[ordenada] = resultado.get(ordenada, 0) + signo * a * b
        return {k: v for k, v in resultado.items() if v != 0}

    @staticmethod
    def _delta_elemento(x):
        resultado = {}
        for I, a in x.items():
            n = len(I)
            for p in range(n + 1):
                for S in combinations(range(n), p):
                    resto = tuple(k for k in range(n) if k not in S)
                    clave = (tuple(I[k] for k in S), tuple(I[k] for k in resto))
                    resultado[clave] = resultado.get(clave, 0) + Helpers.signo_permutacion(S + resto) * a
        return {k: v for k, v in resultado.items() if v != 0}

    @classmethod
    def _producto_torcido(cls, x, y):
        """(a⊗b)(c⊗d) = (−1)^{|b||c|} (a∧c)⊗(b∧d)"""
        resultado = {}
        for (a, b), u in x.items():
            for (c, d), v in y.items():
                signo = (-1) ** (len(b) * len(c))
                for ac, s1 in cls._wedge_elementos({a: 1}, {c: 1}).items():
                    for bd, s2 in cls._wedge_elementos({b: 1}, {d: 1}).items():
                        clave = (ac, bd)
                        resultado[clave] = resultado.get(clave, 0) + signo * u * v * s1 * s2
        return {k: v for k, v in resultado.items() if v != 0}

    @classmethod
    def hopf_compatibility_check(cls, m):
        """Δ(x∧y) = Δ(x)·Δ(y) para todo par de cuñas básicas de Λ(ℚ^m)"""
        basicas = [I for n in range(m + 1) for I in Helpers.tuplas_crecientes(m, n)]
        testigos = []
        for I in basicas:
            for J in basicas:
                izquierda = cls._delta_elemento(cls._wedge_elementos({I: 1}, {J: 1}))
                derecha = cls._producto_torcido(cls._delta_elemento({I: 1}), cls._delta_elemento({J: 1}))
                if izquierda != derecha:
                    testigos.append([list(I), list(J)])
        return {"m": m, "pairs": len(basicas) ** 2, "holds": not testigos, "witnesses": testigos}

    @classmethod
    def wedge_table_check(cls, m):
        """Tabla completa de Λ(ℚ^m) contra la regla del signo de la permutación"""
        basicas = [I for n in range(m + 1) for I in Helpers.tuplas_crecientes(m, n)]
        testigos = []
        for I in basicas:
            for J in basicas:
                producto = cls._wedge_elementos({I: 1}, {J: 1})
                if set(I) & set(J):
                    esperado = {}
                else:
                    cruces = sum(1 for i in I for j in J if i > j)
                    esperado = {tuple(sorted(I + J)): (-1) ** cruces}
                conmutado = cls._wedge_elementos({J: 1}, {I: 1})
                graduado = {k: (-1) ** (len(I) * len(J)) * v for k, v in conmutado.items()}
                if producto != esperado or producto != graduado:
                    testigos.append([list(I), list(J)])
        return testigos

    # --- ω, localmente libres y Cramer -----------------------------------

    @classmethod
    def omega_map(cls, V, d):
        """
        ω: Λ^{d+1}V → V⊗Λ^dV, v_0∧…∧v_d ↦ Σ_k (−1)^{d−k} v_k ⊗ (v_0∧…v̂_k…∧v_d)
        """
        m = V.generators
        libre = not V.relations.rows and V.ring.two_invertible
        fuente = cls.ext_power(V, d + 1)
        destino_ext = cls.ext_power(V, d)
        destino = FpMod.tensor(V, destino_ext.module)
        posicion = {t: i for i, t in enumerate(destino_ext.basis)}
        ancho = len(destino_ext.basis)
        matriz = Matrix.zeros(destino.generators, fuente.module.generators)
        for col, I in enumerate(fuente.basis):
            for k in range(d + 1):
                resto = I[:k] + I[k + 1:]
                if libre:
                    signo, resto = Helpers.signo_ordenar(resto)
                    if not signo:
                        continue
                else:
                    signo = 1
                matriz[I[k] * ancho + posicion[resto], col] += (-1) ** (d - k) * signo
        return ModMorphism(fuente.module, destino, ImmutableMatrix(matriz.applyfunc(V.ring.element)))

    @classmethod
    def locally_free_check(cls, V, d):
        """
        Λ^d invertible y ω = 0, junto con la dualidad Λ^p ⊣ Λ^{d−p}⊗(Λ^d)^{−1}.
        La dualidad solo se certifica sobre presentaciones libres (None si hay relaciones).
        """
        anillo = V.ring
        if anillo.characteristic and anillo.characteristic <= d:
            raise RingError(f"se requiere d! invertible en {anillo.label}")
        if not anillo.two_invertible:
            raise RingError(f"se requiere 2 invertible en {anillo.label}")
        determinante = FpMod.line_classify(cls.ext_power(V, d).module)
        omega = cls.omega_map(V, d)
        if not omega.well_defined:
            raise CertificateError("ω no respeta las relaciones de Λ^{d+1}")
        omega_cero = FpMod.is_zero(omega)
        if V.relations.rows:
            dualidad = None
        else:
            dualidad = determinante["is_line"] and V.generators == d and all(
                cls.exterior_duality_check(V, p)["dual"] for p in range(1, d + 1))
        return {
            "rank": d,
            "det_invertible": determinante["invertible"],
            "det_is_line": determinante["is_line"],
            "omega_zero": omega_cero,
            "is_locally_free_rank_d": determinante["invertible"] and omega_cero,
            "duality_holds": dualidad
        }

    @classmethod
    def exterior_duality_check(cls, V, p):
        """
        V libre de rango d. ev: Λ^p⊗Λ^{d−p} → Λ^d → R (cuña y división por la
        base del determinante) y coev: R → Λ^{d−p}⊗Λ^p (comultiplicación seguida
        de la simetría). Se verifican las dos identidades triangulares.
        """
        cls._exigir_libre(V)
        anillo, d = V.ring, V.generators
        if not 0 <= p <= d:
            raise ModuleError(f"grado exterior {p} fuera de [0, {d}]")
        A = FpMod.free(anillo, comb(d, p))
        B = FpMod.free(anillo, comb(d, d - p))
        unidad = FpMod.unit(anillo)
        base_det = ModMorphism(unidad, FpMod.free(anillo, 1), ImmutableMatrix([[1]]))
        coord_det = ModMorphism(FpMod.free(anillo, 1), unidad, ImmutableMatrix([[1]]))
        ev = FpMod.compose(coord_det, cls.wedge_multiply(V, p, d - p))
        coev = FpMod.compose(FpMod.symmetry(A, B), FpMod.compose(cls.shuffle_comultiply(V, p, d - p), base_det))
        zigzag_A = FpMod.compose(FpMod.tensor_morphisms(ev, FpMod.identity(A)),
                                 FpMod.tensor_morphisms(FpMod.identity(A), coev))
        zigzag_B = FpMod.compose(FpMod.tensor_morphisms(FpMod.identity(B), ev),
                                 FpMod.tensor_morphisms(coev, FpMod.identity(B)))
        izquierda = FpMod.equal(zigzag_A, FpMod.identity(A))
        derecha = FpMod.equal(zigzag_B, FpMod.identity(B))
        if not (izquierda and derecha):
            Log.warning(f"Dualidad exterior fallida en grado {p} sobre {anillo.label}")
        return {"p": p, "rank": d, "left_triangle": izquierda, "right_triangle": derecha,
                "dual": izquierda and derecha}

    @classmethod
    def cramer_inverse(cls, f):
        """
        Inversa vía Λ^{d−1}f y (Λ^d f)^{−1} entre localmente libres de rango d,
        sobre cualquier anillo con d! invertible en el que el determinante sea una unidad:
        f^{−1} = (Λ^d f)^{−1}·Φ^{−1}·(Λ^{d−1}f)^T·Φ, con Φ el emparejamiento v ↦ v∧(−).
        """
        anillo = f.source.ring
        d = f.source.generators
        if f.source.relations.rows or f.target.relations.rows or f.target.generators != d:
            raise ModuleError("Cramer requiere libres del mismo rango")
        libres = (f.source,) if f.source == f.target else (f.source, f.target)
        for V in libres if d else ():
            if not cls.locally_free_check(V, d)["is_locally_free_rank_d"]:
                raise ModuleError(f"Cramer requiere módulos localmente libres de rango {d}")
        determinante = cls.ext_map(f, d).matrix[0, 0] if d else Integer(1)
        if not anillo.is_unit(determinante):
            raise CertificateError("Λ^d f no es invertible: no es un isomorfismo por Cramer",
                                   witness={"det": str(determinante)})
        complementos = Helpers.tuplas_crecientes(d, d - 1) if d else []
        Phi = Matrix.zeros(d, d)
        for k, J in enumerate(complementos):
            for i in range(d):
                signo, _ = Helpers.signo_ordenar((i,) + J)
                Phi[k, i] = signo
        L = Matrix(cls.ext_map(f, d - 1).matrix) if d else Matrix.zeros(0, 0)
        inversa = (anillo.inverse(determinante) * Phi.T * L.T * Phi).applyfunc(anillo.normalize)
        g = ModMorphism(f.target, f.source, ImmutableMatrix(inversa))
        if not (FpMod.equal(FpMod.compose(f, g), FpMod.identity(f.target))
                and FpMod.equal(FpMod.compose(g, f), FpMod.identity(f.source))):
            raise CertificateError("la inversa de Cramer no verifica f∘g = id")
        return g

    @classmethod
    def symmetry_lemma_check(cls, d):
        """
        V = ℚ^d, f: Λ^dV⊗Λ^dV → ℚ el producto de determinantes. Evalúa la
        hipótesis de intercambio sobre tuplas básicas y certifica f(v⊗w) = f(w⊗v).
        """
        def f(vs, ws):
            s1, _ = Helpers.signo_ordenar(tuple(vs))
            s2, _ = Helpers.signo_ordenar(tuple(ws))
            return s1 * s2

        hipotesis = True
        for vs in Helpers.tuplas(d, d):
            for ws in Helpers.tuplas(d, d):
                izquierda = f(vs, ws)
                derecha = sum((-1) ** (k + 1) * f(vs[:-1] + (ws[k - 1],), (vs[-1],) + ws[:k - 1] + ws[k:])
                              for k in range(1, d + 1))
                if izquierda != derecha:
                    hipotesis = False
                    break
            if not hipotesis:
                break
        simetrica = all(f(vs, ws) == f(ws, vs) for vs in Helpers.tuplas(d, d) for ws in Helpers.tuplas(d, d))
        return {"d": d, "hypothesis": hipotesis, "symmetric": simetrica}

    # --- descomposiciones binomiales -------------------------------------

    @classmethod
    def binomial_decompose(cls, A, B, n, flavor='tensor'):
        """(A⊕B)^{⊗n}, Sym^n o Λ^n descompuestos en sumandos A-B; composiciones certificadas"""
        if A.ring != B.ring:
            raise ModuleError("anillos distintos")
        if A.relations.rows or B.relations.rows:
            return cls._binomial_dimensiones(A, B, n, flavor)
        a, b = A.generators, B.generators
        if flavor == 'tensor':
            fuente = Helpers.tuplas(a + b, n)
            bloques = []
            for p in range(n + 1):
                for S in combinations(range(n), p):
                    bloques.append((p, S))
            etiquetas = []
            for p, S in bloques:
                for izq in Helpers.tuplas(a, p):
                    for der in Helpers.tuplas(b, n - p):
                        etiquetas.append((S, izq, der))
            def descomponer(t):
                S = tuple(k for k in range(n) if t[k] < a)
                return (S, tuple(t[k] for k in S), tuple(t[k] - a for k in range(n) if k not in S))
        elif flavor in ('sym', 'ext'):
            if flavor == 'ext' and not A.ring.two_invertible:
                raise RingError("Λ explícito requiere 2 invertible")
            tuplas = Helpers.tuplas_no_decrecientes if flavor == 'sym' else Helpers.tuplas_crecientes
            fuente = tuplas(a + b, n)
            etiquetas = []
            for p in range(n + 1):
                for izq in tuplas(a, p):
                    for der in tuplas(b, n - p):
                        etiquetas.append((p, izq, der))
            def descomponer(t):
                izq = tuple(x for x in t if x < a)
                return (len(izq), izq, tuple(x - a for x in t if x >= a))
        else:
            raise ModuleError(f"variante desconocida: {flavor}")
        posicion = {e: i for i, e in enumerate(etiquetas)}
        adelante = Matrix.zeros(len(etiquetas), len(fuente))
        for j, t in enumerate(fuente):
            adelante[posicion[descomponer(t)], j] = 1
        atras = adelante.T
        identidad_fuente = eye(len(fuente))
        identidad_destino = eye(len(etiquetas))
        por_grado = {}
        for e in etiquetas:
            p = e[0] if flavor != 'tensor' else len(e[0])
            por_grado[p] = por_grado.get(p, 0) + 1
        return {
            "flavor": flavor,
            "n": n,
            "lhs_dim": len(fuente),
            "summand_dims": [por_grado.get(p, 0) for p in range(n + 1)],
            "forward_backward_id": adelante * atras == identidad_destino,
            "backward_forward_id": atras * adelante == identidad_fuente,
            "certificate": "explicit"
        }

    @classmethod
    def _binomial_dimensiones(cls, A, B, n, flavor):
        """Certificado a nivel de dimensiones para módulos presentados sobre un cuerpo"""
        potencia = {'tensor': lambda M, k: cls.tensor_power(M, k),
                    'sym': lambda M, k: cls.sym_power(M, k).module,
                    'ext': lambda M, k: cls.ext_power(M, k).module}[flavor]
        suma = FpMod.direct_sum(A, B)[0]
        izquierda = potencia(suma, n).base_dimension
        sumandos = []
        for p in range(n + 1):
            dim = FpMod.tensor(potencia(A, p), potencia(B, n - p)).base_dimension
            sumandos.append(dim * (comb(n, p) if flavor == 'tensor' else 1))
        return {
            "flavor": flavor,
            "n": n,
            "lhs_dim": izquierda,
            "summand_dims": sumandos,
            "forward_backward_id": izquierda == sum(sumandos),
            "backward_forward_id": izquierda == sum(sumandos),
            "certificate": "dimension"
        }

    @classmethod
    def sym_sum_decompose(cls, M, N, n):
        """Sym^n(M⊕N) ≅ ⊕_p Sym^p(M)⊗Sym^{n−p}(N) para libres"""
        return cls.binomial_decompose(M, N, n, 'sym')

    # --- certificado de corchetes ----------------------------------------

    @staticmethod
    def bracket_pairs(simbolos):
        return [(x, y) for x in simbolos for y in simbolos if x != y]

    @classmethod
    def bracket_instances(cls, simbolos):
        """⟨w,x⟩ + ⟨y,z⟩ − ⟨w,y⟩ − ⟨x,z⟩ para cuaternas distintas, sin repetir signos opuestos"""
        instancias = []
        for w, x, y, z in permutations(simbolos, 4):
            if x < y:
                instancias.append((w, x, y, z))
        return instancias

    @classmethod
    def _vector_instancia(cls, instancia, posicion):
        w, x, y, z = instancia
        v = [0] * len(posicion)
        v[posicion[(w, x)]] += 1
        v[posicion[(y, z)]] += 1
        v[posicion[(w, y)]] -= 1
        v[posicion[(x, z)]] -= 1
        return v

    @classmethod
    def verify_bracket_combination(cls, combinacion, objetivo, simbolos='abcde'):
        """Suma Σ c·instancia y la compara con el objetivo"""
        pares = cls.bracket_pairs(simbolos)
        posicion = {p: i for i, p in enumerate(pares)}
        total = [0] * len(pares)
        for instancia, c in combinacion:
            v = cls._vector_instancia(tuple(instancia), posicion)
            total = [t + c * x for t, x in zip(total, v)]
        esperado = [0] * len(pares)
        for par, c in objetivo:
            esperado[posicion[tuple(par)]] += c
        return total == esperado

    # Seis instancias cuya suma da [e,d] − [d,e] con cinco símbolos
    COMBINACION_CONOCIDA = (
        (('a', 'b', 'c', 'e'), 1), (('b', 'c', 'a', 'e'), 1), (('a', 'b', 'e', 'd'), 1),
        (('a', 'd', 'b', 'e'), 1), (('b', 'a', 'c', 'd'), 1), (('a', 'c', 'b', 'd'), 1),
    )

    @classmethod
    def _buscar_unitaria(cls, vectores, objetivo, presupuesto, profundidad_maxima=8):
        """Búsqueda en profundidad con coeficientes ±1, podada por norma L1"""
        nodos = [0]
        visitados = set()

        def buscar(residuo, restante):
            nodos[0] += 1
            if nodos[0] > presupuesto:
                raise _PresupuestoAgotado()
            if not residuo:
                return []
            if restante == 0 or ceil(sum(abs(v) for v in residuo.values()) / 4) > restante:
                return None
            clave = (frozenset(residuo.items()), restante)
            if clave in visitados:
                return None
            visitados.add(clave)
            k = min(residuo)
            for i, v in enumerate(vectores):
                if v[k] == 0:
                    continue
                c = 1 if (v[k] > 0) == (residuo[k] > 0) else -1
                nuevo = dict(residuo)
                for j, x in enumerate(v):
                    if x:
                        nuevo[j] = nuevo.get(j, 0) - c * x
                        if nuevo[j] == 0:
                            del nuevo[j]
                resto = buscar(nuevo, restante - 1)
                if resto is not None:
                    return [(i, c)] + resto
            return None

        inicial = {j: x for j, x in enumerate(objetivo) if x}
        try:
            for profundidad in range(1, profundidad_maxima + 1):
                visitados.clear()
                encontrado = buscar(inicial, profundidad)
                if encontrado is not None:
                    return encontrado, nodos[0]
        except _PresupuestoAgotado:
            Log.warning(f"búsqueda de corchetes agotó el presupuesto de {presupuesto} nodos")
        return None, nodos[0]

    @classmethod
    def bracket_identity_certificate(cls, simbolos='abcde', objetivo=None, presupuesto=None):
        """
        Expresa el objetivo (por defecto ⟨e,d⟩ − ⟨d,e⟩, o ⟨a,b⟩ − ⟨b,a⟩ con
        cuatro símbolos) como combinación de instancias del intercambio
        ⟨a,b⟩ + ⟨c,d⟩ = ⟨a,c⟩ + ⟨b,d⟩.
        """
        simbolos = ''.join(simbolos)
        if presupuesto is None:
            presupuesto = Config.BRACKET_BUDGET
        if objetivo is None:
            x, y = (simbolos[-1], simbolos[-2]) if len(simbolos) >= 5 else (simbolos[0], simbolos[1])
            objetivo = [((x, y), 1), ((y, x), -1)]
        pares = cls.bracket_pairs(simbolos)
        posicion = {p: i for i, p in enumerate(pares)}
        instancias = cls.bracket_instances(simbolos)
        vectores = [cls._vector_instancia(i, posicion) for i in instancias]
        b = [0] * len(pares)
        for par, c in objetivo:
            b[posicion[tuple(par)]] += c
        A = [[v[k] for v in vectores] for k in range(len(pares))]
        sobre_z = solve(A, len(vectores), b, ZZ_BASE)
        sobre_q = solve(A, len(vectores), b, QQ_BASE)

        unitaria, nodos = cls._buscar_unitaria(vectores, b, presupuesto)
        if unitaria is not None:
            coeficientes = {}
            for i, c in unitaria:
                coeficientes[i] = coeficientes.get(i, 0) + c
            tipo = 'unit' if all(abs(c) == 1 for c in coeficientes.values()) else 'integer'
        elif sobre_z is not None:
            coeficientes = {i: int(c) for i, c in enumerate(sobre_z) if c != 0}
            tipo = 'integer'
        elif sobre_q is not None:
            coeficientes = {i: Rational(c) for i, c in enumerate(sobre_q) if c != 0}
            tipo = 'rational'
        else:
            raise CertificateError("el sistema de corchetes no tiene solución",
                                   witness={"target": [[list(p), c] for p, c in objetivo]})
        combinacion = [(instancias[i], c) for i, c in sorted(coeficientes.items()) if c != 0]
        conocida = (cls.verify_bracket_combination(cls.COMBINACION_CONOCIDA, [(('e', 'd'), 1), (('d', 'e'), -1)])
                     if len(simbolos) == 5 else None)
        return {
            "symbols": simbolos,
            "target": [[list(p), c] for p, c in objetivo],
            "certificate": [[list(i), Helpers.a_json(c)] for i, c in combinacion],
            "kind": tipo,
            "verified": cls.verify_bracket_combination(combinacion, objetivo, simbolos),
            "solvable_over_Z": sobre_z is not None,
            "solvable_over_Q": sobre_q is not None,
            "known_verified": conocida,
            "search_nodes": nodos
        }
