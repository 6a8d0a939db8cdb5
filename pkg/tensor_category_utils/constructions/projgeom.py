"""
Geometría proyectiva con coordenadas: complejos de Koszul, relaciones de
Segre, Veronese y Plücker con sus idas y vueltas, y el álgebra de Rees.
"""
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import comb

from sympy import Integer, Matrix, Poly, Rational, Symbol, expand, prod

from ..errors import InputError, RelationError, CertificateError
from ..helpers import Helpers
from ..linalg import QQ_BASE, RelationSpan, kernel, rank, rref, solve
from .fpmod import ChainComplex


@dataclass(frozen=True)
class QuadricSet:
    """Cuádricas homogéneas en coordenadas con nombre, sin múltiplos repetidos"""
    coordinates: tuple
    quadrics: tuple

    @property
    def symbols(self):
        return tuple(Symbol(c) for c in self.coordinates)

    def __len__(self):
        return len(self.quadrics)

    def evaluate(self, valores):
        """Valor de cada cuádrica en el punto dado (lista en el orden de las coordenadas)"""
        sustitucion = dict(zip(self.symbols, [Rational(v) for v in valores]))
        return [q.subs(sustitucion) for q in self.quadrics]

    def satisfied_by(self, valores):
        return all(v == 0 for v in self.evaluate(valores))

    def as_strings(self):
        return [str(q).replace('**', '^') for q in self.quadrics]


@dataclass
class KoszulComplex:
    """Λ^top E → … → Λ¹E → Λ⁰E = k, con d(a_1∧…∧a_p) = Σ (−1)^k s(a_k) a_1∧…â_k…∧a_p"""
    covector: tuple
    degrees: list
    differentials: dict
    complex: ChainComplex
    homology: dict
    contraction: object = None

    @property
    def exact(self):
        return all(h == 0 for h in self.homology.values())

    def describe(self):
        return {
            "s": [Helpers.a_json(x) for x in self.covector],
            "dims": {p: comb(len(self.covector), p) for p in self.degrees},
            "d_squared_zero": self.complex.d_squared_zero(),
            "homology": self.homology,
            "exact": self.exact,
            "contraction": self.contraction
        }


def _canonica(expr, simbolos):
    """Monomios ordenados y coeficiente principal 1; None si es cero"""
    poly = Poly(expand(expr), *simbolos)
    if poly.is_zero:
        return None
    return expand(poly.as_expr() / poly.LC(order='lex'))


def _deduplicar(expresiones, simbolos):
    vistas = {}
    for e in expresiones:
        q = _canonica(e, simbolos)
        if q is None:
            continue
        clave = tuple(Poly(q, *simbolos).terms(order='lex'))
        vistas.setdefault(clave, q)
    return tuple(vistas[k] for k in sorted(vistas, reverse=True))


def _normalizar(vector):
    """Primera coordenada no nula = 1"""
    vector = [Rational(x) for x in vector]
    for x in vector:
        if x != 0:
            return [v / x for v in vector]
    return vector


def _covector(valores):
    s = tuple(Rational(x) for x in valores)
    if not s or all(x == 0 for x in s):
        raise InputError("el covector debe ser no nulo (s: E ↠ L sobreyectivo)", witness={"s": [str(x) for x in s]})
    return s


class ProjGeom:
    """Complejos de Koszul, Segre, Veronese, Plücker y Rees sobre ℚ"""

    # --- Koszul ----------------------------------------------------------

    @classmethod
    def koszul_differential(cls, s, p):
        """d_p: Λ^p → Λ^{p−1} en las bases de tuplas crecientes"""
        n = len(s)
        fuente = Helpers.tuplas_crecientes(n, p)
        destino = Helpers.tuplas_crecientes(n, p - 1)
        posicion = {t: i for i, t in enumerate(destino)}
        D = Matrix.zeros(len(destino), len(fuente))
        for j, I in enumerate(fuente):
            for k, i in enumerate(I):
                if s[i] != 0:
                    D[posicion[I[:k] + I[k + 1:]], j] += (-1) ** k * s[i]
        return D

    @classmethod
    def wedge_with(cls, e, p):
        """t_p(ω) = e∧ω: Λ^p → Λ^{p+1}"""
        n = len(e)
        fuente = Helpers.tuplas_crecientes(n, p)
        destino = Helpers.tuplas_crecientes(n, p + 1)
        posicion = {t: i for i, t in enumerate(destino)}
        T = Matrix.zeros(len(destino), len(fuente))
        for j, I in enumerate(fuente):
            for i, c in enumerate(e):
                if c == 0:
                    continue
                signo, J = Helpers.signo_ordenar((i,) + I)
                if signo:
                    T[posicion[J], j] += signo * c
        return T

    @classmethod
    def koszul_complex(cls, s, pmax=None, e=None):
        s = _covector(s)
        n = len(s)
        pmax = n if pmax is None else min(int(pmax), n)
        if pmax < 0:
            raise InputError("pmax debe ser ≥ 0")
        tope = min(pmax + 1, n)
        diferenciales = {p: cls.koszul_differential(s, p) for p in range(1, tope + 1)}
        grados = list(range(tope, -1, -1))
        complejo = ChainComplex(QQ_BASE, [comb(n, p) for p in grados],
                                [diferenciales[p] for p in grados[:-1]], degrees=grados)
        if not complejo.d_squared_zero():
            raise CertificateError("d∘d ≠ 0 en el complejo de Koszul")
        homologia = dict(zip(grados, complejo.homology_dims()))
        if tope > pmax:
            del homologia[tope]
        contraccion = None
        if e is not None:
            contraccion = cls.koszul_contraction_check(s, e, pmax)
        return KoszulComplex(s, [p for p in grados if p <= pmax], diferenciales, complejo, homologia, contraccion)

    @classmethod
    def koszul_contraction_check(cls, s, e, pmax=None):
        """d_{p+1}∘t_p + t_{p−1}∘d_p = id en cada grado, con t = e∧ y s(e) = 1"""
        s, e = _covector(s), tuple(Rational(x) for x in e)
        n = len(s)
        if len(e) != n:
            raise InputError("e y s deben vivir en el mismo espacio")
        if sum(a * b for a, b in zip(s, e)) != 1:
            raise InputError("la contracción requiere s(e) = 1", witness={"s(e)": str(sum(a * b for a, b in zip(s, e)))})
        pmax = n if pmax is None else min(int(pmax), n)
        resultados = {}
        for p in range(pmax + 1):
            m = comb(n, p)
            total = Matrix.zeros(m, m)
            if p < n:
                total += cls.koszul_differential(s, p + 1) * cls.wedge_with(e, p)
            if p > 0:
                total += cls.wedge_with(e, p - 1) * cls.koszul_differential(s, p)
            resultados[p] = total == Matrix.eye(m)
        return resultados

    # --- utilidades para los oráculos de núcleo --------------------------

    @classmethod
    def _monomios_cuadraticos(cls, simbolos):
        return [a * b for a, b in combinations_with_replacement(simbolos, 2)]

    @classmethod
    def _coeficientes(cls, expr, simbolos, monomios):
        poly = Poly(expand(expr), *simbolos)
        indice = {Poly(m, *simbolos).monoms()[0]: i for i, m in enumerate(monomios)}
        v = [Integer(0)] * len(monomios)
        for m, c in poly.terms():
            v[indice[m]] = c
        return v

    @classmethod
    def quadratic_kernel(cls, coordenadas, imagenes, variables):
        """Base del núcleo en grado 2 de ℚ[coordenadas] → ℚ[variables]"""
        simbolos = [Symbol(c) for c in coordenadas]
        cuadraticos = list(combinations_with_replacement(range(len(simbolos)), 2))
        imagen = [expand(imagenes[i] * imagenes[j]) for i, j in cuadraticos]
        destino = sorted({m for q in imagen for m in Poly(q, *variables).monoms()}, reverse=True)
        posicion = {m: k for k, m in enumerate(destino)}
        filas = [[Integer(0)] * len(imagen) for _ in destino]
        for j, q in enumerate(imagen):
            for m, c in Poly(q, *variables).terms():
                filas[posicion[m]][j] = c
        nucleo = kernel(filas, len(imagen), QQ_BASE)
        monomios = [simbolos[i] * simbolos[j] for i, j in cuadraticos]
        return [sum((c * m for c, m in zip(v, monomios)), Integer(0)) for v in nucleo]

    @classmethod
    def relation_completeness(cls, cuadricas, imagenes, variables):
        """El span de las cuádricas coincide con el núcleo completo en grado 2"""
        simbolos = cuadricas.symbols
        monomios = cls._monomios_cuadraticos(simbolos)
        nucleo = cls.quadratic_kernel(cuadricas.coordinates, imagenes, variables)
        sustitucion = dict(zip(simbolos, imagenes))
        contenidas = all(expand(q.subs(sustitucion, simultaneous=True)) == 0 for q in cuadricas.quadrics)
        filas = [cls._coeficientes(q, simbolos, monomios) for q in cuadricas.quadrics]
        rango = rank(filas, len(monomios), QQ_BASE) if filas else 0
        return {
            "kernel_dim": len(nucleo),
            "span_rank": rango,
            "contained": contenidas,
            "complete": contenidas and rango == len(nucleo)
        }

    # --- Segre -----------------------------------------------------------

    @classmethod
    def segre_coordinates(cls, n1, n2):
        sep = "" if max(n1, n2) <= 10 else "_"
        return tuple(f"x{i}{sep}{j}" for i in range(n1) for j in range(n2))

    @classmethod
    def segre_relations(cls, n1, n2):
        """x_ab·x_cd − x_ad·x_cb"""
        if n1 < 1 or n2 < 1:
            raise InputError("las dimensiones de Segre deben ser ≥ 1")
        nombres = cls.segre_coordinates(n1, n2)
        x = [[Symbol(nombres[i * n2 + j]) for j in range(n2)] for i in range(n1)]
        cuadricas = [x[a][b] * x[c][d] - x[a][d] * x[c][b]
                     for a, c in combinations(range(n1), 2) for b, d in combinations(range(n2), 2)]
        return QuadricSet(nombres, _deduplicar(cuadricas, [Symbol(c) for c in nombres]))

    @classmethod
    def segre_images(cls, n1, n2):
        a = [Symbol(f"a{i}") for i in range(n1)]
        b = [Symbol(f"b{j}") for j in range(n2)]
        return [a[i] * b[j] for i in range(n1) for j in range(n2)], a + b

    @classmethod
    def segre_forward(cls, s1, s2):
        s1, s2 = _covector(s1), _covector(s2)
        return [x * y for x in s1 for y in s2]

    @classmethod
    def _coecualizador(cls, n, relaciones):
        """k^n ↠ k^n/⟨relaciones⟩; el cociente debe ser una recta"""
        espacio = RelationSpan(n, relaciones, QQ_BASE)
        if espacio.dimension != 1:
            raise RelationError(f"el coecualizador tiene dimensión {espacio.dimension}, no 1")
        return [espacio.coordinates([Integer(1) if k == i else Integer(0) for k in range(n)])[0]
                for i in range(n)]

    @classmethod
    def segre_backward(cls, s, n1, n2):
        """
        Reconstruye s1, s2 de s: E1⊗E2 → L. El primer factor es el cociente de
        E1 por los a·s(c⊗b) − c·s(a⊗b); el segundo, el análogo en E2.
        """
        s = _covector(s)
        if len(s) != n1 * n2:
            raise InputError(f"se esperaban {n1 * n2} coordenadas, no {len(s)}")
        relaciones = cls.segre_relations(n1, n2)
        valores = relaciones.evaluate(s)
        if any(v != 0 for v in valores):
            malas = [q for q, v in zip(relaciones.as_strings(), valores) if v != 0]
            raise RelationError("s no satisface las relaciones de Segre", witness={"violated": malas})
        S = [[s[i * n2 + j] for j in range(n2)] for i in range(n1)]
        primeras = []
        for a, c in combinations(range(n1), 2):
            for b in range(n2):
                v = [Integer(0)] * n1
                v[a] += S[c][b]
                v[c] -= S[a][b]
                primeras.append(v)
        segundas = []
        for b, d in combinations(range(n2), 2):
            for a in range(n1):
                v = [Integer(0)] * n2
                v[b] += S[a][d]
                v[d] -= S[a][b]
                segundas.append(v)
        return cls._coecualizador(n1, primeras), cls._coecualizador(n2, segundas)

    @classmethod
    def segre_roundtrip(cls, s1, s2):
        s1, s2 = _covector(s1), _covector(s2)
        n1, n2 = len(s1), len(s2)
        s = cls.segre_forward(s1, s2)
        relaciones = cls.segre_relations(n1, n2)
        t1, t2 = cls.segre_backward(s, n1, n2)
        return {
            "s": [Helpers.a_json(x) for x in s],
            "forward_satisfies": relaciones.satisfied_by(s),
            "s1": [Helpers.a_json(x) for x in _normalizar(t1)],
            "s2": [Helpers.a_json(x) for x in _normalizar(t2)],
            "factors_match": _normalizar(t1) == _normalizar(s1) and _normalizar(t2) == _normalizar(s2),
            "product_match": _normalizar(cls.segre_forward(t1, t2)) == _normalizar(s)
        }

    # --- Veronese --------------------------------------------------------

    @classmethod
    def veronese_monomials(cls, n, d):
        return Helpers.tuplas_no_decrecientes(n, d)

    @classmethod
    def veronese_relations(cls, n, d):
        """t(v·M)·t(w·W) − t(w·M)·t(v·W) intercambiando un factor"""
        if n < 1 or d < 1:
            raise InputError("Veronese requiere n ≥ 1 y d ≥ 1")
        monomios = cls.veronese_monomials(n, d)
        posicion = {m: k for k, m in enumerate(monomios)}
        nombres = tuple(f"t{k}" for k in range(len(monomios)))
        t = [Symbol(c) for c in nombres]
        cuadricas = []
        for alfa, beta in combinations_with_replacement(monomios, 2):
            for i in set(alfa):
                for j in set(beta):
                    if i == j:
                        continue
                    nuevo_alfa = list(alfa)
                    nuevo_alfa.remove(i)
                    nuevo_beta = list(beta)
                    nuevo_beta.remove(j)
                    gamma = tuple(sorted(nuevo_alfa + [j]))
                    delta = tuple(sorted(nuevo_beta + [i]))
                    cuadricas.append(t[posicion[alfa]] * t[posicion[beta]]
                                     - t[posicion[gamma]] * t[posicion[delta]])
        return QuadricSet(nombres, _deduplicar(cuadricas, t))

    @classmethod
    def veronese_images(cls, n, d):
        y = [Symbol(f"y{i}") for i in range(n)]
        return [prod(y[i] for i in m) for m in cls.veronese_monomials(n, d)], y

    @classmethod
    def veronese_forward(cls, s, d):
        s = _covector(s)
        return [prod((s[i] for i in m), start=Integer(1)) for m in cls.veronese_monomials(len(s), d)]

    @classmethod
    def veronese_backward(cls, t, n, d):
        """s como coecualizador de E ⇉ E: v·t(w·m) − w·t(v·m) con m de grado d−1"""
        t = _covector(t)
        monomios = cls.veronese_monomials(n, d)
        if len(t) != len(monomios):
            raise InputError(f"se esperaban {len(monomios)} coordenadas, no {len(t)}")
        relaciones = cls.veronese_relations(n, d)
        valores = relaciones.evaluate(t)
        if any(v != 0 for v in valores):
            malas = [q for q, v in zip(relaciones.as_strings(), valores) if v != 0]
            raise RelationError("t no satisface las relaciones de Veronese", witness={"violated": malas})
        posicion = {m: k for k, m in enumerate(monomios)}
        filas = []
        for m in Helpers.tuplas_no_decrecientes(n, d - 1):
            for v, w in combinations(range(n), 2):
                fila = [Integer(0)] * n
                fila[v] += t[posicion[tuple(sorted(m + (w,)))]]
                fila[w] -= t[posicion[tuple(sorted(m + (v,)))]]
                filas.append(fila)
        return cls._coecualizador(n, filas)

    @classmethod
    def veronese_roundtrip(cls, s, d):
        s = _covector(s)
        n = len(s)
        t = cls.veronese_forward(s, d)
        recuperado = cls.veronese_backward(t, n, d)
        return {
            "t": [Helpers.a_json(x) for x in t],
            "forward_satisfies": cls.veronese_relations(n, d).satisfied_by(t),
            "s": [Helpers.a_json(x) for x in _normalizar(recuperado)],
            "s_match": _normalizar(recuperado) == _normalizar(s),
            "power_match": _normalizar(cls.veronese_forward(recuperado, d)) == _normalizar(t)
        }

    # --- Plücker ---------------------------------------------------------

    @classmethod
    def plucker_coordinates(cls, n, d):
        sep = "" if n < 10 else "_"
        return tuple("X" + sep.join(str(i + 1) for i in I) for I in Helpers.tuplas_crecientes(n, d))

    @classmethod
    def plucker_relations(cls, n, d):
        """Σ_k (−1)^k X(a∧b_k)·X(b_0∧…b̂_k…∧b_d) para a de longitud d−1 y b de longitud d+1"""
        if not 1 <= d <= n:
            raise InputError("Plücker requiere 1 ≤ d ≤ n")
        nombres = cls.plucker_coordinates(n, d)
        X = {I: Symbol(c) for I, c in zip(Helpers.tuplas_crecientes(n, d), nombres)}

        def coordenada(tupla):
            signo, I = Helpers.signo_ordenar(tupla)
            return signo * X[I] if signo else Integer(0)

        cuadricas = []
        for a in Helpers.tuplas_crecientes(n, d - 1):
            for b in Helpers.tuplas_crecientes(n, d + 1):
                cuadricas.append(sum((-1) ** k * coordenada(a + (b[k],)) * coordenada(b[:k] + b[k + 1:])
                                     for k in range(d + 1)))
        return QuadricSet(nombres, _deduplicar(cuadricas, list(X.values())))

    @classmethod
    def plucker_images(cls, n, d):
        z = [[Symbol(f"z{r}_{c}") for c in range(n)] for r in range(d)]
        generica = Matrix(z)
        imagenes = [generica.extract(list(range(d)), list(I)).det() for I in Helpers.tuplas_crecientes(n, d)]
        return imagenes, [s for fila in z for s in fila]

    @classmethod
    def plucker_forward(cls, t):
        """Menores d×d de t (las coordenadas de Λ^d t)"""
        T = Matrix(t).applyfunc(Rational)
        d, n = T.shape
        if d < 1 or d > n:
            raise InputError(f"t debe ser d×n con 1 ≤ d ≤ n, no {d}×{n}")
        if rank([list(T.row(i)) for i in range(d)], n, QQ_BASE) != d:
            raise InputError(f"t debe tener rango {d}", witness={"t": Helpers.matriz_json(T)})
        return [T.extract(list(range(d)), list(I)).det() for I in Helpers.tuplas_crecientes(n, d)]

    @classmethod
    def plucker_backward(cls, s, n, d):
        """
        t' = conúcleo de Λ^{d+1}E → E, b_0∧…∧b_d ↦ Σ_k (−1)^k s(b̂_k)·b_k.
        El complemento se toma sobre las columnas no pivote del escalonamiento.
        """
        s = _covector(s)
        base = Helpers.tuplas_crecientes(n, d)
        if len(s) != len(base):
            raise InputError(f"se esperaban {len(base)} coordenadas, no {len(s)}")
        relaciones = cls.plucker_relations(n, d)
        valores = relaciones.evaluate(s)
        if any(v != 0 for v in valores):
            malas = [q for q, v in zip(relaciones.as_strings(), valores) if v != 0]
            raise RelationError("s no satisface las relaciones de Plücker", witness={"violated": malas})
        valor = dict(zip(base, s))
        imagen = []
        for b in Helpers.tuplas_crecientes(n, d + 1):
            v = [Integer(0)] * n
            for k in range(d + 1):
                v[b[k]] += (-1) ** k * valor[b[:k] + b[k + 1:]]
            imagen.append(v)
        reducida, pivotes = rref([v for v in imagen if any(v)], n, QQ_BASE)
        libres = [j for j in range(n) if j not in pivotes]
        if len(libres) != d:
            raise RelationError(f"el conúcleo tiene dimensión {len(libres)}, no {d}")
        espacio = RelationSpan(n, reducida, QQ_BASE)
        columnas = [espacio.coordinates([Integer(1) if k == j else Integer(0) for k in range(n)]) for j in range(n)]
        return Matrix(d, n, lambda i, j: columnas[j][i])

    @classmethod
    def plucker_roundtrip(cls, entrada, d=None, n=None):
        """Ida desde una matriz de rango d (lista de filas) o vuelta desde un covector sobre Λ^d"""
        if d is None:
            t = Matrix(entrada).applyfunc(Rational)
            d, n = t.shape
            s = cls.plucker_forward(t)
        else:
            t = None
            s = list(_covector(entrada))
        relaciones = cls.plucker_relations(n, d)
        t_prima = cls.plucker_backward(s, n, d)
        filas = [list(t_prima.row(i)) for i in range(d)]
        reporte = {
            "coordinates": dict(zip(relaciones.coordinates, [Helpers.a_json(x) for x in _normalizar(s)])),
            "satisfies": relaciones.satisfied_by(s),
            "t": Helpers.matriz_json(t_prima),
            "rank": rank(filas, n, QQ_BASE),
            "minors_match": _normalizar(cls.plucker_forward(t_prima)) == _normalizar(s)
        }
        if t is not None:
            juntas = [list(t.row(i)) for i in range(d)] + filas
            reporte["row_space_match"] = rank(juntas, n, QQ_BASE) == d
        return reporte

    # --- discreción esencial ---------------------------------------------

    @classmethod
    def essential_discreteness_check(cls, s, s_prima):
        """
        Dos cocientes de recta s, s' son el mismo punto si existe c con s' = c·s;
        tal comparación, si existe, es única e invertible.
        """
        s, s_prima = _covector(s), _covector(s_prima)
        if len(s) != len(s_prima):
            raise InputError("los covectores deben tener la misma longitud")
        columna = [[x] for x in s]
        c = solve(columna, 1, list(s_prima), QQ_BASE)
        unica = not kernel(columna, 1, QQ_BASE)
        return {
            "same_point": c is not None,
            "comparison": Helpers.a_json(c[0]) if c is not None else None,
            "unique": unica,
            "invertible": c is not None and c[0] != 0,
            "same_pattern": [x == 0 for x in s] == [x == 0 for x in s_prima]
        }

    # --- Rees ------------------------------------------------------------

    @classmethod
    def rees_presentation(cls, cota):
        """
        ℚ[s,t][U,V] → ⊕ I^n (U ↦ s, V ↦ t) para I = (s,t): en cada bigrado
        (i, n) el núcleo coincide con (sV − tU)·(bigrado (i−1, n−1)).
        """
        cota = int(cota)
        if cota < 1:
            raise InputError("la cota de grado debe ser ≥ 1")
        s, t, U, V = (Symbol(c) for c in "stUV")
        relacion = s * V - t * U
        bigrados = []
        for i, n in product(range(cota + 1), repeat=2):
            fuente = [s ** a * t ** (i - a) * U ** c * V ** (n - c) for a in range(i + 1) for c in range(n + 1)]
            imagen = [expand(m.subs({U: s, V: t}, simultaneous=True)) for m in fuente]
            destino = [s ** a * t ** (i + n - a) for a in range(i + n + 1)]
            filas = [[Poly(q, s, t).coeff_monomial(m) for q in imagen] for m in destino]
            dim_nucleo = len(fuente) - rank(filas, len(fuente), QQ_BASE)
            multiplos = [expand(relacion * s ** a * t ** (i - 1 - a) * U ** c * V ** (n - 1 - c))
                         for a in range(i) for c in range(n)] if i and n else []
            en_nucleo = all(expand(q.subs({U: s, V: t}, simultaneous=True)) == 0 for q in multiplos)
            vectores = [cls._coeficientes(q, [s, t, U, V], fuente) for q in multiplos]
            rango = rank(vectores, len(fuente), QQ_BASE) if vectores else 0
            bigrados.append({
                "bidegree": [i, n],
                "kernel_dim": dim_nucleo,
                "ideal_dim": rango,
                "match": en_nucleo and rango == dim_nucleo
            })
        return {
            "generators": ["s", "t", "U", "V"],
            "relations": [str(relacion)],
            "bidegrees": bigrados,
            "certified": all(b["match"] for b in bigrados)
        }
