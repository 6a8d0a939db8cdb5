"""
Álgebra lineal exacta sobre ℚ, 𝔽_p, ℤ y ℤ/n
"""
from dataclasses import dataclass
from functools import cached_property

from sympy import Integer, Rational, Matrix, eye, zeros, QQ, ZZ, GF
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.matrices import DomainMatrix

from .errors import CertificateError, RingError


@dataclass(frozen=True)
class Base:
    """Anillo de coeficientes de las coordenadas: 'QQ', 'GF' (p primo) o 'ZZ' (módulo 0 = ℤ, n = ℤ/n compuesto)"""
    kind: str
    modulus: int = 0

    @property
    def is_field(self):
        return self.kind in ('QQ', 'GF')

    @cached_property
    def domain(self):
        if self.kind == 'QQ':
            return QQ
        if self.kind == 'GF':
            return GF(self.modulus)
        return ZZ

    def normalize(self, valor):
        r = Rational(valor)
        if self.kind == 'QQ':
            return r
        if self.kind == 'GF':
            p = self.modulus
            if r.q % p == 0:
                raise RingError(f"{valor} no es un elemento de GF({p})")
            return Integer(r.p * pow(r.q, -1, p) % p)
        if r.q != 1:
            raise RingError(f"{valor} no es entero")
        if self.modulus:
            return Integer(r.p % self.modulus)
        return Integer(r.p)

    def to_dom(self, valor):
        r = self.normalize(valor)
        if self.kind == 'QQ':
            return QQ(r.p, r.q)
        return self.domain(int(r))

    def from_dom(self, elemento):
        if self.kind == 'QQ':
            return QQ.to_sympy(elemento)
        if self.kind == 'GF':
            return Integer(int(elemento) % self.modulus)
        return Integer(int(elemento))

    def matriz(self, filas, ncols):
        """DomainMatrix a partir de filas de valores sympy"""
        return DomainMatrix([[self.to_dom(x) for x in fila] for fila in filas],
                            (len(filas), ncols), self.domain)

    def __str__(self):
        if self.kind == 'ZZ' and self.modulus:
            return f"ZZ/{self.modulus}"
        if self.kind == 'GF':
            return f"GF({self.modulus})"
        return self.kind


QQ_BASE = Base('QQ')
ZZ_BASE = Base('ZZ')


def _columnas(filas, ncols):
    return [[fila[j] for fila in filas] for j in range(ncols)]


def smith(filas, nrows, ncols):
    """
    Descomposición de Smith de una matriz entera: (U, D, V) con U·A·V = D.

    D es diagonal con d_i | d_{i+1} y los ceros al final; U, V unimodulares.
    """
    if nrows == 0 or ncols == 0:
        return eye(nrows), zeros(nrows, ncols), eye(ncols)
    A = Matrix(nrows, ncols, lambda i, j: int(filas[i][j]))
    D, U, V = smith_normal_decomp(A, domain=ZZ)
    diagonal = [D[i, i] for i in range(min(nrows, ncols))]
    fuera = any(D[i, j] != 0 for i in range(nrows) for j in range(ncols) if i != j)
    cadena = all(diagonal[k + 1] % diagonal[k] == 0
                 for k in range(len(diagonal) - 1) if diagonal[k] != 0)
    ceros_al_final = all(d == 0 for d in diagonal[diagonal.index(0):]) if 0 in diagonal else True
    if fuera or not cadena or not ceros_al_final or U * A * V != D:
        raise CertificateError("la forma de Smith no verifica U·A·V = D", witness={"diagonal": [int(d) for d in diagonal]})
    if any(d < 0 for d in diagonal):
        signos = [(-1 if i < len(diagonal) and diagonal[i] < 0 else 1) for i in range(nrows)]
        U = Matrix(nrows, nrows, lambda i, j: signos[i] * U[i, j])
        D = Matrix(nrows, ncols, lambda i, j: signos[i] * D[i, j])
    return U, D, V


def _inversa_entera(U):
    n = U.rows
    if n == 0:
        return []
    dm = DomainMatrix.from_Matrix(U).convert_to(QQ).inv()
    return [[int(QQ.to_sympy(x)) for x in fila] for fila in dm.to_list()]


def rref(filas, ncols, base):
    """Forma escalonada reducida sobre un cuerpo: (filas no nulas, pivotes)"""
    if not base.is_field:
        raise RingError(f"rref requiere un cuerpo, no {base}")
    if not filas or ncols == 0:
        return [], ()
    reducida, pivotes = base.matriz(filas, ncols).rref()
    lista = reducida.to_list()
    return [[base.from_dom(x) for x in lista[i]] for i in range(len(pivotes))], tuple(pivotes)


def rank(filas, ncols, base):
    if base.is_field:
        return len(rref(filas, ncols, base)[1])
    if base.modulus:
        raise RingError("el rango no está definido sobre ℤ/n compuesto")
    _, D, _ = smith(filas, len(filas), ncols)
    return sum(1 for i in range(min(D.rows, D.cols)) if D[i, i] != 0)


def _con_modulo(filas, nrows, ncols, base):
    """[A | n·I] para resolver congruencias módulo n"""
    n = base.modulus
    extendida = [list(filas[i]) + [n if k == i else 0 for k in range(nrows)] for i in range(nrows)]
    return extendida, ncols + nrows


def kernel(filas, ncols, base):
    """Generadores de {x : A·x = 0} (módulo n si corresponde)"""
    nrows = len(filas)
    if ncols == 0:
        return []
    if nrows == 0:
        return [[Integer(1) if k == j else Integer(0) for k in range(ncols)] for j in range(ncols)]
    if base.is_field:
        reducida, pivotes = rref(filas, ncols, base)
        libres = [j for j in range(ncols) if j not in pivotes]
        base_kernel = []
        for f in libres:
            x = [Integer(0)] * ncols
            x[f] = Integer(1)
            for i, p in enumerate(pivotes):
                x[p] = base.normalize(-reducida[i][f])
            base_kernel.append(x)
        return base_kernel
    A, total = (_con_modulo(filas, nrows, ncols, base) if base.modulus
                else (filas, ncols))
    _, D, V = smith(A, nrows, total)
    r = sum(1 for i in range(min(D.rows, D.cols)) if D[i, i] != 0)
    generadores = []
    for j in range(r, total):
        x = [base.normalize(V[k, j]) for k in range(ncols)]
        if any(x):
            generadores.append(x)
    return generadores


def solve(filas, ncols, b, base):
    """Una solución de A·x = b, o None si no existe"""
    nrows = len(filas)
    if nrows == 0:
        return [Integer(0)] * ncols
    if base.is_field:
        aumentada = [list(filas[i]) + [b[i]] for i in range(nrows)]
        reducida, pivotes = rref(aumentada, ncols + 1, base)
        if ncols in pivotes:
            return None
        x = [Integer(0)] * ncols
        for i, p in enumerate(pivotes):
            x[p] = reducida[i][ncols]
        return x
    A, total = (_con_modulo(filas, nrows, ncols, base) if base.modulus
                else (filas, ncols))
    U, D, V = smith(A, nrows, total)
    c = [sum(int(U[i, k]) * int(b[k]) for k in range(nrows)) for i in range(nrows)]
    y = [0] * total
    for i in range(nrows):
        d = int(D[i, i]) if i < min(D.rows, D.cols) else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return [base.normalize(sum(int(V[k, j]) * y[j] for j in range(total))) for k in range(ncols)]


class RelationSpan:
    """
    Submódulo generado por vectores de relación dentro de base^ambient.

    Decide pertenencia, reduce vectores y describe el cociente: sobre un
    cuerpo por escalonamiento; sobre ℤ (o ℤ/n) por forma de Smith, con el
    cociente ≅ ⊕ ℤ/d_i.
    """

    def __init__(self, ambient, gens, base):
        self.ambient = ambient
        self.base = base
        generadores = [[base.normalize(x) for x in g] for g in gens]
        generadores = [g for g in generadores if any(g)]
        if base.kind == 'ZZ' and base.modulus:
            generadores += [[Integer(base.modulus) if k == j else Integer(0) for k in range(ambient)]
                            for j in range(ambient)]
        self.gens = generadores
        if base.is_field:
            self._filas, self._pivotes = rref(generadores, ambient, base)
            self._filas_dom = [[base.to_dom(x) for x in fila] for fila in self._filas]
            self._libres = [j for j in range(ambient) if j not in self._pivotes]
        else:
            U, D, _ = smith(_columnas(generadores, ambient), ambient, len(generadores))
            self._u = [[int(U[i, k]) for k in range(ambient)] for i in range(ambient)]
            self._uinv = _inversa_entera(U)
            self._d = [int(D[i, i]) if i < min(D.rows, D.cols) else 0 for i in range(ambient)]
            self._libres = [i for i in range(ambient) if self._d[i] != 1]

    def _reducir_dom(self, v):
        K = self.base.domain
        w = [self.base.to_dom(x) for x in v]
        for fila, p in zip(self._filas_dom, self._pivotes):
            c = w[p]
            if c != K.zero:
                w = [a - c * f for a, f in zip(w, fila)]
        return w

    def reduce(self, v):
        """Representante canónico de v módulo el submódulo (solo sobre cuerpos)"""
        if not self.base.is_field:
            raise RingError("reduce solo está definido sobre cuerpos")
        return [self.base.from_dom(x) for x in self._reducir_dom(v)]

    def _u_por(self, v):
        return [sum(fila[k] * int(v[k]) for k in range(self.ambient)) for fila in self._u]

    def contains(self, v):
        if self.base.is_field:
            K = self.base.domain
            return all(x == K.zero for x in self._reducir_dom(v))
        w = self._u_por(v)
        return all((w[i] == 0) if self._d[i] == 0 else (w[i] % self._d[i] == 0)
                   for i in range(self.ambient))

    @property
    def moduli(self):
        """Órdenes de los sumandos cíclicos del cociente (0 = libre)"""
        if self.base.is_field:
            return [0] * len(self._libres)
        return [self._d[i] for i in self._libres]

    @property
    def dimension(self):
        return len(self._libres)

    def coordinates(self, v):
        """Coordenadas de v en el cociente, en la base de `section`"""
        if self.base.is_field:
            w = self._reducir_dom(v)
            return [self.base.from_dom(w[j]) for j in self._libres]
        w = self._u_por(v)
        coords = []
        for i in self._libres:
            d = self._d[i]
            coords.append(Integer(w[i] % d) if d else Integer(w[i]))
        return coords

    def section(self, k):
        """Vector ambiente que representa el k-ésimo generador del cociente"""
        if self.base.is_field:
            j = self._libres[k]
            return [Integer(1) if i == j else Integer(0) for i in range(self.ambient)]
        i = self._libres[k]
        return [self.base.normalize(self._uinv[r][i]) for r in range(self.ambient)]
