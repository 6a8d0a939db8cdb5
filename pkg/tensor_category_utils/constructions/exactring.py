"""
Anillos exactos: ℤ, ℚ, ℤ/n y cocientes polinomiales con base de Gröbner
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd

from sympy import (Integer, Rational, Symbol, Poly, Matrix, QQ, groebner, reduced, factor_list,
                   diff, expand, factorint, isprime, sympify)
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor
from sympy.polys.orderings import grevlex

from ..errors import RingError, ParseError, ModuleError, CertificateError
from ..linalg import Base, rank, solve

TRANSFORMACIONES = standard_transformations + (convert_xor,)
ORDENES = ('grevlex', 'grlex', 'lex')


@dataclass(frozen=True)
class RingDescriptor:
    """
    Anillo conmutativo computable.

    kind: 'ZZ', 'QQ', 'ZZ/n' o 'POLY'. Para 'POLY' el cociente
    k[variables]/(generators) guarda su base de Gröbner reducida (grevlex)
    y `modulus` es la característica de k (0 para ℚ).
    """
    kind: str
    modulus: int = 0
    variables: tuple = ()
    generators: tuple = ()
    gb: tuple = ()

    @cached_property
    def symbols(self):
        return tuple(Symbol(v) for v in self.variables)

    @cached_property
    def base(self):
        if self.kind == 'QQ':
            return Base('QQ')
        if self.kind == 'ZZ':
            return Base('ZZ')
        if self.kind == 'ZZ/n':
            return Base('GF', self.modulus) if isprime(self.modulus) else Base('ZZ', self.modulus)
        return Base('GF', self.modulus) if self.modulus else Base('QQ')

    @property
    def characteristic(self):
        return 0 if self.kind in ('ZZ', 'QQ') else self.modulus

    @property
    def is_field(self):
        if self.kind == 'QQ':
            return True
        if self.kind == 'ZZ/n':
            return isprime(self.modulus)
        return self.kind == 'POLY' and not self.variables

    @property
    def two_invertible(self):
        if self.kind == 'ZZ':
            return False
        if self.kind == 'QQ':
            return True
        return self.characteristic % 2 == 1 if self.characteristic else True

    def _opciones(self):
        return {'modulus': self.modulus} if self.modulus else {'domain': QQ}

    # --- base monomial ---------------------------------------------------

    @cached_property
    def _lideres(self):
        return [Poly(g, *self.symbols, **self._opciones()).monoms(order='grevlex')[0]
                for g in self.gb]

    @property
    def is_finite_dimensional(self):
        if self.kind != 'POLY':
            return True
        n = len(self.variables)
        puros = set()
        for m in self._lideres:
            soporte = [i for i in range(n) if m[i] > 0]
            if len(soporte) == 1:
                puros.add(soporte[0])
        return len(puros) == n

    @cached_property
    def basis(self):
        """Monomios estándar (exponentes), ordenados por grevlex con 1 primero"""
        if self.kind != 'POLY':
            return [()]
        if not self.is_finite_dimensional:
            raise ModuleError(f"{self.label} no es de dimensión finita sobre su cuerpo base")
        n = len(self.variables)
        cotas = [0] * n
        for m in self._lideres:
            soporte = [i for i in range(n) if m[i] > 0]
            if len(soporte) == 1:
                i = soporte[0]
                cotas[i] = m[i] if cotas[i] == 0 else min(cotas[i], m[i])
        estandar = []
        for e in product(*[range(c) for c in cotas]):
            if not any(all(e[i] >= m[i] for i in range(n)) for m in self._lideres):
                estandar.append(tuple(e))
        return sorted(estandar, key=grevlex)

    @cached_property
    def _indice(self):
        return {e: i for i, e in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def monomial(self, exponentes):
        resultado = Integer(1)
        for s, k in zip(self.symbols, exponentes):
            resultado *= s ** k
        return resultado

    @cached_property
    def basis_exprs(self):
        return [self.monomial(e) for e in self.basis]

    # --- elementos -------------------------------------------------------

    def _canonico(self, expr):
        """Forma expandida con coeficientes normalizados (sin reducir)"""
        if not self.symbols:
            return expr
        poly = Poly(expr, *self.symbols, domain=QQ)
        if not self.modulus:
            return poly.as_expr()
        return sum((self.base.normalize(c) * self.monomial(m)
                    for m, c in poly.terms()), Integer(0))

    def element(self, valor):
        """Convierte int, Rational, str o expresión en la forma normal del anillo"""
        if isinstance(valor, str):
            try:
                expr = parse_expr(valor, local_dict={v: s for v, s in zip(self.variables, self.symbols)},
                                  transformations=TRANSFORMACIONES)
            except (SyntaxError, TypeError, ValueError) as e:
                raise ParseError(f"polinomio mal formado: {valor!r}", witness={"literal": valor}) from e
        else:
            expr = sympify(valor)
        return self.normalize(expr)

    def normalize(self, expr):
        expr = sympify(expr)
        extra = expr.free_symbols - set(self.symbols)
        if extra:
            raise RingError(f"variables desconocidas {sorted(map(str, extra))} en {self.label}")
        if self.kind != 'POLY':
            if not expr.is_Rational:
                raise RingError(f"{expr} no es un escalar de {self.label}")
            return self.base.normalize(expr)
        if not self.symbols:
            return self.base.normalize(expr)
        expr = self._canonico(expand(expr))
        if not self.gb:
            return expr
        _, resto = reduced(expr, list(self.gb), *self.symbols,
                           order='grevlex', **self._opciones())
        return self._canonico(resto)

    def coords(self, elem):
        """Coordenadas sobre el cuerpo base en la base de monomios estándar"""
        if self.kind != 'POLY':
            return [self.base.normalize(elem)]
        nf = self.normalize(elem)
        vector = [Integer(0)] * self.dim
        if not self.symbols:
            vector[0] = nf
            return vector
        for m, c in Poly(nf, *self.symbols, **self._opciones()).terms():
            if m not in self._indice:
                raise ModuleError(f"{nf} no está en el espacio de monomios estándar de {self.label}")
            vector[self._indice[m]] = self.base.normalize(c)
        return vector

    def from_coords(self, vector):
        return self.normalize(sum((Rational(c) * b for c, b in zip(vector, self.basis_exprs)), Integer(0)))

    @cached_property
    def _tabla(self):
        """tabla[j][k] = coords(b_j·b_k)"""
        if self.kind != 'POLY':
            return [[[Integer(1)]]]
        return [[self.coords(bj * bk) for bk in self.basis_exprs] for bj in self.basis_exprs]

    def mult_matrix(self, elem):
        """Matriz (dim × dim) de la multiplicación por elem sobre la base"""
        if self.kind != 'POLY':
            return [[self.base.normalize(elem)]]
        c = self.coords(elem)
        n = self.dim
        return [[self.base.normalize(sum(c[j] * self._tabla[j][k][i] for j in range(n) if c[j]))
                 for k in range(n)] for i in range(n)]

    def is_zero(self, elem):
        return self.normalize(elem) == 0

    def is_unit(self, elem):
        x = self.normalize(elem)
        if self.kind == 'ZZ':
            return x in (1, -1)
        if self.kind == 'QQ':
            return x != 0
        if self.kind == 'ZZ/n':
            return gcd(int(x), self.modulus) == 1
        return rank(self.mult_matrix(x), self.dim, self.base) == self.dim

    def inverse(self, elem):
        x = self.normalize(elem)
        if not self.is_unit(x):
            raise RingError(f"{x} no es invertible en {self.label}")
        if self.kind in ('ZZ', 'QQ'):
            return Rational(1) / x
        if self.kind == 'ZZ/n':
            return Integer(pow(int(x), -1, self.modulus))
        y = solve(self.mult_matrix(x), self.dim, self.coords(1), self.base)
        return self.from_coords(y)

    @property
    def label(self):
        if self.kind in ('ZZ', 'QQ'):
            return self.kind
        if self.kind == 'ZZ/n':
            return f"ZZ/{self.modulus}"
        k = f"ZZ/{self.modulus}" if self.modulus else "QQ"
        gens = ", ".join(str(g).replace('**', '^') for g in self.generators)
        return f"{k}[{','.join(self.variables)}]/({gens})" if self.generators else f"{k}[{','.join(self.variables)}]"

    def __str__(self):
        return self.label


class ExactRing:
    """Construcción de anillos y operaciones polinomiales exactas"""

    @classmethod
    def integers(cls):
        return RingDescriptor('ZZ')

    @classmethod
    def rationals(cls):
        return RingDescriptor('QQ')

    @classmethod
    def integers_mod(cls, n):
        n = int(n)
        if n < 2:
            raise RingError(f"ZZ/n requiere n ≥ 2, se recibió {n}")
        return RingDescriptor('ZZ/n', n)

    @classmethod
    def poly_quotient(cls, variables, generators=(), modulus=0):
        """k[variables]/(generators) con k = ℚ (modulus 0) o 𝔽_p"""
        modulus = int(modulus)
        if modulus and not isprime(modulus):
            raise RingError(f"el cuerpo base debe ser ℚ o 𝔽_p con p primo, no ZZ/{modulus}")
        variables = tuple(str(v) for v in variables)
        if len(set(variables)) != len(variables):
            raise RingError(f"variables repetidas: {variables}")
        anillo = RingDescriptor('POLY', modulus, variables)
        gens = tuple(anillo._canonico(sympify(g) if not isinstance(g, str) else anillo.element(g))
                     for g in generators)
        coeficientes = cls.rationals() if not modulus else cls.integers_mod(modulus)
        gb = tuple(cls.groebner_basis(gens, variables, coeficientes))
        if gb == (Integer(1),):
            raise RingError("el ideal es todo el anillo; el cociente es el anillo cero")
        return RingDescriptor('POLY', modulus, variables, gens, gb)

    @classmethod
    def groebner_basis(cls, gens, variables, coefficients=None, order='grevlex'):
        """Base de Gröbner reducida sobre ℚ o 𝔽_p"""
        if coefficients is None:
            coefficients = cls.rationals()
        if order not in ORDENES:
            raise RingError(f"orden monomial desconocido: {order}")
        if coefficients.kind == 'POLY' or not coefficients.is_field:
            raise RingError(f"las bases de Gröbner requieren coeficientes en un cuerpo, no {coefficients.label}")
        simbolos = [Symbol(str(v)) for v in variables]
        polinomios = [sympify(g) for g in gens]
        polinomios = [g for g in polinomios if expand(g) != 0]
        if not polinomios:
            return []
        opciones = {'modulus': coefficients.modulus} if coefficients.kind == 'ZZ/n' else {'domain': QQ}
        if not simbolos:
            return [Integer(1)]
        G = groebner(polinomios, *simbolos, order=order, **opciones)
        if coefficients.kind != 'ZZ/n':
            return list(G.exprs)
        p = coefficients.modulus
        resultado = []
        for g in G.polys:
            expr = Integer(0)
            for m, c in g.terms():
                termino = Integer(int(c) % p)
                for s, k in zip(simbolos, m):
                    termino *= s ** k
                expr += termino
            resultado.append(expr)
        return resultado

    @classmethod
    def normal_form(cls, p, ring):
        """Representante canónico de p en el cociente"""
        if ring.kind != 'POLY':
            raise RingError(f"normal_form requiere un cociente polinomial, no {ring.label}")
        return ring.element(p)

    @classmethod
    def jacobian(cls, gens, variables, ring=None):
        """Matriz (i, j) = ∂gens_i/∂variables_j"""
        polinomios = [ring.element(g) if ring is not None and isinstance(g, str) else sympify(g)
                      for g in gens]
        if ring is not None:
            for v in variables:
                if str(v) not in ring.variables:
                    raise RingError(f"variable desconocida: {v}")
        simbolos = [Symbol(str(v)) for v in variables]
        J = Matrix(len(polinomios), len(simbolos), lambda i, j: expand(diff(polinomios[i], simbolos[j])))
        if ring is not None and ring.modulus:
            J = J.applyfunc(ring._canonico)
        return J

    @classmethod
    def minimal_polynomial(cls, elem, ring, t=Symbol('t')):
        """Polinomio mónico mínimo de la multiplicación por elem sobre el cuerpo base"""
        if ring.kind != 'POLY' or not ring.base.is_field:
            raise RingError(f"el polinomio mínimo requiere un álgebra sobre un cuerpo, no {ring.label}")
        potencias = [ring.coords(1)]
        actual = ring.normalize(1)
        while True:
            actual = ring.normalize(actual * elem)
            columnas = [[v[i] for v in potencias] for i in range(ring.dim)]
            a = solve(columnas, len(potencias), ring.coords(actual), ring.base)
            if a is not None:
                f = t ** len(potencias) - sum((c * t ** j for j, c in enumerate(a)), Integer(0))
                return expand(f)
            potencias.append(ring.coords(actual))

    @classmethod
    def residue_field(cls, ring, intentos=8):
        """
        Cociente R/m por un ideal maximal m.

        ℤ y ℤ/n se reducen al menor primo disponible. En un cociente
        polinomial de dimensión finita se añade al ideal un divisor propio
        del polinomio mínimo de algún elemento hasta que un elemento genera
        todo el cociente con polinomio mínimo irreducible. Las variables
        libres se especializan antes en un valor entero que no anule el cociente.
        """
        if ring.kind == 'ZZ':
            return cls.integers_mod(2)
        if ring.kind == 'ZZ/n':
            return cls.integers_mod(min(factorint(ring.modulus)))
        if ring.kind == 'QQ' or not ring.variables:
            return ring
        actual = ring
        while not actual.is_finite_dimensional:
            actual = cls._especializar(actual, intentos)
        t = Symbol('t')
        while actual.dim > 1:
            n = len(actual.variables)
            candidatos = list(actual.symbols) + [
                sum((c ** j * s for j, s in enumerate(actual.symbols)), Integer(0))
                for c in range(2, intentos + 2)]
            siguiente = None
            for e in candidatos:
                f = cls.minimal_polynomial(e, actual, t)
                opciones = {'modulus': actual.modulus} if actual.modulus else {}
                _, factores = factor_list(f, t, **opciones)
                if len(factores) == 1 and factores[0][1] == 1:
                    if Poly(f, t).degree() == actual.dim:
                        return actual
                    continue
                divisor = factores[0][0].subs(t, e)
                siguiente = cls.poly_quotient(actual.variables, actual.generators + (expand(divisor),),
                                              actual.modulus)
                break
            if siguiente is None:
                raise CertificateError(f"no se encontró un elemento primitivo en {actual.label}",
                                       witness={"ring": actual.label, "variables": n})
            actual = siguiente
        return actual

    @classmethod
    def _especializar(cls, ring, intentos):
        n = len(ring.variables)
        puras = set()
        for m in ring._lideres:
            soporte = [i for i in range(n) if m[i] > 0]
            if len(soporte) == 1:
                puras.add(soporte[0])
        i = min(set(range(n)) - puras)
        for c in range(intentos):
            try:
                return cls.poly_quotient(ring.variables, ring.generators + (ring.symbols[i] - c,),
                                         ring.modulus)
            except RingError:
                continue
        raise CertificateError(f"no se pudo especializar {ring.variables[i]} en {ring.label}",
                               witness={"ring": ring.label, "variable": ring.variables[i]})
