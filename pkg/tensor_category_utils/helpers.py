"""
Funciones auxiliares: bitácora y utilidades combinatorias
"""
import sys
from datetime import datetime
from itertools import combinations, combinations_with_replacement, product

from sympy import Rational, Integer, oo, sympify


class Log:
    """Bitácora humana con marca de tiempo; siempre por stderr"""

    @staticmethod
    def _emitir(prefijo, mensaje):
        marca = datetime.now().strftime('%Y-%m-%d %H:%M:%S')
        print(f"[{marca}] {prefijo}{mensaje}", file=sys.stderr)

    @staticmethod
    def info(mensaje):
        Log._emitir("", mensaje)

    @staticmethod
    def success(mensaje):
        Log._emitir("✅ ", mensaje)

    @staticmethod
    def warning(mensaje):
        Log._emitir("⚠️  ", mensaje)

    @staticmethod
    def error(mensaje):
        Log._emitir("❌ ", mensaje)


class Helpers:
    """Funciones auxiliares compartidas por las construcciones"""

    @staticmethod
    def signo_permutacion(perm):
        """Signo de una permutación en notación de una línea (conteo de inversiones)"""
        inversiones = 0
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    inversiones += 1
        return -1 if inversiones % 2 else 1

    @staticmethod
    def signo_ordenar(indices):
        """Signo y tupla ordenada; signo 0 si hay índices repetidos"""
        if len(set(indices)) < len(indices):
            return 0, tuple(sorted(indices))
        orden = sorted(range(len(indices)), key=lambda k: indices[k])
        return Helpers.signo_permutacion(orden), tuple(sorted(indices))

    @staticmethod
    def componer(tau, sigma):
        """(τσ)(i) = τ(σ(i)); permutaciones en notación de una línea"""
        return tuple(tau[s] for s in sigma)

    @staticmethod
    def inversa(sigma):
        inv = [0] * len(sigma)
        for i, s in enumerate(sigma):
            inv[s] = i
        return tuple(inv)

    @staticmethod
    def tuplas(dim, n):
        """Todas las tuplas de longitud n sobre range(dim) en orden lexicográfico"""
        return list(product(range(dim), repeat=n))

    @staticmethod
    def tuplas_crecientes(dim, n):
        """Tuplas estrictamente crecientes (base exterior)"""
        return list(combinations(range(dim), n))

    @staticmethod
    def tuplas_no_decrecientes(dim, n):
        """Tuplas débilmente crecientes (base simétrica)"""
        return list(combinations_with_replacement(range(dim), n))

    @staticmethod
    def tuplas_mixtas(dims):
        """Tuplas con la coordenada i en range(dims[i]), en orden de Kronecker"""
        return list(product(*(range(d) for d in dims)))

    @staticmethod
    def racional(valor):
        """Convierte a Rational exacto; acepta int, str 'p/q' y expresiones"""
        if isinstance(valor, str):
            return Rational(valor)
        return Rational(sympify(valor))

    @staticmethod
    def a_json(valor):
        """Representación JSON de valores exactos"""
        if valor is oo:
            return "inf"
        if isinstance(valor, bool):
            return valor
        if isinstance(valor, Integer):
            return int(valor)
        if isinstance(valor, Rational):
            return f"{valor.p}/{valor.q}"
        if isinstance(valor, dict):
            return {str(k): Helpers.a_json(v) for k, v in valor.items()}
        if isinstance(valor, (list, tuple)):
            return [Helpers.a_json(v) for v in valor]
        if isinstance(valor, (set, frozenset)):
            return sorted((Helpers.a_json(v) for v in valor), key=str)
        if isinstance(valor, (int, float, str)) or valor is None:
            return valor
        if hasattr(valor, 'describe'):
            return Helpers.a_json(valor.describe())
        expr = sympify(valor)
        if expr.is_Integer:
            return int(expr)
        if expr.is_Rational:
            return f"{expr.p}/{expr.q}"
        return str(expr)

    @staticmethod
    def matriz_json(matriz):
        """Matriz sympy como lista de filas JSON"""
        return [[Helpers.a_json(matriz[i, j]) for j in range(matriz.cols)]
                for i in range(matriz.rows)]
