"""
Cuantales: ideales de ℤ con su espectro, cuantales finitos, [0,1] diádico y
la localización de ½-sucesiones en ½.
"""
import random
from dataclasses import dataclass
from math import gcd

from sympy import Rational, Integer, oo, isprime, primerange

from ..config import Config
from ..errors import InputError, CertificateError
from ..helpers import Helpers


# --- ideales de ℤ -----------------------------------------------------------

@dataclass(frozen=True)
class IdealZ:
    """El ideal (n) de ℤ, con n ≥ 0 canónico"""
    generator: int

    def __post_init__(self):
        object.__setattr__(self, 'generator', abs(int(self.generator)))

    def __add__(self, otro):
        return IdealZ(gcd(self.generator, otro.generator))

    def __mul__(self, otro):
        return IdealZ(self.generator * otro.generator)

    def __le__(self, otro):
        """(n) ⊆ (m) ⟺ m | n"""
        if otro.generator == 0:
            return self.generator == 0
        return self.generator % otro.generator == 0

    def intersection(self, otro):
        if self.generator == 0 or otro.generator == 0:
            return IdealZ(0)
        return IdealZ(self.generator * otro.generator // gcd(self.generator, otro.generator))

    def residual(self, a):
        """[self : a] = (b / gcd(a, b)); [b : 0] = (1)"""
        if a.generator == 0:
            return IdealZ(1)
        return IdealZ(self.generator // gcd(a.generator, self.generator))

    @property
    def is_unit(self):
        return self.generator == 1

    def __str__(self):
        return f"({self.generator})"


# --- cuantales finitos ---------------------------------------------------

@dataclass(frozen=True)
class FiniteQuantale:
    """Retículo finito con tablas de supremo y producto"""
    name: str
    elements: tuple
    join_table: dict
    product_table: dict
    unit: object

    def join(self, a, b):
        return self.join_table[(a, b)]

    def product(self, a, b):
        return self.product_table[(a, b)]

    def le(self, a, b):
        return self.join(a, b) == b

    @property
    def bottom(self):
        for x in self.elements:
            if all(self.le(x, y) for y in self.elements):
                return x
        raise CertificateError(f"{self.name} no tiene mínimo")

    def residual(self, b, a):
        """Supremo de {z : z·a ≤ b}, verificado como máximo"""
        total = self.bottom
        for z in self.elements:
            if self.le(self.product(z, a), b):
                total = self.join(total, z)
        if not self.le(self.product(total, a), b):
            raise CertificateError(f"[{b} : {a}] no existe en {self.name}")
        return total

    def axiom_witnesses(self):
        testigos = []
        E = self.elements
        for a in E:
            if self.product(self.unit, a) != a:
                testigos.append(f"unidad: 1·{a} ≠ {a}")
            if self.product(a, self.bottom) != self.bottom:
                testigos.append(f"{a}·⊥ ≠ ⊥")
        for a in E:
            for b in E:
                if self.product(a, b) != self.product(b, a):
                    testigos.append(f"{a}·{b} ≠ {b}·{a}")
                if self.join(a, b) != self.join(b, a):
                    testigos.append(f"{a}∨{b} ≠ {b}∨{a}")
                for c in E:
                    if self.product(a, self.join(b, c)) != self.join(self.product(a, b), self.product(a, c)):
                        testigos.append(f"{a}·({b}∨{c}) ≠ {a}·{b} ∨ {a}·{c}")
                    if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)):
                        testigos.append(f"producto no asociativo en ({a}, {b}, {c})")
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c)):
                        testigos.append(f"supremo no asociativo en ({a}, {b}, {c})")
        return testigos

    def adjunction_witnesses(self):
        """z·a ≤ b ⟺ z ≤ [b : a]"""
        testigos = []
        for a in self.elements:
            for b in self.elements:
                r = self.residual(b, a)
                for z in self.elements:
                    if self.le(self.product(z, a), b) != self.le(z, r):
                        testigos.append([z, a, b])
        return testigos

    @classmethod
    def chain3(cls):
        """0 < ½ < 1 con producto min"""
        E = (Rational(0), Rational(1, 2), Rational(1))
        return cls('chain3', E, {(a, b): max(a, b) for a in E for b in E},
                   {(a, b): min(a, b) for a in E for b in E}, Rational(1))

    @classmethod
    def divisors(cls, n=12):
        """Ideales de ℤ/n indexados por los divisores d | n"""
        E = tuple(d for d in range(1, n + 1) if n % d == 0)
        return cls(f"ideals(ZZ/{n})", E,
                   {(a, b): gcd(a, b) for a in E for b in E},
                   {(a, b): gcd(a * b, n) for a in E for b in E}, 1)

    def describe(self):
        return {"name": self.name, "elements": [Helpers.a_json(x) for x in self.elements]}


# --- [0,1] diádico ------------------------------------------------------

def _diadico(valor, tope=1):
    r = Rational(valor)
    q = r.q
    if q & (q - 1) or r < 0 or (tope is not None and r > tope):
        raise InputError(f"{valor} no es un racional diádico en [0, {tope}]")
    return r


class DyadicUnit:
    """
    [0,1] diádico con producto y máximo. El residuo min(b/a, 1) se toma en
    [0,1] ∩ ℚ: sale de los diádicos cuando a no es potencia de 2 (por
    ejemplo [¼ : ¾] = ⅓).
    """

    @staticmethod
    def element(valor):
        return _diadico(valor)

    @staticmethod
    def product(a, b):
        return _diadico(a) * _diadico(b)

    @staticmethod
    def join(a, b):
        return max(_diadico(a), _diadico(b))

    @staticmethod
    def residual(b, a):
        a, b = _diadico(a), _diadico(b)
        if a == 0:
            return Rational(1)
        return min(b / a, Rational(1))


# --- ½-sucesiones ---------------------------------------------------------

CABEZAS = ('decay', 'saturate', 'zero')
COLAS = ('constant', 'halving')


def _por(v, w):
    """Producto en [0, ∞] con ∞·0 = 0"""
    if v == 0 or w == 0:
        return Rational(0)
    if v == oo or w == oo:
        return oo
    return v * w


@dataclass(frozen=True)
class HalfSequence:
    """
    Sucesión (t_n) en [0,1] con t_n ≤ 2·t_{n+1}, dada por una ventana
    contigua n0..n1 y leyes fuera de ella.

    Cabeza (n < n0): 'decay' t_n = t_{n0}·2^{n−n0}, 'saturate'
    t_n = min(t_{n0}·2^{n0−n}, 1), 'zero' t_n = 0.
    Cola (n > n1): 'constant' t_n = t_{n1}, 'halving' t_n = t_{n1}·2^{n1−n}.
    """
    start: int
    values: tuple
    head: str = 'decay'
    tail: str = 'constant'

    @property
    def end(self):
        return self.start + len(self.values) - 1

    @property
    def horizon(self):
        return self.end

    def value(self, n):
        if self.start <= n <= self.end:
            return self.values[n - self.start]
        if n < self.start:
            x = self.values[0]
            if self.head == 'zero':
                return Rational(0)
            if self.head == 'decay':
                return x * Rational(2) ** (n - self.start)
            return min(x * Rational(2) ** (self.start - n), Rational(1))
        x = self.values[-1]
        if self.tail == 'constant':
            return x
        return x * Rational(2) ** (self.end - n)

    @property
    def is_zero(self):
        return all(x == 0 for x in self.values)

    @property
    def growing(self):
        """Cola constante no nula: 2^n·t_n → ∞"""
        return self.tail == 'constant' and self.values[-1] != 0

    def saturation_steps(self):
        """Pasos hasta que una cabeza saturante alcanza 1"""
        if self.head != 'saturate' or self.values[0] == 0:
            return 0
        x, k = self.values[0], 0
        while x * 2 ** k < 1:
            k += 1
        return k

    def window(self):
        return {self.start + i: x for i, x in enumerate(self.values)}

    def describe(self):
        return {
            "window": {str(n): Helpers.a_json(x) for n, x in self.window().items()},
            "head": self.head,
            "tail": self.tail
        }


@dataclass(frozen=True)
class SupSequence:
    left: object
    right: object

    def value(self, n):
        return max(self.left.value(n), self.right.value(n))

    @property
    def horizon(self):
        return max(self.left.horizon, self.right.horizon)

    @property
    def growing(self):
        return self.left.growing or self.right.growing

    @property
    def is_zero(self):
        return self.left.is_zero and self.right.is_zero


@dataclass(frozen=True)
class ConvolutionSequence:
    """(M·N)_n = sup_{p+q=n} t_p·s_q"""
    left: HalfSequence
    right: HalfSequence

    def value(self, n):
        M, N = self.left, self.right
        margen = 2 + max(M.saturation_steps(), N.saturation_steps())
        bajo = min(M.start, n - N.end) - margen
        alto = max(M.end, n - N.start) + margen
        return max(M.value(p) * N.value(n - p) for p in range(bajo, alto + 1))

    @property
    def horizon(self):
        return self.left.end + self.right.end + 1

    @property
    def growing(self):
        M, N = self.left, self.right
        return (M.growing and not N.is_zero) or (N.growing and not M.is_zero)

    @property
    def is_zero(self):
        return self.left.is_zero or self.right.is_zero


class Quantale:
    """Operaciones de cuantales y la localización de ½-sucesiones"""

    # --- ideales y espectro ----------------------------------------------

    @classmethod
    def ideal(cls, n):
        return IdealZ(n)

    @classmethod
    def ideal_sum_product(cls, I, J):
        return I + J, I * J

    @classmethod
    def residual(cls, b, a, quantale=None):
        if isinstance(b, IdealZ):
            return b.residual(a)
        if quantale is not None:
            return quantale.residual(b, a)
        return DyadicUnit.residual(b, a)

    @classmethod
    def is_prime(cls, I):
        """Decisión por factorización: (0) y (p) con p primo"""
        n = I.generator
        return n == 0 or isprime(n)

    @classmethod
    def prime_oracle(cls, I, cota=None):
        """
        Cuantificación directa: I ≠ (1) y para todo (a)·(b) ⊆ I con
        a, b ≤ cota se tiene (a) ⊆ I o (b) ⊆ I. Devuelve (decisión, testigo).
        """
        if I.is_unit:
            return False, None
        cota = cota or max(I.generator, 2)
        for a in range(1, cota + 1):
            for b in range(a, cota + 1):
                A, B = IdealZ(a), IdealZ(b)
                if A * B <= I and not (A <= I or B <= I):
                    return False, [str(A), str(B)]
        return True, None

    @classmethod
    def spectrum(cls, max_prime=None):
        """(0) y los (p) con p ≤ max_prime"""
        max_prime = max_prime or Config.MAX_PRIME
        return [IdealZ(0)] + [IdealZ(p) for p in primerange(2, max_prime + 1)]

    @classmethod
    def vanishing(cls, I, max_prime=None):
        """V(I) = {p : I ⊆ p} dentro del espectro truncado"""
        return [p for p in cls.spectrum(max_prime) if I <= p]

    @classmethod
    def zariski_laws_check(cls, ideales, max_prime=None):
        """
        V(0) = todo, V(1) = ∅, V(I·J) = V(I) ∪ V(J) y V(I + J) = V(I) ∩ V(J)
        para todos los pares de la muestra.
        """
        espectro = {str(p) for p in cls.spectrum(max_prime)}

        def V(I):
            return {str(p) for p in cls.vanishing(I, max_prime)}

        fallas = []
        if V(IdealZ(0)) != espectro:
            fallas.append({"law": "V(0)"})
        if V(IdealZ(1)):
            fallas.append({"law": "V(1)"})
        for I in ideales:
            for J in ideales:
                if V(I * J) != V(I) | V(J):
                    fallas.append({"law": "product", "pair": [str(I), str(J)]})
                if V(I + J) != V(I) & V(J):
                    fallas.append({"law": "sum", "pair": [str(I), str(J)]})
        return {
            "spectrum": sorted(espectro, key=lambda s: int(s[1:-1])),
            "sample": [str(I) for I in ideales],
            "failures": fallas,
            "ok": not fallas
        }

    @classmethod
    def ideal_axioms_check(cls, muestras=None, seed=None, cota=60):
        """Leyes de cuantal y adjunción del residuo sobre ternas aleatorias de ideales"""
        muestras = muestras or Config.RESIDUAL_SAMPLES
        rng = random.Random(Config.SEED if seed is None else seed)
        fallas = []
        for _ in range(muestras):
            a, b, c, z = (IdealZ(rng.randint(0, cota)) for _ in range(4))
            if a * (b + c) != a * b + a * c:
                fallas.append({"law": "distributive", "triple": [str(a), str(b), str(c)]})
            if a * b != b * a or a * IdealZ(1) != a:
                fallas.append({"law": "unit/commutative", "pair": [str(a), str(b)]})
            r = b.residual(a)
            if (z * a <= b) != (z <= r):
                fallas.append({"law": "residual", "triple": [str(z), str(a), str(b)]})
        return {"samples": muestras, "failures": fallas, "ok": not fallas}

    @classmethod
    def prime_agreement(cls, cota=None):
        """Factorización contra cuantificación para todo n ≤ cota"""
        cota = cota or Config.PRIME_BOUND
        desacuerdos = []
        for n in range(cota + 1):
            decision = cls.is_prime(IdealZ(n))
            oraculo, _ = cls.prime_oracle(IdealZ(n))
            if decision != oraculo:
                desacuerdos.append(n)
        return {"bound": cota, "disagreements": desacuerdos, "ok": not desacuerdos}

    # --- ½-sucesiones ----------------------------------------------------

    @classmethod
    def half_sequence(cls, ventana, head='decay', tail='constant'):
        """ventana: dict n → valor diádico en [0,1], con índices contiguos"""
        if not ventana:
            raise InputError("la ventana de la ½-sucesión no puede ser vacía")
        if head not in CABEZAS or tail not in COLAS:
            raise InputError(f"leyes desconocidas: cabeza {head}, cola {tail}")
        indices = sorted(int(n) for n in ventana)
        if indices != list(range(indices[0], indices[-1] + 1)):
            raise InputError("la ventana debe ser contigua", witness={"degrees": indices})
        valores = tuple(_diadico(ventana[n] if n in ventana else ventana[str(n)]) for n in indices)
        M = HalfSequence(indices[0], valores, head, tail)
        testigo = cls.module_witness(M)
        if testigo is not None:
            raise InputError("t_n > 2·t_{n+1}: no es un E-módulo", witness={"degree": testigo})
        return M

    @classmethod
    def module_witness(cls, M):
        for n in range(M.start - 1, M.end + 1):
            if M.value(n) > 2 * M.value(n + 1):
                return n
        return None

    @classmethod
    def _recortada(cls, M):
        """Misma sucesión con la ventana recortada donde las leyes ya predicen los valores"""
        inicio, valores = M.start, list(M.values)
        head, tail = M.head, M.tail
        while len(valores) > 1:
            if HalfSequence(inicio + 1, tuple(valores[1:]), head, tail).value(inicio) != valores[0]:
                break
            valores.pop(0)
            inicio += 1
        while len(valores) > 1:
            if HalfSequence(inicio, tuple(valores[:-1]), head, tail).value(inicio + len(valores) - 1) != valores[-1]:
                break
            valores.pop()
        if valores[0] == 0:
            head = 'zero'
        if valores[-1] == 0:
            tail = 'constant'
        return HalfSequence(inicio, tuple(valores), head, tail)

    @classmethod
    def equal(cls, M, N):
        """
        Igualdad término a término. Dos grados consecutivos fuera de ambas
        ventanas bastan: dos leyes de cabeza (o de cola) distintas que
        coinciden en ellos son ambas nulas desde ahí.
        """
        bajo = min(M.start, N.start) - 2
        alto = max(M.end, N.end) + 2
        return all(M.value(n) == N.value(n) for n in range(bajo, alto + 1))

    @classmethod
    def fixed_sequence(cls, v):
        """t_n = min(2^{−n}·v, 1)"""
        if v == oo or v == 'inf':
            return HalfSequence(0, (Rational(1),), 'saturate', 'constant')
        v = _diadico(v, tope=None)
        if v == 0:
            return HalfSequence(0, (Rational(0),), 'zero', 'constant')
        k = 0
        while v > Rational(2) ** k:
            k += 1
        while v <= Rational(2) ** (k - 1):
            k -= 1
        return HalfSequence(k, (v / Rational(2) ** k,), 'saturate', 'halving')

    @classmethod
    def unit_sequence(cls):
        """Unidad del producto graduado: t_0 = 1, cola que se divide a la mitad, cabeza nula"""
        return HalfSequence(0, (Rational(1),), 'zero', 'halving')

    @classmethod
    def reflect(cls, M, p=1):
        """R_p(M)_n = [M_{n+p} : E^p] = min(2^p·t_{n+p}, 1)"""
        extension = max(p, 0) + 2
        inicio = M.start - p - extension
        fin = M.end - p + extension
        valores = tuple(min(Rational(2) ** p * M.value(n + p), Rational(1)) for n in range(inicio, fin + 1))
        return cls._recortada(HalfSequence(inicio, valores, M.head, M.tail))

    @classmethod
    def limit(cls, M):
        """v = lim 2^n·t_n, exacto a partir del horizonte de la cola"""
        if M.is_zero:
            return Rational(0)
        if M.growing:
            return oo
        h = M.horizon
        v = Rational(2) ** h * M.value(h)
        if Rational(2) ** (h + 1) * M.value(h + 1) != v:
            raise CertificateError("2^n·t_n no se estabiliza en el horizonte", witness={"horizon": h})
        return v

    @classmethod
    def localize_half(cls, M):
        """Valor v ∈ [0, ∞] y la sucesión fija R_ω(M)"""
        testigo = cls.module_witness(M)
        if testigo is not None:
            raise InputError("t_n > 2·t_{n+1}: no es un E-módulo", witness={"degree": testigo})
        v = cls.limit(M)
        fija = cls.fixed_sequence(v)
        return {
            "v": Helpers.a_json(v),
            "fixed": fija.describe(),
            "fixed_point": cls.equal(cls.reflect(fija, 1), fija),
            "already_fixed": cls.equal(cls.reflect(M, 1), M),
            "idempotent": cls.equal(cls.fixed_sequence(cls.limit(fija)), fija)
        }

    @classmethod
    def product(cls, M, N):
        return ConvolutionSequence(M, N)

    @classmethod
    def sup(cls, M, N):
        return SupSequence(M, N)

    @classmethod
    def localize_iso_check(cls, pares):
        """El valor v transporta producto, supremo y unidad a [0, ∞]"""
        resultados = []
        unidad = cls.unit_sequence()
        for v, w in pares:
            v = oo if v in (oo, 'inf') else _diadico(v, tope=None)
            w = oo if w in (oo, 'inf') else _diadico(w, tope=None)
            Fv, Fw = cls.fixed_sequence(v), cls.fixed_sequence(w)
            producto = cls.limit(cls.product(Fv, Fw))
            supremo = cls.limit(cls.sup(Fv, Fw))
            resultados.append({
                "v": Helpers.a_json(v),
                "w": Helpers.a_json(w),
                "product": Helpers.a_json(producto),
                "product_ok": producto == _por(v, w),
                "sup_ok": supremo == max(v, w),
                "unit_ok": cls.limit(cls.product(Fv, unidad)) == v
            })
        return {
            "unit_value": Helpers.a_json(cls.limit(unidad)),
            "pairs": resultados,
            "ok": cls.limit(unidad) == 1 and all(r["product_ok"] and r["sup_ok"] and r["unit_ok"] for r in resultados)
        }

    @classmethod
    def monotonicity_check(cls, M, N):
        """M ≤ M ∨ N punto a punto implica v(M) ≤ v(M ∨ N)"""
        return cls.limit(M) <= cls.limit(cls.sup(M, N))
