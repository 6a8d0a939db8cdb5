"""
Teorías algebraicas localmente finitas: mónadas derivadas del álgebra libre,
fortaleza y d, bihomomorfismos y el producto tensorial como coecualizador.
"""
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from ..config import Config
from ..errors import TheoryError, CertificateError


# --- monoides para M-conjuntos -------------------------------------------

@dataclass(frozen=True)
class Monoid:
    elements: tuple
    table: dict = field(hash=False, compare=False)
    unit: object = None

    def multiply(self, a, b):
        return self.table[(a, b)]

    @property
    def commutative(self):
        return all(self.table[(a, b)] == self.table[(b, a)] for a in self.elements for b in self.elements)

    def associativity_witness(self):
        for a, b, c in product(self.elements, repeat=3):
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                return [a, b, c]
        return None

    @classmethod
    def cyclic(cls, k):
        """ℤ/k aditivo"""
        elementos = tuple(range(k))
        return cls(elementos, {(a, b): (a + b) % k for a in elementos for b in elementos}, 0)

    @classmethod
    def left_zero(cls):
        """{e, a, b} con x·y = x para x ≠ e: asociativo y no conmutativo"""
        elementos = ('e', 'a', 'b')
        tabla = {(x, y): (y if x == 'e' else x) for x in elementos for y in elementos}
        return cls(elementos, tabla, 'e')


# --- teorías --------------------------------------------------------------

class Theory:
    """
    Teoría dada por su oráculo de álgebras libres: free(S), η, T(f), μ y las
    operaciones básicas sobre elementos libres. Las álgebras finitas se
    describen por las tablas de esas operaciones.
    """
    name = ''

    def free(self, S):
        raise NotImplementedError

    def free_size(self, k):
        raise NotImplementedError

    def eta(self, s):
        raise NotImplementedError

    def fmap(self, f, u):
        raise NotImplementedError

    def flatten(self, uu):
        raise NotImplementedError

    def operations(self):
        """Lista de (nombre, aridad)"""
        raise NotImplementedError

    def apply_free(self, nombre, argumentos):
        raise NotImplementedError

    def evaluate(self, algebra, u):
        """Acción a: T(carrier) → carrier a partir de las tablas de operaciones"""
        raise NotImplementedError

    def random_free(self, S, rng):
        raise NotImplementedError

    def axiom_witnesses(self, algebra):
        return []

    def label(self, u):
        return str(u)

    # derivados de la estructura de mónada

    def sigma(self, a, v):
        return self.fmap(lambda b: (a, b), v)

    def sigma_prime(self, u, b):
        return self.fmap(lambda a: (a, b), u)

    def d(self, u, v):
        """d = μ ∘ T(σ') ∘ σ"""
        return self.flatten(self.fmap(lambda b: self.sigma_prime(u, b), v))

    def d_alternate(self, u, v):
        """μ ∘ T(σ) ∘ σ'"""
        return self.flatten(self.fmap(lambda a: self.sigma(a, v), u))

    def describe(self):
        return {"theory": self.name}


class PointedTheory(Theory):
    """T(X) = X ⊔ {*}"""
    name = 'pointed'
    BASE = ('pt',)

    def free(self, S):
        return [self.BASE] + [('var', s) for s in S]

    def free_size(self, k):
        return k + 1

    def eta(self, s):
        return ('var', s)

    def fmap(self, f, u):
        return u if u == self.BASE else ('var', f(u[1]))

    def flatten(self, uu):
        return self.BASE if uu == self.BASE else uu[1]

    def operations(self):
        return [('base', 0)]

    def apply_free(self, nombre, argumentos):
        return self.BASE

    def evaluate(self, algebra, u):
        return algebra.op('base') if u == self.BASE else u[1]

    def random_free(self, S, rng):
        return rng.choice(self.free(S))

    def axiom_witnesses(self, algebra):
        return [] if algebra.op('base') in algebra.carrier else ["base ∉ carrier"]

    def label(self, u):
        return '*' if u == self.BASE else _texto(u[1])


class SupLatticeTheory(Theory):
    """Potencia finita: uniones arbitrarias (finitas) con mínimo"""
    name = 'supl'
    vacio = True

    def free(self, S):
        S = list(S)
        subconjuntos = [frozenset(S[i] for i in range(len(S)) if m >> i & 1) for m in range(2 ** len(S))]
        subconjuntos.sort(key=len)
        return [u for u in subconjuntos if u or self.vacio]

    def free_size(self, k):
        return 2 ** k if self.vacio else 2 ** k - 1

    def eta(self, s):
        return frozenset([s])

    def fmap(self, f, u):
        return frozenset(f(s) for s in u)

    def flatten(self, uu):
        return frozenset().union(*uu) if uu else frozenset()

    def operations(self):
        return [('bottom', 0), ('join', 2)]

    def apply_free(self, nombre, argumentos):
        if nombre == 'bottom':
            return frozenset()
        return argumentos[0] | argumentos[1]

    def evaluate(self, algebra, u):
        elementos = list(u)
        if not elementos:
            return algebra.op('bottom')
        total = elementos[0]
        for x in elementos[1:]:
            total = algebra.op('join', total, x)
        return total

    def random_free(self, S, rng):
        while True:
            u = frozenset(s for s in S if rng.random() < 0.5)
            if u or self.vacio:
                return u

    def axiom_witnesses(self, algebra):
        testigos = []
        C = algebra.carrier
        for x, y in product(C, repeat=2):
            if algebra.op('join', x, y) != algebra.op('join', y, x):
                testigos.append(f"join no conmutativo en ({_texto(x)}, {_texto(y)})")
        for x in C:
            if algebra.op('join', x, x) != x:
                testigos.append(f"join no idempotente en {_texto(x)}")
            if self.vacio and algebra.op('join', algebra.op('bottom'), x) != x:
                testigos.append(f"bottom no es neutro para {_texto(x)}")
        for x, y, z in product(C, repeat=3):
            if algebra.op('join', algebra.op('join', x, y), z) != algebra.op('join', x, algebra.op('join', y, z)):
                testigos.append(f"join no asociativo en ({_texto(x)}, {_texto(y)}, {_texto(z)})")
                break
        return testigos

    def label(self, u):
        return "{" + ",".join(sorted(_texto(s) for s in u)) + "}"


class SemilatticeTheory(SupLatticeTheory):
    """Uniones binarias sin mínimo: subconjuntos finitos no vacíos"""
    name = 'semilattice'
    vacio = False

    def operations(self):
        return [('join', 2)]


class ModNTheory(Theory):
    """ℤ/n-módulos: sumas formales con coeficientes en ℤ/n"""
    name = 'modn'

    def __init__(self, n):
        if int(n) < 2:
            raise TheoryError(f"modn requiere n ≥ 2, no {n}")
        self.n = int(n)

    def _desde(self, coeficientes):
        return frozenset((s, c % self.n) for s, c in coeficientes.items() if c % self.n)

    def free(self, S):
        S = list(S)
        return [self._desde(dict(zip(S, cs))) for cs in product(range(self.n), repeat=len(S))]

    def free_size(self, k):
        return self.n ** k

    def eta(self, s):
        return frozenset([(s, 1)])

    def fmap(self, f, u):
        total = {}
        for s, c in u:
            t = f(s)
            total[t] = total.get(t, 0) + c
        return self._desde(total)

    def flatten(self, uu):
        total = {}
        for u, c in uu:
            for s, k in u:
                total[s] = total.get(s, 0) + c * k
        return self._desde(total)

    def operations(self):
        return [('zero', 0), ('add', 2)]

    def apply_free(self, nombre, argumentos):
        if nombre == 'zero':
            return frozenset()
        total = dict(argumentos[0])
        for s, c in argumentos[1]:
            total[s] = total.get(s, 0) + c
        return self._desde(total)

    def evaluate(self, algebra, u):
        total = algebra.op('zero')
        for s, c in u:
            for _ in range(c):
                total = algebra.op('add', total, s)
        return total

    def random_free(self, S, rng):
        return self._desde({s: rng.randrange(self.n) for s in S})

    def axiom_witnesses(self, algebra):
        testigos = []
        C = algebra.carrier
        cero = algebra.op('zero')
        for x in C:
            if algebra.op('add', cero, x) != x:
                testigos.append(f"zero no es neutro para {_texto(x)}")
            total = cero
            for _ in range(self.n):
                total = algebra.op('add', total, x)
            if total != cero:
                testigos.append(f"{self.n}·{_texto(x)} ≠ 0")
        for x, y in product(C, repeat=2):
            if algebra.op('add', x, y) != algebra.op('add', y, x):
                testigos.append(f"add no conmutativa en ({_texto(x)}, {_texto(y)})")
        for x, y, z in product(C, repeat=3):
            if algebra.op('add', algebra.op('add', x, y), z) != algebra.op('add', x, algebra.op('add', y, z)):
                testigos.append(f"add no asociativa en ({_texto(x)}, {_texto(y)}, {_texto(z)})")
                break
        return testigos

    def label(self, u):
        if not u:
            return '0'
        return " + ".join(f"{c}·{_texto(s)}" for s, c in sorted(u, key=lambda par: _texto(par[0])))

    def describe(self):
        return {"theory": self.name, "n": self.n}


class MSetTheory(Theory):
    """M-conjuntos para un monoide finito M: T(X) = M × X"""
    name = 'mset'

    def __init__(self, monoide):
        testigo = monoide.associativity_witness()
        if testigo is not None:
            raise TheoryError("la tabla no es asociativa", witness={"triple": [str(x) for x in testigo]})
        self.monoid = monoide

    def free(self, S):
        return [(m, s) for m in self.monoid.elements for s in S]

    def free_size(self, k):
        return len(self.monoid.elements) * k

    def eta(self, s):
        return (self.monoid.unit, s)

    def fmap(self, f, u):
        return (u[0], f(u[1]))

    def flatten(self, uu):
        m, (n, s) = uu
        return (self.monoid.multiply(m, n), s)

    def operations(self):
        return [(f"act:{m}", 1) for m in self.monoid.elements]

    def apply_free(self, nombre, argumentos):
        m = self._elemento(nombre)
        n, s = argumentos[0]
        return (self.monoid.multiply(m, n), s)

    def _elemento(self, nombre):
        texto = nombre.split(':', 1)[1]
        for m in self.monoid.elements:
            if str(m) == texto:
                return m
        raise TheoryError(f"operación desconocida {nombre}")

    def evaluate(self, algebra, u):
        return algebra.op(f"act:{u[0]}", u[1])

    def random_free(self, S, rng):
        return (rng.choice(self.monoid.elements), rng.choice(list(S)))

    def axiom_witnesses(self, algebra):
        testigos = []
        e = self.monoid.unit
        for x in algebra.carrier:
            if algebra.op(f"act:{e}", x) != x:
                testigos.append(f"la unidad no actúa trivialmente sobre {_texto(x)}")
            for m, n in product(self.monoid.elements, repeat=2):
                izquierda = algebra.op(f"act:{m}", algebra.op(f"act:{n}", x))
                if izquierda != algebra.op(f"act:{self.monoid.multiply(m, n)}", x):
                    testigos.append(f"acción incompatible en ({m}, {n}, {_texto(x)})")
        return testigos

    def label(self, u):
        return f"{u[0]}·{_texto(u[1])}"

    def describe(self):
        return {"theory": self.name, "monoid": [str(m) for m in self.monoid.elements],
                "commutative": self.monoid.commutative}


def _texto(x):
    if x == PointedTheory.BASE:
        return '*'
    if isinstance(x, tuple) and len(x) == 2:
        if x[0] == 'var':
            return _texto(x[1])
        return f"({_texto(x[0])},{_texto(x[1])})"
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(_texto(s) for s in x)) + "}"
    return str(x)


# --- álgebras finitas y congruencias ------------------------------------

@dataclass
class FiniteAlgebra:
    """Álgebra finita descrita por las tablas de las operaciones de su teoría"""
    theory: Theory
    carrier: tuple
    tables: dict
    names: dict = None

    def op(self, nombre, *argumentos):
        try:
            return self.tables[nombre][tuple(argumentos)]
        except KeyError as e:
            raise TheoryError(f"tabla incompleta: {nombre}{tuple(_texto(a) for a in argumentos)}") from e

    def act(self, u):
        return self.theory.evaluate(self, u)

    def name_of(self, x):
        if self.names and x in self.names:
            return self.names[x]
        return _texto(x)

    @property
    def size(self):
        return len(self.carrier)

    def describe(self):
        return {
            **self.theory.describe(),
            "size": self.size,
            "carrier": [self.name_of(x) for x in self.carrier]
        }


class Congruence:
    """Partición por unión-búsqueda sobre un soporte finito"""

    def __init__(self, elementos):
        self.elementos = list(elementos)
        self.indice = {x: i for i, x in enumerate(self.elementos)}
        self.padre = list(range(len(self.elementos)))

    def find(self, x):
        i = self.indice[x]
        while self.padre[i] != i:
            self.padre[i] = self.padre[self.padre[i]]
            i = self.padre[i]
        return i

    def union(self, x, y):
        a, b = self.find(x), self.find(y)
        if a == b:
            return False
        if b < a:
            a, b = b, a
        self.padre[b] = a
        return True

    def representative(self, x):
        return self.elementos[self.find(x)]

    def representatives(self):
        return [x for i, x in enumerate(self.elementos) if self.find(x) == i]


@dataclass
class TensorResult:
    algebra: FiniteAlgebra
    universal: dict
    mode: str
    pairs: dict
    congruence: Congruence

    def describe(self):
        A = self.algebra
        return {
            "mode": self.mode,
            "size": A.size,
            "carrier": [A.name_of(x) for x in A.carrier],
            "universal": {f"{_texto(a)}⊗{_texto(b)}": A.name_of(t) for (a, b), t in self.universal.items()}
        }


class MonadKit:
    """Mónadas derivadas, bihomomorfismos y productos tensoriales de álgebras finitas"""

    @classmethod
    def theory(cls, nombre, n=None, monoid=None):
        if nombre == 'pointed':
            return PointedTheory()
        if nombre == 'supl':
            return SupLatticeTheory()
        if nombre == 'semilattice':
            return SemilatticeTheory()
        if nombre == 'modn':
            return ModNTheory(n if n is not None else 2)
        if nombre == 'mset':
            return MSetTheory(monoid if monoid is not None else Monoid.cyclic(2))
        raise TheoryError(f"teoría desconocida: {nombre}", witness={"known": list(Config.TEORIAS)})

    # --- construcción de álgebras ---------------------------------------

    @classmethod
    def algebra(cls, theory, carrier, operaciones, names=None):
        """
        Tablas: constante para aridad 0, dict x → y para aridad 1 y lista de
        filas (en el orden del soporte) o dict (x, y) → z para aridad 2.
        """
        carrier = tuple(carrier)
        tablas = {}
        for nombre, aridad in theory.operations():
            if nombre not in operaciones:
                raise TheoryError(f"falta la operación {nombre} de la teoría {theory.name}")
            valor = operaciones[nombre]
            if aridad == 0:
                tablas[nombre] = {(): valor}
            elif aridad == 1:
                tablas[nombre] = {(x,): valor[x] for x in carrier}
            elif isinstance(valor, dict):
                tablas[nombre] = {tuple(k): v for k, v in valor.items()}
            else:
                tablas[nombre] = {(x, y): valor[i][j] for i, x in enumerate(carrier) for j, y in enumerate(carrier)}
            faltantes = [x for x in tablas[nombre].values() if x not in carrier]
            if faltantes:
                raise TheoryError(f"la operación {nombre} sale del soporte", witness={"value": _texto(faltantes[0])})
        A = FiniteAlgebra(theory, carrier, tablas, names)
        testigos = theory.axiom_witnesses(A)
        if testigos:
            raise TheoryError(f"no es un álgebra de {theory.name}", witness={"violations": testigos[:5]})
        return A

    @classmethod
    def free_algebra(cls, theory, S):
        carrier = tuple(theory.free(S))
        tablas = {}
        for nombre, aridad in theory.operations():
            tablas[nombre] = {args: theory.apply_free(nombre, args) for args in product(carrier, repeat=aridad)}
        return FiniteAlgebra(theory, carrier, tablas, {x: theory.label(x) for x in carrier})

    @classmethod
    def cyclic_module(cls, theory, k):
        """ℤ/k como ℤ/n-módulo (k | n)"""
        if not isinstance(theory, ModNTheory) or theory.n % k:
            raise TheoryError(f"ℤ/{k} no es un ℤ/n-módulo para esta teoría")
        carrier = tuple(range(k))
        return cls.algebra(theory, carrier, {
            'zero': 0,
            'add': {(a, b): (a + b) % k for a in carrier for b in carrier}
        })

    @classmethod
    def pointed_set(cls, theory, k):
        """{*, p1, …, pk}"""
        carrier = ('*',) + tuple(f"p{i}" for i in range(1, k + 1))
        return cls.algebra(theory, carrier, {'base': '*'})

    @classmethod
    def standard_algebra(cls, theory, k):
        """Álgebra de referencia de tamaño k para la línea de comandos"""
        if isinstance(theory, PointedTheory):
            return cls.pointed_set(theory, k)
        if isinstance(theory, ModNTheory):
            return cls.cyclic_module(theory, k)
        return cls.free_algebra(theory, [f"x{i}" for i in range(1, k + 1)])

    # --- muestreo y leyes ----------------------------------------------

    @classmethod
    def _nivel(cls, theory, S, nivel, rng, limite):
        """Elementos de T^nivel(S): todos si caben en el límite, si no una muestra"""
        actual, exhaustivo = list(S), True
        for _ in range(nivel):
            if exhaustivo and theory.free_size(len(actual)) <= limite:
                actual = theory.free(actual)
            else:
                if not actual:
                    return [], exhaustivo
                base = actual
                actual = list({theory.random_free(base, rng) for _ in range(limite)})
                exhaustivo = False
        return actual, exhaustivo

    @classmethod
    def _pares(cls, X, Y, rng, limite):
        if len(X) * len(Y) <= limite:
            return list(product(X, Y)), True
        return [(rng.choice(X), rng.choice(Y)) for _ in range(limite)], False

    @classmethod
    def check_algebra(cls, A, limite=None, seed=None):
        """a∘η = id y a∘μ = a∘T(a), además de los axiomas de la teoría"""
        limite = limite or Config.MAX_EXHAUSTIVE
        rng = random.Random(Config.SEED if seed is None else seed)
        T = A.theory
        testigos = list(T.axiom_witnesses(A))
        for x in A.carrier:
            if A.act(T.eta(x)) != x:
                testigos.append(f"a∘η ≠ id en {A.name_of(x)}")
        dobles, _ = cls._nivel(T, A.carrier, 2, rng, limite)
        for w in dobles:
            if A.act(T.flatten(w)) != A.act(T.fmap(A.act, w)):
                testigos.append(f"a∘μ ≠ a∘T(a) en {T.label(w)}")
                break
        return testigos

    @classmethod
    def derived_strength_costrength_d(cls, theory, A, B):
        A, B = list(A), list(B)
        TA, TB = theory.free(A), theory.free(B)
        sigma = {f"{_texto(a)} | {theory.label(v)}": theory.label(theory.sigma(a, v)) for a in A for v in TB}
        sigma_prima = {f"{theory.label(u)} | {_texto(b)}": theory.label(theory.sigma_prime(u, b)) for u in TA for b in B}
        d, coinciden, testigo = {}, True, None
        for u, v in product(TA, TB):
            valor = theory.d(u, v)
            d[f"{theory.label(u)} | {theory.label(v)}"] = theory.label(valor)
            if coinciden and theory.d_alternate(u, v) != valor:
                coinciden, testigo = False, [theory.label(u), theory.label(v)]
        return {"sigma": sigma, "sigma_prime": sigma_prima, "d": d,
                "alternate_agrees": coinciden, "witness": testigo}

    @classmethod
    def check_monad_laws(cls, theory, max_size=None, limite=None, seed=None):
        """Unidad y asociatividad de μ, compatibilidad de d con η y μ, y simetría de d"""
        max_size = Config.MONAD_MAX_SIZE if max_size is None else max_size
        limite = limite or Config.MAX_EXHAUSTIVE
        rng = random.Random(Config.SEED if seed is None else seed)
        T = theory
        leyes = {nombre: {"checked": 0, "exhaustive": True, "witness": None}
                 for nombre in ("unit_left", "unit_right", "assoc", "d_unit", "d_mult", "symmetry")}

        def registrar(nombre, ok, exhaustivo, testigo):
            ley = leyes[nombre]
            ley["checked"] += 1
            ley["exhaustive"] = ley["exhaustive"] and exhaustivo
            if not ok and ley["witness"] is None:
                ley["witness"] = testigo

        for k in range(max_size + 1):
            S = tuple(range(k))
            simples, exhaustivo = cls._nivel(T, S, 1, rng, limite)
            for u in simples:
                registrar("unit_left", T.flatten(T.eta(u)) == u, exhaustivo, T.label(u))
                registrar("unit_right", T.flatten(T.fmap(T.eta, u)) == u, exhaustivo, T.label(u))
            triples, exhaustivo = cls._nivel(T, S, 3, rng, limite)
            for w in triples:
                ok = T.flatten(T.fmap(T.flatten, w)) == T.flatten(T.flatten(w))
                registrar("assoc", ok, exhaustivo, T.label(w))
        for k1, k2 in product(range(max_size + 1), repeat=2):
            A = tuple(range(k1))
            B = tuple(f"b{j}" for j in range(k2))
            for a, b in product(A, B):
                registrar("d_unit", T.d(T.eta(a), T.eta(b)) == T.eta((a, b)), True, f"({a},{b})")
            TA, ex_a = cls._nivel(T, A, 1, rng, limite)
            TB, ex_b = cls._nivel(T, B, 1, rng, limite)
            pares, ex_p = cls._pares(TA, TB, rng, limite)
            for u, v in pares:
                intercambio = T.fmap(lambda par: (par[1], par[0]), T.d(u, v))
                registrar("symmetry", intercambio == T.d(v, u), ex_a and ex_b and ex_p,
                          [T.label(u), T.label(v)])
            TTA, ex_a = cls._nivel(T, A, 2, rng, limite)
            TTB, ex_b = cls._nivel(T, B, 2, rng, limite)
            pares, ex_p = cls._pares(TTA, TTB, rng, limite)
            for U, V in pares:
                izquierda = T.flatten(T.fmap(lambda par: T.d(par[0], par[1]), T.d(U, V)))
                registrar("d_mult", izquierda == T.d(T.flatten(U), T.flatten(V)), ex_a and ex_b and ex_p,
                          [T.label(U), T.label(V)])
        fallas = [n for n, ley in leyes.items() if ley["witness"] is not None]
        return {**T.describe(), "max_size": max_size, "laws": leyes, "failed": fallas, "ok": not fallas}

    # --- homomorfismos ---------------------------------------------------

    @classmethod
    def is_hom(cls, g, A, C, limite=None, seed=None):
        limite = limite or Config.MAX_EXHAUSTIVE
        rng = random.Random(Config.SEED if seed is None else seed)
        elementos, _ = cls._nivel(A.theory, A.carrier, 1, rng, limite)
        return all(C.act(A.theory.fmap(lambda x: g[x], u)) == g[A.act(u)] for u in elementos)

    @classmethod
    def bihom_report(cls, f, A, B, C, limite=None, seed=None):
        """Criterio de un cuadrado c∘T(f)∘d = f∘(a⊗b) y homomorfismo en cada variable"""
        if not (A.theory is B.theory is C.theory or A.theory.describe() == B.theory.describe() == C.theory.describe()):
            raise TheoryError("las tres álgebras deben ser de la misma teoría")
        limite = limite or Config.MAX_EXHAUSTIVE
        rng = random.Random(Config.SEED if seed is None else seed)
        T = A.theory
        TA, _ = cls._nivel(T, A.carrier, 1, rng, limite)
        TB, _ = cls._nivel(T, B.carrier, 1, rng, limite)
        pares, _ = cls._pares(TA, TB, rng, limite)
        cuadrado, testigo = True, None
        for u, v in pares:
            if C.act(T.fmap(lambda par: f[par], T.d(u, v))) != f[(A.act(u), B.act(v))]:
                cuadrado, testigo = False, [T.label(u), T.label(v)]
                break
        por_variable = (all(C.act(T.fmap(lambda b: f[(a, b)], v)) == f[(a, B.act(v))] for a in A.carrier for v in TB)
                        and all(C.act(T.fmap(lambda a: f[(a, b)], u)) == f[(A.act(u), b)] for b in B.carrier for u in TA))
        return {"square": cuadrado, "per_variable": por_variable, "agree": cuadrado == por_variable, "witness": testigo}

    @classmethod
    def is_bihom(cls, f, A, B, C, limite=None):
        reporte = cls.bihom_report(f, A, B, C, limite)
        return reporte["square"] and reporte["per_variable"]

    @classmethod
    def generating_set(cls, A):
        """Generadores elegidos con avidez y una palabra en T(generadores) para cada elemento"""
        T = A.theory
        elegidos = []
        palabras = {}
        for u in T.free([]):
            palabras.setdefault(A.act(u), u)
        for x in A.carrier:
            if x in palabras:
                continue
            elegidos.append(x)
            palabras = {}
            for u in T.free(elegidos):
                palabras.setdefault(A.act(u), u)
        return elegidos, palabras

    @classmethod
    def hom_set(cls, A, C):
        """Todos los homomorfismos A → C, extendiendo asignaciones sobre generadores"""
        T = A.theory
        generadores, palabras = cls.generating_set(A)
        homs = []
        for valores in product(C.carrier, repeat=len(generadores)):
            asignacion = dict(zip(generadores, valores))
            g = {x: C.act(T.fmap(lambda s: asignacion[s], palabras[x])) for x in A.carrier}
            if cls.is_hom(g, A, C):
                homs.append(g)
        return homs

    @classmethod
    def bihom_set(cls, A, B, C):
        T = A.theory
        GA, palabras_a = cls.generating_set(A)
        GB, palabras_b = cls.generating_set(B)
        celdas = list(product(GA, GB))
        bihoms = []
        for valores in product(C.carrier, repeat=len(celdas)):
            asignacion = dict(zip(celdas, valores))
            f = {(a, b): C.act(T.fmap(lambda par: asignacion[par], T.d(palabras_a[a], palabras_b[b])))
                 for a in A.carrier for b in B.carrier}
            if cls.is_bihom(f, A, B, C):
                bihoms.append(f)
        return bihoms

    # --- producto tensorial -----------------------------------------------

    @classmethod
    def _cerrar(cls, theory, X, pares):
        """Menor congruencia sobre el álgebra libre X que contiene los pares"""
        congruencia = Congruence(X)
        unarias = [n for n, a in theory.operations() if a == 1]
        binarias = [n for n, a in theory.operations() if a == 2]
        pendientes = deque(pares)
        while pendientes:
            x, y = pendientes.popleft()
            if not congruencia.union(x, y):
                continue
            for op in unarias:
                pendientes.append((theory.apply_free(op, (x,)), theory.apply_free(op, (y,))))
            # las operaciones binarias de estas teorías son conmutativas
            for op in binarias:
                for c in X:
                    pendientes.append((theory.apply_free(op, (x, c)), theory.apply_free(op, (y, c))))
        return congruencia

    @classmethod
    def _cociente(cls, theory, X, congruencia):
        """Álgebra cociente con representantes canónicos; la buena definición se verifica"""
        clase = congruencia.representative
        carrier = tuple(congruencia.representatives())
        tablas = {}
        for nombre, aridad in theory.operations():
            tablas[nombre] = {args: clase(theory.apply_free(nombre, args)) for args in product(carrier, repeat=aridad)}
        for nombre, aridad in theory.operations():
            if aridad == 0:
                continue
            for x in X:
                r = clase(x)
                if r == x:
                    continue
                otros = list(product(carrier, repeat=aridad - 1))
                for resto in otros:
                    if clase(theory.apply_free(nombre, (x,) + resto)) != clase(theory.apply_free(nombre, (r,) + resto)):
                        raise CertificateError(f"la operación {nombre} no respeta la congruencia",
                                               witness={"element": theory.label(x)})
        nombres = {x: f"[{theory.label(x)}]" for x in carrier}
        return FiniteAlgebra(theory, carrier, tablas, nombres)

    @classmethod
    def tensor_modules(cls, A, B, mode='auto', limite=None):
        """
        A ⊗_T B como coecualizador de F(TA × TB) ⇉ F(A × B), o bien como
        F(G_A × G_B) módulo las relaciones de A y de B (modo 'generators').
        """
        T = A.theory
        if T.describe() != B.theory.describe():
            raise TheoryError("A y B deben ser álgebras de la misma teoría")
        limite = limite or Config.MAX_EXHAUSTIVE
        if mode == 'auto':
            directo = (T.free_size(A.size * B.size) <= Config.MAX_COEQUALIZER
                       and T.free_size(A.size) * T.free_size(B.size) <= limite)
            mode = 'coequalizer' if directo else 'generators'
        if mode == 'coequalizer':
            pares_base = {(a, b): (a, b) for a in A.carrier for b in B.carrier}
            X = T.free(list(pares_base))
            relaciones = [(T.d(u, v), T.eta((A.act(u), B.act(v))))
                          for u in T.free(A.carrier) for v in T.free(B.carrier)]
            congruencia = cls._cerrar(T, X, relaciones)
            Q = cls._cociente(T, X, congruencia)
            universal = {(a, b): congruencia.representative(T.eta((a, b))) for a in A.carrier for b in B.carrier}
        elif mode == 'generators':
            GA, palabras_a = cls.generating_set(A)
            GB, palabras_b = cls.generating_set(B)
            pares_base = {(g, h): (g, h) for g in GA for h in GB}
            X = T.free(list(pares_base))
            relaciones = []
            for u in T.free(GA):
                w = palabras_a[A.act(u)]
                if w != u:
                    for h in GB:
                        relaciones.append((T.fmap(lambda g: (g, h), u), T.fmap(lambda g: (g, h), w)))
            for v in T.free(GB):
                w = palabras_b[B.act(v)]
                if w != v:
                    for g in GA:
                        relaciones.append((T.fmap(lambda h: (g, h), v), T.fmap(lambda h: (g, h), w)))
            congruencia = cls._cerrar(T, X, relaciones)
            Q = cls._cociente(T, X, congruencia)
            universal = {(a, b): congruencia.representative(T.d(palabras_a[a], palabras_b[b]))
                         for a in A.carrier for b in B.carrier}
        else:
            raise TheoryError(f"modo de producto tensorial desconocido: {mode}")
        return TensorResult(Q, universal, mode, pares_base, congruencia)

    @classmethod
    def induced(cls, tensor, f, C):
        """f̄: A⊗B → C con f̄∘⊗ = f para un bihomomorfismo f"""
        T = tensor.algebra.theory
        inducida = {t: C.act(T.fmap(lambda p: f[tensor.pairs[p]], t)) for t in tensor.algebra.carrier}
        for x in tensor.congruence.elementos:
            if C.act(T.fmap(lambda p: f[tensor.pairs[p]], x)) != inducida[tensor.congruence.representative(x)]:
                raise CertificateError("f no es constante sobre las clases del producto tensorial",
                                       witness={"element": T.label(x)})
        if any(inducida[t] != f[par] for par, t in tensor.universal.items()):
            raise CertificateError("f̄∘⊗ ≠ f")
        return inducida

    @classmethod
    def verify_universal(cls, A, B, C, tensor=None):
        """|bihoms A×B → C| = |homs A⊗B → C| con la biyección f ↦ f̄"""
        tensor = tensor or cls.tensor_modules(A, B)
        bihoms = cls.bihom_set(A, B, C)
        homs = cls.hom_set(tensor.algebra, C)
        inducidas = []
        for f in bihoms:
            fbar = cls.induced(tensor, f, C)
            inducidas.append(fbar)
        todas_hom = all(cls.is_hom(fbar, tensor.algebra, C) for fbar in inducidas)
        claves = {tuple(sorted(((_texto(k), _texto(v)) for k, v in g.items()))) for g in homs}
        cubiertas = {tuple(sorted(((_texto(k), _texto(v)) for k, v in g.items()))) for g in inducidas}
        return {
            "bihoms": len(bihoms),
            "homs": len(homs),
            "induced_are_homs": todas_hom,
            "bijection": todas_hom and len(bihoms) == len(homs) and claves == cubiertas
        }

    @classmethod
    def tensor_is_bihom(cls, tensor, A, B):
        return cls.is_bihom(tensor.universal, A, B, tensor.algebra)

    # --- isomorfismos estructurales ---------------------------------------

    @classmethod
    def _inversas(cls, f, g, X, Y):
        return all(g[f[x]] == x for x in X.carrier) and all(f[g[y]] == y for y in Y.carrier)

    @classmethod
    def free_tensor_iso(cls, theory, X, Y):
        """F(X) ⊗ F(Y) ≅ F(X × Y)"""
        FX, FY = cls.free_algebra(theory, X), cls.free_algebra(theory, Y)
        FXY = cls.free_algebra(theory, [(x, y) for x in X for y in Y])
        tensor = cls.tensor_modules(FX, FY)
        psi = cls.induced(tensor, {(u, v): theory.d(u, v) for u in FX.carrier for v in FY.carrier}, FXY)
        generadores = {(x, y): tensor.universal[(theory.eta(x), theory.eta(y))] for x in X for y in Y}
        phi = {w: tensor.algebra.act(theory.fmap(lambda p: generadores[p], w)) for w in FXY.carrier}
        return {
            "sizes": [tensor.algebra.size, FXY.size],
            "homomorphisms": cls.is_hom(psi, tensor.algebra, FXY) and cls.is_hom(phi, FXY, tensor.algebra),
            "inverse": cls._inversas(psi, phi, tensor.algebra, FXY),
            "on_generators": all(psi[generadores[(x, y)]] == theory.eta((x, y)) for x in X for y in Y)
        }

    @classmethod
    def symmetry_iso(cls, A, B):
        """A ⊗ B ≅ B ⊗ A, a⊗b ↦ b⊗a"""
        AB, BA = cls.tensor_modules(A, B), cls.tensor_modules(B, A)
        ida = cls.induced(AB, {(a, b): BA.universal[(b, a)] for a in A.carrier for b in B.carrier}, BA.algebra)
        vuelta = cls.induced(BA, {(b, a): AB.universal[(a, b)] for a in A.carrier for b in B.carrier}, AB.algebra)
        return {
            "sizes": [AB.algebra.size, BA.algebra.size],
            "homomorphisms": cls.is_hom(ida, AB.algebra, BA.algebra) and cls.is_hom(vuelta, BA.algebra, AB.algebra),
            "inverse": cls._inversas(ida, vuelta, AB.algebra, BA.algebra)
        }

    @classmethod
    def associativity_iso(cls, A, B, C):
        """(A⊗B)⊗C ≅ A⊗(B⊗C), inducidos nivel por nivel"""
        AB, BC = cls.tensor_modules(A, B), cls.tensor_modules(B, C)
        izquierda = cls.tensor_modules(AB.algebra, C)
        derecha = cls.tensor_modules(A, BC.algebra)
        g = {}
        for c in C.carrier:
            h_c = cls.induced(AB, {(a, b): derecha.universal[(a, BC.universal[(b, c)])]
                                   for a in A.carrier for b in B.carrier}, derecha.algebra)
            g.update({(t, c): valor for t, valor in h_c.items()})
        alfa = cls.induced(izquierda, g, derecha.algebra)
        g_inversa = {}
        for a in A.carrier:
            k_a = cls.induced(BC, {(b, c): izquierda.universal[(AB.universal[(a, b)], c)]
                                   for b in B.carrier for c in C.carrier}, izquierda.algebra)
            g_inversa.update({(a, t): valor for t, valor in k_a.items()})
        beta = cls.induced(derecha, g_inversa, izquierda.algebra)
        en_generadores = all(alfa[izquierda.universal[(AB.universal[(a, b)], c)]]
                             == derecha.universal[(a, BC.universal[(b, c)])]
                             for a in A.carrier for b in B.carrier for c in C.carrier)
        return {
            "sizes": [izquierda.algebra.size, derecha.algebra.size],
            "homomorphisms": cls.is_hom(alfa, izquierda.algebra, derecha.algebra)
                             and cls.is_hom(beta, derecha.algebra, izquierda.algebra),
            "inverse": cls._inversas(alfa, beta, izquierda.algebra, derecha.algebra),
            "on_generators": en_generadores
        }

    @classmethod
    def unit_iso(cls, A):
        """A ⊗ F(1) ≅ A"""
        T = A.theory
        F1 = cls.free_algebra(T, ['1'])
        tensor = cls.tensor_modules(A, F1)
        proyeccion = cls.induced(tensor, {(a, u): A.act(T.fmap(lambda _: a, u)) for a in A.carrier for u in F1.carrier}, A)
        inclusion = {a: tensor.universal[(a, T.eta('1'))] for a in A.carrier}
        return {
            "sizes": [tensor.algebra.size, A.size],
            "inverse": cls._inversas(proyeccion, inclusion, tensor.algebra, A)
        }

    @classmethod
    def verify_structure_isos(cls, theory, X, Y, Z=None):
        """X, Y, Z: álgebras o tamaños (se usan álgebras libres de ese tamaño)"""
        def como_algebra(valor, prefijo):
            if isinstance(valor, FiniteAlgebra):
                return valor
            return cls.free_algebra(theory, [f"{prefijo}{i}" for i in range(1, int(valor) + 1)])

        def como_conjunto(valor, prefijo):
            if isinstance(valor, FiniteAlgebra):
                return list(valor.carrier)
            return [f"{prefijo}{i}" for i in range(1, int(valor) + 1)]

        A, B = como_algebra(X, 'x'), como_algebra(Y, 'y')
        reporte = {
            **theory.describe(),
            "free_tensor": cls.free_tensor_iso(theory, como_conjunto(X, 'x'), como_conjunto(Y, 'y')),
            "symmetry": cls.symmetry_iso(A, B),
            "unit": cls.unit_iso(A)
        }
        if Z is not None:
            reporte["associativity"] = cls.associativity_iso(A, B, como_algebra(Z, 'z'))
        fallas = [n for n, r in reporte.items() if isinstance(r, dict) and not all(
            v for k, v in r.items() if isinstance(v, bool))]
        reporte["failed"] = fallas
        reporte["ok"] = not fallas
        return reporte
