"""
Categoría monoidal simétrica libre S(C) sobre una categoría finita C.

Un morfismo (X1..Xn) → (Y1..Yn) es un par (σ, f) con σ ∈ Σ_n y
f_i: X_i → Y_σ(i). Las permutaciones van en notación de una línea y
componen de derecha a izquierda.
"""
import random
from dataclasses import dataclass
from itertools import permutations

from sympy import Matrix, eye, zeros, kronecker_product

from ..config import Config
from ..errors import CategoryError
from ..helpers import Helpers


@dataclass(frozen=True)
class FinCat:
    """Categoría finita: morfismos con nombre, dominio, codominio y tabla de composición"""
    objects: tuple
    arrows: dict
    identities: dict
    composition: dict

    def dom(self, f):
        return self.arrows[f][0]

    def cod(self, f):
        return self.arrows[f][1]

    def hom(self, X, Y):
        return [f for f, (a, b) in self.arrows.items() if a == X and b == Y]

    def from_object(self, X):
        return [f for f, (a, _) in self.arrows.items() if a == X]

    def compose(self, g, f):
        """g ∘ f"""
        if self.cod(f) != self.dom(g):
            raise CategoryError(f"{g} ∘ {f} no compone", witness={"f": f, "g": g})
        return self.composition[(g, f)]

    def inverse(self, f):
        for g in self.hom(self.cod(f), self.dom(f)):
            if self.compose(g, f) == self.identities[self.dom(f)] and \
                    self.compose(f, g) == self.identities[self.cod(f)]:
                return g
        return None

    def describe(self):
        return {
            "objects": list(self.objects),
            "arrows": {f: list(ab) for f, ab in self.arrows.items()}
        }


@dataclass(frozen=True)
class SmcMorphism:
    source: tuple
    target: tuple
    sigma: tuple
    components: tuple

    def describe(self):
        return {
            "source": list(self.source),
            "target": list(self.target),
            "sigma": list(self.sigma),
            "components": list(self.components)
        }


class FreeSym:
    """Operaciones en S(C) y extensión de funtores al modelo matricial"""

    # --- categorías finitas -------------------------------------------

    @classmethod
    def category(cls, objects, arrows, identities, composition):
        """Valida leyes de identidad y asociatividad sobre todas las ternas componibles"""
        C = FinCat(tuple(objects), dict(arrows), dict(identities), dict(composition))
        for X in C.objects:
            i = C.identities.get(X)
            if i is None or C.arrows.get(i) != (X, X):
                raise CategoryError(f"falta la identidad de {X}")
        for f, (a, b) in C.arrows.items():
            if a not in C.objects or b not in C.objects:
                raise CategoryError(f"{f} apunta fuera de los objetos", witness={"arrow": f})
            for g in C.from_object(b):
                h = C.composition.get((g, f))
                if h is None or C.arrows.get(h) != (a, C.cod(g)):
                    raise CategoryError(f"{g} ∘ {f} falta o está mal tipada", witness={"pair": [g, f]})
            if C.compose(C.identities[b], f) != f or C.compose(f, C.identities[a]) != f:
                raise CategoryError(f"ley de identidad falla en {f}", witness={"arrow": f})
        for f in C.arrows:
            for g in C.from_object(C.cod(f)):
                for h in C.from_object(C.cod(g)):
                    if C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f):
                        raise CategoryError("composición no asociativa", witness={"triple": [h, g, f]})
        return C

    @classmethod
    def discrete(cls, objects):
        objects = tuple(objects)
        return cls.category(objects, {f"id_{X}": (X, X) for X in objects},
                            {X: f"id_{X}" for X in objects},
                            {(f"id_{X}", f"id_{X}"): f"id_{X}" for X in objects})

    @classmethod
    def one_object_group(cls, orden=2):
        """ℤ/orden como categoría de un objeto; r^k compone sumando exponentes"""
        nombres = ["id_X"] + [f"r{k}" for k in range(1, orden)]
        return cls.category(("X",), {f: ("X", "X") for f in nombres}, {"X": "id_X"},
                            {(nombres[j], nombres[i]): nombres[(i + j) % orden]
                             for i in range(orden) for j in range(orden)})

    @classmethod
    def arrow_category(cls):
        """A → B con un único morfismo no trivial"""
        arrows = {"id_A": ("A", "A"), "id_B": ("B", "B"), "f": ("A", "B")}
        composicion = {("id_A", "id_A"): "id_A", ("id_B", "id_B"): "id_B",
                       ("f", "id_A"): "f", ("id_B", "f"): "f"}
        return cls.category(("A", "B"), arrows, {"A": "id_A", "B": "id_B"}, composicion)

    @classmethod
    def from_json(cls, datos):
        """{"objects": [...], "arrows": {nombre: [dom, cod]}, "identities": {...}, "composition": [[g, f, h], ...]}"""
        return cls.category(datos["objects"],
                            {f: tuple(ab) for f, ab in datos["arrows"].items()},
                            datos["identities"],
                            {(g, f): h for g, f, h in datos["composition"]})

    # --- morfismos de S(C) ----------------------------------------------

    @classmethod
    def morphism(cls, C, source, target, sigma, components):
        source, target = tuple(source), tuple(target)
        sigma, components = tuple(sigma), tuple(components)
        n = len(source)
        if len(target) != n or len(components) != n or sorted(sigma) != list(range(n)):
            raise CategoryError("longitudes o permutación inválidas",
                                witness={"source": list(source), "target": list(target), "sigma": list(sigma)})
        for i, f in enumerate(components):
            if f not in C.arrows or C.arrows[f] != (source[i], target[sigma[i]]):
                raise CategoryError(f"la componente {f} no va de {source[i]} a {target[sigma[i]]}",
                                    witness={"index": i})
        return SmcMorphism(source, target, sigma, components)

    @classmethod
    def identity(cls, C, objetos):
        objetos = tuple(objetos)
        return SmcMorphism(objetos, objetos, tuple(range(len(objetos))),
                           tuple(C.identities[X] for X in objetos))

    @classmethod
    def symmetry(cls, C, xs, ys):
        """Intercambio de bloques (xs, ys) → (ys, xs)"""
        n, m = len(xs), len(ys)
        sigma = tuple(m + i for i in range(n)) + tuple(range(m))
        return cls.morphism(C, tuple(xs) + tuple(ys), tuple(ys) + tuple(xs), sigma,
                            tuple(C.identities[X] for X in tuple(xs) + tuple(ys)))

    @classmethod
    def smc_compose(cls, C, g, f):
        """(τ, g) ∘ (σ, f) = (τσ, g_σ(i) ∘ f_i)"""
        if g.source != f.target:
            raise CategoryError("los morfismos no componen",
                                witness={"f_target": list(f.target), "g_source": list(g.source)})
        componentes = tuple(C.compose(g.components[f.sigma[i]], f.components[i])
                            for i in range(len(f.source)))
        return SmcMorphism(f.source, g.target, Helpers.componer(g.sigma, f.sigma), componentes)

    @classmethod
    def smc_tensor(cls, f, g):
        n = len(f.source)
        return SmcMorphism(f.source + g.source, f.target + g.target,
                           f.sigma + tuple(n + s for s in g.sigma),
                           f.components + g.components)

    @classmethod
    def smc_inverse(cls, C, f):
        """(σ⁻¹, f⁻¹_σ⁻¹(j)) si todas las componentes son invertibles"""
        inv = Helpers.inversa(f.sigma)
        componentes = []
        for j in range(len(f.target)):
            g = C.inverse(f.components[inv[j]])
            if g is None:
                raise CategoryError(f"{f.components[inv[j]]} no es invertible")
            componentes.append(g)
        return SmcMorphism(f.target, f.source, inv, tuple(componentes))

    @classmethod
    def perm_groupoid_hom(cls, n, m):
        """Hom(X^⊗n, X^⊗m) en ℙ: Σ_n si n = m, vacío si no"""
        if n != m:
            return []
        return [tuple(p) for p in permutations(range(n))]

    @classmethod
    def random_morphism(cls, C, source, rng):
        """Componentes al azar desde cada X_i y permutación al azar"""
        n = len(source)
        componentes = [rng.choice(sorted(C.from_object(X))) for X in source]
        sigma = list(range(n))
        rng.shuffle(sigma)
        target = [None] * n
        for i, f in enumerate(componentes):
            target[sigma[i]] = C.cod(f)
        return SmcMorphism(tuple(source), tuple(target), tuple(sigma), tuple(componentes))

    @classmethod
    def random_objects(cls, C, rng, max_len=3):
        return tuple(rng.choice(C.objects) for _ in range(rng.randint(0, max_len)))

    @classmethod
    def composition_laws(cls, C, muestras=None, seed=None):
        """Asociatividad, unidad e intercambio sobre morfismos al azar"""
        muestras = muestras or Config.FREESYM_PAIRS
        rng = random.Random(Config.SEED if seed is None else seed)
        fallas = []
        for _ in range(muestras):
            f = cls.random_morphism(C, cls.random_objects(C, rng), rng)
            g = cls.random_morphism(C, f.target, rng)
            h = cls.random_morphism(C, g.target, rng)
            if cls.smc_compose(C, h, cls.smc_compose(C, g, f)) != cls.smc_compose(C, cls.smc_compose(C, h, g), f):
                fallas.append({"law": "associativity", "f": f.describe()})
            if cls.smc_compose(C, cls.identity(C, f.target), f) != f or \
                    cls.smc_compose(C, f, cls.identity(C, f.source)) != f:
                fallas.append({"law": "unit", "f": f.describe()})
            f2 = cls.random_morphism(C, cls.random_objects(C, rng), rng)
            g2 = cls.random_morphism(C, f2.target, rng)
            izq = cls.smc_compose(C, cls.smc_tensor(g, g2), cls.smc_tensor(f, f2))
            der = cls.smc_tensor(cls.smc_compose(C, g, f), cls.smc_compose(C, g2, f2))
            if izq != der:
                fallas.append({"law": "interchange", "f": f.describe(), "f2": f2.describe()})
        return {"samples": muestras, "seed": Config.SEED if seed is None else seed,
                "failures": fallas, "ok": not fallas}

    # --- extensión de funtores ------------------------------------------

    @classmethod
    def functor_witnesses(cls, C, dims, imagenes):
        """F(id) = I y F(g∘f) = F(g)F(f) en C"""
        testigos = []
        for f, (a, b) in C.arrows.items():
            M = Matrix(imagenes[f])
            if M.shape != (dims[b], dims[a]):
                testigos.append({"arrow": f, "shape": list(M.shape)})
        if testigos:
            return testigos
        for X in C.objects:
            if Matrix(imagenes[C.identities[X]]) != eye(dims[X]):
                testigos.append({"identity": X})
        for f in C.arrows:
            for g in C.from_object(C.cod(f)):
                if Matrix(imagenes[C.compose(g, f)]) != Matrix(imagenes[g]) * Matrix(imagenes[f]):
                    testigos.append({"pair": [g, f]})
        return testigos

    @classmethod
    def extend_functor(cls, C, dims, imagenes):
        """
        F̄ sobre S(C): objetos a productos de Kronecker y (σ, f) a la matriz
        de permutación de factores compuesta con F(f_1) ⊗ … ⊗ F(f_n).
        """
        testigos = cls.functor_witnesses(C, dims, imagenes)
        if testigos:
            raise CategoryError("F no es un funtor", witness=testigos)
        matrices = {f: Matrix(M) for f, M in imagenes.items()}

        def objeto(xs):
            total = 1
            for X in xs:
                total *= dims[X]
            return total

        def flecha(f):
            componentes = Matrix([[1]])
            for nombre in f.components:
                componentes = kronecker_product(componentes, matrices[nombre])
            return cls._permutacion_factores(f.sigma, [dims[f.target[f.sigma[i]]] for i in range(len(f.sigma))]) * componentes

        return objeto, flecha

    @classmethod
    def _permutacion_factores(cls, sigma, dims_factores):
        """
        ⊗_i V_σ(i) → ⊗_j V_j: el factor i pasa a la posición σ(i).
        dims_factores[i] es la dimensión del factor en la posición i del origen.
        """
        n = len(sigma)
        destino = [0] * n
        for i in range(n):
            destino[sigma[i]] = dims_factores[i]
        total = 1
        for d in dims_factores:
            total *= d
        P = zeros(total, total)
        for k, c in enumerate(Helpers.tuplas_mixtas(dims_factores)):
            d = [0] * n
            for i in range(n):
                d[sigma[i]] = c[i]
            P[cls._indice(d, destino), k] = 1
        return P

    @staticmethod
    def _indice(coordenadas, dims):
        indice = 0
        for c, d in zip(coordenadas, dims):
            indice = indice * d + c
        return indice

    @classmethod
    def _palabra_coxeter(cls, sigma):
        """Transposiciones adyacentes s_k con σ = s_{k1} ⋯ s_{km} (ordenamiento burbuja)"""
        actual = list(sigma)
        palabra = []
        cambiado = True
        while cambiado:
            cambiado = False
            for k in range(len(actual) - 1):
                if actual[k] > actual[k + 1]:
                    actual[k], actual[k + 1] = actual[k + 1], actual[k]
                    palabra.append(k)
                    cambiado = True
        return palabra

    @classmethod
    def coxeter_check(cls, C, flecha, X, n=3):
        """Relaciones de Coxeter de las imágenes s_k y σ como producto de su palabra"""
        objetos = (X,) * n
        s = []
        for k in range(n - 1):
            sigma = list(range(n))
            sigma[k], sigma[k + 1] = sigma[k + 1], sigma[k]
            s.append(flecha(cls.morphism(C, objetos, objetos, sigma, [C.identities[X]] * n)))
        I = flecha(cls.identity(C, objetos))
        fallas = []
        for k in range(n - 1):
            if s[k] * s[k] != I:
                fallas.append(f"s{k}² ≠ 1")
            if k + 1 < n - 1 and s[k] * s[k + 1] * s[k] != s[k + 1] * s[k] * s[k + 1]:
                fallas.append(f"trenza falla en s{k}, s{k + 1}")
            for j in range(k + 2, n - 1):
                if s[k] * s[j] != s[j] * s[k]:
                    fallas.append(f"s{k}, s{j} no conmutan")
        for sigma in permutations(range(n)):
            producto = I
            for k in cls._palabra_coxeter(sigma):
                producto = s[k] * producto
            directa = flecha(cls.morphism(C, objetos, objetos, sigma, [C.identities[X]] * n))
            if producto != directa:
                fallas.append(f"la palabra de {list(sigma)} no coincide")
        return fallas

    @classmethod
    def extension_checks(cls, C, dims, imagenes, muestras=None, seed=None):
        """Coxeter, funtorialidad y monoidalidad de F̄ sobre pares al azar"""
        muestras = muestras or Config.FREESYM_PAIRS
        seed = Config.SEED if seed is None else seed
        rng = random.Random(seed)
        objeto, flecha = cls.extend_functor(C, dims, imagenes)
        coxeter = {X: cls.coxeter_check(C, flecha, X) for X in C.objects}
        funtorial, monoidal = [], []
        for _ in range(muestras):
            f = cls.random_morphism(C, cls.random_objects(C, rng), rng)
            g = cls.random_morphism(C, f.target, rng)
            if flecha(cls.smc_compose(C, g, f)) != flecha(g) * flecha(f):
                funtorial.append({"f": f.describe(), "g": g.describe()})
            h = cls.random_morphism(C, cls.random_objects(C, rng), rng)
            if flecha(cls.smc_tensor(f, h)) != kronecker_product(flecha(f), flecha(h)):
                monoidal.append({"f": f.describe(), "h": h.describe()})
            if objeto(f.source + h.source) != objeto(f.source) * objeto(h.source):
                monoidal.append({"objects": list(f.source + h.source)})
        return {
            "seed": seed,
            "samples": muestras,
            "coxeter": {X: fallas for X, fallas in coxeter.items()},
            "functoriality_failures": funtorial,
            "monoidality_failures": monoidal,
            "ok": not funtorial and not monoidal and not any(coxeter.values())
        }
