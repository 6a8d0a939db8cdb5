"""
Corpus de muestra para las suites de verificación
"""


class SampleData:
    """Clase con datos de muestra estáticos"""

    # Álgebras artinianas sobre ℚ (≤ 3 variables) para de Rham y Ω¹
    ALGEBRAS_ARTINIANAS = [
        "QQ[x]/(x^2)",
        "QQ[x]/(x^3)",
        "QQ[x]/(x^4)",
        "QQ[x]/(x^2-1)",
        "QQ[x]/(x^3-x)",
        "QQ[x,y]/(x^2, y^2)",
        "QQ[x,y]/(x^2, x*y, y^2)",
        "QQ[x,y]/(x^2-y, y^2)",
        "QQ[x,y]/(x^3, y^2)",
        "QQ[x,y,z]/(x^2, y^2, z^2)",
        "QQ[x,y,z]/(x^2, y^2, z^2, x*y, x*z, y*z)",
        "ZZ/3[x]/(x^3)"
    ]

    # Pares (B1, B2, C) para la regla de la suma y el cambio de base
    FUNTORIALIDAD = [
        ("QQ[x]/(x^2)", "QQ[y]/(y^2)", "QQ"),
        ("QQ[x]/(x^3)", "QQ[y]/(y^2-1)", "QQ[e]/(e^2)"),
        ("QQ[x,y]/(x^2, y^2)", "QQ[z]/(z^2)", "QQ[e]/(e^2)")
    ]

    # Módulos presentados: (anillo, generadores, relaciones)
    MODULOS = [
        ("QQ", 1, []),
        ("QQ", 2, []),
        ("ZZ", 1, []),
        ("ZZ", 1, [[6]]),
        ("ZZ", 2, [[2, 0]]),
        ("ZZ/6", 1, []),
        ("QQ[x]/(x^2)", 1, [["x"]]),
        ("QQ[x]/(x^2)", 2, [])
    ]

    # Anillos para la unicidad del rango
    ANILLOS_RANGO = ["QQ", "ZZ", "ZZ/12", "QQ[x]/(x^2)"]

    # Anillos para el complejo de Amitsur
    AMITSUR = ["QQ", "QQ[x]/(x^2+1)", "QQ[x]/(x^2-x)", "QQ[x]/(x^2)"]

    # Grupos abelianos finitamente generados (factores invariantes, 0 = ℤ)
    GRUPOS = [
        [12],
        [0],
        [0, 4],
        [8],
        [2, 6],
        [3],
        [0, 0]
    ]

    GRUPOS_TF = [[0], [0, 0], [2], [0, 2], [3, 0], [0, 0, 0]]

    # Ideales de ℤ para las leyes de Zariski
    IDEALES = [0, 1, 2, 3, 4, 6, 9, 12, 36]

    # Pares de valores en [0, ∞] para la localización de ½-sucesiones
    PARES_DIADICOS = [
        (1, 1), ("3/4", 2), ("inf", 2), ("inf", 0), (0, 5), ("1/2", "1/2"),
        (4, "1/8"), ("5/4", "3/2"), ("inf", "inf"), ("7/8", 1)
    ]

    # Ventanas de ½-sucesiones (ventana, cabeza, cola)
    VENTANAS = [
        ({0: 1}, 'zero', 'halving'),
        ({3: 1, 4: 1}, 'decay', 'constant'),
        ({0: "1/2", 1: 1}, 'decay', 'halving'),
        ({2: "1/4", 3: "1/2"}, 'zero', 'halving'),
        ({0: 0}, 'zero', 'constant')
    ]

    # Datos de funtores hacia el modelo matricial
    FUNTOR_FLECHA = {
        "dims": {"A": 1, "B": 2},
        "images": {"id_A": [[1]], "id_B": [[1, 0], [0, 1]], "f": [[1], [0]]}
    }

    FUNTOR_GRUPO = {
        "dims": {"X": 2},
        "images": {"id_X": [[1, 0], [0, 1]], "r1": [[0, 1], [1, 0]]}
    }

    # Covectores para Segre, Veronese y Plücker
    SEGRE_PARES = [
        ([1, 0], [1, 0]),
        ([1, 2], [3, -1]),
        (["1/2", 1, 0], [2, 5]),
        ([0, 1], [1, 1, 1])
    ]

    VERONESE = [([1, 1], 2), ([1, 2], 3), ([2, -1, 1], 2), ([1, 0], 1)]

    PLUCKER_MATRICES = [
        [[1, 0, 0, 0], [0, 1, 0, 0]],
        [[1, 2, 0, 3], [0, 1, 1, -1]],
        [[1, 0, 1], [0, 1, 1]],
        [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]]
    ]

    # Cuadrículas de Segre y pares (n, d) de Plücker con oráculo de núcleo
    SEGRE_DIMS = [(2, 2), (1, 3), (2, 3)]
    PLUCKER_DIMS = [(4, 2), (3, 1), (5, 2)]
    VERONESE_DIMS = [(2, 2), (2, 3), (3, 2)]

    # Extensiones sobre ℚ[ε]/(ε²): pares (i, p) con p∘i = 0
    EXTENSIONES_EPSILON = [
        ([1, 0], [0, 1]),
        ([0, 1], [1, 0]),
        ([1, 1], [1, -1]),
        ([2, 1], [1, -2]),
        ([1, 3], [3, -1])
    ]

    # Símbolos para el certificado de corchetes
    SIMBOLOS_CORCHETES = "abcde"
