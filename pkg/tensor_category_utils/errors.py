"""
Jerarquía de errores de TensorCheck
"""


class TensorCheckError(Exception):
    """Error base. Lleva un mensaje y un testigo opcional serializable a JSON"""

    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class ParseError(TensorCheckError):
    """Literal mal formado (anillo, polinomio, módulo, teoría...)"""
    exit_code = 2


class InputError(TensorCheckError):
    """Entrada que no cumple las precondiciones de una operación"""
    exit_code = 2


class RingError(InputError):
    """Anillo incompatible con la operación pedida"""


class ModuleError(InputError):
    """Módulos sobre anillos distintos, hom no computable, gradaciones incompatibles"""


class TheoryError(InputError):
    """Álgebras de teorías distintas o teoría no soportada"""


class CategoryError(InputError):
    """Categoría finita mal formada o morfismos que no componen"""


class CertificateError(TensorCheckError):
    """Un certificado falló donde la matemática garantiza éxito"""


class RelationError(TensorCheckError):
    """Un covector viola las relaciones cuadráticas"""


class ReflectorError(TensorCheckError):
    """Iteración sin punto fijo dentro de la cota o datos graduados insuficientes"""
