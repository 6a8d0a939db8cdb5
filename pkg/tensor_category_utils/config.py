"""
Configuración del verificador de construcciones tensoriales
"""
import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Configuración centralizada para TensorCheck"""

    # Semilla única para todos los casos aleatorios (se imprime en cada reporte)
    SEED = int(os.getenv('TENSORCHECK_SEED', 42))

    # Directorio de salida de reportes
    OUTPUT_DIR = os.getenv('TENSORCHECK_OUTPUT_DIR', 'reports')

    # Paralelismo de las suites
    MAX_WORKERS = int(os.getenv('TENSORCHECK_MAX_WORKERS', 4))

    # Presupuesto de nodos de la búsqueda del certificado de corchetes
    BRACKET_BUDGET = int(os.getenv('TENSORCHECK_BRACKET_BUDGET', 200000))

    # Mayor álgebra libre que se recorre completa en las leyes de mónada
    MAX_EXHAUSTIVE = int(os.getenv('TENSORCHECK_MAX_EXHAUSTIVE', 4096))

    # Tamaño máximo del álgebra libre F(A×B) para el coecualizador directo
    MAX_COEQUALIZER = int(os.getenv('TENSORCHECK_MAX_COEQUALIZER', 1024))

    # Cantidades de muestras
    CRAMER_SAMPLES = 100
    ROUNDTRIP_SAMPLES = 50
    KOSZUL_SAMPLES = 20
    EPSILON_SAMPLES = 10
    LOCALIZE_PAIRS = 50
    ZARISKI_SAMPLES = 30
    RESIDUAL_SAMPLES = 100
    FREESYM_PAIRS = 50

    # Cotas
    MAX_PRIME = 30
    PRIME_BOUND = 100
    OID_MAX_N = 60
    MONAD_MAX_SIZE = 3
    REFLECT_TARGET_ORDER = 12
    REFLECTOR_MAX_STEPS = 64

    # Suites disponibles (DEBEN coincidir con schemas-validation/report.json)
    SUITES = [
        "exactring",
        "fpmod",
        "sympow",
        "derham",
        "projgeom",
        "monadkit",
        "quantale",
        "localize",
        "freesym"
    ]

    # Subcomandos de la línea de comandos
    SUBCOMANDOS = [
        "sympow", "extpow", "locally-free", "cramer", "bracket-cert",
        "derham", "koszul", "segre", "veronese", "plucker", "rees",
        "monad-tensor", "monad-laws", "quantale", "reflect", "freesym",
        "check"
    ]

    # Teorías integradas (nombres cortos de la CLI)
    TEORIAS = ["pointed", "supl", "semilattice", "modn", "mset"]

    @classmethod
    def crear_directorio_salida(cls):
        """Crea el directorio de salida si no existe"""
        os.makedirs(cls.OUTPUT_DIR, exist_ok=True)
