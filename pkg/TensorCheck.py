import sys

from tensor_category_utils.cli import main

# ============================================================================
# VERIFICADOR DE CONSTRUCCIONES TENSORIALES - TENSORCHECK
# ============================================================================
# Los reportes JSON salen por stdout; la bitácora con emojis, por stderr.

if __name__ == "__main__":
    sys.exit(main())
