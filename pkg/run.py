#!/usr/bin/env python3
"""
Atalho para a linha de comando do sglab sem instalar o pacote.
"""

import sys

from sglab.cli import main

if __name__ == "__main__":
    sys.exit(main())
