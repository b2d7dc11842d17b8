"""Allows running the command line interface with python -m postlie."""
import sys
from .cli import main

sys.exit(main())
