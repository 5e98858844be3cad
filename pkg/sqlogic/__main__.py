"""Allow running the command line interface with python -m sqlogic."""
import sys

from sqlogic.cli import main

sys.exit(main())
