import sys

from wirelength import run

sys.exit(run())
