"""Sequential quantum logic: propositions, measurement protocols and their verification."""
# flake8: noqa
from .sqltester import SQLogicTester
