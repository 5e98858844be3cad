"""Sequential Quantum Logic toolchain version."""

__version__ = "1.0.0"
