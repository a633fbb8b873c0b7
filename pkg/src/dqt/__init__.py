"""Quantum-style computation over finite fields F_p and F_{p^2}."""

__version__ = "0.1.0"
