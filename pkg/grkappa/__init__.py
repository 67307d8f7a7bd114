"""Graded representation theory of cyclotomic Hecke algebras."""

__version__ = "0.1.0"
