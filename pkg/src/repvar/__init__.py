"""Irreducible components of SL2(C) representation varieties of <a, b | a^p = b^t>."""

__version__ = "0.1.0"
