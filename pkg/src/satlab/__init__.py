"""satlab: computable presentations of saturated structures, checked against brute-force oracles."""

__version__ = "0.1.0"
__author__ = "satlab Team"
