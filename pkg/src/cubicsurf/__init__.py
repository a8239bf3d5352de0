"""Exact intersection theory, cone enumeration and Seshadri/approximation
constants on a smooth cubic surface."""

__version__ = "0.1.0"
