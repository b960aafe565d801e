"""Exact computations for wreath-product vertex functions on local gerbes."""

__version__ = "0.1.0"
