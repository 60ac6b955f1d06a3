"""Certified eigenvalue enclosures for 1D ideal-MHD block operators."""

__version__ = "0.1.0"
