"""
PyYBMaps - Yang-Baxter maps from matrix re-factorization
Main package initialization
"""
__version__ = "0.1.0"
__author__ = "pyybmaps contributors"
