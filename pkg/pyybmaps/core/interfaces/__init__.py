"""
Core Interfaces for PyYBMaps
"""
