"""
Persistence Implementations for PyYBMaps
"""
