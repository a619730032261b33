"""
Core Entities for PyYBMaps
"""
