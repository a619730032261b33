"""
Core Services for PyYBMaps
"""
