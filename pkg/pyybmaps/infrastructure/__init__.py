"""
Infrastructure Layer for PyYBMaps
"""
