"""
Application Layer for PyYBMaps
"""
