"""
Configuration handling for threearc
"""
