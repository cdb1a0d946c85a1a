"""
Utility functions for threearc
"""
