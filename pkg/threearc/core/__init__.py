"""
Graph primitives, I/O and errors for threearc
"""
