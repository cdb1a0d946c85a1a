"""
Hamilton cycle and path constructions for threearc
"""
