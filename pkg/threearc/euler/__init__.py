"""
Eulerian tours, visits and matchings for threearc
"""
