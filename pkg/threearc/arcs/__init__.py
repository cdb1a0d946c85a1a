"""
3-arc graph construction for threearc
"""
