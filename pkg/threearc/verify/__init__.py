"""
Certificate validation and brute-force oracles for threearc
"""
