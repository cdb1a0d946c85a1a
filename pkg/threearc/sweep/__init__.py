"""
Exhaustive and fuzzed verification suites for threearc
"""
