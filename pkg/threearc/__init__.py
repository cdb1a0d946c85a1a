"""
threearc - Hamilton certificates for 3-arc graphs
"""

__version__ = "1.0.0"
__author__ = "ThinGuy"
__license__ = "GPL-3.0"
