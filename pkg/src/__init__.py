"""
superhc - exact arithmetic toolkit for super Harish-Chandra isomorphisms
Core initialization
"""

__version__ = "0.1.0"
__author__ = "superhc contributors"
