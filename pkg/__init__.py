"""
superhc - exact Harish-Chandra computations for (gl(2p|2q), gl(p|q)⊕gl(p|q))

Quick Start:
1. pip install -r requirements.txt
2. python main.py verify-all
"""

__version__ = "0.1.0"
__author__ = "superhc contributors"
