"""
Exact computations with 2-term silting complexes over path algebras.
"""

__version__ = "1.0.0"
