"""
bimat: the bicategory Mat(C) of matrices over a bimonoidal base category.

The base categories live in :mod:`bimat.instances`; cells and their
compositions in :mod:`bimat.matc`.
"""

__version__ = "0.1.0"
