"""Exact-arithmetic toolkit for groups of rational points of abelian
varieties over small finite fields.

Everything here is integer/rational arithmetic: no floats are used in any
computation whose result is asserted or serialized.
"""

__version__ = "0.1.0"
