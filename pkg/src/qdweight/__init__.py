"""Exact-arithmetic weight modules over quantum differential operators.

The algebra D is generated over R = K[tau, sigma, sigma^{-1}] by X, Y, Y1.
It contains two generalized Weyl algebras: A_q (t = q*sigma - 1, T = Y1) and
A_1 (t = tau, T = Y).  This package constructs the classified weight module
families over both, verifies the defining relations exactly, analyzes module
structure, and solves the extension problem from a GWA module to a D-module.
"""

from .fields import FieldSpec, FieldCtx, Fel, make_field, q_order, characteristic

__all__ = [
    "FieldSpec",
    "FieldCtx",
    "Fel",
    "make_field",
    "q_order",
    "characteristic",
]

__version__ = "0.1.0"
