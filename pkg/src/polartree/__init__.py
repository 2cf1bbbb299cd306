"""polartree: exact contact trees of plane meromorphic curves.

Computes Newton-Puiseux expansions over dynamically split algebraic
towers, builds the contact tree of a reduced curve, predicts the
factorization of its y-derivative and of Jacobians of curve pairs in
closed form, and verifies every prediction against an independent
expansion-based oracle.
"""

__version__ = "0.1.0"
