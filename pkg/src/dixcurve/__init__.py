"""Exact symbolic computation with right ideals of the ring D of
differential operators on a smooth affine curve (the line, or an
elliptic curve y^2 = x^3 + a*x + b over Q), their classification by
divisor classes, and the Cannings-Holland correspondence.
"""

__version__ = "0.1.0"
