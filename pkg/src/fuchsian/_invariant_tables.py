"""Tabulated Aronhold invariants of a ternary cubic.

Each entry is a product of coefficients of the cubic sum a_ijk x^i y^j z^k
(exponent triples listed) times an integer weight.  `S_TERMS` has degree 4
in the coefficients, `T_TERMS` degree 6.  Normalization: on the Weierstrass
cubic y^2 z - 4 x^3 + a x z^2 + b z^3 they evaluate to S = 192 a and
T = -13824 b, so that S^3/(S^3 - T^2) = a^3/(a^3 - 27 b^2) is the Klein
J-invariant of the curve.
"""

S_TERMS = (
    (((0, 0, 3), (0, 2, 1), (1, 2, 0), (3, 0, 0)), 144),
    (((0, 0, 3), (0, 2, 1), (2, 1, 0), (2, 1, 0)), -48),
    (((0, 0, 3), (0, 3, 0), (1, 1, 1), (3, 0, 0)), -216),
    (((0, 0, 3), (0, 3, 0), (2, 0, 1), (2, 1, 0)), 144),
    (((0, 0, 3), (1, 1, 1), (1, 2, 0), (2, 1, 0)), 24),
    (((0, 0, 3), (1, 2, 0), (1, 2, 0), (2, 0, 1)), -48),
    (((0, 1, 2), (0, 1, 2), (1, 2, 0), (3, 0, 0)), -48),
    (((0, 1, 2), (0, 1, 2), (2, 1, 0), (2, 1, 0)), 16),
    (((0, 1, 2), (0, 2, 1), (1, 1, 1), (3, 0, 0)), 24),
    (((0, 1, 2), (0, 2, 1), (2, 0, 1), (2, 1, 0)), -16),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (3, 0, 0)), 144),
    (((0, 1, 2), (0, 3, 0), (2, 0, 1), (2, 0, 1)), -48),
    (((0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0)), -16),
    (((0, 1, 2), (1, 1, 1), (1, 1, 1), (2, 1, 0)), -8),
    (((0, 1, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1)), 24),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (3, 0, 0)), -48),
    (((0, 2, 1), (0, 2, 1), (2, 0, 1), (2, 0, 1)), 16),
    (((0, 2, 1), (1, 0, 2), (1, 1, 1), (2, 1, 0)), 24),
    (((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1)), -16),
    (((0, 2, 1), (1, 1, 1), (1, 1, 1), (2, 0, 1)), -8),
    (((0, 3, 0), (1, 0, 2), (1, 0, 2), (2, 1, 0)), -48),
    (((0, 3, 0), (1, 0, 2), (1, 1, 1), (2, 0, 1)), 24),
    (((1, 0, 2), (1, 0, 2), (1, 2, 0), (1, 2, 0)), 16),
    (((1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 2, 0)), -8),
    (((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1)), 1),
)

T_TERMS = (
    (((0, 0, 3), (0, 0, 3), (0, 3, 0), (0, 3, 0), (3, 0, 0), (3, 0, 0)), -5832),
    (((0, 0, 3), (0, 0, 3), (0, 3, 0), (1, 2, 0), (2, 1, 0), (3, 0, 0)), 3888),
    (((0, 0, 3), (0, 0, 3), (0, 3, 0), (2, 1, 0), (2, 1, 0), (2, 1, 0)), -864),
    (((0, 0, 3), (0, 0, 3), (1, 2, 0), (1, 2, 0), (1, 2, 0), (3, 0, 0)), -864),
    (((0, 0, 3), (0, 0, 3), (1, 2, 0), (1, 2, 0), (2, 1, 0), (2, 1, 0)), 216),
    (((0, 0, 3), (0, 1, 2), (0, 2, 1), (0, 3, 0), (3, 0, 0), (3, 0, 0)), 3888),
    (((0, 0, 3), (0, 1, 2), (0, 2, 1), (1, 2, 0), (2, 1, 0), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 1, 2), (0, 2, 1), (2, 1, 0), (2, 1, 0), (2, 1, 0)), 288),
    (((0, 0, 3), (0, 1, 2), (0, 3, 0), (1, 1, 1), (2, 1, 0), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 1, 2), (0, 3, 0), (1, 2, 0), (2, 0, 1), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 1, 2), (0, 3, 0), (2, 0, 1), (2, 1, 0), (2, 1, 0)), 864),
    (((0, 0, 3), (0, 1, 2), (1, 1, 1), (1, 2, 0), (1, 2, 0), (3, 0, 0)), 864),
    (((0, 0, 3), (0, 1, 2), (1, 1, 1), (1, 2, 0), (2, 1, 0), (2, 1, 0)), -144),
    (((0, 0, 3), (0, 1, 2), (1, 2, 0), (1, 2, 0), (2, 0, 1), (2, 1, 0)), -144),
    (((0, 0, 3), (0, 2, 1), (0, 2, 1), (0, 2, 1), (3, 0, 0), (3, 0, 0)), -864),
    (((0, 0, 3), (0, 2, 1), (0, 2, 1), (1, 1, 1), (2, 1, 0), (3, 0, 0)), 864),
    (((0, 0, 3), (0, 2, 1), (0, 2, 1), (1, 2, 0), (2, 0, 1), (3, 0, 0)), 864),
    (((0, 0, 3), (0, 2, 1), (0, 2, 1), (2, 0, 1), (2, 1, 0), (2, 1, 0)), -576),
    (((0, 0, 3), (0, 2, 1), (0, 3, 0), (1, 0, 2), (2, 1, 0), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 2, 1), (0, 3, 0), (1, 1, 1), (2, 0, 1), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 2, 1), (0, 3, 0), (2, 0, 1), (2, 0, 1), (2, 1, 0)), 864),
    (((0, 0, 3), (0, 2, 1), (1, 0, 2), (1, 2, 0), (1, 2, 0), (3, 0, 0)), 864),
    (((0, 0, 3), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 1, 0), (2, 1, 0)), -144),
    (((0, 0, 3), (0, 2, 1), (1, 1, 1), (1, 1, 1), (1, 2, 0), (3, 0, 0)), -648),
    (((0, 0, 3), (0, 2, 1), (1, 1, 1), (1, 1, 1), (2, 1, 0), (2, 1, 0)), -72),
    (((0, 0, 3), (0, 2, 1), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)), 720),
    (((0, 0, 3), (0, 2, 1), (1, 2, 0), (1, 2, 0), (2, 0, 1), (2, 0, 1)), -576),
    (((0, 0, 3), (0, 3, 0), (0, 3, 0), (1, 0, 2), (2, 0, 1), (3, 0, 0)), 3888),
    (((0, 0, 3), (0, 3, 0), (0, 3, 0), (2, 0, 1), (2, 0, 1), (2, 0, 1)), -864),
    (((0, 0, 3), (0, 3, 0), (1, 0, 2), (1, 1, 1), (1, 2, 0), (3, 0, 0)), -1296),
    (((0, 0, 3), (0, 3, 0), (1, 0, 2), (1, 1, 1), (2, 1, 0), (2, 1, 0)), 864),
    (((0, 0, 3), (0, 3, 0), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)), -1296),
    (((0, 0, 3), (0, 3, 0), (1, 1, 1), (1, 1, 1), (1, 1, 1), (3, 0, 0)), 540),
    (((0, 0, 3), (0, 3, 0), (1, 1, 1), (1, 1, 1), (2, 0, 1), (2, 1, 0)), -648),
    (((0, 0, 3), (0, 3, 0), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 0, 1)), 864),
    (((0, 0, 3), (1, 0, 2), (1, 1, 1), (1, 2, 0), (1, 2, 0), (2, 1, 0)), -144),
    (((0, 0, 3), (1, 0, 2), (1, 2, 0), (1, 2, 0), (1, 2, 0), (2, 0, 1)), 288),
    (((0, 0, 3), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 0), (2, 1, 0)), 36),
    (((0, 0, 3), (1, 1, 1), (1, 1, 1), (1, 2, 0), (1, 2, 0), (2, 0, 1)), -72),
    (((0, 1, 2), (0, 1, 2), (0, 1, 2), (0, 3, 0), (3, 0, 0), (3, 0, 0)), -864),
    (((0, 1, 2), (0, 1, 2), (0, 1, 2), (1, 2, 0), (2, 1, 0), (3, 0, 0)), 288),
    (((0, 1, 2), (0, 1, 2), (0, 1, 2), (2, 1, 0), (2, 1, 0), (2, 1, 0)), -64),
    (((0, 1, 2), (0, 1, 2), (0, 2, 1), (0, 2, 1), (3, 0, 0), (3, 0, 0)), 216),
    (((0, 1, 2), (0, 1, 2), (0, 2, 1), (1, 1, 1), (2, 1, 0), (3, 0, 0)), -144),
    (((0, 1, 2), (0, 1, 2), (0, 2, 1), (1, 2, 0), (2, 0, 1), (3, 0, 0)), -144),
    (((0, 1, 2), (0, 1, 2), (0, 2, 1), (2, 0, 1), (2, 1, 0), (2, 1, 0)), 96),
    (((0, 1, 2), (0, 1, 2), (0, 3, 0), (1, 0, 2), (2, 1, 0), (3, 0, 0)), 864),
    (((0, 1, 2), (0, 1, 2), (0, 3, 0), (1, 1, 1), (2, 0, 1), (3, 0, 0)), 864),
    (((0, 1, 2), (0, 1, 2), (0, 3, 0), (2, 0, 1), (2, 0, 1), (2, 1, 0)), -576),
    (((0, 1, 2), (0, 1, 2), (1, 0, 2), (1, 2, 0), (1, 2, 0), (3, 0, 0)), -576),
    (((0, 1, 2), (0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0), (2, 1, 0)), 96),
    (((0, 1, 2), (0, 1, 2), (1, 1, 1), (1, 1, 1), (1, 2, 0), (3, 0, 0)), -72),
    (((0, 1, 2), (0, 1, 2), (1, 1, 1), (1, 1, 1), (2, 1, 0), (2, 1, 0)), 48),
    (((0, 1, 2), (0, 1, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)), -144),
    (((0, 1, 2), (0, 1, 2), (1, 2, 0), (1, 2, 0), (2, 0, 1), (2, 0, 1)), 216),
    (((0, 1, 2), (0, 2, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0), (3, 0, 0)), -144),
    (((0, 1, 2), (0, 2, 1), (0, 2, 1), (1, 1, 1), (2, 0, 1), (3, 0, 0)), -144),
    (((0, 1, 2), (0, 2, 1), (0, 2, 1), (2, 0, 1), (2, 0, 1), (2, 1, 0)), 96),
    (((0, 1, 2), (0, 2, 1), (0, 3, 0), (1, 0, 2), (2, 0, 1), (3, 0, 0)), -1296),
    (((0, 1, 2), (0, 2, 1), (0, 3, 0), (2, 0, 1), (2, 0, 1), (2, 0, 1)), 288),
    (((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 2, 0), (3, 0, 0)), 720),
    (((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (2, 1, 0), (2, 1, 0)), -144),
    (((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)), 48),
    (((0, 1, 2), (0, 2, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (3, 0, 0)), 36),
    (((0, 1, 2), (0, 2, 1), (1, 1, 1), (1, 1, 1), (2, 0, 1), (2, 1, 0)), 24),
    (((0, 1, 2), (0, 2, 1), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 0, 1)), -144),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 2, 0), (3, 0, 0)), 864),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (1, 0, 2), (2, 1, 0), (2, 1, 0)), -576),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (1, 1, 1), (1, 1, 1), (3, 0, 0)), -648),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 1, 0)), 720),
    (((0, 1, 2), (0, 3, 0), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 0, 1)), -144),
    (((0, 1, 2), (0, 3, 0), (1, 1, 1), (1, 1, 1), (2, 0, 1), (2, 0, 1)), -72),
    (((0, 1, 2), (1, 0, 2), (1, 0, 2), (1, 2, 0), (1, 2, 0), (2, 1, 0)), 96),
    (((0, 1, 2), (1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 2, 0), (2, 1, 0)), 24),
    (((0, 1, 2), (1, 0, 2), (1, 1, 1), (1, 2, 0), (1, 2, 0), (2, 0, 1)), -144),
    (((0, 1, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 1, 0)), -12),
    (((0, 1, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 0), (2, 0, 1)), 36),
    (((0, 2, 1), (0, 2, 1), (0, 2, 1), (1, 0, 2), (2, 0, 1), (3, 0, 0)), 288),
    (((0, 2, 1), (0, 2, 1), (0, 2, 1), (2, 0, 1), (2, 0, 1), (2, 0, 1)), -64),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (1, 0, 2), (1, 2, 0), (3, 0, 0)), -576),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (1, 0, 2), (2, 1, 0), (2, 1, 0)), 216),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 1, 1), (3, 0, 0)), -72),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 1, 0)), -144),
    (((0, 2, 1), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 0, 1)), 96),
    (((0, 2, 1), (0, 2, 1), (1, 1, 1), (1, 1, 1), (2, 0, 1), (2, 0, 1)), 48),
    (((0, 2, 1), (0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 1, 1), (3, 0, 0)), 864),
    (((0, 2, 1), (0, 3, 0), (1, 0, 2), (1, 0, 2), (2, 0, 1), (2, 1, 0)), -144),
    (((0, 2, 1), (0, 3, 0), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 0, 1)), -144),
    (((0, 2, 1), (1, 0, 2), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 1, 0)), -144),
    (((0, 2, 1), (1, 0, 2), (1, 0, 2), (1, 2, 0), (1, 2, 0), (2, 0, 1)), 96),
    (((0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 1, 0)), 36),
    (((0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 2, 0), (2, 0, 1)), 24),
    (((0, 2, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 0, 1)), -12),
    (((0, 3, 0), (0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 0, 2), (3, 0, 0)), -864),
    (((0, 3, 0), (0, 3, 0), (1, 0, 2), (1, 0, 2), (2, 0, 1), (2, 0, 1)), 216),
    (((0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0)), 288),
    (((0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 1, 1), (1, 1, 1), (2, 1, 0)), -72),
    (((0, 3, 0), (1, 0, 2), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1)), -144),
    (((0, 3, 0), (1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 0, 1)), 36),
    (((1, 0, 2), (1, 0, 2), (1, 0, 2), (1, 2, 0), (1, 2, 0), (1, 2, 0)), -64),
    (((1, 0, 2), (1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 2, 0), (1, 2, 0)), 48),
    (((1, 0, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 0)), -12),
    (((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1)), 1),
)
