from semidomain_atoms import IntPoly


def P(*coeffs: int) -> IntPoly:
    """Ascending-coefficient polynomial: P(c0, c1, ...) = c0 + c1*x + ..."""
    return IntPoly(coeffs)


# Recurring moduli.
CUBE = P(-2, 4, -8, 1)        # x^3 - 8x^2 + 4x - 2
GOLDEN = P(-1, -1, 1)         # x^2 - x - 1
TWO_ROOTS = P(1, -3, 1)       # x^2 - 3x + 1
THREE_ROOTS = P(-1, 6, -5, 1)  # x^3 - 5x^2 + 6x - 1
BINOMIAL = P(-3, 0, 2)        # 2x^2 - 3
