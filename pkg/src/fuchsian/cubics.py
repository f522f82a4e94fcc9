"""Pencils of plane cubics and their Klein J-invariants.

Six one-parameter families of ternary cubics are wired to four base
second-order equations.  For each family the J-invariant of the fiber is
an exact rational function of the pencil parameter t, computed from the
tabulated degree-4 and degree-6 invariants of a ternary cubic; a fixed
reparametrization t(x) turns it into the J-map actually pulled back by
the base equations.  Equivalence curves J_k(x) = J_n(z) between two
families are produced exactly by clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._invariant_tables import S_TERMS, T_TERMS
from .exact import BiPoly, RatFunc, UPoly, cross_difference
from .transform import LinearODE, NormalODE, to_normal_form

FAMILIES = ("I", "II", "III", "IV", "V", "VI")

# family -> index of the base equation whose J-map it realizes
BASE_EQUATION = {"I": 2, "II": 1, "III": 4, "IV": 3, "V": 1, "VI": 2}


class TernaryCubic:
    """Homogeneous cubic in (X, Y, Z) with coefficients polynomial in t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int, int], UPoly | int]):
        self.coeffs: dict[tuple[int, int, int], UPoly] = {}
        for m, c in coeffs.items():
            if sum(m) != 3 or min(m) < 0:
                raise ValueError(f"not a cubic monomial: {m}")
            p = c if isinstance(c, UPoly) else UPoly.const(c)
            if not p.is_zero():
                self.coeffs[m] = p

    def coeff(self, m: tuple[int, int, int]) -> UPoly:
        return self.coeffs.get(m, UPoly())

    def invariant_S(self) -> UPoly:
        return self._contract(S_TERMS)

    def invariant_T(self) -> UPoly:
        return self._contract(T_TERMS)

    def _contract(self, table) -> UPoly:
        acc = UPoly()
        for monos, weight in table:
            term = UPoly.const(weight)
            ok = True
            for m in monos:
                c = self.coeffs.get(m)
                if c is None:
                    ok = False
                    break
                term = term * c
            if ok:
                acc = acc + term
        return acc

    def klein_j(self) -> RatFunc:
        """J = S^3/(S^3 - T^2) of the pencil, exact in t."""
        S = self.invariant_S()
        T = self.invariant_T()
        s3 = S**3
        return RatFunc(s3, s3 - T**2)

    def discriminant_parameter_poly(self) -> UPoly:
        """Parameter values of singular fibers are its roots: S^3 - T^2."""
        return self.invariant_S() ** 3 - self.invariant_T() ** 2


def _t() -> UPoly:
    return UPoly.x()


def pencil(family: str) -> TernaryCubic:
    """The six ternary-cubic pencils, t the pencil parameter."""
    t = _t()
    one = UPoly.const(1)
    if family == "I":
        # X^3 + Y^3 + Z^3 + t XYZ
        return TernaryCubic({(3, 0, 0): one, (0, 3, 0): one, (0, 0, 3): one, (1, 1, 1): t})
    if family == "II":
        # X(X^2 + Z^2 + 2ZY) + t Z(X^2 - Y^2)
        return TernaryCubic(
            {(3, 0, 0): one, (1, 0, 2): one, (1, 1, 1): UPoly.const(2),
             (2, 0, 1): t, (0, 2, 1): -t}
        )
    if family == "III":
        # X(X - Z)(Y - Z) + t ZY(X - Y)
        return TernaryCubic(
            {(2, 1, 0): one, (2, 0, 1): -one, (1, 1, 1): -one + t, (1, 0, 2): one,
             (0, 2, 1): -t}
        )
    if family == "IV":
        # (X + Y)(Y + Z)(Z + X) + t XYZ
        return TernaryCubic(
            {(2, 1, 0): one, (2, 0, 1): one, (1, 2, 0): one, (0, 2, 1): one,
             (1, 0, 2): one, (0, 1, 2): one, (1, 1, 1): UPoly.const(2) + t}
        )
    if family == "V":
        # (X + Y)(XY - Z^2) + t XYZ
        return TernaryCubic(
            {(2, 1, 0): one, (1, 2, 0): one, (1, 0, 2): -one, (0, 1, 2): -one,
             (1, 1, 1): t}
        )
    if family == "VI":
        # X^2 Y + Y^2 Z + Z^2 X + t XYZ
        return TernaryCubic({(2, 1, 0): one, (0, 2, 1): one, (1, 0, 2): one, (1, 1, 1): t})
    raise ValueError(f"unknown family {family!r}")


def j_of_parameter(family: str) -> RatFunc:
    """J-invariant of the pencil fiber as a function of t."""
    return pencil(family).klein_j()


def _even_part_in_new_var(r: RatFunc) -> RatFunc:
    """Given r even in its variable, return g with g(v^2) = r(v)."""

    def halve(p: UPoly) -> UPoly:
        if any(c and k % 2 for k, c in enumerate(p.coeffs)):
            raise ValueError("rational function is not even")
        return UPoly(p.coeffs[::2])

    return RatFunc(halve(r.num), halve(r.den))


def j_of_x(family: str) -> RatFunc:
    """J-map in the base-equation variable x.

    Families I and VI use t = -3(x + 1); II and IV use t = x; III uses
    t = -x.  Family V uses t = 4ix: its parameter J-map is even in t, so
    the substitution stays rational, realized by t^2 -> -16 x^2.
    """
    Jt = j_of_parameter(family)
    x = UPoly.x()
    if family in ("I", "VI"):
        return Jt.compose(RatFunc(-3 * (x + 1), 1))
    if family in ("II", "IV"):
        return Jt
    if family == "III":
        return Jt.compose(RatFunc(-x, 1))
    if family == "V":
        G = _even_part_in_new_var(Jt)
        return G.compose(RatFunc(-16 * x * x, 1))
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class JFamily:
    """A family's exact J-data: pencil parameter map and x-variable map."""

    label: str
    j_t: RatFunc
    j_x: RatFunc
    base_equation: int

    @property
    def degree(self) -> int:
        return max(self.j_x.num.degree, self.j_x.den.degree)


def j_family(family: str) -> JFamily:
    return JFamily(
        label=family,
        j_t=j_of_parameter(family),
        j_x=j_of_x(family),
        base_equation=BASE_EQUATION[family],
    )


def equivalence_curve(family_x: str, family_z: str) -> BiPoly:
    """Zero set J_{family_x}(x) = J_{family_z}(z), denominators cleared."""
    return cross_difference(j_of_x(family_x), j_of_x(family_z))


# ---------------------------------------------------------------------------
# the four base equations


def base_equation(n: int) -> LinearODE:
    """psi'' + (A1/A2) psi' + (A0/A2) psi = 0 for the four base equations."""
    x = UPoly.x()
    data = {
        1: (x * (x - 1) * (x + 1), UPoly([-1, 0, 3]), x),
        2: (x * (x * x + 3 * x + 3), UPoly([3, 6, 3]), x + 1),
        3: (x * (x - 1) * (x + 8), UPoly([-8, 14, 3]), x + 2),
        4: (x * (x * x + 11 * x - 1), UPoly([-1, 22, 3]), x + 3),
    }
    if n not in data:
        raise ValueError(f"base equation index must be 1..4, got {n}")
    A2, A1, A0 = data[n]
    return LinearODE(p=RatFunc(A1, A2), q=RatFunc(A0, A2))


def base_normal_form(n: int) -> NormalODE:
    """Exact normal forms psi'' = Q psi of the four base equations."""
    return to_normal_form(base_equation(n))


def family_normal_form(family: str) -> NormalODE:
    return base_normal_form(BASE_EQUATION[family])
